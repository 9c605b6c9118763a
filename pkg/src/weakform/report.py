"""Run the full test battery over a batch of indices and render the results."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .autocorrelation import AcfResult, AcfRow, acf_table
from .distributions import PValue
from .errors import InvalidInputError, WeakFormError
from .normality import KS_MODES, NormalityResult, normality
from .runs import RunsResult, runs_test
from .series import CHANGE_MODES, PriceSeries, changes
from .unit_root import DETERMINISTIC, AdfResult, adf

ALPHA = 0.05
FORMATS = ("markdown", "csv", "json")


@dataclass(frozen=True)
class AnalysisConfig:
    change_mode: str = "arithmetic_diff"
    max_lag: int = 20
    adf_lags: int = 1
    adf_deterministic: str = "constant"
    ks_mode: str = "standardized"
    alpha: float = field(default=ALPHA, init=False)

    def __post_init__(self) -> None:
        if self.change_mode not in CHANGE_MODES:
            raise InvalidInputError(f"change_mode must be one of {CHANGE_MODES}")
        if self.max_lag < 1:
            raise InvalidInputError("max_lag must be >= 1")
        if self.adf_lags < 0:
            raise InvalidInputError("adf_lags must be >= 0")
        if self.adf_deterministic not in DETERMINISTIC:
            raise InvalidInputError(f"adf_deterministic must be one of {DETERMINISTIC}")
        if self.ks_mode not in KS_MODES:
            raise InvalidInputError(f"ks_mode must be one of {KS_MODES}")


@dataclass(frozen=True)
class IndexReport:
    label: str
    n_prices: int
    n_changes: int
    gaps: int
    first_month: str
    last_month: str
    acf: Optional[AcfResult] = None
    runs: Optional[RunsResult] = None
    adf: Optional[AdfResult] = None
    adf_levels: Optional[AdfResult] = None
    normality: Optional[NormalityResult] = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class EfficiencyReport:
    config: AnalysisConfig
    indices: tuple[IndexReport, ...]


def _attempt(name: str, fn: Callable[[], Any], notes: list[str]) -> Any:
    try:
        return fn()
    except WeakFormError as exc:
        kind = type(exc).__name__.replace("Error", "")
        notes.append(f"{name}: {kind}: {exc}")
        return None


def analyze_one(series: PriceSeries, config: AnalysisConfig = AnalysisConfig()) -> IndexReport:
    notes: list[str] = list(series.notes)
    if series.gaps:
        notes.append(f"{series.gaps} missing month(s) between first and last date; not imputed")
    ch = changes(series, config.change_mode)
    acf_res = _attempt("autocorrelation", lambda: acf_table(ch, config.max_lag), notes)
    runs_res = _attempt("runs", lambda: runs_test(ch), notes)
    adf_res = _attempt(
        "adf", lambda: adf(ch, config.adf_lags, config.adf_deterministic), notes
    )
    levels = np.asarray(series.closes)
    if config.change_mode == "log_return":
        levels = np.log(levels)
    adf_lvl = _attempt(
        "adf_levels",
        lambda: adf(levels, config.adf_lags, config.adf_deterministic, label=series.label),
        notes,
    )
    norm_res = _attempt("normality", lambda: normality(ch, config.ks_mode), notes)
    if runs_res is not None:
        if runs_res.ties_excluded:
            notes.append(f"runs: {runs_res.ties_excluded} change(s) equal to the mean excluded")
        if runs_res.small_sample:
            notes.append(f"runs: N={runs_res.N} is small for the normal approximation")
    return IndexReport(
        label=series.label,
        n_prices=len(series),
        n_changes=ch.n,
        gaps=series.gaps,
        first_month=f"{series.dates[0]:%Y-%m}",
        last_month=f"{series.dates[-1]:%Y-%m}",
        acf=acf_res,
        runs=runs_res,
        adf=adf_res,
        adf_levels=adf_lvl,
        normality=norm_res,
        notes=tuple(notes),
    )


def analyze(series: Sequence[PriceSeries], config: AnalysisConfig = AnalysisConfig()) -> EfficiencyReport:
    """Autocorrelation, runs, ADF and normality tests for every series.

    ADF is run twice: on the change series (does the change series have a
    unit root?) and on the price level, log price in log-return mode (is
    the price itself a random walk?).

    A test that cannot be computed for one series (zero variance,
    singular regression, too few points) leaves that result empty and adds
    a note; the rest of the batch is unaffected.
    """
    series = list(series)
    if not series:
        raise InvalidInputError("no series to analyse")
    labels = [s.label for s in series]
    if len(set(labels)) != len(labels):
        raise InvalidInputError("series labels must be unique")
    return EfficiencyReport(config, tuple(analyze_one(s, config) for s in series))


# -- JSON ---------------------------------------------------------------------

def report_to_dict(report: EfficiencyReport) -> dict:
    return dataclasses.asdict(report)


def _pvalue(d: dict) -> PValue:
    return PValue(**d)


def report_from_dict(data: dict) -> EfficiencyReport:
    cfg = dict(data["config"])
    cfg.pop("alpha", None)
    config = AnalysisConfig(**cfg)
    entries = []
    for d in data["indices"]:
        d = dict(d)
        if d.get("acf") is not None:
            a = dict(d["acf"])
            a["rows"] = tuple(AcfRow(**r) for r in a["rows"])
            d["acf"] = AcfResult(**a)
        if d.get("runs") is not None:
            r = dict(d["runs"])
            r["counts"] = tuple(r["counts"])
            r["p"] = _pvalue(r["p"])
            d["runs"] = RunsResult(**r)
        for key in ("adf", "adf_levels"):
            if d.get(key) is not None:
                a = dict(d[key])
                a["p_value"] = _pvalue(a["p_value"])
                a["critical_values"] = dict(a["critical_values"])
                d[key] = AdfResult(**a)
        if d.get("normality") is not None:
            nr = dict(d["normality"])
            nr["ks_p"] = _pvalue(nr["ks_p"])
            nr["jb_p"] = _pvalue(nr["jb_p"])
            d["normality"] = NormalityResult(**nr)
        d["notes"] = tuple(d.get("notes", ()))
        entries.append(IndexReport(**d))
    return EfficiencyReport(config, tuple(entries))


def render_json(report: EfficiencyReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


# -- Markdown -----------------------------------------------------------------

NO_DATA = "no data"
NA = "n/a"


def _f(x: Optional[float], digits: int = 4) -> str:
    return NA if x is None else f"{x:.{digits}f}"


def _table(header: list[str], rows: list[list[str]], align: Optional[list[str]] = None) -> list[str]:
    if not rows:
        rows = [[NO_DATA] + [""] * (len(header) - 1)]
    align = align or ["---:"] * len(header)
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join(align) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return lines


def _adf_p(p: PValue) -> str:
    if p.bound == "below_table":
        return f"< {p.value:.4f}"
    if p.bound == "above_table":
        return f"> {p.value:.4f}"
    return f"{p.value:.4f}"


def render_markdown(report: EfficiencyReport) -> str:
    cfg = report.config
    idx = report.indices
    labels = [e.label for e in idx]
    out = [
        "# Weak-form efficiency report",
        "",
        f"Changes: {cfg.change_mode}; ACF lags: {cfg.max_lag}; "
        f"ADF: {cfg.adf_lags} lag(s), {cfg.adf_deterministic}; KS mode: {cfg.ks_mode}; "
        f"alpha: {cfg.alpha:.2f}",
        "",
        "## Autocorrelation of changes",
        "",
    ]
    with_acf = [e for e in idx if e.acf is not None]
    rows: list[list[str]] = []
    if with_acf:
        for k in range(1, cfg.max_lag + 1):
            rows.append([str(k)] + [_f(e.acf.rows[k - 1].acf) if e.acf else NA for e in idx])
        rows.append(["Standard Deviation"] + [_f(e.acf.summary_sd, 5) if e.acf else NA for e in idx])
        rows.append(["Standard Error"] + [_f(e.acf.summary_se, 5) if e.acf else NA for e in idx])
        rows.append(["Standard error of ACF (k=1)"] + [_f(e.acf.rows[0].se) if e.acf else NA for e in idx])
        rows.append(["Lags significant at 5% (t beyond 1.96)"] + [str(e.acf.n_significant) if e.acf else NA for e in idx])
    out += _table(["Lag (k)"] + labels, rows, [":---"] + ["---:"] * len(labels))

    out += ["", "## Runs analysis of changes relative to the mean", ""]
    rows = []
    for e in idx:
        r = e.runs
        if r is None:
            continue
        rows.append([e.label, str(r.N), str(r.counts[0]), str(r.counts[1]), str(r.nruns),
                     _f(r.z), _f(r.p.value)])
    out += _table(["Index", "N", "n_0", "n_1", "nruns", "Z", "p-value"], rows,
                  [":---"] + ["---:"] * 6)

    for key, title in (("adf", "ADF test of changes"), ("adf_levels", "ADF test of price levels")):
        out += ["", f"## {title}", ""]
        res = [getattr(e, key) for e in idx]
        rows = []
        if any(res):
            rows = [
                ["ADF test statistic"] + [_f(a.statistic) if a else NA for a in res],
                ["p-Value"] + [_adf_p(a.p_value) if a else NA for a in res],
                ["5% critical value"] + [_f(a.critical_values["5%"]) if a else NA for a in res],
                ["Included Observations"] + [str(a.nobs_included) if a else NA for a in res],
                ["Number of lags"] + [str(a.lags) if a else NA for a in res],
            ]
        out += _table([""] + labels, rows, [":---"] + ["---:"] * len(labels))

    out += ["", "## Normality of changes", "", "### Kolmogorov-Smirnov", ""]
    has_norm = any(e.normality for e in idx)
    rows = []
    if has_norm:
        rows = [
            ["Test statistic"] + [_f(e.normality.ks_d) if e.normality else NA for e in idx],
            ["p-value"] + [_f(e.normality.ks_p.value) if e.normality else NA for e in idx],
        ]
    out += _table([""] + labels, rows, [":---"] + ["---:"] * len(labels))
    out += ["", "### Jarque-Bera", ""]
    rows = []
    if has_norm:
        rows = [
            ["Jarque-Bera"] + [_f(e.normality.jb) if e.normality else NA for e in idx],
            ["JB p-value"] + [_f(e.normality.jb_p.value) if e.normality else NA for e in idx],
            ["Skewness"] + [_f(e.normality.skewness) if e.normality else NA for e in idx],
            ["Kurtosis"] + [_f(e.normality.kurtosis) if e.normality else NA for e in idx],
        ]
    out += _table([""] + labels, rows, [":---"] + ["---:"] * len(labels))

    out += ["", "## Data quality", ""]
    out += _table(["Index", "Prices", "Changes", "From", "To", "Missing months"],
                  [[e.label, str(e.n_prices), str(e.n_changes), e.first_month, e.last_month,
                    str(e.gaps)] for e in idx],
                  [":---"] + ["---:"] * 5)
    out.append("")
    notes = [f"- {e.label}: {note}" for e in idx for note in e.notes]
    out += notes or ["No notes."]
    return "\n".join(out) + "\n"


# -- CSV ----------------------------------------------------------------------

CSV_COLUMNS = ("index", "test", "field", "lag", "value")


def render_csv(report: EfficiencyReport) -> str:
    """Long-format CSV, one number per row, full precision."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for e in report.indices:
        if e.acf is not None:
            for r in e.acf.rows:
                for name in ("acf", "se", "t"):
                    w.writerow([e.label, "acf", name, r.k, repr(getattr(r, name))])
            w.writerow([e.label, "acf", "summary_sd", "", repr(e.acf.summary_sd)])
            w.writerow([e.label, "acf", "summary_se", "", repr(e.acf.summary_se)])
        if e.runs is not None:
            r = e.runs
            for name, value in (("N", r.N), ("n_0", r.counts[0]), ("n_1", r.counts[1]),
                                ("nruns", r.nruns), ("expected_runs", r.expected_runs),
                                ("variance", r.variance), ("z", r.z), ("p", r.p.value)):
                w.writerow([e.label, "runs", name, "", repr(value)])
        for test in ("adf", "adf_levels"):
            a = getattr(e, test)
            if a is None:
                continue
            for name, value in (("statistic", a.statistic), ("p_value", a.p_value.value),
                                ("nobs_included", a.nobs_included), ("lags", a.lags)):
                w.writerow([e.label, test, name, "", repr(value)])
            for level, cv in a.critical_values.items():
                w.writerow([e.label, test, f"critical_{level}", "", repr(cv)])
        if e.normality is not None:
            nr = e.normality
            for name, value in (("ks_d", nr.ks_d), ("ks_p", nr.ks_p.value), ("jb", nr.jb),
                                ("jb_p", nr.jb_p.value), ("skewness", nr.skewness),
                                ("kurtosis", nr.kurtosis)):
                w.writerow([e.label, "normality", name, "", repr(value)])
    return buf.getvalue()


def render(report: EfficiencyReport, format: str = "markdown") -> str:
    if format in ("md", "markdown"):
        return render_markdown(report)
    if format == "csv":
        return render_csv(report)
    if format == "json":
        return render_json(report)
    raise InvalidInputError(f"unknown format {format!r}; expected one of {FORMATS}")
