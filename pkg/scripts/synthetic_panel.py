"""Write a five-index synthetic panel shaped like the BSE sample and analyse it.

    python scripts/synthetic_panel.py out_dir
"""

import sys
from pathlib import Path

from weakform import AnalysisConfig, SimSpec, analyze, ingest_csv, render, simulate, write_csv

PANEL = [
    ("LargeCap", "random_walk", 0.0),
    ("SmallCap", "ar1", 0.13),
    ("MidCap", "ar1", 0.13),
    ("MidSmallCap", "ar1", 0.13),
    ("LargeMidCap", "random_walk", 0.0),
]


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    series = [
        simulate(SimSpec(model=model, phi=phi, length=119, drift=40.0, sigma=400.0,
                         start_price=10_000.0, seed=seed, label=name))
        for seed, (name, model, phi) in enumerate(PANEL, start=1)
    ]
    csv_path = out / "panel.csv"
    with open(csv_path, "w", newline="") as fh:
        write_csv(series, fh)
    with open(csv_path, newline="") as fh:
        report = analyze(ingest_csv(fh), AnalysisConfig())
    (out / "report.md").write_text(render(report, "markdown"))
    (out / "report.json").write_text(render(report, "json"))
    (out / "report.csv").write_text(render(report, "csv"))
    print(f"wrote {csv_path} and report.{{md,json,csv}} to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "panel_out")
