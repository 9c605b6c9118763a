"""Recompute the reported BSE runs statistics and ACF summary rows.

Prints the recomputed values next to the reported ones, plus how many of
the 100 reported autocorrelations clear |t| > 1.96 with se = 1/sqrt(118).
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from bse_tables import ACF, ACF_SD, ACF_SE, INDICES, JB, RUNS  # noqa: E402

from weakform import acf_se, acf_t, chi2_df2_sf, runs_test_from_counts  # noqa: E402
from weakform.autocorrelation import summarize_acf_column  # noqa: E402


def main():
    print("Runs test (continuity-corrected, two-sided)")
    print(f"{'index':<17}{'M':>8}{'var':>9}{'Z':>9}{'Z rep':>9}{'p':>8}{'p rep':>8}")
    for index in INDICES:
        N, n0, n1, nruns, z, p = RUNS[index]
        r = runs_test_from_counts(n0, n1, nruns)
        print(f"{index:<17}{r.expected_runs:8.3f}{r.variance:9.3f}{r.z:9.4f}{z:9.4f}"
              f"{r.p.value:8.4f}{p:8.4f}")

    print("\nACF column summaries")
    print(f"{'index':<17}{'SD':>9}{'SD rep':>9}{'SE':>9}{'SE rep':>9}{'|t|>1.96':>10}")
    se = acf_se(118, 1, "large_n")
    total = 0
    for index in INDICES:
        sd, sem = summarize_acf_column(ACF[index])
        sig = sum(acf_t(v, se)[1] for v in ACF[index])
        total += sig
        print(f"{index:<17}{sd:9.5f}{ACF_SD[index]:9.5f}{sem:9.5f}{ACF_SE[index]:9.5f}{sig:10d}")
    print(f"significant at 5%: {total} of {20 * len(INDICES)} (se = {se:.5f})")

    print("\nJarque-Bera chi2(2) p-values for the reported statistics")
    for index in INDICES:
        print(f"{index:<17}JB={JB[index]:8.4f}  p={chi2_df2_sf(JB[index]):.6f}")
    print(f"\nnote: 2 * se = {2 * se:.4f}; exact se at lag 20 = {1 / math.sqrt(98):.4f}")


if __name__ == "__main__":
    main()
