"""Monte-Carlo size and power of the battery on simulated monthly series.

    python scripts/size_power.py --seeds 1000 --n 118
"""

import argparse

from weakform import SimSpec, acf, acf_se, adf, changes, jarque_bera, ks_test, runs_test, simulate


def rates(n, seeds, phi):
    out = {k: 0 for k in ("acf1", "runs", "adf_changes", "adf_levels", "jb", "ks")}
    for seed in range(seeds):
        model = "ar1" if phi else "random_walk"
        walk = simulate(SimSpec(model=model, phi=phi, length=n + 1, sigma=1.0, start_price=1e5, seed=seed))
        ch = changes(walk)
        out["acf1"] += abs(acf(ch, 1) / acf_se(ch.n, 1)) > 1.96
        out["runs"] += runs_test(ch).p.value < 0.05
        out["adf_changes"] += adf(ch).rejects_5pct
        out["adf_levels"] += adf(walk.closes).rejects_5pct
        out["jb"] += jarque_bera(ch)[1].value < 0.05
        out["ks"] += ks_test(ch)[1].value < 0.05
    return {k: v / seeds for k, v in out.items()}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seeds", type=int, default=1000)
    ap.add_argument("--n", type=int, default=118, help="number of changes per series")
    ap.add_argument("--phi", type=float, nargs="*", default=[0.0, 0.1, 0.2, 0.3])
    args = ap.parse_args()
    print(f"rejection rates at 5%, n={args.n}, {args.seeds} seeds")
    header = ["phi", "acf1", "runs", "adf_changes", "adf_levels", "jb", "ks"]
    print("  ".join(f"{h:>11}" for h in header))
    for phi in args.phi:
        r = rates(args.n, args.seeds, phi)
        print("  ".join([f"{phi:>11.2f}"] + [f"{r[h]:>11.3f}" for h in header[1:]]))
    print("phi = 0 rows are test sizes; adf_levels is 'reject a unit root in prices'.")


if __name__ == "__main__":
    main()
