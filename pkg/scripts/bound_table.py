"""Lower bounds and roof upper estimates for the noisy Horodecki 3x3 state.

Usage: python scripts/bound_table.py [--roof] [--restarts N]
"""

import argparse

from concbound.roof import RoofConfig, roof_upper
from concbound.concurrence import lower_bound
from concbound.states import horodecki_noisy

POINTS = ((0.236, 0.9955), (0.232, 0.9939))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--roof", action="store_true")
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("a,p,f,lower_bound" + (",roof_upper" if args.roof else ""))
    for a, p in POINTS:
        s = horodecki_noisy(a, p)
        b = lower_bound(s)
        row = f"{a},{p},{b.f_value:.6e},{b.lower_bound:.6e}"
        if args.roof:
            est = roof_upper(s, RoofConfig(restarts=args.restarts, seed=args.seed))
            row += f",{est.upper_value:.6f}"
        print(row)


if __name__ == "__main__":
    main()
