"""Write CSV data for the three standard sweeps through the CLI.

Usage: python scripts/figure_sweeps.py [--outdir data] [--jobs 4]
"""

import argparse
from pathlib import Path

from concbound.cli import main as cli

SWEEPS = {
    "isotropic_d3.csv": ["--family", "isotropic", "--d", "3", "--grid", "F:0.0:1.0:0.01"],
    "horodecki_grid.csv": [
        "--family", "horodecki_noisy",
        "--grid", "a:0.05:0.95:0.05", "--grid", "p:0.99:1.0:0.0005",
    ],
    "alpha_family.csv": ["--family", "alpha_family", "--grid", "alpha:2.0:5.0:0.05"],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="data")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, argv in SWEEPS.items():
        code = cli(["sweep", *argv, "--jobs", str(args.jobs), "--out", str(out / name)])
        if code:
            raise SystemExit(code)
        print(out / name)


if __name__ == "__main__":
    main()
