"""Command-line front end: ``eval``, ``sweep``, ``witness`` and ``export``.

Exit codes: 0 success, 1 numerical failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io
from .bipartite import BipartiteDensity
from .concurrence import lower_bound
from .criteria import NONLINEAR_WITNESS_ASSUMPTION, evaluate
from .errors import ConcboundError, NumericError
from .roof import RoofConfig, roof_upper
from .states import FAMILIES, StateSpec
from .witness import build_witness, witness_expectation

log = logging.getLogger("concbound")

PARAM_FLAGS = ("d", "F", "a", "p", "alpha", "m", "n", "rank")
INT_PARAMS = {"d", "m", "n", "rank", "seed"}
SWEEP_COLUMNS = ("ccnr_value", "enhanced_f", "ppt_min_eigenvalue", "nonlinear_witness_value", "lower_bound")


def _spec_params(args) -> dict:
    params = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k, None) is not None}
    if args.mu is not None:
        params["mu"] = [float(x) for x in args.mu.split(",")]
    params["seed"] = args.seed
    return params


def load_source(args) -> tuple[BipartiteDensity, dict]:
    if args.state is not None:
        return io.load_state(args.state), {"file": str(args.state)}
    if args.family is None:
        raise ConcboundError("either --family or --state is required")
    spec = StateSpec(args.family, _spec_params(args))
    return spec.build(), {"family": spec.family, "params": spec.params}


def roof_config(args) -> RoofConfig:
    return RoofConfig(restarts=args.restarts, seed=args.seed, max_iters=args.max_iters)


def evaluate_point(s: BipartiteDensity, roof: RoofConfig | None = None) -> dict:
    """Single evaluation path shared by ``eval`` and ``sweep``."""
    out = {"criteria": evaluate(s).to_dict(), "bound": lower_bound(s).to_dict()}
    if roof is not None:
        out["roof"] = roof_upper(s, roof).to_dict()
    return out


def cmd_eval(args) -> int:
    s, source = load_source(args)
    result = {"dims": s.dims.as_list(), "state": source}
    result.update(evaluate_point(s, roof_config(args) if args.roof else None))
    notes = [NONLINEAR_WITNESS_ASSUMPTION]
    if source.get("family"):
        notes += StateSpec(source["family"], source["params"]).notes()
    result["notes"] = notes
    text = io.dumps(result)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def parse_grid(text: str) -> tuple[str, list[float]]:
    """``name:start:stop:step`` -> (name, inclusive list of grid values)."""
    parts = text.split(":")
    if len(parts) != 4:
        raise ConcboundError(f"grid {text!r} must look like name:start:stop:step")
    name = parts[0]
    if name not in PARAM_FLAGS and name != "seed":
        raise ConcboundError(f"grid parameter {name!r} is not a state parameter")
    try:
        start, stop, step = (float(x) for x in parts[1:])
    except ValueError as exc:
        raise ConcboundError(f"grid {text!r} has non-numeric bounds") from exc
    if not (step > 0 and stop >= start):
        raise ConcboundError(f"grid {text!r} is empty (need step > 0 and stop >= start)")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = [round(start + i * step, 12) for i in range(count)]
    if name in INT_PARAMS:
        values = [int(round(v)) for v in values]
    return name, values


def _sweep_row(job):
    family, params, roof = job
    s = StateSpec(family, params).build()
    res = evaluate_point(s, roof)
    c, b = res["criteria"], res["bound"]
    row = [c["ccnr_value"], c["f_value"], c["ppt_min_eigenvalue"], c["nonlinear_witness_value"], b["lower_bound"]]
    if roof is not None:
        row.append(res["roof"]["upper_value"])
    return row


def _fmt(v) -> str:
    return repr(float(v)) if isinstance(v, float) else str(v)


def cmd_sweep(args) -> int:
    if args.family is None:
        raise ConcboundError("sweep requires --family")
    if not args.grid:
        raise ConcboundError("sweep requires at least one --grid")
    grids = [parse_grid(g) for g in args.grid]
    names = [g[0] for g in grids]
    base = _spec_params(args)
    roof = roof_config(args) if args.roof else None
    points = list(itertools.product(*(g[1] for g in grids)))
    jobs = [(args.family, {**base, **dict(zip(names, pt))}, roof) for pt in points]
    StateSpec(args.family, jobs[0][1])  # validate the family before spawning workers
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs))))
    else:
        rows = [_sweep_row(j) for j in jobs]
    header = names + list(SWEEP_COLUMNS) + (["roof_upper"] if roof else [])
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for pt, row in zip(points, rows):
            w.writerow([_fmt(v) for v in (*pt, *row)])
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_witness(args) -> int:
    s, _ = load_source(args)
    w = build_witness(s)
    e = witness_expectation(w, s)
    if args.out:
        io.save_witness(w, e, args.out)
    else:
        sys.stdout.write(io.dumps(io.witness_to_dict(w, e)))
    return 0


def cmd_export(args) -> int:
    s, _ = load_source(args)
    text = io.dumps(io.state_to_dict(s))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--state", type=Path, help="state file (JSON)")
    common.add_argument("--d", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--rank", type=int)
    common.add_argument("--F", type=float)
    common.add_argument("--a", type=float)
    common.add_argument("--p", type=float)
    common.add_argument("--alpha", type=float)
    common.add_argument("--mu", help="comma-separated Schmidt weights")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--roof", action="store_true", help="also run the convex-roof search")
    common.add_argument("--restarts", type=int, default=RoofConfig.restarts)
    common.add_argument("--max-iters", type=int, default=RoofConfig.max_iters)
    common.add_argument("--out", type=Path)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="concbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common], help="criteria and bounds as JSON").set_defaults(func=cmd_eval)
    sp = sub.add_parser("sweep", parents=[common], help="parameter grid to CSV")
    sp.add_argument("--grid", action="append", help="name:start:stop:step (repeat for 2-D)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)
    sub.add_parser("witness", parents=[common], help="witness operator as JSON").set_defaults(func=cmd_witness)
    sub.add_parser("export", parents=[common], help="write a state file").set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConcboundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
