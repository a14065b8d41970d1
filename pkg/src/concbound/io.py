"""JSON interchange for states and witnesses.

A state file is ``{"dims": [m, n], "matrix": [{"re": x, "im": y}, ...]}`` with
the ``(mn)^2`` entries in row-major order. Floats are written with Python's
shortest round-trip ``repr``, so save -> load -> save is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .bipartite import BipartiteDensity, BipartiteDims
from .errors import ConcboundError, StateFileError
from .witness import WitnessOperator


def matrix_to_pairs(a: np.ndarray) -> list[dict]:
    return [{"re": float(z.real), "im": float(z.imag)} for z in np.asarray(a).reshape(-1).tolist()]


def pairs_to_matrix(pairs, side: int, what: str = "matrix") -> np.ndarray:
    if not isinstance(pairs, list):
        raise StateFileError(f"{what} must be a list of {{re, im}} objects")
    if len(pairs) != side * side:
        raise StateFileError(f"{what} has {len(pairs)} entries, expected {side * side}")
    try:
        vals = [complex(float(p["re"]), float(p["im"])) for p in pairs]
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFileError(f"{what} entries must be objects with numeric 're' and 'im'") from exc
    return np.array(vals, dtype=np.complex128).reshape(side, side)


def _parse_dims(obj) -> BipartiteDims:
    dims = obj.get("dims") if isinstance(obj, dict) else None
    if not (isinstance(dims, list) and len(dims) == 2 and all(isinstance(x, int) for x in dims)):
        raise StateFileError("'dims' must be a list of two positive integers")
    try:
        return BipartiteDims(*dims)
    except ConcboundError as exc:
        raise StateFileError(str(exc)) from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, allow_nan=False) + "\n"


def state_to_dict(s: BipartiteDensity) -> dict:
    return {"dims": s.dims.as_list(), "matrix": matrix_to_pairs(s.rho)}


def state_from_dict(obj) -> BipartiteDensity:
    dims = _parse_dims(obj)
    rho = pairs_to_matrix(obj.get("matrix"), dims.total)
    try:
        return BipartiteDensity(dims, rho)
    except ConcboundError as exc:
        raise StateFileError(f"invalid density matrix: {exc}") from exc


def save_state(s: BipartiteDensity, path) -> None:
    Path(path).write_text(dumps(state_to_dict(s)), encoding="utf-8")


def load_state(path) -> BipartiteDensity:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    return state_from_dict(obj)


def witness_to_dict(w: WitnessOperator, expectation: float) -> dict:
    return {
        "dims": w.dims.as_list(),
        "w_raw": matrix_to_pairs(w.w_raw),
        "w_hermitian": matrix_to_pairs(w.w_hermitian),
        "metadata": {
            "source_hash": w.source_state_hash,
            "expectation": expectation,
            "trace_norm": w.trace_norm,
            "degenerate": w.degenerate,
            "observable": "Re Tr[w_hermitian (rho - rho_A ⊗ rho_B)]",
        },
    }


def witness_from_dict(obj) -> WitnessOperator:
    dims = _parse_dims(obj)
    meta = obj.get("metadata") or {}
    try:
        return WitnessOperator(
            w_raw=pairs_to_matrix(obj.get("w_raw"), dims.total, "w_raw"),
            w_hermitian=pairs_to_matrix(obj.get("w_hermitian"), dims.total, "w_hermitian"),
            dims=dims,
            source_state_hash=str(meta["source_hash"]),
            trace_norm=float(meta["trace_norm"]),
            degenerate=bool(meta.get("degenerate", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFileError(f"witness metadata incomplete: {exc}") from exc


def save_witness(w: WitnessOperator, expectation: float, path) -> None:
    Path(path).write_text(dumps(witness_to_dict(w, expectation)), encoding="utf-8")


def load_witness(path) -> tuple[WitnessOperator, dict]:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    return witness_from_dict(obj), obj.get("metadata", {})
