"""JSON input formats for fans and residue problems.

Fan file:
    {"dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
     "max_cones": [[2,3],[1,3],[1,2]],        # 1-based ray indices
     "variables": ["x","y","z"],               # optional
     "degree_basis": [[1,1,1]]}                # optional free grading rows

Problem file:
    {"fan": "p2.fan.json",                     # path relative to this file
     "F": ["x^2", "y^2", "z^2"],
     "order": "grevlex:x>y>z",                 # optional
     "sigma": 1,                               # optional, 1-based cone index
     "H": ["x*y*z"]}                           # optional inputs of interest
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .grading import Grading, compute_grading, validate_user_grading
from .groebner import MonomialOrder, grevlex, parse_order
from .lattice import FanData, make_fan
from .poly import MultiPoly, parse_poly
from .residues import ResidueProblem


def _load_json(path: Path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path} must contain a JSON object")
    return data


def load_fan(path) -> tuple[FanData, Grading]:
    path = Path(path)
    data = _load_json(path)
    for key in ("dim", "rays", "max_cones"):
        if key not in data:
            raise ParseError(f"{path} lacks required key {key!r}")
    try:
        fan = make_fan(data["dim"], data["rays"], data["max_cones"],
                       variables=tuple(data["variables"]) if "variables" in data else None,
                       one_based=True)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if "degree_basis" in data:
        grading = validate_user_grading(fan, data["degree_basis"])
    else:
        grading = compute_grading(fan)
    return fan, grading


@dataclass(frozen=True)
class LoadedProblem:
    fan: FanData
    grading: Grading
    order: MonomialOrder
    problem: ResidueProblem
    inputs: tuple[MultiPoly, ...]
    fan_path: str


def load_problem(path, sigma_override: int | None = None,
                 order_override: str | None = None) -> LoadedProblem:
    path = Path(path)
    data = _load_json(path)
    if "fan" not in data or "F" not in data:
        raise ParseError(f"{path} lacks required key 'fan' or 'F'")
    fan_path = (path.parent / data["fan"]).resolve()
    fan, grading = load_fan(fan_path)
    names = fan.variables
    polys = [parse_poly(s, names) for s in data["F"]]
    order_text = order_override or data.get("order")
    order = parse_order(order_text, names) if order_text else grevlex(fan.nvars)
    sigma = sigma_override if sigma_override is not None else data.get("sigma", 1)
    if not isinstance(sigma, int) or not 1 <= sigma <= len(fan.max_cones):
        raise ParseError(f"sigma must be a 1-based cone index, got {sigma!r}")
    problem = ResidueProblem(fan, polys, order=order, sigma=sigma - 1,
                             grading=grading)
    inputs = tuple(parse_poly(s, names) for s in data.get("H", []))
    return LoadedProblem(fan, grading, order, problem, inputs, str(fan_path))
