"""JSON encodings for every value the CLI reads or writes.

Vertices: ``{"period": 2, "pattern": "+-", "overrides": {"5": "-"}}``.
Permutations: direct form ``{"moves": {"1": -2, "2": -1}}`` or wreath form
``{"perm": {"1": 3, "3": 1}, "signs": {"2": -1}}``; loaders accept either.
Oracles: ``{"type": "regular", "perm": ...}`` or ``{"type": "piecewise",
"cases": [{"component_rep": <vertex>, "perm": <perm>}, ...]}``.
Cube automorphisms: ``{"n": 3, "map": {"000": "101", ...}}`` with bit k of
the vertex at string position k-1.

Decoders canonicalize and raise ValueError on malformed input.
"""

from __future__ import annotations

import math

from .automorphism import (
    AutomorphismOracle,
    ConsistentWithinWindow,
    NonRegular,
    PiecewiseOracle,
    ReconstructionResult,
    RegularOracle,
)
from .finitecube import CubeAutomorphism, bits_to_int, int_to_bits
from .symplectic import SymplecticPerm, WreathPair, from_wreath
from .vertices import SignRule, Vertex

__all__ = [
    "encode_vertex",
    "decode_vertex",
    "encode_perm",
    "decode_perm",
    "encode_wreath",
    "decode_wreath",
    "encode_oracle",
    "decode_oracle",
    "encode_reconstruction",
    "encode_verdict",
    "encode_distance",
    "encode_cube_automorphism",
    "decode_cube_automorphism",
]


def _require_mapping(obj, what: str) -> dict:
    if not isinstance(obj, dict):
        raise ValueError(f"{what} must be a JSON object, got {type(obj).__name__}")
    return obj


def _int_keys(obj: dict, what: str) -> dict[int, object]:
    out = {}
    for key, value in obj.items():
        try:
            out[int(key)] = value
        except (TypeError, ValueError):
            raise ValueError(f"{what} keys must be decimal integers, got {key!r}")
    return out


def encode_vertex(v: Vertex) -> dict:
    rule = v.rule
    return {
        "period": rule.period,
        "pattern": "".join("+" if s > 0 else "-" for s in rule.pattern),
        "overrides": {str(i): ("+" if s > 0 else "-") for i, s in rule.overrides},
    }


def decode_vertex(obj) -> Vertex:
    obj = _require_mapping(obj, "vertex")
    if "period" not in obj or "pattern" not in obj:
        raise ValueError("vertex object needs 'period' and 'pattern'")
    overrides = _int_keys(
        _require_mapping(obj.get("overrides", {}), "overrides"), "override"
    )
    return Vertex(SignRule(obj["period"], obj["pattern"], overrides))


def encode_perm(s: SymplecticPerm) -> dict:
    return {"moves": {str(i): v for i, v in s.moves}}


def encode_wreath(w: WreathPair) -> dict:
    return {
        "perm": {str(i): v for i, v in w.perm},
        "signs": {str(j): -1 for j in w.signs},
    }


def decode_wreath(obj) -> WreathPair:
    obj = _require_mapping(obj, "wreath pair")
    perm = _int_keys(_require_mapping(obj.get("perm", {}), "perm"), "perm")
    signs = _int_keys(_require_mapping(obj.get("signs", {}), "signs"), "signs")
    return WreathPair(perm, signs)


def decode_perm(obj) -> SymplecticPerm:
    obj = _require_mapping(obj, "permutation")
    if "moves" in obj:
        moves = _int_keys(_require_mapping(obj["moves"], "moves"), "moves")
        return SymplecticPerm({i: int(v) for i, v in moves.items()})
    if "perm" in obj or "signs" in obj:
        return from_wreath(decode_wreath(obj))
    raise ValueError("permutation object needs 'moves' or 'perm'/'signs'")


def encode_oracle(oracle: AutomorphismOracle) -> dict:
    if isinstance(oracle, RegularOracle):
        return {"type": "regular", "perm": encode_perm(oracle.perm)}
    if isinstance(oracle, PiecewiseOracle):
        return {
            "type": "piecewise",
            "cases": [
                {"component_rep": encode_vertex(rep), "perm": encode_perm(perm)}
                for rep, perm in oracle.cases
            ],
        }
    raise ValueError(f"cannot encode oracle of type {type(oracle).__name__}")


def decode_oracle(obj) -> AutomorphismOracle:
    obj = _require_mapping(obj, "oracle")
    kind = obj.get("type")
    if kind == "regular":
        return RegularOracle(decode_perm(obj.get("perm", {})))
    if kind == "piecewise":
        cases = obj.get("cases")
        if not isinstance(cases, list):
            raise ValueError("piecewise oracle needs a 'cases' list")
        parsed = []
        for case in cases:
            case = _require_mapping(case, "piecewise case")
            parsed.append(
                (decode_vertex(case.get("component_rep")), decode_perm(case.get("perm")))
            )
        return PiecewiseOracle(parsed)
    raise ValueError(f"unknown oracle type {kind!r}")


def encode_reconstruction(result: ReconstructionResult) -> dict:
    return {
        "window": list(result.window),
        "action": {str(i): result.action[i] for i in result.window},
        "queries": result.queries,
        "checked_at": [encode_vertex(v) for v in result.checked_at],
    }


def encode_verdict(verdict) -> dict:
    if isinstance(verdict, NonRegular):
        return {
            "verdict": "non_regular",
            "witness": {
                "index": verdict.index,
                "first_rep": encode_vertex(verdict.first_rep),
                "second_rep": encode_vertex(verdict.second_rep),
                "first_image": verdict.first_image,
                "second_image": verdict.second_image,
            },
        }
    if isinstance(verdict, ConsistentWithinWindow):
        return {
            "verdict": "consistent_within_window",
            "action": {str(i): v for i, v in sorted(verdict.action.items())},
        }
    raise ValueError(f"cannot encode verdict of type {type(verdict).__name__}")


def encode_distance(d) -> object:
    return "infinity" if d == math.inf else int(d)


def encode_cube_automorphism(a: CubeAutomorphism) -> dict:
    return {
        "n": a.n,
        "map": {
            int_to_bits(v, a.n): int_to_bits(a.mapping[v], a.n)
            for v in range(1 << a.n)
        },
    }


def decode_cube_automorphism(obj) -> CubeAutomorphism:
    obj = _require_mapping(obj, "cube automorphism")
    if "n" not in obj or "map" not in obj:
        raise ValueError("cube automorphism needs 'n' and 'map'")
    n = int(obj["n"])
    table = _require_mapping(obj["map"], "map")
    size = 1 << n
    mapping = [-1] * size
    for key, value in table.items():
        mapping[bits_to_int(str(key))] = bits_to_int(str(value))
    if any(x < 0 for x in mapping):
        raise ValueError("map must list every vertex")
    out = CubeAutomorphism(n, tuple(mapping))
    if not out.is_valid():
        raise ValueError("map is not a hypercube automorphism")
    return out
