"""Command-line front end.

Every subcommand reads JSON (inline or from files), writes a single JSON
document to stdout, and is byte-deterministic for fixed inputs and seed.
Exit codes: 0 success, 2 malformed input, 3 the probed oracle violated an
automorphism property.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .automorphism import (
    MalformedOracleError,
    is_regular_verdict,
    reconstruct_component,
    reconstruct_local,
    single_component_automorphism,
)
from .finitecube import (
    count_automorphisms_extension,
    cube_to_wreath,
    enumerate_automorphisms_bruteforce,
    enumerate_automorphisms_extension,
    iter_wreath_pairs,
    lift_cube_automorphism,
    wreath_to_cube,
)
from .jsonio import (
    decode_oracle,
    decode_perm,
    decode_vertex,
    encode_distance,
    encode_perm,
    encode_reconstruction,
    encode_verdict,
)
from .symplectic import from_wreath
from .vertices import all_positive, alternating, clean_window

__all__ = ["main", "console_main"]


def _load_value(text: str):
    """Inline JSON when the argument looks like JSON, else a file path."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(text)
    with open(text, "r", encoding="utf-8") as handle:
        return json.load(handle)


def parse_window(spec: str) -> tuple[int, ...]:
    """Window flag syntax: '1..8' for a range, '1,3,7' for explicit indices."""
    spec = spec.strip()
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad window range {spec!r}")
        return tuple(range(lo, hi + 1))
    return clean_window(int(part) for part in spec.split(","))


def _collect_reps(chunks):
    reps = []
    for chunk in chunks:
        stripped = chunk.lstrip()
        if stripped.startswith("{"):
            reps.append(decode_vertex(json.loads(chunk)))
        elif stripped.startswith("["):
            reps.extend(decode_vertex(obj) for obj in json.loads(chunk))
        else:
            for path in chunk.split(","):
                reps.append(decode_vertex(_load_value(path)))
    return reps


def _cmd_vertex(args):
    v = decode_vertex(_load_value(args.v))
    w = decode_vertex(_load_value(args.w))
    if args.relation == "adjacent":
        return v.adjacent(w)
    if args.relation == "distance":
        return encode_distance(v.distance(w))
    return v.same_component(w)


def _cmd_perm(args):
    a = decode_perm(_load_value(args.a))
    if args.op == "order":
        return a.order()
    if args.op == "inverse":
        return encode_perm(a.inverse())
    if args.op == "compose":
        return encode_perm(a.compose(decode_perm(_load_value(args.b))))
    return a.apply(int(args.b))


def _cmd_reconstruct(args):
    oracle = decode_oracle(_load_value(args.oracle))
    at = decode_vertex(_load_value(args.at))
    window = parse_window(args.window)
    if args.checks > 0:
        result = reconstruct_component(oracle, at, window, args.checks, args.seed)
    else:
        result = reconstruct_local(oracle, at, window)
    return encode_reconstruction(result)


def _cmd_verdict(args):
    oracle = decode_oracle(_load_value(args.oracle))
    reps = _collect_reps(args.reps)
    verdict = is_regular_verdict(oracle, reps, parse_window(args.window))
    return encode_verdict(verdict)


def _cmd_cube_enum(args):
    if args.method == "brute":
        count = len(enumerate_automorphisms_bruteforce(args.n))
    else:
        count = count_automorphisms_extension(args.n)
    return {"n": args.n, "method": args.method, "count": count}


def _cmd_cube_crosscheck(args):
    n = args.n
    if not 1 <= n <= 6:
        raise ValueError(f"crosscheck is limited to n <= 6, got {n}")
    expected = (1 << n) * math.factorial(n)
    autos = enumerate_automorphisms_extension(n)
    found = {a.mapping for a in autos}
    out = {
        "n": n,
        "expected": expected,
        "extension_count": len(autos),
        "count_law": len(autos) == expected,
    }
    if n <= 3:
        brute = enumerate_automorphisms_bruteforce(n)
        out["brute_count"] = len(brute)
        out["brute_match"] = {a.mapping for a in brute} == found
    else:
        out["brute_count"] = None
        out["brute_match"] = None
    lifted = {wreath_to_cube(w, n).mapping for w in iter_wreath_pairs(n)}
    out["wreath_bijective"] = len(lifted) == expected and lifted == found
    if n <= 3:
        window = range(1, n + 1)
        ok = True
        for a in autos:
            s = from_wreath(cube_to_wreath(a))
            result = reconstruct_local(lift_cube_automorphism(a), all_positive(), window)
            if not result.agrees_with(s):
                ok = False
                break
        out["reconstruction_match"] = ok
    else:
        out["reconstruction_match"] = None
    return out


def _cmd_demo_example1(args):
    perm_obj = (
        _load_value(args.perm) if args.perm else {"moves": {"1": 2, "2": 1}}
    )
    perm = decode_perm(perm_obj)
    base = decode_vertex(_load_value(args.base)) if args.base else all_positive()
    other = alternating()
    if other.same_component(base):
        other = all_positive()
    oracle = single_component_automorphism(base, perm)
    window = parse_window(args.window)
    verdict = is_regular_verdict(oracle, [base, other], window)
    out = {"window": list(window), "perm": encode_perm(perm)}
    out.update(encode_verdict(verdict))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alephcube",
        description="Infinite-dimensional hypercube toolkit: vertices, "
        "symplectic permutations, oracle reconstruction, finite ground truth.",
    )
    parser.add_argument(
        "--pretty", action="store_true", help="indent the JSON output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_vertex = sub.add_parser("vertex", help="vertex relations")
    p_vertex.add_argument(
        "relation", choices=["adjacent", "distance", "component"]
    )
    p_vertex.add_argument("v", help="vertex JSON (inline or file)")
    p_vertex.add_argument("w", help="vertex JSON (inline or file)")
    p_vertex.set_defaults(handler=_cmd_vertex)

    p_perm = sub.add_parser("perm", help="permutation operations")
    p_perm.add_argument("op", choices=["compose", "inverse", "order", "apply"])
    p_perm.add_argument("a", help="permutation JSON (inline or file)")
    p_perm.add_argument(
        "b",
        nargs="?",
        help="second permutation for compose, index for apply",
    )
    p_perm.set_defaults(handler=_cmd_perm)

    p_rec = sub.add_parser("reconstruct", help="recover an oracle's action")
    p_rec.add_argument("--oracle", required=True)
    p_rec.add_argument("--at", required=True, help="base vertex JSON")
    p_rec.add_argument("--window", required=True, help="'1..N' or '1,3,7'")
    p_rec.add_argument("--checks", type=int, default=0)
    p_rec.add_argument("--seed", type=int, default=0)
    p_rec.set_defaults(handler=_cmd_reconstruct)

    p_ver = sub.add_parser("verdict", help="compare actions across components")
    p_ver.add_argument("--oracle", required=True)
    p_ver.add_argument(
        "--reps",
        required=True,
        action="append",
        help="comma-separated vertex files or inline JSON; repeatable",
    )
    p_ver.add_argument("--window", required=True)
    p_ver.set_defaults(handler=_cmd_verdict)

    p_cube = sub.add_parser("cube", help="finite hypercube ground truth")
    cube_sub = p_cube.add_subparsers(dest="cube_command", required=True)
    p_enum = cube_sub.add_parser("enum", help="count automorphisms")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument(
        "--method", choices=["brute", "extension"], default="extension"
    )
    p_enum.set_defaults(handler=_cmd_cube_enum)
    p_cross = cube_sub.add_parser(
        "crosscheck", help="compare enumerators, wreath pairs, reconstruction"
    )
    p_cross.add_argument("--n", type=int, required=True)
    p_cross.set_defaults(handler=_cmd_cube_crosscheck)

    p_demo = sub.add_parser("demo", help="built-in demonstrations")
    demo_sub = p_demo.add_subparsers(dest="demo_command", required=True)
    p_ex1 = demo_sub.add_parser(
        "example1",
        help="single-component oracle and its non-regularity certificate",
    )
    p_ex1.add_argument("--window", required=True)
    p_ex1.add_argument("--perm", help="permutation JSON (default swaps 1 and 2)")
    p_ex1.add_argument("--base", help="base vertex JSON (default all-positive)")
    p_ex1.set_defaults(handler=_cmd_demo_example1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload = args.handler(args)
    except MalformedOracleError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    print(json.dumps(payload, indent=2 if args.pretty else None))
    return 0


def console_main() -> None:
    sys.exit(main())
