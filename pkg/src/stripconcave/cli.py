"""Command-line entry point.

Every subcommand reads JSON (inline or from a file path), writes canonical
JSON to standard output, and exits 0 on success, 1 on infeasibility, 2 on
bad input and 3 on an internal guard failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures as fixture_module
from .construct import build_trapezoid, mu_general_build
from .core import (
    InfeasibleError,
    InputError,
    InternalError,
    array_from_json,
    array_to_json,
    boundary,
    canonical_json,
    config_from_json,
    pattern_from_json,
    pattern_to_json,
    rat,
    spec_from_json,
)
from .feasibility import check_general, check_parallelogram, check_trapezoid
from .flow import (
    boundary_of_flow,
    enumerate_vertices,
    flow_from_json,
    flow_to_json,
    gamma,
    gamma_inv,
    path_decompose,
    swap_flow,
    zigzag_swap,
)
from .polytope import count_scaled_points, facet_count_consistent, facets, kostka
from .tableau import SkewTableau, content, pattern_to_tableau, tableau_to_pattern

REDUCTION_C_ENV = "STRIPCONCAVE_REDUCTION_C"


def _load_json(source: str):
    """Parse inline JSON (starting with ``{`` or ``[``) or read a file."""
    text = source
    if not source.lstrip().startswith(("{", "[")):
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {source!r}: {exc}") from exc


def _reduction_c():
    raw = os.environ.get(REDUCTION_C_ENV)
    return None if raw is None else rat(raw)


def _emit(obj) -> None:
    print(canonical_json(obj))


def _cmd_check(args) -> int:
    spec = spec_from_json(_load_json(args.spec))
    n, m = len(spec.nu), len(spec.lam_bar)
    mode = args.mode
    if mode is None:
        mode = "general" if args.config else "trapezoid"
    if mode == "trapezoid":
        verdict = check_trapezoid(spec, n, m, exhaustive=args.exhaustive)
    elif mode == "parallelogram":
        verdict = check_parallelogram(spec, n, m, exhaustive=args.exhaustive)
    else:
        if not args.config:
            raise InputError("general mode needs --config")
        config = config_from_json(_load_json(args.config))
        verdict = check_general(config, spec, c=_reduction_c(), exhaustive=args.exhaustive)
    _emit(verdict.to_json())
    return 0 if verdict.feasible else 1


def _cmd_build(args) -> int:
    spec = spec_from_json(_load_json(args.spec))
    if args.config:
        config = config_from_json(_load_json(args.config))
        out = mu_general_build(config, spec, c=_reduction_c(), verbatim=args.proof_verbatim)
    else:
        if any(v != 0 for v in spec.mu):
            raise InputError("pass --config to build with a nonzero left boundary")
        out = build_trapezoid(spec.lam, spec.lam_bar, spec.nu, verbatim=args.proof_verbatim)
    _emit(array_to_json(out))
    return 0


def _cmd_flow(args) -> int:
    if args.direction == "to":
        if not args.array:
            raise InputError("flow to needs --array")
        x = array_from_json(_load_json(args.array))
        _emit(flow_to_json(gamma(x)))
    else:
        if not args.flow:
            raise InputError("flow from needs --flow")
        g = flow_from_json(_load_json(args.flow))
        if args.lam is not None:
            lam = tuple(rat(v) for v in _load_json(args.lam))
        else:
            lam, _ = boundary_of_flow(g)
        _emit(array_to_json(gamma_inv(g, lam)))
    return 0


def _cmd_vertices(args) -> int:
    spec = spec_from_json(_load_json(args.spec))
    out = enumerate_vertices(spec.lam, spec.lam_bar)
    _emit([array_to_json(x) for x in out])
    return 0


def _cmd_swap(args) -> int:
    if args.flow:
        g = flow_from_json(_load_json(args.flow))
        _emit(flow_to_json(swap_flow(g, args.layer)))
    elif args.array:
        x = array_from_json(_load_json(args.array))
        _emit(array_to_json(zigzag_swap(x, args.layer)))
    else:
        raise InputError("swap needs --flow or --array")
    return 0


def _cmd_decompose(args) -> int:
    g = flow_from_json(_load_json(args.flow))
    _emit(path_decompose(g).to_json())
    return 0


def _cmd_facets(args) -> int:
    if args.count_only:
        _emit(facet_count_consistent(args.n, args.m))
    else:
        _emit([f.to_json() for f in facets(args.n, args.m)])
    return 0


def _cmd_kostka(args) -> int:
    spec = spec_from_json(_load_json(args.spec))
    _emit(kostka(spec.lam, spec.lam_bar, spec.nu))
    return 0


def _cmd_count(args) -> int:
    spec = spec_from_json(_load_json(args.spec))
    _emit(count_scaled_points(spec.lam, spec.lam_bar, spec.nu, args.k))
    return 0


def _cmd_tableau(args) -> int:
    if args.action == "from-pattern":
        if not args.pattern:
            raise InputError("tableau from-pattern needs --pattern")
        p = pattern_from_json(_load_json(args.pattern))
        _emit(pattern_to_tableau(p).to_json())
    else:
        if not args.tableau:
            raise InputError(f"tableau {args.action} needs --tableau")
        t = SkewTableau.from_json(_load_json(args.tableau))
        if args.action == "to-pattern":
            _emit(pattern_to_json(tableau_to_pattern(t)))
        else:
            _emit(list(content(t)))
    return 0


def _cmd_fixtures(args) -> int:
    _emit(fixture_module.all_fixtures())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stripconcave",
        description="Exact feasibility, construction, flows, polytopes and tableaux "
        "for strip-concave arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide feasibility of boundary data")
    p.add_argument("--spec", required=True)
    p.add_argument("--config")
    p.add_argument("--mode", choices=["trapezoid", "parallelogram", "general"])
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("build", help="construct a witness array")
    p.add_argument("--spec", required=True)
    p.add_argument("--config")
    p.add_argument("--proof-verbatim", action="store_true")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("flow", help="convert between arrays and flows")
    p.add_argument("direction", choices=["to", "from"])
    p.add_argument("--array")
    p.add_argument("--flow")
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=_cmd_flow)

    p = sub.add_parser("vertices", help="enumerate polytope vertices")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=_cmd_vertices)

    p = sub.add_parser("swap", help="zigzag swap around a layer")
    p.add_argument("--layer", type=int, required=True)
    p.add_argument("--flow")
    p.add_argument("--array")
    p.set_defaults(func=_cmd_swap)

    p = sub.add_parser("decompose", help="decompose a flow into weighted paths")
    p.add_argument("--flow", required=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("facets", help="list the facet inequalities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_facets)

    p = sub.add_parser("kostka", help="count integer points / skew tableaux")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("count", help="count 1/k-integer points")
    p.add_argument("--spec", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("tableau", help="convert between patterns and tableaux")
    p.add_argument("action", choices=["from-pattern", "to-pattern", "content"])
    p.add_argument("--pattern")
    p.add_argument("--tableau")
    p.set_defaults(func=_cmd_tableau)

    p = sub.add_parser("fixtures", help="emit the built-in worked examples")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(canonical_json({"error": "input", "message": str(exc)}), file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        _emit({"feasible": False, "certificate": exc.certificate.to_json()})
        return 1
    except InternalError as exc:
        print(canonical_json({"error": "internal", "message": str(exc)}), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
