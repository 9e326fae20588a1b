"""Command-line interface.

Exit codes: 0 success, 2 usage, 3 parse error, 4 precondition or parameter
violation, 5 infeasible / no point found, 6 size guard, 7 domain error
(empty, unbounded or non-pointed polyhedron).
"""
import argparse
import json
import sys
from fractions import Fraction

from . import au, flat, oracle, width
from .corner import CornerSystem, build_group_system, group_optimize, solve_identity_case
from .errors import (DegenerateInputError, DomainError, ParameterError, ParseError,
                     PreconditionError, ShapeError, SingularMatrixError, SizeLimitError)
from .exact import identity, snf
from .instances import (emit_instance, emit_json_instance, gen_cube_cone, load_instance,
                        parse_instance, parse_json_instance, InstanceFile, count_cone_edges)
from .lp import Polyhedron
from .spectrum import (DEFAULT_MINOR_CAP, compute_spectrum, is_almost_unimodular, is_k_modular,
                       is_totally_k_modular)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_INFEASIBLE = 5
EXIT_SIZE = 6
EXIT_DOMAIN = 7

_ERROR_CODES = (
    (ParseError, EXIT_PARSE),
    (SizeLimitError, EXIT_SIZE),
    (DomainError, EXIT_DOMAIN),
    ((PreconditionError, ParameterError, ShapeError, SingularMatrixError,
      DegenerateInputError), EXIT_PRECONDITION),
)


class _Infeasible(Exception):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _fmt(x):
    if isinstance(x, (list, tuple)):
        return " ".join(_fmt(v) for v in x)
    return str(x)


def _read(path, stdin):
    if path == "-":
        text = stdin.read()
        if text.lstrip().startswith("{"):
            return parse_json_instance(text)
        return parse_instance(text)
    try:
        return load_instance(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _polyhedron(inst):
    if inst.b is None:
        raise PreconditionError("instance has no right-hand side 'b'")
    return Polyhedron(inst.A, inst.b)


def _objective(inst):
    if inst.c is None:
        raise PreconditionError("instance has no objective 'c'")
    return inst.c


def _cap(args, fallback):
    return fallback if args.cap is None else args.cap


def cmd_spectrum(args, inst):
    cap = _cap(args, DEFAULT_MINOR_CAP)
    spec = compute_spectrum(inst.A, cap=cap)
    out = {
        "rank": spec.rank,
        "delta_max": spec.delta_max,
        "delta_min": spec.delta_min,
        "delta_lcm": spec.delta_lcm,
        "delta_gcd": spec.delta_gcd,
        "unimodular": spec.delta_max == 1,
        "totally_unimodular": is_totally_k_modular(inst.A, 1, cap=cap),
        "bimodular": spec.delta_max <= 2,
        "equimodular": spec.is_equimodular,
    }
    if spec.delta_max > 1 and is_k_modular(inst.A, spec.delta_max, cap=cap):
        out["k_modular"] = spec.delta_max
    if spec.rank >= 2:
        out["almost_unimodular"] = is_almost_unimodular(inst.A, cap=cap)
    return out


def cmd_snf(args, inst):
    dec = snf(inst.A)
    return {"diagonal": dec.diagonal, "P": dec.P, "D": dec.D, "Q": dec.Q}


def _width_dict(res):
    return {"width": res.width, "direction": res.direction, "max_point": res.max_point,
            "min_point": res.min_point, "certified": res.certified, "radius": res.radius}


def cmd_width(args, inst):
    return _width_dict(width.width_exact(_polyhedron(inst), radius=args.radius,
                                         cap=_cap(args, width.DIRECTION_CAP)))


def _report(rep):
    out = {"status": rep.status, "point": rep.point}
    if rep.objective is not None:
        out["objective"] = rep.objective
    out["certificate"] = rep.certificate
    if not rep.found:
        raise _Infeasible(out)
    return out


def cmd_feasible(args, inst):
    P = _polyhedron(inst)
    method = args.method
    if method == "auto":
        method = "simplex" if P.m == P.n + 1 else "round-down"
    if method == "simplex":
        rep = flat.solve_simplex_feasible(P, policy=args.policy, radius=args.radius)
    else:
        rep = flat.solve_round_down(P, policy=args.policy, radius=args.radius)
    out = _report(rep)
    out["method"] = method
    return out


def cmd_optimize(args, inst):
    P = _polyhedron(inst)
    c = _objective(inst)
    method = args.method
    if method == "auto":
        if args.k == 1 and P.A and len(P.A[0]) >= 2 and is_almost_unimodular(P.A):
            method = "au"
        elif P.m == P.n + 1:
            method = "simplex"
        else:
            raise PreconditionError("no applicable method; use the oracle command")
    if method == "au":
        rep = au.solve_k_almost_unimodular(P, c, args.k)
    else:
        rep = flat.solve_simplex_optimize(P, c, policy=args.policy, radius=args.radius)
    out = _report(rep)
    out["method"] = method
    return out


def cmd_corner_solve(args, inst):
    """Corner system ``A x + y = b`` with ``y >= 0``; with ``c`` minimize ``c.y``."""
    b = _polyhedron(inst).b
    if inst.c is None:
        sol = solve_identity_case(inst.A, b)
        return {"y": sol.y, "x": sol.lifted_x}
    gs = build_group_system(CornerSystem(inst.A, identity(len(inst.A)), b))
    sol = group_optimize(gs, inst.c)
    if sol is None:
        raise _Infeasible({"status": "infeasible"})
    return {"y": sol.y, "x": sol.lifted_x, "value": sol.value, "group_order": gs.order,
            "moduli": gs.moduli, "stats": sol.stats}


def cmd_oracle(args, inst):
    P = _polyhedron(inst)
    cap = _cap(args, oracle.DEFAULT_CAP)
    if args.task == "points":
        pts = oracle.enumerate_lattice_points(P, cap=cap)
        return {"count": len(pts), "points": pts}
    if args.task == "optimize":
        found = oracle.brute_optimize(P, _objective(inst), cap=cap)
        if found is None:
            raise _Infeasible({"status": "infeasible"})
        return {"point": found[0], "objective": found[1]}
    return _width_dict(oracle.brute_width(P, args.radius))


def cmd_gen(args, inst):
    A = gen_cube_cone(args.n, args.scale_col)
    meta = {"n": args.n}
    if args.scale_col is not None:
        meta["scaled_col"] = args.scale_col
    return InstanceFile(A, name="cube-cone", metadata=meta)


def cmd_edges(args, inst):
    return {"edges": count_cone_edges(inst.A)}


def _global_options(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--radius", type=int, default=default(width.DEFAULT_RADIUS),
                        help="direction search radius for width computations")
    parser.add_argument("--cap", type=int, default=default(None),
                        help="enumeration cap (minors, lattice points, directions)")
    parser.add_argument("--policy", choices=flat.POLICIES, default=default("opportunistic"),
                        help="how width hypotheses are treated")
    parser.add_argument("--format", choices=("text", "json"), default=default("text"))


def build_parser():
    parser = argparse.ArgumentParser(prog="subdet", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_file=True, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        if needs_file:
            p.add_argument("file", help="instance file, or '-' for stdin")
        p.set_defaults(func=func, needs_file=needs_file)
        return p

    add("spectrum", cmd_spectrum, help="subdeterminant spectrum and class flags")
    add("snf", cmd_snf, help="Smith normal form with multipliers")
    add("width", cmd_width, help="lattice width of P(A, b)")
    p = add("feasible", cmd_feasible, help="find an integer point")
    p.add_argument("--method", choices=("round-down", "simplex", "auto"), default="auto")
    p = add("optimize", cmd_optimize, help="maximize c.x over integer points")
    p.add_argument("--method", choices=("simplex", "au", "auto"), default="auto")
    p.add_argument("--k", type=int, default=1)
    add("corner-solve", cmd_corner_solve, help="solve the corner system A x + y = b")
    p = add("oracle", cmd_oracle, needs_file=False, help="brute-force ground truth")
    p.add_argument("task", choices=("points", "optimize", "width"))
    p.add_argument("file", help="instance file, or '-' for stdin")
    p.set_defaults(needs_file=True)
    p = add("gen", cmd_gen, needs_file=False, help="generate instances")
    p.add_argument("family", choices=("cube-cone",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scale-col", type=int, default=None)
    add("edges", cmd_edges, help="count extreme rays of {x : A x <= 0}")
    return parser


def _emit(result, fmt, stdout):
    if isinstance(result, InstanceFile):
        stdout.write(emit_json_instance(result) if fmt == "json" else emit_instance(result))
        return
    if fmt == "json":
        stdout.write(json.dumps(_jsonable(result)) + "\n")
        return
    if set(result) == {"edges"}:
        stdout.write(f"{result['edges']}\n")
        return
    for key, value in result.items():
        if key == "certificate":
            for ck, cv in value.items():
                stdout.write(f"certificate.{ck}: {_fmt(_jsonable(cv))}\n")
        elif key == "points":
            for pt in value:
                stdout.write(f"point: {_fmt(pt)}\n")
        elif key in ("P", "D", "Q"):
            for row in value:
                stdout.write(f"{key}: {_fmt(row)}\n")
        else:
            stdout.write(f"{key}: {_fmt(_jsonable(value))}\n")


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        inst = _read(args.file, stdin) if args.needs_file else None
        result = args.func(args, inst)
    except _Infeasible as exc:
        _emit(exc.args[0], args.format, stdout)
        return EXIT_INFEASIBLE
    except Exception as exc:
        for kinds, code in _ERROR_CODES:
            if isinstance(exc, kinds):
                stderr.write(f"error: {exc}\n")
                return code
        raise
    _emit(result, args.format, stdout)
    return EXIT_OK


def main():
    sys.exit(run())
