"""Command-line surface: every computation behind one executable.

Output is deterministic (identical bytes for identical arguments).  Exit
codes: 0 success or all checks passed, 1 a verification check failed,
2 usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lehmer, linalg, series
from .poly import RatFunc, ratfunc_to_json_obj, to_json_obj, to_text
from .qcomb import gauss_product


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _poly_lines(label: str, polys) -> str:
    return f"{label}: " + ", ".join(to_text(p) for p in polys)


def _rat_lines(label: str, rats) -> str:
    return f"{label}: " + ", ".join(str(r) for r in rats)


def _cmd_lambda(args) -> int:
    value = lehmer.lambda_rec(args.j)[args.j]
    if args.json:
        _emit_json(to_json_obj(value))
    else:
        print(to_text(value))
    return 0


def _cmd_matrix(args) -> int:
    m = lehmer.lehmer_matrix(args.n)
    if args.json:
        _emit_json({"n": m.n,
                    "diag": [to_json_obj(p) for p in m.diag],
                    "super": [to_json_obj(p) for p in m.superdiag],
                    "sub": [to_json_obj(p) for p in m.subdiag]})
    else:
        print(f"n: {m.n}")
        print(_poly_lines("diag", m.diag))
        print(_poly_lines("super", m.superdiag))
        print(_poly_lines("sub", m.subdiag))
    return 0


def _cmd_det(args) -> int:
    value = lehmer.det_closed(args.n)
    if args.json:
        _emit_json(to_json_obj(value))
    else:
        print(to_text(value))
    return 0


def _cmd_lu(args) -> int:
    f = lehmer.closed_factors(args.n)
    if args.json:
        _emit_json({"n": f.n,
                    "u_diag": [ratfunc_to_json_obj(r) for r in f.u_diag],
                    "u_super": [to_json_obj(p) for p in f.u_super],
                    "l_sub": [ratfunc_to_json_obj(r) for r in f.l_sub]})
    else:
        print(f"n: {f.n}")
        print(_rat_lines("u_diag", f.u_diag))
        print(_poly_lines("u_super", f.u_super))
        print(_rat_lines("l_sub", f.l_sub))
    return 0


def _cmd_qbinom(args) -> int:
    value = gauss_product(args.n, args.k)
    if args.json:
        _emit_json(to_json_obj(value))
    else:
        print(to_text(value))
    return 0


def _cmd_limit(args) -> int:
    s = series.limit_det(args.zdeg, args.qdeg)
    if args.json:
        _emit_json({"z_trunc": s.z_trunc, "q_trunc": s.q_trunc,
                    "coeffs": [to_json_obj(c) for c in s.coeffs]})
    else:
        print(str(s))
    return 0


def _cmd_stabilize(args) -> int:
    try:
        d = series.stabilization_check(args.n, args.k)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print("exact" if d is None else str(d))
    return 0


def _cmd_dyck(args) -> int:
    print(series.dyck_count(args.m, args.h))
    return 0


def _cmd_verify(args) -> int:
    m = lehmer.lehmer_matrix(args.n)
    f = lehmer.closed_factors(args.n)
    checks = [
        ("lu_generic rediscovers closed factors", linalg.lu_generic(m) == f),
        ("product L*U equals matrix", bool(linalg.product_check(f, m))),
        ("continuant det equals closed det",
         linalg.det_cofactor(m) == lehmer.det_closed(args.n)),
    ]
    all_ok = True
    for name, ok in checks:
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlehmer",
        description="Exact computations around the Lehmer tridiagonal determinant family.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit the JSON form")
        return p

    p = with_json(sub.add_parser("lambda", help="the determinant polynomial lam(j)"))
    p.add_argument("j", type=_nonneg_int)
    p.set_defaults(func=_cmd_lambda)

    p = with_json(sub.add_parser("matrix", help="the n x n Lehmer matrix bands"))
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=_cmd_matrix)

    p = with_json(sub.add_parser("det", help="closed-form determinant of M(n)"))
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=_cmd_det)

    p = with_json(sub.add_parser("lu", help="closed-form LU factors of M(n)"))
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=_cmd_lu)

    p = sub.add_parser("verify", help="run the independent oracles against the closed forms")
    p.add_argument("n", type=_positive_int)
    p.set_defaults(func=_cmd_verify)

    p = with_json(sub.add_parser("qbinom", help="Gaussian q-binomial coefficient"))
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_qbinom)

    p = with_json(sub.add_parser("limit", help="the infinite-size limit determinant series"))
    p.add_argument("--zdeg", type=_nonneg_int, required=True, help="z truncation order")
    p.add_argument("--qdeg", type=_nonneg_int, required=True, help="q truncation order")
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("stabilize", help="q-degree through which det M(n) agrees with the limit at z^k")
    p.add_argument("n", type=_positive_int)
    p.add_argument("k", type=_nonneg_int)
    p.set_defaults(func=_cmd_stabilize)

    p = sub.add_parser("dyck", help="bounded-height Dyck path count")
    p.add_argument("m", type=_nonneg_int, help="half-length")
    p.add_argument("h", type=_nonneg_int, help="height bound")
    p.set_defaults(func=_cmd_dyck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
