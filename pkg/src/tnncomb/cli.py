"""Command-line front end: ``tnncomb <group> <command> ...``.

Exit status is 0 on success, 1 when the input is rejected (parse failure,
unreadable file, mathematical precondition) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .errors import DomainError
from .exact_core import (
    format_matrix,
    is_totally_nonnegative,
    is_totally_positive,
    minor,
    neville_factorize,
    parse_matrix,
    char_poly,
)
from .lr import jdt_table, lr_multiply, skew_schur_expand
from .minor_ineq import compare, parse_coloring, poset
from .planar_network import (
    disjoint_family_weight,
    from_json,
    network_from_tnn,
    to_dot,
    to_json,
    validate,
    weight_matrix,
)
from .polynomial import format_poly, parse_poly
from .rational import format_rat
from .realroots import certify_real_distinct, real_root_count, sturm_real_root_count, toeplitz_refute
from .symfunc import BASES, SymFn, convert, format_symfn, jacobi_trudi, parse_expression
from .tableaux import SkewShape, format_tableau, parse_partition


class UsageError(Exception):
    """Arguments parse but make no sense together; reported with exit status 2."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _index_set(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}")
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise DomainError(f"not an index set: {text!r}") from exc


def _fmt_set(idx: Sequence[int]) -> str:
    return "{" + ",".join(map(str, idx)) + "}"


def _matrix_json(M) -> list[list[str]]:
    return [[format_rat(v) for v in row] for row in M.rows()]


def _no_dot(args) -> None:
    if args.format == "dot":
        raise UsageError(f"--format dot is not available for '{args.group} {args.command}'")


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, indent=2))


# --- net --------------------------------------------------------------------------


def cmd_net_matrix(args) -> None:
    G = from_json(_read(args.network))
    check = validate(G)
    if not check:
        raise DomainError(f"invalid network: {check.violation}: {check.detail}")
    if args.format == "dot":
        _emit(to_dot(G))
        return
    W = weight_matrix(G)
    if args.format == "json":
        _emit_json({"matrix": _matrix_json(W)})
    else:
        _emit(format_matrix(W))


def cmd_net_minor(args) -> None:
    _no_dot(args)
    G = from_json(_read(args.network))
    check = validate(G)
    if not check:
        raise DomainError(f"invalid network: {check.violation}: {check.detail}")
    I, J = _index_set(args.I), _index_set(args.J)
    fam = disjoint_family_weight(G, I, J)
    det = minor(weight_matrix(G), I, J)
    if args.format == "json":
        _emit_json({"I": list(I), "J": list(J), "minor": format_rat(det), "families": format_rat(fam)})
    else:
        _emit(f"minor {_fmt_set(I)},{_fmt_set(J)}: {format_rat(det)}\ndisjoint families: {format_rat(fam)}")


def cmd_net_from_tnn(args) -> None:
    G = network_from_tnn(parse_matrix(_read(args.matrix)))
    _emit(to_dot(G) if args.format == "dot" else to_json(G))


def cmd_net_validate(args) -> None:
    _no_dot(args)
    check = validate(from_json(_read(args.network)))
    if args.format == "json":
        _emit_json({"ok": check.ok, "violation": check.violation, "detail": check.detail})
    else:
        _emit("valid" if check else f"invalid: {check.violation}: {check.detail}")


# --- tnn ----------------------------------------------------------------------------


def _witness_text(w) -> str:
    I, J, v = w
    return f"minor {_fmt_set(I)},{_fmt_set(J)} = {format_rat(v)}"


def cmd_tnn_check(args) -> None:
    _no_dot(args)
    M = parse_matrix(_read(args.matrix))
    nn, pos = is_totally_nonnegative(M), is_totally_positive(M)
    if args.format == "json":
        def wj(w):
            return None if w is None else {"I": list(w[0]), "J": list(w[1]), "value": format_rat(w[2])}

        _emit_json({
            "tnn": nn.ok, "tp": pos.ok, "minors_checked": nn.minors_checked,
            "tnn_witness": wj(nn.witness), "tp_witness": wj(pos.witness),
        })
        return
    lines = ["TNN: yes" if nn else f"TNN: no ({_witness_text(nn.witness)})"]
    lines.append("TP: yes" if pos else f"TP: no ({_witness_text(pos.witness)})")
    lines.append(f"minors checked: {nn.minors_checked}")
    _emit("\n".join(lines))


def cmd_tnn_factor(args) -> None:
    _no_dot(args)
    fac = neville_factorize(parse_matrix(_read(args.matrix)))
    if args.format == "json":
        def fj(f):
            return {"kind": f.kind, "j": f.j, "c": format_rat(f.c)}

        _emit_json({
            "n": fac.n,
            "lower": [fj(f) for f in fac.lower],
            "diagonal": [format_rat(d) for d in fac.diagonal],
            "upper": [fj(f) for f in fac.upper],
        })
        return
    lines = [f"L I+{format_rat(f.c)}*E[{f.j + 1},{f.j}]" for f in fac.lower]
    lines.append("D " + " ".join(format_rat(d) for d in fac.diagonal))
    lines += [f"U I+{format_rat(f.c)}*E[{f.j},{f.j + 1}]" for f in fac.upper]
    _emit("\n".join(lines))


def cmd_tnn_charpoly(args) -> None:
    _no_dot(args)
    P = char_poly(parse_matrix(_read(args.matrix)))
    distinct, total = sturm_real_root_count(P), real_root_count(P)
    if args.format == "json":
        _emit_json({"charpoly": [format_rat(c) for c in P.coeffs], "distinct_real_roots": distinct, "real_roots": total})
    else:
        _emit(f"{format_poly(P)}\ndistinct real roots: {distinct}\nreal roots with multiplicity: {total} of {P.degree}")


# --- sym --------------------------------------------------------------------------


def _symfn_json(f: SymFn) -> dict:
    return {"basis": f.basis, "terms": [{"partition": list(lam), "coef": format_rat(c)} for lam, c in f.items()]}


def _emit_symfn(args, f: SymFn) -> None:
    if args.format == "json":
        _emit_json(_symfn_json(f))
    else:
        _emit(format_symfn(f))


def cmd_sym_eval(args) -> None:
    _no_dot(args)
    f = parse_expression(args.expr, degree_bound=args.degree_bound)
    _emit_symfn(args, convert(f, args.basis))


def cmd_sym_lr(args) -> None:
    _no_dot(args)
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    coeffs = lr_multiply(lam, mu, degree_bound=args.degree_bound)
    _emit_symfn(args, SymFn("s", coeffs, args.degree_bound))


def cmd_sym_skew(args) -> None:
    _no_dot(args)
    shape = SkewShape.parse(args.shape)
    coeffs = skew_schur_expand(shape, degree_bound=args.degree_bound)
    f = SymFn("s", coeffs, args.degree_bound)
    if args.table:
        if args.format == "json":
            rows = [{"tableau": format_tableau(T), "jdt": format_tableau(R), "counted": ok} for T, R, ok in jdt_table(shape)]
            _emit_json({"table": rows, "expansion": _symfn_json(f)})
            return
        blocks = []
        for T, R, ok in jdt_table(shape):
            blocks.append(f"{format_tableau(T)}\n->\n{format_tableau(R)}\n{'counted' if ok else 'not counted'}")
        _emit("\n\n".join(blocks) + "\n\n" + format_symfn(f))
        return
    _emit_symfn(args, f)


def cmd_sym_jt(args) -> None:
    _no_dot(args)
    J = jacobi_trudi(SkewShape.parse(args.shape), degree_bound=args.degree_bound)
    det = J.determinant()
    if args.format == "json":
        _emit_json({"indices": [list(r) for r in J.indices], "determinant": _symfn_json(det), "schur": _symfn_json(convert(det, "s"))})
    else:
        _emit(f"{J.format()}\n\n{format_symfn(det)}\n\n{format_symfn(convert(det, 's'))}")


# --- ineq ---------------------------------------------------------------------------


def cmd_ineq_poset(args) -> None:
    P = poset(args.n, method=args.method)
    fmt = "dot" if args.dot else args.format
    if fmt == "dot":
        _emit(P.to_dot())
    elif fmt == "json":
        _emit(P.to_json())
    else:
        _emit(P.format())


def cmd_ineq_compare(args) -> None:
    _no_dot(args)
    c1, c2 = parse_coloring(args.n, args.I), parse_coloring(args.n, args.J)
    rel = compare(c1, c2, args.method)
    if args.format == "json":
        _emit_json({"lhs": list(c1.I), "rhs": list(c2.I), "n": args.n, "relation": rel})
    else:
        _emit(f"{c1.label()} {rel} {c2.label()}")


# --- roots ---------------------------------------------------------------------------


def cmd_roots_certify(args) -> None:
    _no_dot(args)
    a = parse_poly(args.poly)
    cert = certify_real_distinct(a)
    if args.format == "json":
        w = cert.witness
        _emit_json({
            "certified": cert.certified,
            "hankel": _matrix_json(cert.hankel),
            "witness": None if w is None else {"I": list(w[0]), "J": list(w[1]), "value": format_rat(w[2])},
        })
        return
    if cert:
        _emit("real-rooted: certified (Hankel TP)")
    else:
        _emit(f"real-rooted: not certified (Hankel {_witness_text(cert.witness)})")


def cmd_roots_refute(args) -> None:
    _no_dot(args)
    a = parse_poly(args.poly)
    m = args.m if args.m is not None else a.degree + 3
    ref = toeplitz_refute(a, m)
    if args.format == "json":
        w = ref.witness
        _emit_json({
            "refuted": ref.refuted, "m": m,
            "witness": None if w is None else {"I": list(w[0]), "J": list(w[1]), "value": format_rat(w[2])},
        })
    elif ref:
        _emit(f"not real-rooted: Toeplitz {_witness_text(ref.witness)} (m = {m})")
    else:
        _emit(f"inconclusive: no negative Toeplitz minor (m = {m})")


def cmd_roots_sturm(args) -> None:
    _no_dot(args)
    a = parse_poly(args.poly)
    count = sturm_real_root_count(a)
    if args.format == "json":
        _emit_json({"degree": a.degree, "distinct_real_roots": count})
    else:
        _emit(f"distinct real roots: {count} of degree {a.degree}")


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")

    parser = argparse.ArgumentParser(prog="tnncomb", description="Exact tools for totally nonnegative matrices.")
    groups = parser.add_subparsers(dest="group", required=True)

    def add(group_parser, name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = group_parser.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    net = groups.add_parser("net", help="planar networks").add_subparsers(dest="command", required=True)
    add(net, "matrix", cmd_net_matrix, "weight matrix of a network").add_argument("network")
    p = add(net, "minor", cmd_net_minor, "minor and disjoint-family weight")
    p.add_argument("network")
    p.add_argument("-I", required=True)
    p.add_argument("-J", required=True)
    add(net, "from-tnn", cmd_net_from_tnn, "network realizing a TNN matrix").add_argument("matrix")
    add(net, "validate", cmd_net_validate, "check the network rules").add_argument("network")

    tnn = groups.add_parser("tnn", help="matrix tests").add_subparsers(dest="command", required=True)
    add(tnn, "check", cmd_tnn_check, "TNN and TP test").add_argument("matrix")
    add(tnn, "factor", cmd_tnn_factor, "elementary bidiagonal factorization").add_argument("matrix")
    add(tnn, "charpoly", cmd_tnn_charpoly, "characteristic polynomial").add_argument("matrix")

    sym = groups.add_parser("sym", help="symmetric functions").add_subparsers(dest="command", required=True)
    p = add(sym, "eval", cmd_sym_eval, "evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--basis", choices=BASES, default="s")
    p = add(sym, "lr", cmd_sym_lr, "Littlewood-Richardson product")
    p.add_argument("lam")
    p.add_argument("mu")
    p = add(sym, "skew", cmd_sym_skew, "skew Schur expansion by jeu de taquin")
    p.add_argument("shape")
    p.add_argument("--table", action="store_true", help="list every standard tableau and its rectification")
    add(sym, "jt", cmd_sym_jt, "Jacobi-Trudi matrix and determinant").add_argument("shape")
    for sp in ("eval", "lr", "skew", "jt"):
        sym.choices[sp].add_argument("--degree-bound", type=int, default=20)

    ineq = groups.add_parser("ineq", help="minor-product inequalities").add_subparsers(dest="command", required=True)
    p = add(ineq, "poset", cmd_ineq_poset, "poset of complementary minor products")
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p.add_argument("--method", choices=("TL", "lattice"), default="TL")
    p = add(ineq, "compare", cmd_ineq_compare, "compare two products")
    p.add_argument("n", type=int)
    p.add_argument("I")
    p.add_argument("J")
    p.add_argument("--method", choices=("TL", "lattice"), default="TL")

    roots = groups.add_parser("roots", help="real-rootedness").add_subparsers(dest="command", required=True)
    add(roots, "certify", cmd_roots_certify, "Hankel total-positivity certificate").add_argument("poly")
    p = add(roots, "refute", cmd_roots_refute, "search a Toeplitz corner for a negative minor")
    p.add_argument("poly")
    p.add_argument("-m", type=int, default=None, help="corner size (default degree + 3)")
    add(roots, "sturm", cmd_roots_sturm, "count distinct real roots").add_argument("poly")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
