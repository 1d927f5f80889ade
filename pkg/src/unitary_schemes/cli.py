"""Command-line interface: build schemes, print character tables, export
relation matrices, and run the verification suite."""

from __future__ import annotations

import argparse
import sys

from . import chartable as ct_mod
from . import fusion as fusion_mod
from . import scheme as scheme_mod
from . import serialize
from .eisenstein import Eisenstein
from .space import enumerate_isotropic, isotropic_count
from .fields import SUPPORTED_Q


def _pretty(x: Eisenstein) -> str:
    def rat(r):
        return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"

    if x.b == 0:
        return rat(x.a)
    if x.a == 0:
        if x.b == 1:
            return "w"
        if x.b == -1:
            return "-w"
        return f"{rat(x.b)}w"
    sep = "-" if x.b < 0 else "+"
    b = -x.b if x.b < 0 else x.b
    tail = "w" if b == 1 else f"{rat(b)}w"
    return f"{rat(x.a)}{sep}{tail}"


def _print_table(table: ct_mod.CharTable) -> None:
    cells = [[_pretty(x) for x in row] for row in table.entries]
    widths = [max(len(cells[i][j]) for i in range(table.size)) for j in range(table.size)]
    mwidth = max(len(str(m)) for m in table.multiplicities)
    for row, m in zip(cells, table.multiplicities):
        body = "  ".join(c.rjust(w) for c, w in zip(row, widths))
        print(f"  {body}  | {str(m).rjust(mwidth)}")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    sd = scheme_mod.build_descriptor(args.n, args.q, mode=args.mode, seed=args.seed)
    if args.format == "doc":
        doc = serialize.document_from_descriptor(sd, seed=args.seed)
        _write(serialize.render_document(doc), args.out)
    elif args.format == "csv":
        doc = serialize.document_from_descriptor(sd, seed=args.seed)
        _write(serialize.tensor_csv(doc), args.out)
    else:  # hanaki
        us = enumerate_isotropic(args.n, args.q)
        matrix = scheme_mod.relation_matrix(us)
        _write(serialize.render_relation_matrix(matrix, sd.rank), args.out)
    return 0


def cmd_chartable(args) -> int:
    table = ct_mod.char_table_closed(args.n)
    fusion_name = None
    if args.fusion != "none":
        conj = tuple(scheme_mod.conjugate_index(l, args.n, 2)
                     for l in range(scheme_mod.scheme_rank(args.n, 2)))
        partition = dict(fusion_mod.canonical_fusions(args.n))[
            "symmetrize" if args.fusion == "symmetrize" else "coarse"]
        table = fusion_mod.fuse(table, conj, partition).table
        fusion_name = args.fusion
    label = f"character table, dimension {args.n}, {table.order} points"
    if fusion_name:
        label += f", fusion {fusion_name}"
    print(label)
    _print_table(table)
    if args.out is not None:
        doc = serialize.document_from_chartable(table, args.n, fusion=fusion_name,
                                                seed=args.seed)
        text = (serialize.render_document(doc) if args.format == "doc"
                else serialize.chartable_csv(doc))
        _write(text, args.out)
    return 0


def cmd_export(args) -> int:
    size = isotropic_count(args.n, args.q)
    if size > scheme_mod.DENSE_BUDGET:
        print(f"error: {size} points exceed the export budget of "
              f"{scheme_mod.DENSE_BUDGET}", file=sys.stderr)
        return 2
    us = enumerate_isotropic(args.n, args.q)
    matrix = scheme_mod.relation_matrix(us)
    rank = scheme_mod.scheme_rank(args.n, args.q)
    _write(serialize.render_relation_matrix(matrix, rank), args.out)
    return 0


def cmd_verify(args) -> int:
    n, q = args.n, args.q
    lines: list[tuple[bool, str]] = []
    notes: list[str] = []

    sd = scheme_mod.build_descriptor(n, q, mode=args.mode, seed=args.seed)
    order = sd.order

    if args.mode in ("bruteforce", "both"):
        us = enumerate_isotropic(n, q)
        lines.append((us.size == order,
                      f"counting: enumeration gives {us.size}, closed form {order}"))
        lines.append((args.mode == "both",
                      "oracle: closed-form tensor equals brute-force tensor"))
        if us.size**2 <= scheme_mod.PAIR_BUDGET:
            report = scheme_mod.verify_scheme_axioms(us, sd, seed=args.seed)
            detail = ", ".join(name for name, _, _ in report.checks)
            lines.append((report.passed, f"axioms: {detail}"))
        else:
            notes.append("axioms: pair classification over budget, skipped")
    else:
        notes.append("counting/axioms: closed mode, enumeration skipped")

    commutative, first = scheme_mod.is_commutative(sd)
    if q == 2:
        lines.append((commutative, "commutative: expected for q=2"))
    else:
        detail = f"non-commutative as expected for q={q}"
        nrel = q * q - 1
        h, i, j = q, nrel, nrel + 1
        detail += (f"; witness ({h},{i},{j}): {sd.p(h, i, j)} vs {sd.p(h, j, i)}"
                   f"; first violating triple {first}")
        lines.append((not commutative and sd.p(h, j, i) == 0, detail))

    if q == 2:
        table = ct_mod.char_table_closed(n)
        ok_orth, _ = ct_mod.verify_orthogonality(table)
        ok_hom, _ = ct_mod.verify_homomorphism(table, sd)
        ok_rec = all(
            ct_mod.reconstruct_intersection(table, h, i, j) == sd.tensor[h][i][j]
            for h in range(sd.rank) for i in range(sd.rank) for j in range(sd.rank)
        )
        try:
            ct_mod.second_eigenmatrix(table)
            ok_q = True
        except AssertionError:
            ok_q = False
        ok_min = ct_mod.minimal_polynomial_annihilates(
            table, scheme_mod.intersection_matrices(sd))
        lines.append((ok_orth and ok_hom and ok_rec and ok_q and ok_min,
                      "character table: orthogonality, homomorphism, reconstruction, "
                      "eigenmatrix inverse, minimal polynomials"))
    if n <= 3:
        notes.append("perpendicular class empty (dimension < 4)")

    print(f"scheme (n={n}, q={q}): {order} points, rank {sd.rank}")
    passed = True
    for ok, text in lines:
        passed &= ok
        print(("ok   - " if ok else "FAIL - ") + text)
    for note in notes:
        print("note - " + note)
    print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="unitary-schemes",
        description="Association schemes of unitary group actions on isotropic vectors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_q=True):
        p.add_argument("--n", type=int, required=True, help="dimension (>= 2)")
        if with_q:
            p.add_argument("--q", type=int, required=True,
                           help=f"field parameter, one of {SUPPORTED_Q}")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for representative spot checks")
        p.add_argument("--out", type=str, default=None, help="output path")

    p_build = sub.add_parser("build", help="build a scheme descriptor document")
    common(p_build)
    p_build.add_argument("--mode", choices=scheme_mod.MODES, default="both")
    p_build.add_argument("--format", choices=("doc", "csv", "hanaki"), default="doc")
    p_build.set_defaults(func=cmd_build)

    p_table = sub.add_parser("chartable", help="print the q=2 character table")
    common(p_table, with_q=False)
    p_table.add_argument("--fusion", choices=("none", "symmetrize", "coarse"),
                         default="none")
    p_table.add_argument("--format", choices=("doc", "csv"), default="doc")
    p_table.set_defaults(func=cmd_chartable)

    p_export = sub.add_parser("export", help="write the relation matrix")
    common(p_export)
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    common(p_verify)
    p_verify.add_argument("--mode", choices=scheme_mod.MODES, default="both")
    p_verify.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, scheme_mod.OracleMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
