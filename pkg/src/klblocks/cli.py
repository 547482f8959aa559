"""Command-line front end.

One subcommand per computation: root data, Weyl cosets, KL polynomials,
Schubert products, Gram forms, the graded block matrices, graded
dimensions, Bott-Samelson decompositions, wall-crossing translation and
the cross-validation suite.  Output is a text table by default and JSON
or CSV on request; the same invocation always produces the same bytes.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when check-all
finds a violated invariant.  Set KLBLOCKS_CACHE_DIR to persist computed
KL tables between runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from fractions import Fraction

from . import klcache, serialize
from .blocks import (
    bott_samelson_decomposition,
    decomposition_matrix,
    graded_cartan_matrix,
    inverse_decomposition_matrix,
    make_block,
    standard_block,
    translation_composite,
    vp_center,
    vp_graded_dimension,
)
from .checks import run_all_checks
from .hecke import HeckeAlgebra
from .laurent import LaurentPoly
from .roots import UnknownTypeError
from .schubert import CoinvariantAlgebra
from .serialize import matrix_to_csv, matrix_to_json, matrix_to_table, word_label
from .weyl import WeylGroup, weyl_group_of_kind

__all__ = ["main"]

_CACHE_ENV = "KLBLOCKS_CACHE_DIR"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_subset(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "e":
        return ()
    try:
        return tuple(int(part) for part in text.replace(".", ",").split(","))
    except ValueError:
        raise _UsageError(f"bad reduced word {text!r}") from None


def _element(group: WeylGroup, text: str):
    word = _parse_word(text)
    for letter in word:
        if not 1 <= letter <= group.rank:
            raise _UsageError(f"letter {letter} out of range for {group.kind}")
    return group.word_elem(word)


def _group(args) -> WeylGroup:
    try:
        group = weyl_group_of_kind(args.type)
    except UnknownTypeError as exc:
        raise _UsageError(str(exc)) from None
    for name in ("I", "J"):
        for i in getattr(args, name, ()):
            if not 1 <= i <= group.rank:
                raise _UsageError(f"--{name} index {i} out of range for {group.kind}")
    return group


def _hecke_with_cache(group: WeylGroup):
    """Hecke algebra plus a flush callback wired to the cache directory."""
    hecke = HeckeAlgebra(group)
    directory = os.environ.get(_CACHE_ENV)
    if not directory:
        return hecke, lambda: None
    os.makedirs(directory, exist_ok=True)
    path = klcache.cache_path(directory, group.kind)
    if os.path.exists(path):
        klcache.load_kl_table(path, hecke)

    def flush():
        klcache.save_kl_table(hecke.kl_table, path)

    return hecke, flush


def _print_matrix(matrix, args) -> None:
    if args.eval_v is not None and args.format == "csv":
        raise _UsageError("--eval-v is not available with --format csv")
    if args.format == "json":
        text = matrix_to_json(matrix)
        if args.eval_v is not None:
            payload = json.loads(text)
            payload["eval_point"] = args.eval_v
            payload["eval"] = [
                [str(x) for x in row] for row in matrix.evaluate(args.eval_v)
            ]
            text = json.dumps(payload, indent=2)
        print(text)
        return
    if args.format == "csv":
        print(matrix_to_csv(matrix), end="")
        return
    print(matrix_to_table(matrix))
    if args.eval_v is not None:
        print()
        print(f"at v={args.eval_v}:")
        print(serialize.plain_table(
            [word_label(w) for w in matrix.rows],
            [word_label(w) for w in matrix.cols],
            [[str(x) for x in row] for row in matrix.evaluate(args.eval_v)],
            corner="w",
        ))


def _block(args, group: WeylGroup):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        try:
            return standard_block(group, sorted(args.I), sorted(args.J))
        except UserWarning as exc:
            raise _UsageError(str(exc)) from None


# -- subcommand handlers ---------------------------------------------


def _cmd_root_system(args) -> int:
    group = _group(args)
    datum = group.datum
    if args.format == "json":
        payload = {
            "kind": datum.kind,
            "rank": datum.rank,
            "cartan": [list(row) for row in datum.cartan],
            "positive_roots": [list(r) for r in datum.pos_roots],
            "positive_coroots": [list(r) for r in datum.pos_coroots],
            "weyl_order": len(group.elements),
            "longest_word": list(group.w0.word),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"kind {datum.kind}")
    print(f"rank {datum.rank}")
    print(f"positive roots {len(datum.pos_roots)}")
    print(f"weyl order {len(group.elements)}")
    print(f"longest word {word_label(group.w0)}")
    print()
    print("cartan matrix:")
    for row in datum.cartan:
        print("  " + " ".join(f"{x:3d}" for x in row))
    print()
    rows = [
        [str(t), ",".join(map(str, root)), ",".join(map(str, coroot)), str(sum(root))]
        for t, (root, coroot) in enumerate(zip(datum.pos_roots, datum.pos_coroots))
    ]
    print(serialize.plain_table(
        [r[0] for r in rows],
        ["root", "coroot", "height"],
        [r[1:] for r in rows],
        corner="idx",
    ))
    return 0


def _cmd_weyl(args) -> int:
    group = _group(args)
    I, J = args.I, args.J
    if I and J:
        elems = group.double_quotient(I, J)
        title = f"double quotient, I={sorted(I)} J={sorted(J)}"
    elif J:
        elems = group.min_coset_reps(J)
        title = f"minimal coset representatives, J={sorted(J)}"
    elif I:
        elems = group.min_coset_reps_right(I)
        title = f"minimal right coset representatives, I={sorted(I)}"
    else:
        elems = group.elements
        title = "all elements"
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "selection": title,
            "count": len(elems),
            "elements": [
                {"word": list(w.word), "length": w.length} for w in elems
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"{group.kind}: {title} ({len(elems)})")
    print(serialize.plain_table(
        [word_label(w) for w in elems],
        ["length"],
        [[str(w.length)] for w in elems],
        corner="w",
    ))
    return 0


def _cmd_kl(args) -> int:
    group = _group(args)
    hecke, flush = _hecke_with_cache(group)
    y = _element(group, args.y)
    w = _element(group, args.w)
    poly = hecke.kl_polynomial(y, w)
    flush()
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "y": list(y.word),
            "w": list(w.word),
            "p": [{"exp": e, "coef": c} for e, c in poly.items()],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(poly.render("q"))
    return 0


def _cmd_schubert(args) -> int:
    group = _group(args)
    coinv = CoinvariantAlgebra(group)
    x = _element(group, args.x)
    y = _element(group, args.y)
    product = coinv.multiply(coinv.schubert_class(x), coinv.schubert_class(y))
    pairs = product.items()
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "x": list(x.word),
            "y": list(y.word),
            "product": [
                {"word": list(w.word), "coef": str(c)} for w, c in pairs
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"X[{word_label(x)}] * X[{word_label(y)}] =")
    if not pairs:
        print("  0")
    for w, c in pairs:
        print(f"  {c} X[{word_label(w)}]")
    return 0


def _cmd_gram(args) -> int:
    group = _group(args)
    coinv = CoinvariantAlgebra(group)
    reps, gram = coinv.gram_matrix(args.J)
    labels = [word_label(w) for w in reps]
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "J": sorted(args.J),
            "basis": [list(w.word) for w in reps],
            "gram": [[str(x) for x in row] for row in gram],
        }
        print(json.dumps(payload, indent=2))
        return 0
    if args.format == "csv":
        print("w," + ",".join(labels))
        for label, row in zip(labels, gram):
            print(label + "," + ",".join(str(x) for x in row))
        return 0
    print(f"{group.kind}: symmetrizing form on invariants, J={sorted(args.J)}")
    print(serialize.plain_table(
        labels, labels, [[str(x) for x in row] for row in gram], corner="w"
    ))
    return 0


def _matrix_command(args, builder) -> int:
    group = _group(args)
    hecke, flush = _hecke_with_cache(group)
    block = _block(args, group)
    matrix = builder(block, hecke)
    flush()
    _print_matrix(matrix, args)
    return 0


def _cmd_vp_dims(args) -> int:
    group = _group(args)
    hecke, flush = _hecke_with_cache(group)
    if args.I:
        raise _UsageError("graded dimensions require I empty")
    block = _block(args, group)
    d = decomposition_matrix(block, hecke)
    flush()
    center = vp_center(block)
    rows = []
    for x in block.index_set:
        vp = vp_graded_dimension(block, hecke, x, d)
        rows.append((x, vp))
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "J": sorted(args.J),
            "center": center,
            "dimensions": [
                {"x": list(x.word), "dim": [{"exp": e, "coef": c} for e, c in vp.items()]}
                for x, vp in rows
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"{group.kind}: graded dimensions, J={sorted(args.J)}, center {center}")
    print(serialize.plain_table(
        [word_label(x) for x, _ in rows],
        ["dimension"],
        [[vp.render()] for _, vp in rows],
        corner="x",
    ))
    return 0


def _cmd_bott_samelson(args) -> int:
    group = _group(args)
    hecke, flush = _hecke_with_cache(group)
    block = make_block(group, (-2,) * group.rank, (-2,) * group.rank)
    report = bott_samelson_decomposition(block, hecke, _parse_word(args.word))
    flush()
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "word": list(report.word),
            "x": list(report.x.word),
            "shift": report.shift,
            "multiplicities": [
                {"y": list(y.word), "mult": [{"exp": e, "coef": c} for e, c in m.items()]}
                for y, m in sorted(
                    report.multiplicities.items(), key=lambda kv: kv[0].index
                )
            ],
            "dimension_identity_ok": report.dimension_identity_ok,
            "top_multiplicity_ok": report.top_multiplicity_ok,
            "support_ok": report.support_ok,
            "natural_coeffs_ok": report.natural_coeffs_ok,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"word {'.'.join(map(str, report.word)) or 'e'} -> x = {word_label(report.x)}")
    ordered = sorted(report.multiplicities.items(), key=lambda kv: kv[0].index)
    print(serialize.plain_table(
        [word_label(y) for y, _ in ordered],
        ["multiplicity"],
        [[m.render()] for _, m in ordered],
        corner="y",
    ))
    print(f"shift v^{report.shift}")
    for label, flag in (
        ("dimension identity", report.dimension_identity_ok),
        ("top multiplicity 1", report.top_multiplicity_ok),
        ("support below x", report.support_ok),
        ("natural coefficients", report.natural_coeffs_ok),
    ):
        print(f"{label}: {'ok' if flag else 'FAIL'}")
    return 0


def _cmd_translate(args) -> int:
    group = _group(args)
    hecke, flush = _hecke_with_cache(group)
    regular = make_block(group, (-2,) * group.rank, (-2,) * group.rank)
    wall = standard_block(group, (), sorted(args.J))
    x = _element(group, args.x)
    if x not in wall.index_set:
        raise _UsageError(
            f"{word_label(x)} is not a minimal representative for J={sorted(args.J)}"
        )
    composite = translation_composite(regular, wall, x)
    w_j = group.parabolic_longest(args.J) if args.J else group.identity
    target = hecke.t(x) * hecke.kl_element(w_j)
    agrees = dict(target.items()) == composite
    flush()
    ordered = sorted(composite.items(), key=lambda kv: kv[0].index)
    if args.format == "json":
        payload = {
            "kind": group.kind,
            "J": sorted(args.J),
            "x": list(x.word),
            "composite": [
                {"y": list(y.word), "coef": [{"exp": e, "coef": c} for e, c in p.items()]}
                for y, p in ordered
            ],
            "matches_hecke_product": agrees,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"{group.kind}: wall J={sorted(args.J)}, through-wall image of [{word_label(x)}]")
    print(serialize.plain_table(
        [word_label(y) for y, _ in ordered],
        ["coefficient"],
        [[p.render()] for _, p in ordered],
        corner="y",
    ))
    print(f"matches T_x * C_wall: {'ok' if agrees else 'FAIL'}")
    return 0


def _cmd_check_all(args) -> int:
    results = run_all_checks(args.type, progress=lambda r: print(r.line()))
    failed = [r for r in results if not r.passed]
    print()
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 2 if failed else 0


# -- argument wiring -------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="klblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, *, subsets=False, matrix=False,
            word_flags=(), formats=("table", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help="root system type, e.g. B3")
        p.add_argument("--format", choices=formats, default="table")
        if subsets:
            p.add_argument("--I", type=_parse_subset, default=frozenset(),
                           help="comma-separated simple indices (1-based)")
            p.add_argument("--J", type=_parse_subset, default=frozenset(),
                           help="comma-separated simple indices (1-based)")
        if matrix:
            p.add_argument("--eval-v", type=int, default=None, dest="eval_v",
                           help="append the specialization at this integer")
        for flag, help_word in word_flags:
            p.add_argument(flag, required=True, help=help_word)
        p.set_defaults(handler=handler)
        return p

    add("root-system", _cmd_root_system, "Cartan matrix and positive roots")
    add("weyl", _cmd_weyl, "elements and coset representatives", subsets=True)
    add("kl", _cmd_kl, "one Kazhdan-Lusztig polynomial",
        word_flags=(("--y", "lower reduced word"), ("--w", "upper reduced word")))
    add("schubert", _cmd_schubert, "product of two Schubert classes",
        word_flags=(("--x", "first reduced word"), ("--y", "second reduced word")))
    p = add("gram", _cmd_gram, "Gram matrix of the parabolic symmetrizing form",
            formats=("table", "json", "csv"))
    p.add_argument("--J", type=_parse_subset, default=frozenset(),
                   help="comma-separated simple indices (1-based)")
    add("decomp", _matrix_command_handler(decomposition_matrix),
        "graded decomposition matrix", subsets=True, matrix=True,
        formats=("table", "json", "csv"))
    add("inverse-decomp", _matrix_command_handler(inverse_decomposition_matrix),
        "inverse graded decomposition matrix", subsets=True, matrix=True,
        formats=("table", "json", "csv"))
    add("cartan", _matrix_command_handler(graded_cartan_matrix),
        "graded Cartan matrix", subsets=True, matrix=True,
        formats=("table", "json", "csv"))
    add("vp-dims", _cmd_vp_dims, "graded dimensions on the wall", subsets=True)
    add("bott-samelson", _cmd_bott_samelson, "decompose one Bott-Samelson word",
        word_flags=(("--word", "generator word, e.g. 1,2,1"),))
    p = add("translate", _cmd_translate, "through-wall translation of one Verma",
            word_flags=(("--x", "minimal representative word"),))
    p.add_argument("--J", type=_parse_subset, default=frozenset(),
                   help="comma-separated simple indices (1-based)")
    add("check-all", _cmd_check_all, "run the full cross-validation suite")
    return parser


def _matrix_command_handler(builder):
    def handler(args):
        return _matrix_command(args, builder)
    return handler


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"klblocks: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"klblocks: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
