"""Graded multiplicity matrices for blocks of highest-weight categories.

A block is indexed by a pair of antidominant integral weights: lam
fixes the singularity subset J (its dot stabilizer is W_J) and mu
fixes the parabolic subset I.  Simple and standard objects in the
block are labelled w_I x . lam with x running over the double
quotient ^IW^J, and all matrices here are indexed by those x in the
canonical element order.

Entries come from finite alternating sums of Kazhdan-Lusztig
polynomials evaluated at v^-2 and shifted by length differences;
everything stays in Z[v, v^-1] and is exact.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeAlgebra
from .laurent import LaurentPoly
from .weyl import WeylElem, WeylGroup

__all__ = [
    "NotAntidominantError",
    "NotReducedError",
    "UnsupportedBlockError",
    "BlockDesc",
    "GradedMatrix",
    "BSReport",
    "make_block",
    "standard_weight",
    "standard_block",
    "decomposition_matrix",
    "inverse_decomposition_matrix",
    "graded_cartan_matrix",
    "projective_verma_flag",
    "singular_case_decomposition",
    "parabolic_case_decomposition",
    "graded_length_report",
    "ungraded_specialization",
    "vp_graded_dimension",
    "vp_center",
    "bott_samelson_decomposition",
    "translate_onto_wall",
    "translate_out_of_wall",
    "translation_composite",
]

K0Vector = dict[WeylElem, LaurentPoly]


class NotAntidominantError(ValueError):
    """A weight required to be antidominant is not."""


class NotReducedError(ValueError):
    """A word fails to be a reduced expression."""


class UnsupportedBlockError(ValueError):
    """The requested report is only defined for I = empty blocks."""


@dataclass(frozen=True)
class BlockDesc:
    """A block description: weights, subsets and the index set ^IW^J."""

    group: WeylGroup
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    I: frozenset[int]
    J: frozenset[int]
    w_I: WeylElem
    index_set: tuple[WeylElem, ...]

    @property
    def regular_weight(self) -> bool:
        return not self.J

    @property
    def ordinary(self) -> bool:
        """True when mu is regular, so no parabolic condition (I empty)."""
        return not self.I


def make_block(group: WeylGroup, lam: Sequence[int], mu: Sequence[int]) -> BlockDesc:
    """Build the block of the pair (lam, mu); both must be antidominant."""
    lam = tuple(lam)
    mu = tuple(mu)
    for name, weight in (("lam", lam), ("mu", mu)):
        if len(weight) != group.rank:
            raise ValueError(f"{name} has rank {len(weight)}, expected {group.rank}")
        if not group.is_antidominant(weight):
            raise NotAntidominantError(f"{name}={weight} is not antidominant")
    J = group.singularity_subset(lam)
    I = group.singularity_subset(mu)
    index = group.double_quotient(I, J)
    if not index:
        warnings.warn(
            f"block (I={sorted(I)}, J={sorted(J)}) of {group.kind} has an empty "
            "index set; matrices will be 0x0",
            stacklevel=2,
        )
    w_i = group.parabolic_longest(I) if I else group.identity
    return BlockDesc(group, lam, mu, I, J, w_i, index)


def standard_weight(rank: int, subset: Iterable[int]) -> tuple[int, ...]:
    """The antidominant weight with singularity exactly on the subset."""
    J = frozenset(subset)
    return tuple(-1 if i + 1 in J else -2 for i in range(rank))


def standard_block(group: WeylGroup, parabolic: Iterable[int],
                   singular: Iterable[int]) -> BlockDesc:
    """Block from subsets alone, with canonical weight choices."""
    return make_block(
        group,
        standard_weight(group.rank, singular),
        standard_weight(group.rank, parabolic),
    )


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of Laurent polynomials with element-labelled axes."""

    rows: tuple[WeylElem, ...]
    cols: tuple[WeylElem, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def entry(self, x: WeylElem, y: WeylElem) -> LaurentPoly:
        return self.entries[self.rows.index(x)][self.cols.index(y)]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix(
            self.cols,
            self.rows,
            tuple(
                tuple(self.entries[r][c] for r in range(len(self.rows)))
                for c in range(len(self.cols))
            ),
        )

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.cols != other.rows:
            raise ValueError("axis mismatch in matrix product")
        n = len(other.rows)
        return GradedMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(
                    sum(
                        (self.entries[r][k] * other.entries[k][c] for k in range(n)),
                        LaurentPoly.zero(),
                    )
                    for c in range(len(other.cols))
                )
                for r in range(len(self.rows))
            ),
        )

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            e == (LaurentPoly.one() if r == c else LaurentPoly.zero())
            for r, row in enumerate(self.entries)
            for c, e in enumerate(row)
        )

    def evaluate(self, point: int) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(e.evaluate(point) for e in row) for row in self.entries)

    def eval_at_one(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.eval_at_one() for e in row) for row in self.entries)


def _kl_at_v_minus2(hecke: HeckeAlgebra, y: WeylElem, w: WeylElem) -> LaurentPoly:
    return hecke.kl_polynomial(y, w).substitute_power(-2)


def decomposition_matrix(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """Graded Verma-to-simple multiplicities d_{x,y}.

    d_{x,y} = sum over z in W_I of (-1)^{l(z)} v^{l(x)-l(y)}
    P_{z w_I x w0, w_I y w0}(v^-2).
    """
    group = block.group
    w0 = group.w0
    z_elems = group.parabolic_elements(block.I) if block.I else (group.identity,)
    rows = []
    for x in block.index_set:
        base_x = block.w_I * x * w0
        row = []
        for y in block.index_set:
            target = block.w_I * y * w0
            total = LaurentPoly.zero()
            for z in z_elems:
                p = _kl_at_v_minus2(hecke, z * base_x, target)
                if p.is_zero():
                    continue
                if z.length % 2:
                    p = -p
                total = total + p
            row.append(total.shift(x.length - y.length))
        rows.append(tuple(row))
    return GradedMatrix(block.index_set, block.index_set, tuple(rows))


def inverse_decomposition_matrix(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """Simple-to-Verma coefficients e_{y,x}, the inverse of d.

    e_{y,x} = sum over z in W_J of (-1)^{l(y)+l(z)-l(x)} v^{l(y)-l(x)}
    P_{w_I x z, w_I y}(v^-2).
    """
    group = block.group
    z_elems = group.parabolic_elements(block.J) if block.J else (group.identity,)
    rows = []
    for y in block.index_set:
        target = block.w_I * y
        row = []
        for x in block.index_set:
            base_x = block.w_I * x
            total = LaurentPoly.zero()
            for z in z_elems:
                p = _kl_at_v_minus2(hecke, base_x * z, target)
                if p.is_zero():
                    continue
                if (y.length + z.length - x.length) % 2:
                    p = -p
                total = total + p
            row.append(total.shift(y.length - x.length))
        rows.append(tuple(row))
    return GradedMatrix(block.index_set, block.index_set, tuple(rows))


def graded_cartan_matrix(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """c_{x,y} = sum_z d_{z,x} d_{z,y}; symmetric with 1 + ... diagonal."""
    d = decomposition_matrix(block, hecke)
    return d.transpose() @ d


def projective_verma_flag(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """Graded (P(x) : Verma(y)) multiplicities; BGG reciprocity makes
    this the transpose of the decomposition matrix."""
    return decomposition_matrix(block, hecke).transpose()


def singular_case_decomposition(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """Independent route for I = empty: single polynomial per entry."""
    if block.I:
        raise UnsupportedBlockError("direct route requires I = empty")
    group = block.group
    w0 = group.w0
    rows = tuple(
        tuple(
            _kl_at_v_minus2(hecke, x * w0, y * w0).shift(x.length - y.length)
            for y in block.index_set
        )
        for x in block.index_set
    )
    return GradedMatrix(block.index_set, block.index_set, rows)


def parabolic_case_decomposition(block: BlockDesc, hecke: HeckeAlgebra) -> GradedMatrix:
    """Independent route for J = empty: alternating sum over W_I."""
    if block.J:
        raise UnsupportedBlockError("parabolic route requires J = empty")
    group = block.group
    w0 = group.w0
    z_elems = group.parabolic_elements(block.I) if block.I else (group.identity,)
    rows = []
    for x in block.index_set:
        row = []
        for y in block.index_set:
            total = LaurentPoly.zero()
            for z in z_elems:
                p = _kl_at_v_minus2(hecke, z * block.w_I * x * w0, block.w_I * y * w0)
                if not p.is_zero():
                    total = total + (-p if z.length % 2 else p)
            row.append(total.shift(x.length - y.length))
        rows.append(tuple(row))
    return GradedMatrix(block.index_set, block.index_set, tuple(rows))


@dataclass
class GradedLengthRow:
    x: WeylElem
    verma_top: int
    verma_expected: int
    projective_top: int
    projective_expected: int

    @property
    def ok(self) -> bool:
        return (self.verma_top == self.verma_expected
                and self.projective_top == self.projective_expected)


def graded_length_report(block: BlockDesc, hecke: HeckeAlgebra) -> list[GradedLengthRow]:
    """Top grading degrees of Verma rows and Cartan columns (I = empty)."""
    if block.I:
        raise UnsupportedBlockError("graded length report requires I = empty")
    group = block.group
    w_singular = group.parabolic_longest(block.J) if block.J else group.identity
    proj_top = 2 * (group.w0.length - w_singular.length)
    d = decomposition_matrix(block, hecke)
    cartan = d.transpose() @ d
    out = []
    for r, x in enumerate(block.index_set):
        verma_deg = max(
            (e.max_exp() for e in d.entries[r] if not e.is_zero()), default=0
        )
        proj_deg = max(
            (e.max_exp() for e in cartan.entries[r] if not e.is_zero()), default=0
        )
        out.append(GradedLengthRow(
            x=x,
            verma_top=verma_deg,
            verma_expected=x.length,
            projective_top=proj_deg,
            projective_expected=proj_top - x.length,
        ))
    return out


def ungraded_specialization(
    block: BlockDesc, hecke: HeckeAlgebra
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Integer multiplicity matrices (d(1), e(1)) at v = 1."""
    d = decomposition_matrix(block, hecke)
    e = inverse_decomposition_matrix(block, hecke)
    return d.eval_at_one(), e.eval_at_one()


def vp_center(block: BlockDesc) -> int:
    """Palindromic center of big-projective graded dimensions."""
    group = block.group
    w_singular = group.parabolic_longest(block.J) if block.J else group.identity
    return group.w0.length - w_singular.length


def vp_graded_dimension(
    block: BlockDesc,
    hecke: HeckeAlgebra,
    x: WeylElem,
    dmatrix: GradedMatrix | None = None,
) -> LaurentPoly:
    """Graded dimension of the x-weight piece functor value on P(x . lam):
    the Cartan entry c_{x, e} (I must be empty)."""
    if block.I:
        raise UnsupportedBlockError("graded dimensions require I = empty")
    if x not in block.index_set:
        raise ValueError(f"{x!r} is not in the block index set")
    d = dmatrix if dmatrix is not None else decomposition_matrix(block, hecke)
    e_col = d.cols.index(block.group.identity)
    x_col = d.cols.index(x)
    total = LaurentPoly.zero()
    for row in d.entries:
        total = total + row[e_col] * row[x_col]
    return total


@dataclass
class BSReport:
    """Decomposition data of one Bott-Samelson word in a regular block."""

    word: tuple[int, ...]
    x: WeylElem
    multiplicities: dict[WeylElem, LaurentPoly]
    shift: int | None
    dimension_identity_ok: bool
    top_multiplicity_ok: bool
    support_ok: bool
    natural_coeffs_ok: bool


def bott_samelson_decomposition(
    block: BlockDesc,
    hecke: HeckeAlgebra,
    word: Sequence[int],
    dmatrix: GradedMatrix | None = None,
) -> BSReport:
    """Indecomposable multiplicities of a Bott-Samelson product.

    The product C_{s_{j1}} ... C_{s_{jk}} is expanded in the KL basis;
    multiplicities land on y <= x with m_x = 1.  The graded dimension
    identity against (1+v^2)^{l(x)} holds after one monomial shift v^s,
    recorded in the report (s = l(w0) - l(x) with these normalizations).
    """
    if block.I or block.J:
        raise UnsupportedBlockError("Bott-Samelson reports require a regular block")
    group = block.group
    word = tuple(word)
    x = group.word_elem(word)
    if x.length != len(word):
        raise NotReducedError(f"{list(word)} is not reduced in {group.kind}")
    prod = hecke.one
    for i in word:
        prod = prod * hecke.kl_element(group.simple(i))
    mults = hecke.expand_in_kl_basis(prod)

    top_ok = mults.get(x) == LaurentPoly.one()
    support_ok = all(group.bruhat_leq(y, x) for y in mults)
    natural_ok = all(m.has_nonnegative_coeffs() for m in mults.values())

    if dmatrix is None:
        dmatrix = decomposition_matrix(block, hecke)
    w0 = group.w0
    total = LaurentPoly.zero()
    for y, m in mults.items():
        total = total + m * vp_graded_dimension(block, hecke, y * w0, dmatrix)
    target = (LaurentPoly.one() + LaurentPoly.gen(2)) ** len(word)
    shift = None
    identity_ok = False
    if not total.is_zero():
        candidate = total.min_exp() - 0
        if total == target.shift(candidate):
            shift = candidate
            identity_ok = True
    return BSReport(
        word=word,
        x=x,
        multiplicities=mults,
        shift=shift,
        dimension_identity_ok=identity_ok,
        top_multiplicity_ok=top_ok,
        support_ok=support_ok,
        natural_coeffs_ok=natural_ok,
    )


def _check_translation_pair(reg: BlockDesc, sing: BlockDesc) -> None:
    if reg.group is not sing.group:
        raise ValueError("blocks live over different groups")
    if reg.I or reg.J:
        raise ValueError("source of the wall-crossing pair must be regular")
    if sing.I:
        raise ValueError("wall-crossing is for ordinary blocks (I = empty)")


def translate_onto_wall(
    reg: BlockDesc, sing: BlockDesc, vec: Mapping[WeylElem, LaurentPoly]
) -> K0Vector:
    """Translation onto the wall on Verma classes.

    [Verma(du . 0)] with d in W^J, u in W_J maps to v^{-l(u)} [Verma(d . lam)].
    """
    _check_translation_pair(reg, sing)
    group = reg.group
    out: K0Vector = {}
    for w, p in vec.items():
        d, u = group.coset_factorize(w, sing.J)
        q = p * LaurentPoly.gen(-u.length)
        out[d] = out.get(d, LaurentPoly.zero()) + q
    return {w: p for w, p in out.items() if not p.is_zero()}


def translate_out_of_wall(
    sing: BlockDesc, reg: BlockDesc, vec: Mapping[WeylElem, LaurentPoly]
) -> K0Vector:
    """Translation out of the wall on Verma classes.

    [Verma(d . lam)] maps to sum over u in W_J of
    v^{l(u) - l(w_J)} [Verma(du . 0)].
    """
    _check_translation_pair(reg, sing)
    group = reg.group
    w_elems = group.parabolic_elements(sing.J) if sing.J else (group.identity,)
    top = w_elems[-1].length
    out: K0Vector = {}
    for d, p in vec.items():
        for u in w_elems:
            w = d * u
            q = p * LaurentPoly.gen(u.length - top)
            out[w] = out.get(w, LaurentPoly.zero()) + q
    return {w: p for w, p in out.items() if not p.is_zero()}


def translation_composite(
    reg: BlockDesc, sing: BlockDesc, x: WeylElem
) -> K0Vector:
    """Out-of-wall following onto-wall applied to the class of Verma(x . 0)."""
    onto = translate_onto_wall(reg, sing, {x: LaurentPoly.one()})
    return translate_out_of_wall(sing, reg, onto)
