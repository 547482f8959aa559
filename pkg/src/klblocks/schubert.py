"""Coinvariant algebra of a Weyl group with its Schubert basis.

The coinvariant algebra is Q[w_1..w_n] modulo the ideal generated by
invariants of positive degree; variables are fundamental weights of
graded degree 2.  Instead of working with ideal cosets, every class
is expanded over the Schubert basis {X_w}: the class X_w is
represented by the polynomial D_w = Delta_{w^-1 w_0}(D), where D is
the normalized product of the positive roots, and a polynomial f is
projected to the basis by reading off degree-0 parts of Delta_w(f).

Products are computed through polynomial representatives followed by
projection; the Chevalley rule is a separate route used to
cross-check them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import rank as matrix_rank
from .linalg import solve as linear_solve
from .ratpoly import RatPoly, divide_by_linear
from .weyl import WeylElem, WeylGroup

__all__ = [
    "NotInParabolicError",
    "NotFreeError",
    "SchubertElem",
    "CoinvariantAlgebra",
    "FreeBasisReport",
    "CellularDatum",
]


class NotInParabolicError(ValueError):
    """Support of an element leaves the requested coset quotient."""


class NotFreeError(ValueError):
    """Freeness over a parabolic invariant ring failed to certify."""


class SchubertElem:
    """Rational combination of Schubert classes X_w.

    parabolic, when set, records that the element lies in the span of
    the X_d with d minimal in d W_J (the invariant subalgebra C^J).
    """

    __slots__ = ("algebra", "_c", "parabolic")

    def __init__(
        self,
        algebra: "CoinvariantAlgebra",
        coeffs: Mapping[WeylElem, Fraction],
        parabolic: frozenset[int] | None = None,
    ):
        self.algebra = algebra
        self._c = {w: Fraction(c) for w, c in coeffs.items() if c}
        self.parabolic = parabolic

    def items(self) -> tuple[tuple[WeylElem, Fraction], ...]:
        return tuple(sorted(self._c.items(), key=lambda wc: wc[0].index))

    def coefficient(self, w: WeylElem) -> Fraction:
        return self._c.get(w, Fraction(0))

    def support(self) -> tuple[WeylElem, ...]:
        return tuple(w for w, _ in self.items())

    def is_zero(self) -> bool:
        return not self._c

    def graded_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({2 * w.length for w in self._c}))

    def __add__(self, other: "SchubertElem") -> "SchubertElem":
        c = dict(self._c)
        for w, x in other._c.items():
            c[w] = c.get(w, Fraction(0)) + x
        flag = self.parabolic if self.parabolic == other.parabolic else None
        return SchubertElem(self.algebra, c, flag)

    def __neg__(self) -> "SchubertElem":
        return SchubertElem(self.algebra, {w: -x for w, x in self._c.items()},
                            self.parabolic)

    def __sub__(self, other: "SchubertElem") -> "SchubertElem":
        return self + (-other)

    def __mul__(self, other) -> "SchubertElem":
        if isinstance(other, SchubertElem):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "SchubertElem":
        c = Fraction(c)
        return SchubertElem(self.algebra, {w: x * c for w, x in self._c.items()},
                            self.parabolic)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchubertElem) and self._c == other._c

    def __repr__(self) -> str:
        if not self._c:
            return "0"

        def name(w):
            return ".".join(map(str, w.word)) if w.length else "e"

        return " + ".join(f"{c}*X[{name(w)}]" for w, c in self.items())


@dataclass
class FreeBasisReport:
    """Certificate that the algebra is free over a parabolic piece."""

    subset: frozenset[int]
    basis_elements: tuple[WeylElem, ...]
    generators: tuple[SchubertElem, ...]
    generator_degrees: tuple[int, ...]
    duals: tuple[SchubertElem, ...]
    expansion_rank: int


@dataclass
class CellularDatum:
    """Ordered basis of a coset quotient with degrees and chain check."""

    subset: frozenset[int]
    entries: tuple[tuple[WeylElem, SchubertElem, int], ...]
    chain_verified: bool


class CoinvariantAlgebra:
    """Schubert-basis calculus for one Weyl group; caches representatives."""

    def __init__(self, group: WeylGroup):
        self.group = group
        n = group.rank
        self.nvars = n
        cartan = group.datum.cartan
        self._alpha = tuple(
            RatPoly.linear(n, [cartan[k][i] for k in range(n)]) for i in range(n)
        )
        self._si_image = tuple(
            RatPoly.variable(n, i) - self._alpha[i] for i in range(n)
        )
        self._si_powers: list[list[RatPoly]] = [[RatPoly.one(n)] for _ in range(n)]
        self._reps: dict[WeylElem, RatPoly] = {}
        self._length_bucket: dict[int, tuple[WeylElem, ...]] = {}
        for w in group.elements:
            self._length_bucket.setdefault(w.length, ())
        for w in group.elements:
            self._length_bucket[w.length] += (w,)

    # -- polynomial building blocks ----------------------------------

    def alpha_poly(self, i: int) -> RatPoly:
        """Simple root alpha_i (1-based) as a linear polynomial."""
        return self._alpha[i - 1]

    def root_poly(self, root_index: int) -> RatPoly:
        coords = self.group.datum.pos_roots_omega[root_index]
        return RatPoly.linear(self.nvars, coords)

    def weight_poly(self, i: int) -> RatPoly:
        """Fundamental weight w_i (1-based) as a variable."""
        return RatPoly.variable(self.nvars, i - 1)

    def act(self, w: WeylElem, f: RatPoly) -> RatPoly:
        """Weyl group action by linear substitution of the variables."""
        return f.apply_matrix(w.matrix)

    def act_simple(self, i: int, f: RatPoly) -> RatPoly:
        return f.substitute_single(i - 1, self._si_image[i - 1],
                                   self._si_powers[i - 1])

    # -- Demazure operators ------------------------------------------

    def demazure_simple(self, i: int, f: RatPoly) -> RatPoly:
        """(f - s_i f) / alpha_i, exact."""
        return divide_by_linear(f - self.act_simple(i, f), self._alpha[i - 1])

    def demazure(self, w: WeylElem, f: RatPoly) -> RatPoly:
        """Composite along the canonical reduced word of w."""
        for i in reversed(self.group.reduced_word(w)):
            f = self.demazure_simple(i, f)
        return f

    def demazure_compose_check(self, w: WeylElem, u: WeylElem) -> bool:
        """Test Delta_w Delta_u = Delta_{wu} (or 0) on spanning monomials."""
        group = self.group
        additive = (w * u).length == w.length + u.length
        top = group.datum.num_positive_roots
        n = self.nvars
        for total in range(top + 1):
            for m in itertools.combinations_with_replacement(range(n), total):
                mono = [0] * n
                for j in m:
                    mono[j] += 1
                f = RatPoly(n, {tuple(mono): Fraction(1)})
                lhs = self.demazure(w, self.demazure(u, f))
                rhs = self.demazure(w * u, f) if additive else RatPoly.zero(n)
                if lhs != rhs:
                    return False
        return True

    # -- Schubert representatives ------------------------------------

    def staircase_poly(self) -> RatPoly:
        """Product of the positive roots over the group order."""
        top = self._reps.get(self.group.w0)
        if top is None:
            f = RatPoly.constant(self.nvars, Fraction(1, self.group.order))
            for t in range(self.group.datum.num_positive_roots):
                f = f * self.root_poly(t)
            self._fill_reps(f)
            top = f
        return top

    def _fill_reps(self, top: RatPoly) -> None:
        group = self.group
        self._reps[group.w0] = top
        for w in reversed(group.elements):
            rw = self._reps[w]
            for i in range(1, group.rank + 1):
                ws = w * group.simple(i)
                if ws.length < w.length and ws not in self._reps:
                    self._reps[ws] = self.demazure_simple(i, rw)

    def schubert_rep(self, w: WeylElem) -> RatPoly:
        """The polynomial representing X_w (homogeneous, degree 2 l(w))."""
        if w not in self._reps:
            self.staircase_poly()
        return self._reps[w]

    def elem_rep(self, a: SchubertElem) -> RatPoly:
        f = RatPoly.zero(self.nvars)
        for w, c in a.items():
            f = f + self.schubert_rep(w) * c
        return f

    # -- projection and products -------------------------------------

    def poly_to_schubert(self, f: RatPoly) -> SchubertElem:
        """Expand the class of a polynomial over the Schubert basis."""
        coeffs: dict[WeylElem, Fraction] = {}
        for degree, comp in f.graded_components().items():
            for w in self._length_bucket.get(degree // 2, ()):
                c = self.demazure(w, comp).constant_term()
                if c:
                    coeffs[w] = c
        return SchubertElem(self, coeffs)

    def schubert_class(self, w: WeylElem,
                       parabolic: frozenset[int] | None = None) -> SchubertElem:
        return SchubertElem(self, {w: Fraction(1)}, parabolic)

    def multiply(self, a: SchubertElem, b: SchubertElem) -> SchubertElem:
        flag = a.parabolic if a.parabolic == b.parabolic else None
        out = self.poly_to_schubert(self.elem_rep(a) * self.elem_rep(b))
        out.parabolic = flag
        return out

    def chevalley_multiply(self, i: int, a: SchubertElem) -> SchubertElem:
        """X_{s_i} * a by the Chevalley rule over lengthening reflections."""
        datum = self.group.datum
        coeffs: dict[WeylElem, Fraction] = {}
        for w, c in a.items():
            for t in range(datum.num_positive_roots):
                pairing = datum.pos_coroots[t][i - 1]
                if not pairing:
                    continue
                wt = w * self.group.reflection(t)
                if wt.length == w.length + 1:
                    coeffs[wt] = coeffs.get(wt, Fraction(0)) + c * pairing
        return SchubertElem(self, coeffs)

    # -- symmetrizing forms ------------------------------------------

    def trace(self, a: SchubertElem) -> Fraction:
        """Coefficient of the top class X_{w0}."""
        return a.coefficient(self.group.w0)

    def trace_parabolic(self, subset: Iterable[int], a: SchubertElem) -> Fraction:
        """Coefficient of X_{d_J} for elements supported on W^J."""
        J = frozenset(subset)
        reps = set(self.group.min_coset_reps(J))
        if any(w not in reps for w in a.support()):
            raise NotInParabolicError(
                f"element is not supported on the minimal coset representatives of {sorted(J)}"
            )
        d_j = self.group.w0 * self.group.parabolic_longest(J).inverse() \
            if J else self.group.w0
        return a.coefficient(d_j)

    def gram_matrix(
        self, subset: Iterable[int]
    ) -> tuple[tuple[WeylElem, ...], list[list[Fraction]]]:
        """Gram matrix of (a, b) -> tr_J(ab) on the X_d basis of C^J."""
        J = frozenset(subset)
        group = self.group
        reps = group.min_coset_reps(J)
        w_j = group.parabolic_longest(J) if J else group.identity
        d_j = group.w0 * w_j.inverse()
        target = d_j.length
        rows = []
        for x in reps:
            row = []
            for y in reps:
                if x.length + y.length != target:
                    row.append(Fraction(0))
                else:
                    prod = self.schubert_rep(x) * self.schubert_rep(y)
                    row.append(self.demazure(d_j, prod).constant_term())
            rows.append(row)
        return reps, rows

    def parabolic_basis(self, subset: Iterable[int]) -> tuple[SchubertElem, ...]:
        """The classes X_d, d in W^J, each checked W_J-invariant."""
        J = frozenset(subset)
        out = []
        for d in self.group.min_coset_reps(J):
            rep = self.schubert_rep(d)
            for j in J:
                reproj = self.poly_to_schubert(self.act_simple(j, rep))
                if reproj != self.schubert_class(d):
                    raise NotInParabolicError(
                        f"X_{d!r} failed W_J-invariance for J={sorted(J)}"
                    )
            out.append(self.schubert_class(d, parabolic=J))
        return tuple(out)

    # -- freeness over a parabolic piece -----------------------------

    def parabolic_root_product(self, subset: Iterable[int]) -> RatPoly:
        """Product of the positive roots supported on the subset."""
        J = frozenset(subset)
        f = RatPoly.one(self.nvars)
        for t in self.group.datum.parabolic_root_indices(J):
            f = f * self.root_poly(t)
        return f

    def free_basis_over_parabolic(self, subset: Iterable[int]) -> FreeBasisReport:
        """Free C^J-module basis from Demazure images of the root product.

        The generators are the classes of Delta_w(mu_J), w in W_J; the
        certificate solves the |W| x |W| system expressing every X_x in
        the products X_d * c_w, then computes a dual family under the
        degree-0 part of Delta_{w_J}(c_w * b_u).
        """
        J = frozenset(subset)
        group = self.group
        w_elems = group.parabolic_elements(J)
        w_j = w_elems[-1]
        mu = self.parabolic_root_product(J)
        gen_polys = [self.demazure(w, mu) for w in w_elems]
        gens = [self.poly_to_schubert(p) for p in gen_polys]
        degrees = []
        for g in gens:
            degs = g.graded_degrees()
            if len(degs) != 1:
                raise NotFreeError("generator is not homogeneous")
            degrees.append(degs[0])

        reps = group.min_coset_reps(J)
        columns = []
        for d in reps:
            rep_d = self.schubert_rep(d)
            for p in gen_polys:
                prod = self.poly_to_schubert(rep_d * p)
                columns.append([prod.coefficient(z) for z in group.elements])
        matrix = [[col[r] for col in columns] for r in range(group.order)]
        r = matrix_rank(matrix)
        if r != group.order:
            raise NotFreeError(
                f"expansion system has rank {r} < {group.order} for J={sorted(J)}"
            )

        duals = []
        for u in w_elems:
            bucket = [z for z in group.elements if z.length == u.length]
            rows = []
            rhs = []
            for w, p in zip(w_elems, gen_polys):
                if w.length != u.length:
                    continue
                rows.append([
                    self.demazure(w_j, p * self.schubert_rep(z)).constant_term()
                    for z in bucket
                ])
                rhs.append(Fraction(int(w == u)))
            beta = linear_solve(rows, rhs)
            if beta is None:
                raise NotFreeError(f"no dual element for {u!r}, J={sorted(J)}")
            duals.append(SchubertElem(self, dict(zip(bucket, beta))))

        return FreeBasisReport(
            subset=J,
            basis_elements=w_elems,
            generators=tuple(gens),
            generator_degrees=tuple(degrees),
            duals=tuple(duals),
            expansion_rank=r,
        )

    def dual_pairing(self, subset: Iterable[int], report: FreeBasisReport,
                     w_index: int, u_index: int) -> Fraction:
        """Degree-0 part of Delta_{w_J}(c_w * b_u) for report entries."""
        J = frozenset(subset)
        w_j = self.group.parabolic_elements(J)[-1]
        c_w = report.generators[w_index]
        b_u = report.duals[u_index]
        deg_c = report.generator_degrees[w_index]
        deg_b = 2 * report.basis_elements[u_index].length
        if deg_c + deg_b != 2 * w_j.length:
            return Fraction(0)  # homogeneity: no degree-0 part
        prod = self.elem_rep(c_w) * self.elem_rep(b_u)
        return self.demazure(w_j, prod).constant_term()

    # -- cellular-style datum ----------------------------------------

    def cellular_datum(self, subset: Iterable[int]) -> CellularDatum:
        """Length-ordered basis of C^J with the multiplication chain check."""
        J = frozenset(subset)
        group = self.group
        reps = group.min_coset_reps(J)
        rep_set = set(reps)
        entries = tuple(
            (w, self.schubert_class(w, parabolic=J), 2 * w.length) for w in reps
        )
        verified = True
        for u in reps:
            if u.length == 0:
                continue
            for w in reps:
                prod = self.multiply(self.schubert_class(u), self.schubert_class(w))
                if any(z not in rep_set for z in prod.support()):
                    verified = False
        return CellularDatum(subset=J, entries=entries, chain_verified=verified)
