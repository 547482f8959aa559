"""Polynomials over Q in the fundamental-weight variables.

A monomial is an exponent tuple with one slot per simple root; the
variable in slot i is the fundamental weight w_{i+1}.  Each variable
carries graded degree 2, so a monomial of total exponent m has graded
degree 2m.  Coefficients are exact fractions throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["RatPoly", "NonDivisibleError", "divide_by_linear"]

Monomial = tuple[int, ...]


class NonDivisibleError(ValueError):
    """Raised when an exact polynomial division leaves a remainder."""


def _grlex_key(m: Monomial) -> tuple[int, Monomial]:
    return (sum(m), m)


class RatPoly:
    """Sparse polynomial with Fraction coefficients in a fixed variable count."""

    __slots__ = ("nvars", "_t")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = (),
    ):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[Monomial, Fraction] = {}
        for m, c in items:
            if len(m) != nvars:
                raise ValueError(f"monomial {m} has wrong arity for {nvars} variables")
            c = Fraction(c)
            if c:
                t[m] = t.get(m, Fraction(0)) + c
                if not t[m]:
                    del t[m]
        self._t = t

    @classmethod
    def zero(cls, nvars: int) -> "RatPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "RatPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def one(cls, nvars: int) -> "RatPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, j: int) -> "RatPoly":
        """The j-th variable (0-based slot)."""
        if not 0 <= j < nvars:
            raise ValueError(f"variable slot {j} out of range for {nvars} variables")
        m = tuple(1 if i == j else 0 for i in range(nvars))
        return cls(nvars, {m: Fraction(1)})

    @classmethod
    def linear(cls, nvars: int, coeffs: Sequence) -> "RatPoly":
        """The linear form sum_j coeffs[j] * w_{j+1}."""
        return cls(
            nvars,
            {
                tuple(1 if i == j else 0 for i in range(nvars)): Fraction(c)
                for j, c in enumerate(coeffs)
                if c
            },
        )

    def items(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return tuple(sorted(self._t.items(), key=lambda mc: _grlex_key(mc[0])))

    def coefficient(self, m: Monomial) -> Fraction:
        return self._t.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._t.get((0,) * self.nvars, Fraction(0))

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    # -- arithmetic --------------------------------------------------

    def _coerce(self, other) -> "RatPoly | None":
        if isinstance(other, RatPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.constant(self.nvars, other)
        return None

    def __add__(self, other) -> "RatPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for m, c in o._t.items():
            t[m] = t.get(m, Fraction(0)) + c
        return RatPoly(self.nvars, t)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(self.nvars, {m: -c for m, c in self._t.items()})

    def __sub__(self, other) -> "RatPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            c0 = Fraction(other)
            return RatPoly(self.nvars, {m: c * c0 for m, c in self._t.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t: dict[Monomial, Fraction] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in o._t.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, Fraction(0)) + c1 * c2
        return RatPoly(self.nvars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power")
        out = RatPoly.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    __hash__ = None  # mutable-adjacent container; not used as a key

    # -- grading -----------------------------------------------------

    def graded_components(self) -> dict[int, "RatPoly"]:
        """Split by graded degree (2 * total exponent)."""
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._t.items():
            parts.setdefault(2 * sum(m), {})[m] = c
        return {d: RatPoly(self.nvars, t) for d, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self._t}
        return len(degrees) <= 1

    def graded_degree(self) -> int | None:
        """Graded degree of a homogeneous polynomial; None for zero."""
        degrees = {sum(m) for m in self._t}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError("not homogeneous")
        return 2 * degrees.pop()

    # -- substitution ------------------------------------------------

    def substitute_single(
        self, j: int, image: "RatPoly", powers: list["RatPoly"] | None = None
    ) -> "RatPoly":
        """Replace variable j by image, leaving the other variables alone.

        powers, when given, is a cache [image^0, image^1, ...] extended
        in place as needed.
        """
        if powers is None:
            powers = [RatPoly.one(self.nvars)]
        out = RatPoly.zero(self.nvars)
        for m, c in self._t.items():
            e = m[j]
            while len(powers) <= e:
                powers.append(powers[-1] * image)
            rest = tuple(0 if i == j else a for i, a in enumerate(m))
            out = out + RatPoly(self.nvars, {rest: c}) * powers[e]
        return out

    def apply_matrix(self, matrix: Sequence[Sequence[int]]) -> "RatPoly":
        """Substitute variable j -> sum_i matrix[i][j] * w_{i+1}.

        This is the action of a Weyl element given by its matrix on
        fundamental-weight coordinates.
        """
        n = self.nvars
        images = [
            RatPoly.linear(n, [matrix[i][j] for i in range(n)]) for j in range(n)
        ]
        pow_cache: list[list[RatPoly]] = [[RatPoly.one(n)] for _ in range(n)]
        out: dict[Monomial, Fraction] = {}
        for m, c in self._t.items():
            factor = RatPoly.constant(n, c)
            for j, e in enumerate(m):
                if not e:
                    continue
                cache = pow_cache[j]
                while len(cache) <= e:
                    cache.append(cache[-1] * images[j])
                factor = factor * cache[e]
            for mm, cc in factor._t.items():
                out[mm] = out.get(mm, Fraction(0)) + cc
        return RatPoly(n, out)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Largest monomial in graded-lex order with its coefficient."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._t, key=_grlex_key)
        return m, self._t[m]

    # -- rendering ---------------------------------------------------

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self._t:
            return "0"
        if names is None:
            names = [f"w{i + 1}" for i in range(self.nvars)]
        out = []
        for m, c in reversed(self.items()):
            sign = "-" if c < 0 else ("+" if out else "")
            mag = abs(c)
            vars_part = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(m)
                if e
            )
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            out.append(sign + body)
        return "".join(out)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RatPoly({self.render()})"


def divide_by_linear(f: RatPoly, linear: RatPoly) -> RatPoly:
    """Exact quotient f / linear for a degree-2 homogeneous divisor.

    Works by graded-lex leading-term elimination; raises
    NonDivisibleError when the division leaves a remainder.
    """
    if linear.is_zero() or linear.graded_degree() != 2:
        raise ValueError("divisor must be homogeneous of graded degree 2")
    lead_m, lead_c = linear.leading_term()
    k = lead_m.index(1)
    quotient = RatPoly.zero(f.nvars)
    rest = f
    while not rest.is_zero():
        m, c = rest.leading_term()
        if m[k] == 0:
            raise NonDivisibleError(f"{linear!r} does not divide {f!r}")
        qm = tuple(e - 1 if i == k else e for i, e in enumerate(m))
        t = RatPoly(f.nvars, {qm: c / lead_c})
        quotient = quotient + t
        rest = rest - t * linear
    return quotient
