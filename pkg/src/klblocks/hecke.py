"""Iwahori-Hecke algebra and the Kazhdan-Lusztig basis.

Normalization: T_x T_y = T_{xy} whenever lengths add, and
T_s^2 = (v - v^-1) T_s + 1, so T_s^-1 = T_s - (v - v^-1).  The bar
involution sends v to v^-1 and T_w to T_{w^-1}^-1.  In this picture

    C_w = T_w + sum_{y < w} v^{l(y)-l(w)} P_{y,w}(v^2) T_y

with P_{y,w} the classical Kazhdan-Lusztig polynomial in q = v^2, and
C_s = T_s + v^-1.

Computed polynomials are cached in a KLTable keyed by (y, w); a table
entry for (w, w) marks the whole column of w as known, which is what
lets a table be reloaded from disk and reused without recursion.
Tables are safe to share across threads only because entries are
deterministic; confine a table to one thread if that bothers you.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .laurent import LaurentPoly
from .weyl import WeylElem, WeylGroup

__all__ = ["HeckeElem", "HeckeAlgebra", "KLTable"]

_V = LaurentPoly.gen()
_VINV = LaurentPoly.gen(-1)
_ONE = LaurentPoly.one()


@dataclass
class KLTable:
    """Cache of Kazhdan-Lusztig polynomials, stored in the variable q."""

    kind: str
    entries: dict[tuple[WeylElem, WeylElem], LaurentPoly] = field(default_factory=dict)

    def get(self, y: WeylElem, w: WeylElem) -> LaurentPoly | None:
        return self.entries.get((y, w))

    def put(self, y: WeylElem, w: WeylElem, p: LaurentPoly) -> None:
        self.entries[(y, w)] = p

    def column_complete(self, w: WeylElem) -> bool:
        return (w, w) in self.entries

    def column(self, w: WeylElem) -> dict[WeylElem, LaurentPoly]:
        return {y: p for (y, ww), p in self.entries.items() if ww is w}

    def __len__(self) -> int:
        return len(self.entries)


class HeckeElem:
    """Element in the T basis: a finite sum of LaurentPoly * T_w."""

    __slots__ = ("algebra", "_c")

    def __init__(self, algebra: "HeckeAlgebra", coeffs: Mapping[WeylElem, LaurentPoly]):
        self.algebra = algebra
        self._c = {w: p for w, p in coeffs.items() if not p.is_zero()}

    def items(self) -> tuple[tuple[WeylElem, LaurentPoly], ...]:
        return tuple(sorted(self._c.items(), key=lambda wp: wp[0].index))

    def coefficient(self, w: WeylElem) -> LaurentPoly:
        return self._c.get(w, LaurentPoly.zero())

    def support(self) -> tuple[WeylElem, ...]:
        return tuple(w for w, _ in self.items())

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        c = dict(self._c)
        for w, p in other._c.items():
            c[w] = c.get(w, LaurentPoly.zero()) + p
        return HeckeElem(self.algebra, c)

    def __neg__(self) -> "HeckeElem":
        return HeckeElem(self.algebra, {w: -p for w, p in self._c.items()})

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + (-other)

    def __mul__(self, other) -> "HeckeElem":
        if isinstance(other, HeckeElem):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "HeckeElem":
        return self.scale(other)

    def scale(self, p) -> "HeckeElem":
        if isinstance(p, int):
            p = LaurentPoly({0: p})
        return HeckeElem(self.algebra, {w: c * p for w, c in self._c.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElem) and self._c == other._c

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"({p})T[{w!r}]" for w, p in self.items())


class HeckeAlgebra:
    """Hecke algebra of a Weyl group with memoized KL data.

    descent_rule picks which left descent drives the C_w recursion
    ("min" or "max"); the resulting basis is the same either way,
    which the tests exercise.
    """

    def __init__(self, group: WeylGroup, descent_rule: str = "min"):
        if descent_rule not in ("min", "max"):
            raise ValueError(f"bad descent rule {descent_rule!r}")
        self.group = group
        self.descent_rule = descent_rule
        self.kl_table = KLTable(group.kind)
        self._bar_t: dict[WeylElem, HeckeElem] = {}
        self._c: dict[WeylElem, HeckeElem] = {}

    # -- construction ------------------------------------------------

    def element(self, coeffs: Mapping[WeylElem, LaurentPoly]) -> HeckeElem:
        return HeckeElem(self, coeffs)

    def t(self, w: WeylElem) -> HeckeElem:
        return HeckeElem(self, {w: LaurentPoly.one()})

    @property
    def one(self) -> HeckeElem:
        return self.t(self.group.identity)

    # -- multiplication ----------------------------------------------

    def _mul_gen_right(self, coeffs: dict, i: int) -> dict:
        """coeffs * T_{s_i} in the T basis."""
        s = self.group.simple(i)
        out: dict[WeylElem, LaurentPoly] = {}

        def add(w, p):
            out[w] = out.get(w, LaurentPoly.zero()) + p

        for w, p in coeffs.items():
            ws = w * s
            if ws.length > w.length:
                add(ws, p)
            else:
                add(ws, p)
                add(w, p * (_V - _VINV))
        return out

    def _mul_gen_left(self, i: int, coeffs: dict) -> dict:
        """T_{s_i} * coeffs in the T basis."""
        s = self.group.simple(i)
        out: dict[WeylElem, LaurentPoly] = {}

        def add(w, p):
            out[w] = out.get(w, LaurentPoly.zero()) + p

        for w, p in coeffs.items():
            sw = s * w
            if sw.length > w.length:
                add(sw, p)
            else:
                add(sw, p)
                add(w, p * (_V - _VINV))
        return out

    def multiply(self, a: HeckeElem, b: HeckeElem) -> HeckeElem:
        total: dict[WeylElem, LaurentPoly] = {}
        for y, p in b.items():
            cur = dict(a._c)
            for i in self.group.reduced_word(y):
                cur = self._mul_gen_right(cur, i)
            for w, c in cur.items():
                total[w] = total.get(w, LaurentPoly.zero()) + c * p
        return HeckeElem(self, total)

    # -- bar involution ----------------------------------------------

    def bar_t(self, w: WeylElem) -> HeckeElem:
        """Image of T_w under the bar involution."""
        cached = self._bar_t.get(w)
        if cached is not None:
            return cached
        if w.length == 0:
            result = self.one
        else:
            i = self.group.reduced_word(w)[0]
            s = self.group.simple(i)
            inner = self.bar_t(s * w)
            shifted = HeckeElem(self, self._mul_gen_left(i, inner._c))
            result = shifted - inner.scale(_V - _VINV)
        self._bar_t[w] = result
        return result

    def bar(self, a: HeckeElem) -> HeckeElem:
        total: dict[WeylElem, LaurentPoly] = {}
        for w, p in a.items():
            pb = p.bar()
            for y, c in self.bar_t(w)._c.items():
                total[y] = total.get(y, LaurentPoly.zero()) + pb * c
        return HeckeElem(self, total)

    # -- Kazhdan-Lusztig basis ---------------------------------------

    def _pick_descent(self, w: WeylElem) -> int:
        descents = self.group.left_descents(w)
        return descents[0] if self.descent_rule == "min" else descents[-1]

    def kl_element(self, w: WeylElem) -> HeckeElem:
        """The self-dual basis element C_w."""
        cached = self._c.get(w)
        if cached is not None:
            return cached
        if self.kl_table.column_complete(w):
            result = self._rebuild_from_table(w)
        elif w.length == 0:
            result = self.one
            self.kl_table.put(w, w, LaurentPoly.one())
        else:
            i = self._pick_descent(w)
            s = self.group.simple(i)
            sw = s * w
            cs = self.element({s: _ONE, self.group.identity: _VINV})
            result = self.multiply(cs, self.kl_element(sw))
            for y in list(self.kl_table.column(sw)):
                if y is sw:
                    continue
                if (s * y).length < y.length:
                    m = self.mu(y, sw)
                    if m:
                        result = result - self.kl_element(y).scale(m)
            self._store_column(w, result)
        self._c[w] = result
        return result

    def _store_column(self, w: WeylElem, c: HeckeElem) -> None:
        assert c.coefficient(w) == _ONE, f"C_{w!r} is not unitriangular"
        for y, p in c._c.items():
            shifted = p.shift(w.length - y.length)
            q_poly = LaurentPoly(
                {e // 2: k for e, k in shifted.items() if not e % 2}
            )
            assert len(q_poly.items()) == len(shifted.items()), (
                f"odd exponent in KL coefficient for ({y!r}, {w!r})"
            )
            self.kl_table.put(y, w, q_poly)

    def _rebuild_from_table(self, w: WeylElem) -> HeckeElem:
        coeffs = {}
        for y, p in self.kl_table.column(w).items():
            coeffs[y] = LaurentPoly(
                {2 * e + y.length - w.length: k for e, k in p.items()}
            )
        return HeckeElem(self, coeffs)

    def kl_polynomial(self, y: WeylElem, w: WeylElem) -> LaurentPoly:
        """P_{y,w} as a polynomial in q; zero when y is not below w."""
        if not self.kl_table.column_complete(w):
            self.kl_element(w)
        p = self.kl_table.get(y, w)
        if p is not None:
            return p
        return LaurentPoly.zero()

    def mu(self, y: WeylElem, w: WeylElem) -> int:
        """Top-degree coefficient of P_{y,w}; needs y < w strictly."""
        if y.length >= w.length or not self.group.bruhat_leq(y, w):
            raise ValueError("mu requires y strictly below w in Bruhat order")
        gap = w.length - y.length
        if gap % 2 == 0:
            return 0
        return self.kl_polynomial(y, w).coefficient((gap - 1) // 2)

    def expand_in_kl_basis(self, a: HeckeElem) -> dict[WeylElem, LaurentPoly]:
        """Coefficients of a in the C basis, by triangular elimination."""
        rest = dict(a._c)
        out: dict[WeylElem, LaurentPoly] = {}
        while rest:
            w = max(rest, key=lambda u: (u.length, u.index))
            m = rest[w]
            out[w] = m
            cw = self.kl_element(w)
            for y, p in cw._c.items():
                rest[y] = rest.get(y, LaurentPoly.zero()) - m * p
                if rest[y].is_zero():
                    del rest[y]
        return out

    def kl_basis_elements(self, elems: Iterable[WeylElem] | None = None) -> None:
        """Force computation of C_w for the given (default all) elements."""
        for w in elems if elems is not None else self.group.elements:
            self.kl_element(w)
