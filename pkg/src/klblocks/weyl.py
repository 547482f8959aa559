"""Weyl group elements, Bruhat order, cosets and the dot action.

An element is its integer matrix on fundamental-weight coordinates;
equal matrices are the same element, so there is no word-dependence
anywhere.  Groups enumerate themselves on construction (types up to
rank 8 stay comfortably small for the sizes used here).

Reduced words use 1-based simple indices and are computed by stripping
the smallest left descent, which fixes a canonical word per element.
Elements sort by (length, canonical word); all listings follow that
order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .roots import RootDatum, Weight, build_root_system, rho

__all__ = ["NotCanonicalError", "WeylElem", "WeylGroup"]

IntMatrix = tuple[tuple[int, ...], ...]


class NotCanonicalError(ValueError):
    """Raised when a weight is neither dominant nor antidominant."""


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[m][t] * b[t][k] for t in range(n)) for k in range(n))
        for m in range(n)
    )


def _matvec(a: IntMatrix, x: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(row[k] * x[k] for k in range(len(x))) for row in a)


class WeylElem:
    """One group element; hash and equality come from the matrix."""

    __slots__ = ("group", "matrix", "length", "index")

    def __init__(self, group: "WeylGroup", matrix: IntMatrix, length: int):
        self.group = group
        self.matrix = matrix
        self.length = length
        self.index = -1  # position in canonical order, set by the group

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        return self.group.element(_matmul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElem":
        return self.group.inverse(self)

    def act(self, weight: Sequence[int]) -> Weight:
        """Linear action on fundamental-weight coordinates."""
        return _matvec(self.matrix, weight)

    def dot(self, weight: Sequence[int]) -> Weight:
        """Dot action w . lambda = w(lambda + rho) - rho."""
        shifted = tuple(x + 1 for x in weight)
        return tuple(x - 1 for x in _matvec(self.matrix, shifted))

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.reduced_word(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElem) and self.matrix == other.matrix \
            and self.group is other.group

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        name = ".".join(map(str, self.word)) if self.length else "e"
        return f"<{self.group.kind} {name}>"


class WeylGroup:
    """The finite Weyl group of a root datum, fully enumerated."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        self._by_matrix: dict[IntMatrix, WeylElem] = {}
        self._words: dict[WeylElem, tuple[int, ...]] = {}
        self._inverses: dict[WeylElem, WeylElem] = {}
        self._bruhat: dict[tuple[WeylElem, WeylElem], bool] = {}

        n = self.rank
        self._identity_matrix = tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )
        self._simple_matrices = tuple(
            datum.reflections[datum.simple_root_index(i)] for i in range(1, n + 1)
        )
        frontier = [self._register(self._identity_matrix)]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self._simple_matrices:
                    m = _matmul(w.matrix, s)
                    if m not in self._by_matrix:
                        nxt.append(self._register(m))
            frontier = nxt
        for w in self._by_matrix.values():
            self.reduced_word(w)
        self.elements: tuple[WeylElem, ...] = tuple(
            sorted(self._by_matrix.values(), key=lambda w: (w.length, w.word))
        )
        for i, w in enumerate(self.elements):
            w.index = i
        self.identity = self.elements[0]
        self.w0 = max(self.elements, key=lambda w: w.length)

    @property
    def kind(self) -> str:
        return self.datum.kind

    @property
    def order(self) -> int:
        return len(self.elements)

    def _register(self, matrix: IntMatrix) -> WeylElem:
        length = sum(
            1
            for beta in self.datum.pos_roots_omega
            if self.datum.is_negative_omega(_matvec(matrix, beta))
        )
        w = WeylElem(self, matrix, length)
        self._by_matrix[matrix] = w
        return w

    def element(self, matrix: IntMatrix) -> WeylElem:
        try:
            return self._by_matrix[matrix]
        except KeyError:
            raise ValueError(f"matrix does not belong to W({self.kind})") from None

    def simple(self, i: int) -> WeylElem:
        """The simple reflection s_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index {i} out of range")
        return self._by_matrix[self._simple_matrices[i - 1]]

    def reflection(self, root_index: int) -> WeylElem:
        """The reflection in the positive root numbered root_index."""
        return self._by_matrix[self.datum.reflections[root_index]]

    def word_elem(self, word: Iterable[int]) -> WeylElem:
        out = self._by_matrix[self._identity_matrix]
        for i in word:
            out = out * self.simple(i)
        return out

    def reduced_word(self, w: WeylElem) -> tuple[int, ...]:
        """Canonical reduced word, smallest left descent first."""
        cached = self._words.get(w)
        if cached is not None:
            return cached
        letters = []
        cur = w
        while cur.length:
            for i in range(1, self.rank + 1):
                nxt = self._by_matrix[_matmul(self._simple_matrices[i - 1], cur.matrix)]
                if nxt.length < cur.length:
                    letters.append(i)
                    cur = nxt
                    break
        word = tuple(letters)
        self._words[w] = word
        return word

    def inverse(self, w: WeylElem) -> WeylElem:
        cached = self._inverses.get(w)
        if cached is None:
            cached = self.word_elem(reversed(self.reduced_word(w)))
            self._inverses[w] = cached
        return cached

    # -- descents and Bruhat order -----------------------------------

    def left_descents(self, w: WeylElem) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, self.rank + 1)
            if (self.simple(i) * w).length < w.length
        )

    def right_descents(self, w: WeylElem) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, self.rank + 1)
            if (w * self.simple(i)).length < w.length
        )

    def bruhat_leq(self, x: WeylElem, y: WeylElem) -> bool:
        """Bruhat order via the subword recursion on a descent of y."""
        if x.length > y.length:
            return False
        if x is y or x.length == 0:
            return True
        if y.length == 0:
            return False
        key = (x, y)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        s = self.simple(self.reduced_word(y)[0])
        sy = s * y
        sx = s * x
        if sx.length < x.length:
            result = self.bruhat_leq(sx, sy)
        else:
            result = self.bruhat_leq(x, sy)
        self._bruhat[key] = result
        return result

    # -- parabolic structure -----------------------------------------

    def _check_subset(self, subset: Iterable[int]) -> frozenset[int]:
        J = frozenset(subset)
        if not all(isinstance(i, int) and 1 <= i <= self.rank for i in J):
            raise ValueError(f"bad simple-root subset {sorted(J)}")
        return J

    def parabolic_elements(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """W_J: elements whose reduced word uses only letters in J."""
        J = self._check_subset(subset)
        return tuple(w for w in self.elements if set(w.word) <= J)

    def parabolic_longest(self, subset: Iterable[int]) -> WeylElem:
        return self.parabolic_elements(subset)[-1]

    def min_coset_reps(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """W^J: minimal length representatives of the cosets w W_J."""
        J = self._check_subset(subset)
        return tuple(
            w for w in self.elements
            if all((w * self.simple(j)).length > w.length for j in J)
        )

    def min_coset_reps_right(self, subset: Iterable[int]) -> tuple[WeylElem, ...]:
        """^IW: minimal length representatives of the cosets W_I w."""
        I = self._check_subset(subset)
        return tuple(
            w for w in self.elements
            if all((self.simple(i) * w).length > w.length for i in I)
        )

    def double_quotient(
        self, left: Iterable[int], right: Iterable[int]
    ) -> tuple[WeylElem, ...]:
        """^IW^J: the w in ^IW with w s_j longer and still in ^IW, all j in J."""
        J = self._check_subset(right)
        reps = self.min_coset_reps_right(left)
        in_reps = set(reps)
        out = []
        for w in reps:
            ok = True
            for j in J:
                ws = w * self.simple(j)
                if ws.length != w.length + 1 or ws not in in_reps:
                    ok = False
                    break
            if ok:
                out.append(w)
        return tuple(out)

    def coset_factorize(
        self, w: WeylElem, subset: Iterable[int]
    ) -> tuple[WeylElem, WeylElem]:
        """Split w = d * u with d in W^J, u in W_J."""
        J = self._check_subset(subset)
        d = w
        u = self.identity
        moved = True
        while moved:
            moved = False
            for j in J:
                s = self.simple(j)
                if (d * s).length < d.length:
                    d = d * s
                    u = s * u
                    moved = True
        return d, u

    # -- weights -----------------------------------------------------

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(x + 1 >= 0 for x in weight)

    def is_antidominant(self, weight: Sequence[int]) -> bool:
        return all(x + 1 <= 0 for x in weight)

    def is_regular(self, weight: Sequence[int]) -> bool:
        """No positive coroot pairs to zero with weight + rho."""
        shifted = tuple(x + 1 for x in weight)
        return all(
            self.datum.coroot_pairing(shifted, t)
            for t in range(self.datum.num_positive_roots)
        )

    def singularity_subset(self, weight: Sequence[int]) -> frozenset[int]:
        """Simple indices where <weight + rho, alpha_i^vee> = 0."""
        if not (self.is_dominant(weight) or self.is_antidominant(weight)):
            raise NotCanonicalError(f"{tuple(weight)} is not canonical in its orbit")
        return frozenset(i + 1 for i, x in enumerate(weight) if x + 1 == 0)

    def antidominant_representative(self, weight: Sequence[int]) -> Weight:
        """The unique antidominant weight in the dot orbit."""
        lam = tuple(weight)
        changed = True
        while changed:
            changed = False
            for i in range(1, self.rank + 1):
                if lam[i - 1] + 1 > 0:
                    lam = self.simple(i).dot(lam)
                    changed = True
        return lam

    def dot_stabilizer(self, weight: Sequence[int]) -> tuple[WeylElem, ...]:
        return tuple(w for w in self.elements if w.dot(weight) == tuple(weight))

    def sort_elems(self, elems: Iterable[WeylElem]) -> tuple[WeylElem, ...]:
        return tuple(sorted(elems, key=lambda w: w.index))

    def rho_weight(self) -> Weight:
        return rho(self.rank)

    def __repr__(self) -> str:
        return f"WeylGroup({self.kind}, order {self.order})"


def weyl_group_of_kind(kind: str) -> WeylGroup:
    """Convenience constructor from a type string like 'B3'."""
    return WeylGroup(build_root_system(kind))
