"""Finite Coxeter-system engine over an integer Cartan matrix.

Elements are canonicalized as the integer matrix of their action on the root
lattice (simple-root basis, columns are images of simple roots).  The whole
group is enumerated once, sorted by (length, matrix), and all arithmetic runs
through precomputed index tables, so equality, hashing and multiplication are
exact and cheap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .rootsys import (
    CartanError,
    DomainError,
    ResourceCapError,
    Weight,
)

Matrix = tuple[tuple[int, ...], ...]

DEFAULT_GROUP_CAP = 10**6
# beyond this many elements the dense Bruhat matrix / KL table is refused
DENSE_TABLE_CAP = 2048


class WeylElem:
    """One group element; identity defined by (system, index)."""

    __slots__ = ("system", "index")

    def __init__(self, system: "CoxeterSystem", index: int) -> None:
        self.system = system
        self.index = index

    @property
    def matrix(self) -> Matrix:
        return self.system.matrices[self.index]

    @property
    def word(self) -> tuple[int, ...]:
        return self.system.words[self.index]

    @property
    def length(self) -> int:
        return self.system.lengths[self.index]

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        return self.system.mul(self, other)

    def inverse(self) -> "WeylElem":
        return self.system.elements[self.system.inv[self.index]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylElem)
            and other.system is self.system
            and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((id(self.system), self.index))

    def __repr__(self) -> str:
        return f"<{format_word(self.word)}>"


class CoxeterSystem:
    """Enumerated finite Coxeter group attached to an integer Cartan matrix."""

    def __init__(
        self,
        cartan: Sequence[Sequence[int]],
        cap: int = DEFAULT_GROUP_CAP,
    ) -> None:
        self.cartan: Matrix = tuple(tuple(int(x) for x in row) for row in cartan)
        self.ngen = len(self.cartan)
        for row in self.cartan:
            if len(row) != self.ngen:
                raise CartanError("Cartan matrix must be square")
        self.cap = cap
        self._gen_matrices = tuple(
            self._simple_reflection_matrix(i) for i in range(self.ngen)
        )
        self._enumerate()
        self._bruhat: np.ndarray | None = None

    # -- construction -----------------------------------------------------

    def _simple_reflection_matrix(self, i: int) -> Matrix:
        n = self.ngen
        rows = []
        for k in range(n):
            if k == i:
                rows.append(tuple(int(k == j) - self.cartan[i][j] for j in range(n)))
            else:
                rows.append(tuple(int(k == j) for j in range(n)))
        return tuple(rows)

    def _enumerate(self) -> None:
        n = self.ngen
        ident: Matrix = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        dist = {ident: 0}
        frontier = [ident]
        while frontier:
            new = []
            for m in frontier:
                for i in range(n):
                    image = _matmul(m, self._gen_matrices[i])
                    if image not in dist:
                        dist[image] = dist[m] + 1
                        new.append(image)
                        if len(dist) > self.cap:
                            raise ResourceCapError(
                                f"group size exceeds cap {self.cap}"
                            )
            frontier = new

        order = sorted(dist, key=lambda m: (dist[m], m))
        self.size = len(order)
        self.matrices: tuple[Matrix, ...] = tuple(order)
        self.index_of = {m: k for k, m in enumerate(order)}
        self.lengths = tuple(dist[m] for m in order)
        self.rmul = tuple(
            tuple(self.index_of[_matmul(m, g)] for g in self._gen_matrices)
            for m in order
        )
        self.lmul = tuple(
            tuple(self.index_of[_matmul(g, m)] for g in self._gen_matrices)
            for m in order
        )
        words: list[tuple[int, ...]] = [()] * self.size
        for k in range(1, self.size):
            s = min(
                i for i in range(self.ngen) if self.lengths[self.rmul[k][i]] < self.lengths[k]
            )
            words[k] = words[self.rmul[k][s]] + (s,)
        self.words = tuple(words)
        inv = [0] * self.size
        for k in range(self.size):
            j = 0
            for s in reversed(self.words[k]):
                j = self.rmul[j][s]
            inv[k] = j
        self.inv = tuple(inv)
        self.elements = tuple(WeylElem(self, k) for k in range(self.size))

    # -- element arithmetic -------------------------------------------------

    @property
    def identity(self) -> WeylElem:
        return self.elements[0]

    def generator(self, i: int) -> WeylElem:
        return self.elements[self.index_of[self._gen_matrices[i]]]

    def mul(self, a: WeylElem, b: WeylElem) -> WeylElem:
        self._check(a)
        self._check(b)
        k = a.index
        for s in b.word:
            k = self.rmul[k][s]
        return self.elements[k]

    def from_word(self, word: Iterable[int]) -> WeylElem:
        k = 0
        for s in word:
            if not 0 <= s < self.ngen:
                raise DomainError(f"generator index {s} out of range")
            k = self.rmul[k][s]
        return self.elements[k]

    def from_matrix(self, matrix: Matrix) -> WeylElem:
        try:
            return self.elements[self.index_of[matrix]]
        except KeyError:
            raise DomainError("matrix is not an element of this group") from None

    def _check(self, w: WeylElem) -> None:
        if w.system is not self:
            raise DomainError("element belongs to a different Coxeter system")

    def right_descents(self, w: WeylElem) -> frozenset[int]:
        self._check(w)
        k = w.index
        return frozenset(
            i for i in range(self.ngen) if self.lengths[self.rmul[k][i]] < self.lengths[k]
        )

    def left_descents(self, w: WeylElem) -> frozenset[int]:
        self._check(w)
        k = w.index
        return frozenset(
            i for i in range(self.ngen) if self.lengths[self.lmul[k][i]] < self.lengths[k]
        )

    # -- actions ------------------------------------------------------------

    def act(self, w: WeylElem, lam: Weight) -> Weight:
        """Linear action on fundamental coordinates, exact over the rationals."""
        self._check(w)
        if len(lam) != self.ngen:
            raise DomainError("weight dimension does not match the system rank")
        coords = list(lam.coords)
        for s in reversed(w.word):
            c = coords[s]
            if c:
                coords = [coords[k] - c * self.cartan[k][s] for k in range(self.ngen)]
        return Weight(coords)

    def dot_act(self, w: WeylElem, lam: Weight) -> Weight:
        rho = Weight([1] * self.ngen)
        return self.act(w, lam + rho) - rho

    # -- Bruhat order ---------------------------------------------------------

    def bruhat_matrix(self) -> np.ndarray:
        """Dense <= matrix (uint8), rows = lower element, cols = upper."""
        if self._bruhat is not None:
            return self._bruhat
        if self.size > DENSE_TABLE_CAP:
            raise ResourceCapError(
                f"dense Bruhat matrix refused for group of size {self.size}"
            )
        n = self.size
        leq = np.zeros((n, n), dtype=np.uint8)
        leq[0, :] = 1
        for w in range(n):
            leq[w, w] = 1
        for w in range(1, n):
            s = min(
                i for i in range(self.ngen) if self.lengths[self.lmul[w][i]] < self.lengths[w]
            )
            sw = self.lmul[w][s]
            for x in range(1, n):
                if self.lengths[x] > self.lengths[w]:
                    break  # elements are sorted by length
                if self.lengths[x] == self.lengths[w]:
                    continue
                sx = self.lmul[x][s]
                if self.lengths[sx] < self.lengths[x]:
                    leq[x, w] = leq[sx, sw]
                else:
                    leq[x, w] = leq[x, sw]
        self._bruhat = leq
        return leq

    def bruhat_leq(self, x: WeylElem, w: WeylElem) -> bool:
        self._check(x)
        self._check(w)
        if self.size <= DENSE_TABLE_CAP:
            return bool(self.bruhat_matrix()[x.index, w.index])
        return self._bruhat_pair(x.index, w.index)

    @lru_cache(maxsize=None)
    def _bruhat_pair(self, x: int, w: int) -> bool:
        if x == 0 or x == w:
            return True
        if self.lengths[x] >= self.lengths[w]:
            return False
        s = min(
            i for i in range(self.ngen) if self.lengths[self.lmul[w][i]] < self.lengths[w]
        )
        sw = self.lmul[w][s]
        sx = self.lmul[x][s]
        if self.lengths[sx] < self.lengths[x]:
            return self._bruhat_pair(sx, sw)
        return self._bruhat_pair(x, sw)

    # -- parabolic machinery ----------------------------------------------------

    def check_subset(self, J: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(j) for j in J)
        for j in out:
            if not 0 <= j < self.ngen:
                raise DomainError(f"generator index {j} out of range")
        return out

    def subgroup_elements(self, J: Iterable[int]) -> tuple[WeylElem, ...]:
        """The standard parabolic subgroup generated by J, enumerated."""
        J = self.check_subset(J)
        seen = {0}
        frontier = [0]
        while frontier:
            new = []
            for k in frontier:
                for j in J:
                    k2 = self.rmul[k][j]
                    if k2 not in seen:
                        seen.add(k2)
                        new.append(k2)
            frontier = new
        return tuple(self.elements[k] for k in sorted(seen))

    def longest_element(self, J: Iterable[int] | None = None) -> WeylElem:
        """Longest element of the parabolic subgroup on J (whole group if None)."""
        if J is None:
            return self.elements[self.size - 1]
        members = self.subgroup_elements(J)
        return max(members, key=lambda w: (w.length, w.index))

    def min_coset_reps(self, J: Iterable[int]) -> tuple[WeylElem, ...]:
        """Minimal-length representatives of the right cosets of the J-parabolic.

        These are the elements with no left descent in J.
        """
        J = self.check_subset(J)
        return tuple(
            w for w in self.elements if not (self.left_descents(w) & J)
        )

    def min_coset_reps_left(self, J: Iterable[int]) -> tuple[WeylElem, ...]:
        """Left-handed variant: inverses of the right-handed representatives."""
        J = self.check_subset(J)
        return tuple(
            w for w in self.elements if not (self.right_descents(w) & J)
        )

    # -- kernel-facing tables ------------------------------------------------

    def np_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        rmul = np.array(self.rmul, dtype=np.int32).reshape(self.size, self.ngen)
        lengths = np.array(self.lengths, dtype=np.int32)
        return rmul, lengths, self.bruhat_matrix()


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


# -- word grammar ------------------------------------------------------------


def format_word(word: Sequence[int]) -> str:
    """Render a word as ``s2*s1`` with 1-based generator numbers; identity is ``e``."""
    if not word:
        return "e"
    return "*".join(f"s{i + 1}" for i in word)


def parse_word(text: str, ngen: int) -> tuple[int, ...]:
    text = text.strip()
    if text in ("e", "", "1"):
        return ()
    out = []
    for part in text.split("*"):
        part = part.strip()
        if not part.startswith("s"):
            raise DomainError(f"cannot parse generator {part!r} (expected sN)")
        try:
            i = int(part[1:])
        except ValueError:
            raise DomainError(f"cannot parse generator {part!r}") from None
        if not 1 <= i <= ngen:
            raise DomainError(f"generator {part!r} out of range 1..{ngen}")
        out.append(i - 1)
    return tuple(out)


# -- module-level operations ----------------------------------------------------


def act(sys: CoxeterSystem, w: WeylElem, lam: Weight) -> Weight:
    return sys.act(w, lam)


def dot_act(sys: CoxeterSystem, w: WeylElem, lam: Weight) -> Weight:
    return sys.dot_act(w, lam)


def bruhat_leq(sys: CoxeterSystem, x: WeylElem, w: WeylElem) -> bool:
    return sys.bruhat_leq(x, w)


def longest_element(sys: CoxeterSystem, J: Iterable[int] | None = None) -> WeylElem:
    return sys.longest_element(J)


def min_coset_reps(sys: CoxeterSystem, J: Iterable[int]) -> tuple[WeylElem, ...]:
    return sys.min_coset_reps(J)


def enumerate_elements(sys: CoxeterSystem) -> tuple[WeylElem, ...]:
    return sys.elements
