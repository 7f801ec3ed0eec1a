"""Finite crystallographic root systems with exact rational pairing data.

Conventions used throughout the package:

* Roots live in the simple-root basis as integer tuples; a composite system
  concatenates the coordinates of its factors.
* Weights live in the fundamental-weight basis as tuples of ``Fraction``;
  coordinate ``i`` of a weight ``lam`` equals ``<lam, alpha_i^vee>``.
* The Cartan matrix is ``C[i][j] = <alpha_j, alpha_i^vee>``, so the simple
  root ``alpha_j`` has fundamental coordinates equal to column ``j`` of ``C``.

All arithmetic is exact; nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Root = tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class CartanError(ValueError):
    """Inadmissible Cartan type or malformed construction input."""


class DomainError(ValueError):
    """A precondition of an operation is violated by its arguments."""


class InternalConsistencyError(RuntimeError):
    """Two routes that a theorem forces to agree disagreed: a bug signal."""


class ResourceCapError(RuntimeError):
    """A configured size cap was exceeded."""


def _admissible(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True)
class CartanType:
    """A product of simple factors, e.g. ``A2xA1``."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise CartanError("empty Cartan type")
        for family, rank in self.factors:
            if family not in FAMILIES or not isinstance(rank, int):
                raise CartanError(f"unknown factor {family}{rank}")
            if not _admissible(family, rank):
                raise CartanError(f"inadmissible factor {family}{rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        factors = []
        for chunk in text.strip().split("x"):
            chunk = chunk.strip()
            if len(chunk) < 2 or chunk[0].upper() not in FAMILIES:
                raise CartanError(f"cannot parse Cartan factor {chunk!r}")
            try:
                rank = int(chunk[1:])
            except ValueError:
                raise CartanError(f"cannot parse rank in {chunk!r}") from None
            factors.append((chunk[0].upper(), rank))
        return cls(tuple(factors))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def weyl_order(self) -> int:
        """Order of the Weyl group, from the classical product formulas."""
        total = 1
        for family, n in self.factors:
            if family == "A":
                total *= _factorial(n + 1)
            elif family in ("B", "C"):
                total *= 2**n * _factorial(n)
            elif family == "D":
                total *= 2 ** (n - 1) * _factorial(n)
            elif family == "G":
                total *= 12
            elif family == "F":
                total *= 1152
            else:  # E
                total *= {6: 51840, 7: 2903040, 8: 696729600}[n]
        return total

    def __str__(self) -> str:
        return "x".join(f"{f}{r}" for f, r in self.factors)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _simple_factor_cartan(family: str, n: int) -> list[list[int]]:
    # Chain with C[i][j] = <alpha_j, alpha_i^vee>; the asymmetric entry sits
    # where a long root pairs against a short coroot.
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        c[i][j] = cij
        c[j][i] = cji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif family == "C":
        # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-..., node 2 hangs off node 4.
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return c


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    """Block-diagonal integer Cartan matrix of a (possibly composite) type."""
    n = ct.rank
    c = [[0] * n for _ in range(n)]
    offset = 0
    for family, rank in ct.factors:
        block = _simple_factor_cartan(family, rank)
        for i in range(rank):
            for j in range(rank):
                c[offset + i][offset + j] = block[i][j]
        offset += rank
    return tuple(tuple(row) for row in c)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Positive integers d with d_i*C[i][j] == d_j*C[j][i].

    Propagated along the Coxeter graph, one component at a time, then scaled
    to the least integer solution.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                value = d[i] * Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise CartanError("Cartan matrix is not symmetrizable")
    assert all(x is not None and x > 0 for x in d)
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    out = tuple(int(x * scale) for x in d)
    g = 0
    for x in out:
        g = _gcd(g, x)
    return tuple(x // g for x in out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Weight:
    """Element of the weight space, fundamental coordinates, exact rationals."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Fraction | int]) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Weight is immutable")

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, scalar: int | Fraction) -> "Weight":
        return Weight(a * scalar for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "Weight") -> bool:
        return self.coords < other.coords

    def is_integral_vector(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __repr__(self) -> str:
        return f"Weight({format_weight(self)!r})"

    def __str__(self) -> str:
        return format_weight(self)


def parse_weight(text: str, rank: int | None = None) -> Weight:
    """Parse ``0,1/2,-3`` into a Weight; anything non-rational is rejected."""
    parts = [p.strip() for p in text.strip().split(",")]
    coords = []
    for pos, part in enumerate(parts):
        try:
            coords.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise DomainError(
                f"cannot parse weight coordinate {part!r} at position {pos + 1}"
            ) from None
    if rank is not None and len(coords) != rank:
        raise DomainError(f"weight has {len(coords)} coordinates, expected {rank}")
    return Weight(coords)


def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w.coords)


class RootSystem:
    """Roots, positive roots, ``rho`` and the exact coroot pairing.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, ct: CartanType) -> None:
        self.cartan_type = ct
        self.rank = ct.rank
        self.cartan = cartan_matrix(ct)
        self.symmetrizers = symmetrizer(self.cartan)
        self.positive = self._close_positive()
        self.roots = tuple(
            sorted(self.positive + tuple(_neg(r) for r in self.positive))
        )
        self._root_set = frozenset(self.roots)
        # (beta, beta) in the normalization (alpha_i, alpha_i) = 2*d_i
        self._norm = {r: self._norm_of(r) for r in self.positive}
        self._norm.update({_neg(r): v for r, v in self._norm.items()})
        self.rho = Weight([1] * self.rank)
        self._cartan_inv = _invert_rational(self.cartan)

    # -- construction -----------------------------------------------------

    def _close_positive(self) -> tuple[Root, ...]:
        n = self.rank
        simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen: set[Root] = set(simples)
        frontier = list(simples)
        while frontier:
            new: list[Root] = []
            for root in frontier:
                for i in range(n):
                    pairing = sum(self.cartan[i][j] * root[j] for j in range(n))
                    image = list(root)
                    image[i] -= pairing
                    img = tuple(image)
                    if all(c >= 0 for c in img):
                        if img not in seen:
                            seen.add(img)
                            new.append(img)
                    else:
                        # reflections keep sign purity; mixed signs never occur
                        assert all(c <= 0 for c in img)
            frontier = new
        return tuple(sorted(seen))

    def _norm_of(self, root: Root) -> Fraction:
        total = Fraction(0)
        for i, mi in enumerate(root):
            if mi == 0:
                continue
            for j, mj in enumerate(root):
                if mj:
                    total += mi * mj * self.symmetrizers[i] * self.cartan[i][j]
        return total

    # -- basic queries ------------------------------------------------------

    def is_root(self, root: Root) -> bool:
        return tuple(root) in self._root_set

    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(1 if k == i else 0 for k in range(n)) for i in range(n))

    def root_fundamental_coords(self, root: Root) -> Weight:
        """A root rewritten in fundamental coordinates (column combo of C)."""
        return Weight(
            sum(self.cartan[k][j] * root[j] for j in range(self.rank))
            for k in range(self.rank)
        )

    def weight_root_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Fundamental coordinates converted to the simple-root basis."""
        return tuple(
            sum(self._cartan_inv[i][k] * w[k] for k in range(self.rank))
            for i in range(self.rank)
        )

    def pairing(self, lam: Weight, root: Root) -> Fraction:
        """Exact ``<lam, root^vee> = 2(lam, root)/(root, root)``."""
        root = tuple(root)
        if root not in self._root_set:
            raise DomainError(f"{root} is not a root of {self.cartan_type}")
        inner = Fraction(0)
        for j, mj in enumerate(root):
            if mj:
                inner += mj * self.symmetrizers[j] * lam[j]
        return 2 * inner / self._norm[root]

    def coroot_pairing(self, a: Root, b: Root) -> int:
        """``<a, b^vee>`` for roots a, b; always an integer."""
        value = self.pairing(self.root_fundamental_coords(a), b)
        if value.denominator != 1:
            raise InternalConsistencyError(f"non-integer root pairing {a},{b}")
        return int(value)

    # -- reflections --------------------------------------------------------

    def reflect_weight(self, root: Root, lam: Weight) -> Weight:
        """Linear reflection ``s_root(lam)``."""
        return lam - self.pairing(lam, root) * self.root_fundamental_coords(root)

    def reflect_dot(self, root: Root, lam: Weight) -> Weight:
        """Dot-action reflection ``s_root . lam = s_root(lam+rho) - rho``."""
        return lam - self.pairing(lam + self.rho, root) * self.root_fundamental_coords(
            root
        )

    # -- parabolic data -------------------------------------------------------

    def check_parabolic(self, indices: Iterable[int]) -> frozenset[int]:
        out = frozenset(int(i) for i in indices)
        for i in out:
            if not 0 <= i < self.rank:
                raise DomainError(f"parabolic index {i} out of range")
        return out

    def parabolic_roots(self, indices: Iterable[int]) -> tuple[Root, ...]:
        """``Phi_I``: roots supported on the chosen simple indices."""
        ind = self.check_parabolic(indices)
        return tuple(
            r
            for r in self.roots
            if all(c == 0 for j, c in enumerate(r) if j not in ind)
        )

    def parabolic_positive(self, indices: Iterable[int]) -> tuple[Root, ...]:
        return tuple(r for r in self.parabolic_roots(indices) if _is_positive(r))

    def half_sum(self, roots: Iterable[Root]) -> Weight:
        total = Weight([0] * self.rank)
        for r in roots:
            total = total + self.root_fundamental_coords(r)
        return total * Fraction(1, 2)


def _neg(root: Root) -> Root:
    return tuple(-c for c in root)


def _is_positive(root: Root) -> bool:
    return all(c >= 0 for c in root)


def _invert_rational(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# -- module-level operations ----------------------------------------------------


def build_root_system(ct: CartanType | str) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return RootSystem(ct)


def pairing(sys: RootSystem, lam: Weight, root: Root) -> Fraction:
    return sys.pairing(lam, root)


def parabolic_data(
    sys: RootSystem, indices: Iterable[int]
) -> tuple[tuple[Root, ...], tuple[Root, ...], Weight, Weight]:
    """``(Phi_I, Phi_I^+, rho_levi, rho_nilrad)`` with the two rho parts summing to rho."""
    phi = sys.parabolic_roots(indices)
    phi_plus = tuple(r for r in phi if _is_positive(r))
    rho_l = sys.half_sum(phi_plus)
    return phi, phi_plus, rho_l, sys.rho - rho_l


def is_dominant_integral_for(sys: RootSystem, indices: Iterable[int], lam: Weight) -> bool:
    """Membership test for the dominant-integral cone of the parabolic."""
    for root in sys.parabolic_positive(indices):
        value = sys.pairing(lam, root)
        if value.denominator != 1 or value < 0:
            return False
    return True
