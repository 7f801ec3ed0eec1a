"""Exact Kazhdan-Lusztig machinery over a finite Coxeter system.

Ordinary polynomials come from the table kernel (compiled or pure, see
``_kernel``).  The relative families of type ``-1`` and ``q`` are computed on
top of them; the type-``q`` family is always produced by two independent
routes (the descent recursion and the alternating sum over the parabolic
subgroup) which are compared coefficient for coefficient before a value is
released from the cache.
"""

from __future__ import annotations

import hashlib
import json
import weakref
from typing import Iterable

from . import _kernel
from .rootsys import DomainError, InternalConsistencyError
from .weylgroup import DENSE_TABLE_CAP, CoxeterSystem, WeylElem

TYPE_Q = "q"
TYPE_NEG1 = "-1"


class IntPoly:
    """Dense integer polynomial in q, normalized (no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(v) for v in c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            out[i] -= v
        return IntPoly(out)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(v * other for v in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if self.is_zero():
            return self
        if k < 0:
            raise ValueError("negative shift")
        return IntPoly((0,) * k + self.coeffs)

    def reversed_to(self, m: int) -> "IntPoly":
        """``q^m * P(1/q)``; requires m >= degree."""
        if self.is_zero():
            return self
        if m < self.degree:
            raise ValueError("reversal exponent below degree")
        out = [0] * (m + 1)
        for i, v in enumerate(self.coeffs):
            out[m - i] = v
        return IntPoly(out)

    def __call__(self, value: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render_poly(self)

    def to_list(self) -> list[int]:
        return list(self.coeffs)


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


def render_poly(p: IntPoly) -> str:
    """Human form ``1 + q + 2q^2``; the zero polynomial prints as ``0``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "q" if mag == 1 else f"{mag}q"
        else:
            body = f"q^{k}" if mag == 1 else f"{mag}q^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class KLCache:
    """Per-system caches for ordinary and relative polynomials."""

    def __init__(self, sys: CoxeterSystem) -> None:
        self._sys = weakref.ref(sys)
        self.table = None  # (coeffs, degs) arrays from the kernel
        self.pairs: dict[tuple[int, int], IntPoly] = {}
        self.pairs_complete = False  # True when missing pairs are known zero
        self.relative: dict[tuple, IntPoly] = {}

    def clear(self) -> None:
        self.table = None
        self.pairs.clear()
        self.pairs_complete = False
        self.relative.clear()


_caches: "weakref.WeakKeyDictionary[CoxeterSystem, KLCache]" = weakref.WeakKeyDictionary()


def get_cache(sys: CoxeterSystem) -> KLCache:
    cache = _caches.get(sys)
    if cache is None:
        cache = KLCache(sys)
        _caches[sys] = cache
    return cache


def kl_backend() -> str:
    return _kernel.backend_name()


def _ensure_table(sys: CoxeterSystem, cache: KLCache):
    if cache.table is None:
        if sys.size > DENSE_TABLE_CAP:
            from .rootsys import ResourceCapError

            raise ResourceCapError(
                f"KL table refused for group of size {sys.size}"
            )
        cache.table = _kernel.kl_table(*sys.np_tables())
    return cache.table


def kl(sys: CoxeterSystem, x: WeylElem, w: WeylElem) -> IntPoly:
    """Ordinary polynomial P[x, w]."""
    sys._check(x)
    sys._check(w)
    cache = get_cache(sys)
    key = (x.index, w.index)
    hit = cache.pairs.get(key)
    if hit is not None:
        return hit
    if cache.pairs_complete:
        cache.pairs[key] = ZERO
        return ZERO
    coeffs, degs = _ensure_table(sys, cache)
    p = x.index * sys.size + w.index
    d = int(degs[p])
    poly = IntPoly(int(coeffs[p, k]) for k in range(d + 1)) if d >= 0 else ZERO
    cache.pairs[key] = poly
    return poly


def mu_coeff(sys: CoxeterSystem, x: WeylElem, w: WeylElem) -> int:
    """Coefficient of q^((l(w)-l(x)-1)/2) in P[x, w]; 0 off parity."""
    gap = w.length - x.length
    if gap <= 0 or gap % 2 == 0:
        return 0
    return kl(sys, x, w).coeff((gap - 1) // 2)


def _check_type(y: str) -> str:
    if y not in (TYPE_Q, TYPE_NEG1):
        raise DomainError(f"relative type must be {TYPE_Q!r} or {TYPE_NEG1!r}, got {y!r}")
    return y


def _check_min_rep(sys: CoxeterSystem, J: frozenset[int], w: WeylElem, name: str) -> None:
    if sys.left_descents(w) & J:
        raise DomainError(f"{name} is not a minimal coset representative for J")


def parabolic_r(
    sys: CoxeterSystem, J: Iterable[int], y: str, u: WeylElem, v: WeylElem
) -> IntPoly:
    """Relative R-polynomial of type y on the minimal coset representatives."""
    y = _check_type(y)
    J = sys.check_subset(J)
    _check_min_rep(sys, J, u, "u")
    _check_min_rep(sys, J, v, "v")
    return _rel_r(sys, get_cache(sys), J, y, u.index, v.index)


def _rel_r(sys, cache, J, y, u, v) -> IntPoly:
    key = ("R", tuple(sorted(J)), y, u, v)
    hit = cache.relative.get(key)
    if hit is not None:
        return hit
    if u == v:
        out = ONE
    elif not sys.bruhat_leq(sys.elements[u], sys.elements[v]):
        out = ZERO
    else:
        s = min(
            i for i in range(sys.ngen) if sys.lengths[sys.rmul[v][i]] < sys.lengths[v]
        )
        vs = sys.rmul[v][s]
        us = sys.rmul[u][s]
        if sys.lengths[us] < sys.lengths[u]:
            out = _rel_r(sys, cache, J, y, us, vs)
        elif not (sys.left_descents(sys.elements[us]) & J):
            out = (Q - ONE) * _rel_r(sys, cache, J, y, u, vs) + Q * _rel_r(
                sys, cache, J, y, us, vs
            )
        else:
            factor = (Q - ONE - Q) if y == TYPE_Q else (Q - ONE + ONE)
            out = factor * _rel_r(sys, cache, J, y, u, vs)
    cache.relative[key] = out
    return out


def parabolic_p(
    sys: CoxeterSystem, J: Iterable[int], y: str, u: WeylElem, v: WeylElem
) -> IntPoly:
    """Relative polynomial of type y.

    Type ``-1`` reduces to an ordinary polynomial against the longest element
    of the J-parabolic.  Type ``q`` is computed by the descent recursion and,
    independently, as the signed sum over the J-parabolic; the two must match.
    """
    y = _check_type(y)
    J = sys.check_subset(J)
    _check_min_rep(sys, J, u, "u")
    _check_min_rep(sys, J, v, "v")
    if y == TYPE_NEG1:
        wj = sys.longest_element(J)
        return kl(sys, wj * u, wj * v)
    return _rel_p_q(sys, get_cache(sys), J, u.index, v.index)


def _alt_sum_p(sys: CoxeterSystem, J: frozenset[int], u: int, v: int) -> IntPoly:
    total = ZERO
    ve = sys.elements[v]
    for t in sys.subgroup_elements(J):
        term = kl(sys, t * sys.elements[u], ve)
        total = total + term if t.length % 2 == 0 else total - term
    return total


def _rel_p_q(sys, cache, J, u, v) -> IntPoly:
    key = ("P", tuple(sorted(J)), TYPE_Q, u, v)
    hit = cache.relative.get(key)
    if hit is not None:
        return hit
    if u == v:
        out = ONE
    elif not sys.bruhat_leq(sys.elements[u], sys.elements[v]):
        out = ZERO
    else:
        s = min(
            i for i in range(sys.ngen) if sys.lengths[sys.rmul[v][i]] < sys.lengths[v]
        )
        vs = sys.rmul[v][s]
        us = sys.rmul[u][s]
        if sys.lengths[us] < sys.lengths[u]:
            out = _rel_p_q(sys, cache, J, us, vs) + _rel_p_q(sys, cache, J, u, vs).shifted(1)
        elif not (sys.left_descents(sys.elements[us]) & J):
            out = _rel_p_q(sys, cache, J, us, vs).shifted(1) + _rel_p_q(sys, cache, J, u, vs)
        else:
            out = ZERO
        lv = sys.lengths[v]
        for w in range(sys.size):
            if w == vs:
                continue
            we = sys.elements[w]
            if sys.left_descents(we) & J:
                continue
            if not (
                sys.bruhat_leq(sys.elements[u], we)
                and sys.bruhat_leq(we, sys.elements[vs])
            ):
                continue
            if sys.lengths[sys.rmul[w][s]] >= sys.lengths[w]:
                continue
            gap = sys.lengths[vs] - sys.lengths[w]
            if (gap - 1) % 2:
                continue
            mu = _rel_p_q(sys, cache, J, w, vs).coeff((gap - 1) // 2)
            if mu == 0:
                continue
            out = out - (mu * _rel_p_q(sys, cache, J, u, w)).shifted((lv - sys.lengths[w]) // 2)
        alt = _alt_sum_p(sys, J, u, v)
        if alt != out:
            raise InternalConsistencyError(
                "type-q relative polynomial: recursion and alternating sum disagree "
                f"at ({u}, {v}), J={sorted(J)}: {out} vs {alt}"
            )
    cache.relative[key] = out
    return out


def mu_tilde(sys: CoxeterSystem, J: Iterable[int], u: WeylElem, v: WeylElem) -> int:
    """Top-degree coefficient of the type-q polynomial; 0 off parity."""
    gap = v.length - u.length
    if gap <= 0 or gap % 2 == 0:
        return 0
    return parabolic_p(sys, J, TYPE_Q, u, v).coeff((gap - 1) // 2)


# -- persistent cache file ------------------------------------------------------


def system_fingerprint(sys: CoxeterSystem) -> str:
    payload = json.dumps({"cartan": sys.cartan, "size": sys.size}).encode()
    return hashlib.sha256(payload).hexdigest()


def save_cache_file(sys: CoxeterSystem, path: str) -> None:
    """Write the full ordinary-KL table keyed by the system fingerprint."""
    cache = get_cache(sys)
    entries = {}
    if cache.pairs_complete and cache.table is None:
        # cache was itself loaded from a file; avoid rebuilding the table
        for (x, w), poly in cache.pairs.items():
            if x != w and not poly.is_zero():
                entries[f"{x},{w}"] = poly.to_list()
    else:
        coeffs, degs = _ensure_table(sys, cache)
        n = sys.size
        for x in range(n):
            for w in range(n):
                d = int(degs[x * n + w])
                if d >= 0 and (x != w):
                    entries[f"{x},{w}"] = [
                        int(coeffs[x * n + w, k]) for k in range(d + 1)
                    ]
    blob = {"schema": 1, "fingerprint": system_fingerprint(sys), "pairs": entries}
    with open(path, "w") as fh:
        json.dump(blob, fh, sort_keys=True)


def load_cache_file(sys: CoxeterSystem, path: str) -> bool:
    """Preload pair polynomials when the fingerprint matches; else ignore."""
    try:
        with open(path) as fh:
            blob = json.load(fh)
    except (OSError, ValueError):
        return False
    if blob.get("fingerprint") != system_fingerprint(sys):
        return False
    cache = get_cache(sys)
    for key, coeffs in blob.get("pairs", {}).items():
        x, w = (int(part) for part in key.split(","))
        cache.pairs[(x, w)] = IntPoly(coeffs)
    for k in range(sys.size):
        cache.pairs[(k, k)] = ONE
    cache.pairs_complete = True  # absent off-diagonal pairs are zero
    return True
