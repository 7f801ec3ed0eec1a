"""Per-weight block data: the integral subsystem, its Coxeter realization,
the antidominant orbit representative, and the coset combinatorics that the
Dirac-cohomology formulas run on.

The integral Weyl group is realized as its own abstract Coxeter system on the
simple roots of the integral subsystem; an explicit embedding carries its
elements back to the ambient group.  Order compatibility between the two
realizations is a tested invariant, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .rootsys import (
    DomainError,
    InternalConsistencyError,
    Root,
    RootSystem,
    Weight,
    is_dominant_integral_for,
)
from .weylgroup import CoxeterSystem, Matrix, WeylElem, format_word

MODE_FULL = "full"
MODE_INTEGRAL = "integral"

_systems_by_matrix: dict[Matrix, CoxeterSystem] = {}


def coxeter_for_matrix(matrix: Matrix, cap: int | None = None) -> CoxeterSystem:
    """Shared CoxeterSystem instances, one per Cartan matrix."""
    sys = _systems_by_matrix.get(matrix)
    if sys is None:
        sys = CoxeterSystem(matrix) if cap is None else CoxeterSystem(matrix, cap)
        _systems_by_matrix[matrix] = sys
    return sys


def ambient_weyl(sys: RootSystem) -> CoxeterSystem:
    return coxeter_for_matrix(sys.cartan)


def _colex(root: Root) -> tuple[int, ...]:
    return tuple(reversed(root))


def integral_subsystem(sys: RootSystem, lam: Weight) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """Roots pairing integrally with lam, and the simple system of its positives.

    Simples are the positive members not expressible as a sum of two positive
    members; they are ordered colexicographically, which restricts to the
    ambient simple-root order when the weight is integral.
    """
    phi = tuple(r for r in sys.roots if sys.pairing(lam, r).denominator == 1)
    plus = tuple(r for r in phi if all(c >= 0 for c in r))
    plus_set = set(plus)
    simples = []
    for r in plus:
        decomposable = any(
            tuple(a - b for a, b in zip(r, other)) in plus_set
            for other in plus
            if other != r
        )
        if not decomposable:
            simples.append(r)
    return phi, tuple(sorted(simples, key=_colex))


def is_regular(sys: RootSystem, lam: Weight) -> bool:
    shifted = lam + sys.rho
    return all(sys.pairing(shifted, r) != 0 for r in sys.positive)


def weight_leq(sys: RootSystem, nu: Weight, eta: Weight) -> bool:
    """True iff eta - nu is a nonnegative integer combination of simple roots."""
    coords = sys.weight_root_coords(eta - nu)
    return all(c.denominator == 1 and c >= 0 for c in coords)


@lru_cache(maxsize=None)
def strong_linkage_set(sys: RootSystem, lam: Weight, mode: str = MODE_INTEGRAL) -> frozenset[Weight]:
    """Downward closure of lam under dot reflections with positive integral pairing."""
    if mode == MODE_FULL:
        roots = sys.positive
    elif mode == MODE_INTEGRAL:
        roots = tuple(
            r
            for r in sys.positive
            if sys.pairing(lam, r).denominator == 1
        )
    else:
        raise DomainError(f"unknown linkage mode {mode!r}")
    seen = {lam}
    frontier = [lam]
    while frontier:
        new = []
        for nu in frontier:
            shifted = nu + sys.rho
            for r in roots:
                value = sys.pairing(shifted, r)
                if value.denominator == 1 and value > 0:
                    nxt = nu - value * sys.root_fundamental_coords(r)
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
        frontier = new
    return frozenset(seen)


@dataclass(eq=False)
class BlockData:
    """Everything the Dirac-cohomology formulas need for one (I, lambda)."""

    root_sys: RootSystem
    weyl: CoxeterSystem
    I: frozenset[int]
    lam: Weight
    phi_int: tuple[Root, ...]
    delta_int: tuple[Root, ...]
    wgrp: CoxeterSystem
    mu: Weight
    w_to_mu: WeylElem
    sigma_idx: frozenset[int]
    lam_dominant: bool
    I_idx: frozenset[int] | None
    regular: bool
    _embed: dict[int, WeylElem] = field(default_factory=dict)
    _dot_mu: dict[int, Weight] = field(default_factory=dict)
    _wbar: WeylElem | None = None
    _iw: tuple[WeylElem, ...] | None = None
    _iw_sigma: tuple[WeylElem, ...] | None = None

    # -- embedding ----------------------------------------------------------

    def _gen_reflection(self, k: int) -> WeylElem:
        root = self.delta_int[k]
        n = self.root_sys.rank
        cols = []
        for j in range(n):
            e_j = tuple(int(t == j) for t in range(n))
            c = self.root_sys.coroot_pairing(e_j, root)
            cols.append(tuple(int(t == j) - c * root[t] for t in range(n)))
        matrix = tuple(tuple(cols[j][t] for j in range(n)) for t in range(n))
        # transpose: cols[j] is the image of alpha_j, matrix rows are basis coeffs
        return self.weyl.from_matrix(matrix)

    def embed(self, x: WeylElem) -> WeylElem:
        """Image of an abstract element inside the ambient Weyl group."""
        self.wgrp._check(x)
        hit = self._embed.get(x.index)
        if hit is not None:
            return hit
        out = self.weyl.identity
        for s in x.word:
            out = out * self._embed_gen(s)
        self._embed[x.index] = out
        return out

    def _embed_gen(self, k: int) -> WeylElem:
        key = -(k + 1)  # generators cached under negative keys
        hit = self._embed.get(key)
        if hit is None:
            hit = self._gen_reflection(k)
            self._embed[key] = hit
        return hit

    def act(self, x: WeylElem, w: Weight) -> Weight:
        return self.weyl.act(self.embed(x), w)

    def dot_mu(self, x: WeylElem) -> Weight:
        hit = self._dot_mu.get(x.index)
        if hit is None:
            hit = self.weyl.dot_act(self.embed(x), self.mu)
            self._dot_mu[x.index] = hit
        return hit

    # -- coset combinatorics ----------------------------------------------------

    def _require_dominant(self) -> frozenset[int]:
        if not self.lam_dominant or self.I_idx is None:
            raise DomainError(
                "weight is not dominant integral for the parabolic (lambda not in "
                "the Lambda_I^+ cone)"
            )
        return self.I_idx

    def w_I(self) -> WeylElem:
        """Longest element of the I-parabolic inside the integral group."""
        return self.wgrp.longest_element(self._require_dominant())

    def iw(self) -> tuple[WeylElem, ...]:
        """Minimal coset representatives with no left descent in I."""
        if self._iw is None:
            self._iw = self.wgrp.min_coset_reps(self._require_dominant())
        return self._iw

    def iw_sigma(self) -> tuple[WeylElem, ...]:
        """Members w of iw() with w < w*s in iw() for every singular generator s."""
        if self._iw_sigma is None:
            iw_set = {w.index for w in self.iw()}
            out = []
            for w in self.iw():
                ok = True
                for s in sorted(self.sigma_idx):
                    ws = self.wgrp.rmul[w.index][s]
                    if self.wgrp.lengths[ws] <= w.length or ws not in iw_set:
                        ok = False
                        break
                if ok:
                    out.append(w)
            self._iw_sigma = tuple(out)
        return self._iw_sigma

    def wbar(self) -> WeylElem:
        """The unique representative with lam == w_I * wbar . mu."""
        if self._wbar is None:
            self._require_dominant()
            wI = self.w_I()
            hits = [
                x
                for x in self.iw_sigma()
                if self.dot_mu(self.wgrp.mul(wI, x)) == self.lam
            ]
            if len(hits) != 1:
                raise InternalConsistencyError(
                    f"expected exactly one coset representative reaching lambda, got {len(hits)}"
                )
            self._wbar = hits[0]
        return self._wbar

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "lambda": [str(c) for c in self.lam],
            "mu": [str(c) for c in self.mu],
            "I": sorted(i + 1 for i in self.I),
            "delta_int": [list(r) for r in self.delta_int],
            "sigma_mu": sorted(k + 1 for k in self.sigma_idx),
            "group_order": self.wgrp.size,
            "wbar": format_word(self.wbar().word) if self.lam_dominant else None,
            "regular": self.regular,
        }


@lru_cache(maxsize=None)
def build_block(sys: RootSystem, I: frozenset[int], lam: Weight) -> BlockData:
    I = sys.check_parabolic(I)
    if len(lam) != sys.rank:
        raise DomainError("weight dimension does not match the system rank")
    weyl = ambient_weyl(sys)
    phi_int, delta_int = integral_subsystem(sys, lam)
    cartan = tuple(
        tuple(sys.coroot_pairing(b, a) for b in delta_int) for a in delta_int
    )
    wgrp = coxeter_for_matrix(cartan)

    # antidominant representative by greedy descent along the integral simples
    block = BlockData(
        root_sys=sys,
        weyl=weyl,
        I=I,
        lam=lam,
        phi_int=phi_int,
        delta_int=delta_int,
        wgrp=wgrp,
        mu=lam,
        w_to_mu=wgrp.identity,
        sigma_idx=frozenset(),
        lam_dominant=False,
        I_idx=None,
        regular=is_regular(sys, lam),
    )
    mu = lam
    w = wgrp.identity
    while True:
        for k, root in enumerate(delta_int):
            if sys.pairing(mu + sys.rho, root) > 0:
                mu = sys.reflect_dot(root, mu)
                w = wgrp.mul(wgrp.generator(k), w)
                break
        else:
            break
    block.mu = mu
    block.w_to_mu = w
    block.sigma_idx = frozenset(
        k for k, root in enumerate(delta_int) if sys.pairing(mu + sys.rho, root) == 0
    )

    if is_dominant_integral_for(sys, I, lam):
        simple_roots = sys.simple_roots()
        idx = []
        for i in sorted(I):
            root = simple_roots[i]
            if root not in delta_int:
                raise InternalConsistencyError(
                    "parabolic simple root missing from the integral simple system"
                )
            idx.append(delta_int.index(root))
        block.lam_dominant = True
        block.I_idx = frozenset(idx)
    return block


# -- spec-level operations ------------------------------------------------------


def integral_weyl_group(
    sys: RootSystem, lam: Weight
) -> tuple[CoxeterSystem, dict[int, WeylElem]]:
    """The abstract integral Weyl group plus its generator embedding."""
    block = build_block(sys, frozenset(), lam)
    embedding = {
        k: block._embed_gen(k) for k in range(len(block.delta_int))
    }
    return block.wgrp, embedding


def antidominant_rep(sys: RootSystem, lam: Weight) -> tuple[Weight, WeylElem]:
    block = build_block(sys, frozenset(), lam)
    return block.mu, block.w_to_mu


def singular_simples(sys: RootSystem, lam: Weight, mu: Weight | None = None) -> tuple[Root, ...]:
    block = build_block(sys, frozenset(), lam)
    if mu is not None and mu != block.mu:
        raise DomainError("mu is not the antidominant representative of this orbit")
    return tuple(block.delta_int[k] for k in sorted(block.sigma_idx))


def bruhat_consistency(block: BlockData, x: WeylElem, w: WeylElem) -> bool:
    """Abstract and ambient Bruhat verdicts agree (expected always true)."""
    inner = block.wgrp.bruhat_leq(x, w)
    outer = block.weyl.bruhat_leq(block.embed(x), block.embed(w))
    return inner == outer


def coset_sets(block: BlockData) -> tuple[tuple[WeylElem, ...], tuple[WeylElem, ...]]:
    return block.iw(), block.iw_sigma()


def wbar(block: BlockData) -> WeylElem:
    return block.wbar()


@dataclass(frozen=True)
class OrderRecord:
    bruhat_ambient: bool
    bruhat_integral: bool
    dot_linkage: bool
    dot_weight_leq: bool


def order_equivalences(block: BlockData, x: WeylElem, w: WeylElem) -> OrderRecord:
    """The four order statements for a pair of integral-group elements."""
    nu = block.dot_mu(x)
    eta = block.dot_mu(w)
    return OrderRecord(
        bruhat_ambient=block.weyl.bruhat_leq(block.embed(x), block.embed(w)),
        bruhat_integral=block.wgrp.bruhat_leq(x, w),
        dot_linkage=nu in strong_linkage_set(block.root_sys, eta, MODE_INTEGRAL),
        dot_weight_leq=weight_leq(block.root_sys, nu, eta),
    )


def order_lemma_applies(block: BlockData) -> bool:
    """Hypothesis under which the ambient Bruhat order and the weight order
    are interchangeable with the integral-group order.

    When the integral simple system sits inside the ambient simples the
    integral group is a standard parabolic subgroup and the classical order
    theorems restrict to it; a rank-one integral system leaves no room for
    coefficient cancellation either.  Outside these cases the ambient order
    can strictly refine the integral one (B2 at (1/2, 0) is a witness).
    """
    if len(block.delta_int) <= 1:
        return True
    return set(block.delta_int) <= set(block.root_sys.simple_roots())


def dot_stabilizer_matches_sigma(block: BlockData) -> bool:
    """The dot-action stabilizer of mu equals the subgroup generated by the
    singular simples (checked by enumeration)."""
    stab = {
        x.index
        for x in block.wgrp.elements
        if block.dot_mu(x) == block.mu
    }
    gen = {x.index for x in block.wgrp.subgroup_elements(block.sigma_idx)}
    return stab == gen


def integral_group_definition_agrees(block: BlockData) -> bool:
    """Sampled check of the two descriptions of the integral Weyl group:
    reflection group of the integral subsystem vs. the root-lattice criterion
    on the dot action."""
    sys = block.root_sys
    weyl = block.weyl
    by_lattice = set()
    for w in weyl.elements:
        diff = weyl.dot_act(w, block.lam) - block.lam
        coords = sys.weight_root_coords(diff)
        if all(c.denominator == 1 for c in coords):
            by_lattice.add(w.index)
    by_reflection = {block.embed(x).index for x in block.wgrp.elements}
    return by_lattice == by_reflection
