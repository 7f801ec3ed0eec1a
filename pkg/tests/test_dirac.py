from fractions import Fraction
from itertools import combinations

import pytest

from diracoh import (
    DomainError,
    Weight,
    algebraic_params,
    build_block,
    dirac_cohomology_parabolic_verma,
    dirac_cohomology_simple,
    geometric_params,
    is_dominant_integral_for,
    is_kostant,
    klv,
    klv_regular,
    kostant_equivalences,
    parabolic_verma_is_simple,
    param_report,
    psi_plus,
    verma_is_simple,
    w_set,
)
from diracoh.blocks import ambient_weyl
from diracoh.klpoly import ONE


def _orbit(rs, seed):
    W = ambient_weyl(rs)
    return sorted({W.dot_act(w, seed) for w in W.elements})


# -- rank-one oracle ---------------------------------------------------------------
# With one simple root every polynomial is 1, so the decomposition can be
# written out by hand: one summand per coset representative below the twist.


def test_hd_rank_one_oracle(a1):
    assert dirac_cohomology_simple(a1, (), Weight([0])) == {
        Weight([1]): 1,
        Weight([-1]): 1,
    }
    assert dirac_cohomology_simple(a1, (), Weight([Fraction(1, 2)])) == {
        Weight([Fraction(3, 2)]): 1
    }
    assert dirac_cohomology_simple(a1, (), Weight([-1])) == {Weight([0]): 1}
    assert w_set(a1, (), Weight([0])) == frozenset([Weight([1]), Weight([-1])])


def test_hd_verma_singleton(a2):
    lam = Weight([0, 0])
    assert dirac_cohomology_parabolic_verma(a2, (0,), lam) == {Weight([1, 1]): 1}
    with pytest.raises(DomainError):
        dirac_cohomology_parabolic_verma(a2, (0,), Weight([-1, 0]))


def test_hd_requires_dominance(a2):
    with pytest.raises(DomainError):
        dirac_cohomology_simple(a2, (0,), Weight([-1, 0]))


def test_klv_diagonal_and_domain(a2):
    block = build_block(a2, frozenset([0]), Weight([0, 0]))
    for x in block.iw_sigma():
        assert klv(block, x, x) == ONE
    outside = block.wgrp.generator(0)  # has a left descent in I
    with pytest.raises(DomainError):
        klv(block, outside, outside)


def test_klv_regular_three_routes(a2):
    block = build_block(a2, frozenset([0]), Weight([0, 0]))
    wb = block.wbar()
    grp = block.wgrp
    wI = block.w_I()
    for x in block.iw():
        poly = klv_regular(block, x, wb)
        assert poly == klv(block, x, wb)
        # sum of coefficients is nonzero exactly on the order ideal
        assert (poly(1) != 0) == grp.bruhat_leq(grp.mul(wI, x), grp.mul(wI, wb))


def test_klv_regular_refuses_singular(a2):
    block = build_block(a2, frozenset(), Weight([-1, 0]))
    e = block.wgrp.identity
    with pytest.raises(DomainError):
        klv_regular(block, e, e)


def test_w_set_contains_shifted_weight(a2, b2):
    for rs in (a2, b2):
        for seed in (Weight([0] * rs.rank), Weight([-1] + [0] * (rs.rank - 1))):
            for I_size in range(rs.rank + 1):
                for I in combinations(range(rs.rank), I_size):
                    for lam in _orbit(rs, seed):
                        if not is_dominant_integral_for(rs, I, lam):
                            continue
                        ws = w_set(rs, I, lam)
                        assert lam + rs.rho in ws
                        assert dirac_cohomology_simple(rs, I, lam)[lam + rs.rho] == 1


def test_singleton_for_twisted_antidominant(a2):
    # lambda = w_I . mu with mu antidominant regular forces a singleton
    lam = Weight([0, -3])
    assert w_set(a2, (0,), lam) == frozenset([Weight([1, -2])])
    assert parabolic_verma_is_simple(a2, (0,), lam).verdict


def test_hd_support_lies_in_orbit(a2):
    W = ambient_weyl(a2)
    for lam in _orbit(a2, Weight([0, 0])):
        entries = dirac_cohomology_simple(a2, (), lam)
        orbit = {W.act(w, lam + a2.rho) for w in W.elements}
        assert set(entries) <= orbit


def test_singular_strict_inclusion_witness(a2):
    # frozen: the singular orbit block where the hull strictly contains the
    # parameterizing set
    lam = Weight([-1, 0])
    I = frozenset([1])
    ws = w_set(a2, I, lam)
    hull, linkage = geometric_params(a2, I, lam)
    assert ws == frozenset([Weight([0, 1])])
    assert linkage == frozenset([Weight([0, 1]), Weight([-1, 0])])
    assert hull == linkage
    assert ws < hull


def test_geometric_params_examples(a1):
    hull, linkage = geometric_params(a1, (), Weight([0]))
    assert hull == linkage == frozenset([Weight([1]), Weight([-1])])
    hull, linkage = geometric_params(a1, (), Weight([Fraction(-3, 2)]))
    assert hull == linkage == frozenset([Weight([Fraction(-1, 2)])])


def test_algebraic_params_examples(a1):
    mult, embed = algebraic_params(a1, (), Weight([0]))
    assert mult == embed == frozenset([Weight([1]), Weight([-1])])
    mult, embed = algebraic_params(a1, (), Weight([-2]))
    assert mult == frozenset([Weight([-1])])


def test_param_report_chain_regular_sweep(a2):
    for I_size in range(3):
        for I in combinations(range(2), I_size):
            for lam in _orbit(a2, Weight([0, 0])):
                if not is_dominant_integral_for(a2, I, lam):
                    continue
                rep = param_report(a2, I, lam)
                flags = rep.flags()
                assert rep.chain_holds()
                assert flags["geometric_equalities"]
                assert flags["algebraic_equalities"]


def test_psi_plus_examples(a2, a1):
    assert set(psi_plus(a2, (0,), Weight([0, 0]))) == {(0, 1), (1, 1)}
    assert psi_plus(a2, (0, 1), Weight([0, 0])) == ()
    assert psi_plus(a1, (), Weight([Fraction(1, 2)])) == ()


def test_verma_simplicity_examples(a1, a2):
    assert verma_is_simple(a2, Weight([-1, -1])).verdict
    assert not verma_is_simple(a1, Weight([0])).verdict
    assert verma_is_simple(a1, Weight([Fraction(1, 2)])).verdict


def test_parabolic_simplicity_examples(a1, a2):
    verdict = parabolic_verma_is_simple(a2, (0,), Weight([0, 0]))
    assert not verdict.verdict
    assert not verdict.twist_side and not verdict.jantzen_side
    # rank one, full parabolic: lambda = s1 . (-3)
    assert parabolic_verma_is_simple(a1, (0,), Weight([1])).verdict
    with pytest.raises(DomainError):
        parabolic_verma_is_simple(a2, (0,), Weight([0, -1]))  # singular


def test_parabolic_simplicity_reduces_to_verma(a2):
    for lam in _orbit(a2, Weight([0, 0])):
        assert (
            parabolic_verma_is_simple(a2, (), lam).verdict
            == verma_is_simple(a2, lam).verdict
        )


def test_hd_verma_matches_hd_exactly_when_simple(a2, b2):
    for rs in (a2, b2):
        for I_size in range(rs.rank + 1):
            for I in combinations(range(rs.rank), I_size):
                for lam in _orbit(rs, Weight([0] * rs.rank)):
                    if not is_dominant_integral_for(rs, I, lam):
                        continue
                    simple = parabolic_verma_is_simple(rs, I, lam).verdict
                    same = dirac_cohomology_simple(
                        rs, I, lam
                    ) == dirac_cohomology_parabolic_verma(rs, I, lam)
                    assert simple == same


def test_kostant_examples(a1, a3):
    assert is_kostant(a1, (0,), Weight([1]))
    assert is_kostant(a1, (), Weight([0]))
    # frozen witness: the length-four element whose polynomial is 1 + q
    W = ambient_weyl(a3)
    wb = W.from_word([1, 0, 2, 1])
    lam = W.dot_act(wb, Weight([-2, -2, -2]))
    assert lam == Weight([-2, 2, -2])
    assert not is_kostant(a3, (), lam)
    with pytest.raises(DomainError):
        is_kostant(a3, (), Weight([-1, 0, 0]))  # singular


def test_kostant_equivalences_examples(a1):
    values = kostant_equivalences(a1, (), Weight([-2]), Weight([0]))
    assert set(values.values()) == {True}
    values = kostant_equivalences(a1, (), Weight([0]), Weight([0]))
    assert set(values.values()) == {True}
    # different dot orbits: everything false
    values = kostant_equivalences(a1, (), Weight([0]), Weight([1]))
    assert set(values.values()) == {False}


def test_kostant_equivalences_sweep(a2):
    fam = [
        lam
        for lam in _orbit(a2, Weight([0, 0]))
        if is_dominant_integral_for(a2, (0,), lam)
    ]
    for lam in fam:
        if not is_kostant(a2, (0,), lam):
            continue
        for eta in fam:
            values = kostant_equivalences(a2, (0,), lam, eta)
            assert len(set(values.values())) == 1
