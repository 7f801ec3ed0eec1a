"""Exhaustive desk-scale theorem harness.

A sweep enumerates dot orbits of a few seed weights per root system (one
regular integral, one singular per fundamental weight, one non-integral),
filters each orbit down to the dominant cone of every parabolic subset, and
runs the full battery of statement checks on every admissible weight, pair of
weights, or family.  Reports are deterministic: records are sorted and wall
clock timings are kept out of the serialized output unless asked for.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable

from . import dirac, klpoly
from .blocks import (
    MODE_FULL,
    MODE_INTEGRAL,
    BlockData,
    ambient_weyl,
    antidominant_rep,
    build_block,
    bruhat_consistency,
    dot_stabilizer_matches_sigma,
    integral_group_definition_agrees,
    order_equivalences,
    order_lemma_applies,
    strong_linkage_set,
    weight_leq,
)
from .rootsys import (
    CartanError,
    DomainError,
    InternalConsistencyError,
    ResourceCapError,
    RootSystem,
    Weight,
    build_root_system,
    format_weight,
    is_dominant_integral_for,
    parse_weight,
)
from .weylgroup import format_word

SYSTEM_CHECKS = ("structural_counts", "kl_properties", "deodhar_consistency")
WEIGHT_CHECKS = ("verma_simplicity",)
BLOCK_CHECKS = (
    "block_orders",
    "klv_basics",
    "param_chain",
    "geometric_params_check",
    "algebraic_params_check",
    "hd_verma",
    "parabolic_simplicity",
)
FAMILY_CHECKS = ("param_injectivity", "kostant_detection")
PAIR_CHECKS = ("linkage_equivalences", "kostant_comparison")
ALL_CHECKS = SYSTEM_CHECKS + WEIGHT_CHECKS + BLOCK_CHECKS + FAMILY_CHECKS + PAIR_CHECKS


@dataclass(frozen=True)
class SweepPlan:
    """What to sweep: systems, parabolic subsets, seed weights, checks."""

    systems: tuple[str, ...]
    parabolics: tuple[tuple[int, ...], ...] | None = None  # 0-based; None = all subsets
    seeds: tuple[str, ...] | None = None  # weight literals; None = default battery
    checks: tuple[str, ...] | None = None  # None = everything
    size_cap: int = 10**6

    def selected_checks(self) -> tuple[str, ...]:
        if self.checks is None:
            return ALL_CHECKS
        for name in self.checks:
            if name not in ALL_CHECKS:
                raise DomainError(f"unknown check {name!r}")
        return tuple(self.checks)

    def to_json_dict(self) -> dict:
        return {
            "systems": list(self.systems),
            "parabolics": None
            if self.parabolics is None
            else [sorted(i + 1 for i in p) for p in self.parabolics],
            "seeds": None if self.seeds is None else list(self.seeds),
            "checks": None if self.checks is None else list(self.checks),
            "size_cap": self.size_cap,
        }


@dataclass(frozen=True)
class CheckRecord:
    name: str
    system: str
    parabolic: tuple[int, ...] | None  # 1-based for reporting
    lam: str | None
    eta: str | None
    passed: bool
    details: dict

    def sort_key(self):
        return (
            self.name,
            self.system,
            self.parabolic if self.parabolic is not None else (-1,),
            self.lam or "",
            self.eta or "",
        )

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "system": self.system,
            "parabolic": list(self.parabolic) if self.parabolic is not None else None,
            "lambda": self.lam,
            "eta": self.eta,
            "passed": self.passed,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    plan: SweepPlan
    records: list[CheckRecord]
    coverage: dict[str, dict[str, bool]]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.records:
            slot = out.setdefault(r.name, {"pass": 0, "fail": 0})
            slot["pass" if r.passed else "fail"] += 1
        return out

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json_dict(self, include_timings: bool = False) -> dict:
        out = {
            "schema": 1,
            "plan": self.plan.to_json_dict(),
            "summary": self.summary(),
            "coverage": self.coverage,
            "passed": self.passed,
            "failures": [r.to_json_dict() for r in self.failures()],
            "checks": [r.to_json_dict() for r in self.records],
        }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return out

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_json_dict(include_timings), sort_keys=True, indent=2)

    def to_table(self) -> str:
        lines = []
        width = max((len(name) for name in self.summary()), default=10)
        lines.append(f"{'check':<{width}}  pass  fail")
        for name, counts in sorted(self.summary().items()):
            lines.append(f"{name:<{width}}  {counts['pass']:>4}  {counts['fail']:>4}")
        for system, flags in sorted(self.coverage.items()):
            if not flags["complete"]:
                lines.append(f"coverage incomplete for {system}: {flags}")
        lines.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        for r in self.failures():
            lines.append(
                f"  FAIL {r.name} system={r.system} I={r.parabolic} lambda={r.lam} eta={r.eta}"
            )
        return "\n".join(lines)


def default_seeds(rank: int) -> tuple[Weight, ...]:
    """Regular integral zero, each singular -varpi_i, one non-integral seed."""
    seeds = [Weight([0] * rank)]
    for i in range(rank):
        seeds.append(Weight([0] * i + [-1] + [0] * (rank - 1 - i)))
    seeds.append(Weight([Fraction(1, 2)] + [0] * (rank - 1)))
    return tuple(seeds)


def _dot_orbit(rs: RootSystem, seed: Weight) -> tuple[Weight, ...]:
    W = ambient_weyl(rs)
    return tuple(sorted({W.dot_act(w, seed) for w in W.elements}))


def _all_parabolics(rank: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for k in range(rank + 1):
        out.extend(combinations(range(rank), k))
    return tuple(out)


# -- individual checks -----------------------------------------------------------


def check_structural_counts(rs: RootSystem) -> tuple[bool, dict]:
    W = ambient_weyl(rs)
    formula = rs.cartan_type.weyl_order()
    longest = W.elements[-1].length
    two_rho = rs.half_sum(rs.positive) * 2
    details = {
        "positive_roots": len(rs.positive),
        "longest_length": longest,
        "group_order": W.size,
        "order_formula": formula,
        "two_rho_ok": two_rho == rs.rho * 2,
    }
    passed = (
        len(rs.positive) == longest
        and W.size == formula
        and len(rs.roots) == 2 * len(rs.positive)
        and details["two_rho_ok"]
    )
    return passed, details


def check_kl_properties(rs: RootSystem) -> tuple[bool, dict]:
    W = ambient_weyl(rs)
    bad = 0
    for x in W.elements:
        xin = x.inverse()
        for w in W.elements:
            p = klpoly.kl(W, x, w)
            if W.bruhat_leq(x, w):
                if p.coeff(0) != 1:
                    bad += 1
                if x != w and 2 * p.degree > w.length - x.length - 1:
                    bad += 1
                if x == w and p != klpoly.ONE:
                    bad += 1
            elif not p.is_zero():
                bad += 1
            if p != klpoly.kl(W, xin, w.inverse()):
                bad += 1
    return bad == 0, {"pairs": W.size * W.size, "violations": bad}


def check_deodhar_consistency(rs: RootSystem) -> tuple[bool, dict]:
    """Recursion vs alternating sum (asserted inside parabolic_p), the
    inversion identity, and the type -1 constant term, over every J."""
    W = ambient_weyl(rs)
    pairs = 0
    bad = 0
    for J in _all_parabolics(W.ngen):
        reps = W.min_coset_reps(J)
        for u in reps:
            for v in reps:
                if not W.bruhat_leq(u, v):
                    continue
                pairs += 1
                for y in (klpoly.TYPE_Q, klpoly.TYPE_NEG1):
                    p = klpoly.parabolic_p(W, J, y, u, v)
                    if y == klpoly.TYPE_NEG1 and p.coeff(0) != 1:
                        bad += 1
                    lhs = p.reversed_to(v.length - u.length)
                    rhs = klpoly.ZERO
                    for z in reps:
                        if W.bruhat_leq(u, z) and W.bruhat_leq(z, v):
                            rhs = rhs + klpoly.parabolic_r(W, J, y, u, z) * klpoly.parabolic_p(
                                W, J, y, z, v
                            )
                    if lhs != rhs:
                        bad += 1
    return bad == 0, {"pairs": pairs, "violations": bad}


def check_verma_simplicity(rs: RootSystem, lam: Weight) -> tuple[bool, dict]:
    verdict = dirac.verma_is_simple(rs, lam)  # raises on side disagreement
    return True, {"simple": verdict.verdict}


def check_block_orders(block: BlockData) -> tuple[bool, dict]:
    grp = block.wgrp
    rs = block.root_sys
    bad = []
    orders_interchange = order_lemma_applies(block)
    for x in grp.elements:
        for w in grp.elements:
            rec = order_equivalences(block, x, w)
            chain_ok = (
                (not rec.bruhat_integral or rec.bruhat_ambient)
                and (not rec.bruhat_integral or rec.dot_linkage)
                and (not rec.dot_linkage or rec.dot_weight_leq)
            )
            if not chain_ok:
                bad.append("order_chain")
            if block.regular and rec.bruhat_integral != rec.dot_linkage:
                bad.append("order_equivalence_regular")
            if orders_interchange and not bruhat_consistency(block, x, w):
                bad.append("bruhat_consistency")
    mu_again, w_again = antidominant_rep(rs, block.mu)
    if mu_again != block.mu or w_again.length != 0:
        bad.append("antidominant_idempotent")
    if not dot_stabilizer_matches_sigma(block):
        bad.append("stabilizer")
    if not integral_group_definition_agrees(block):
        bad.append("integral_group_definition")
    details: dict = {}
    if block.lam_dominant:
        iw, iw_sigma = block.iw(), block.iw_sigma()
        wI_group = grp.subgroup_elements(block.I_idx)
        if len(iw) * len(wI_group) != grp.size:
            bad.append("coset_size")
        wI = block.w_I()
        for x in iw:
            for w in iw:
                if grp.bruhat_leq(x, w) != grp.bruhat_leq(grp.mul(wI, x), grp.mul(wI, w)):
                    bad.append("lemma_wI_order")
        cone_bad = [
            format_word(w.word)
            for w in iw
            if any((block.dot_mu(w) + rs.rho)[i] > 0 for i in block.I)
        ]
        if cone_bad:
            bad.append("anticone")
        if block.regular:
            lhs = {w.index for w in iw}
            rhs = {
                w.index
                for w in grp.elements
                if all((block.dot_mu(w) + rs.rho)[i] <= 0 for i in block.I)
            }
            if lhs != rhs:
                bad.append("lemma_anticone_equality")
        details["iw_size"] = len(iw)
        details["iw_sigma_size"] = len(iw_sigma)
    details["violations"] = sorted(set(bad))
    return not bad, details


def check_klv_basics(block: BlockData) -> tuple[bool, dict]:
    if not block.lam_dominant:
        return True, {"skipped": "lambda not dominant for the parabolic"}
    rs = block.root_sys
    grp = block.wgrp
    bad = []
    wb = block.wbar()
    wI = block.w_I()
    hd = dirac.dirac_cohomology_simple(rs, block.I, block.lam)
    shifted = block.lam + rs.rho
    ambient_orbit = {ambient_weyl(rs).act(w, shifted) for w in ambient_weyl(rs).elements}
    if not set(hd) <= ambient_orbit:
        bad.append("support_outside_orbit")
    if hd.get(shifted) != 1:
        bad.append("lamrho_multiplicity")
    for x in block.iw_sigma():
        if dirac.klv(block, x, x) != klpoly.ONE:
            bad.append("diag")
        p = dirac.klv(block, x, wb)
        if p(1) != 0 and not grp.bruhat_leq(grp.mul(wI, x), grp.mul(wI, wb)):
            bad.append("nonzero_implies_order")
    if not block.I:
        # first-letter contraction: stripping the leading generator of a
        # representative keeps the polynomial at exactly 1
        for w in block.iw_sigma():
            if w.length == 0:
                continue
            first = w.word[0]
            x = grp.mul(grp.generator(first), w)
            try:
                if dirac.klv(block, x, w) != klpoly.ONE:
                    bad.append("first_letter")
            except DomainError:
                bad.append("first_letter_domain")
    return not bad, {"violations": sorted(set(bad)), "hd_size": len(hd)}


def check_param_chain(block: BlockData) -> tuple[bool, dict]:
    if not block.lam_dominant:
        return True, {"skipped": "lambda not dominant for the parabolic"}
    rep = dirac.param_report(block.root_sys, block.I, block.lam)
    return rep.chain_holds(), {"flags": rep.flags()}


def check_geometric_params(block: BlockData) -> tuple[bool, dict]:
    if not (block.lam_dominant and block.regular):
        return True, {"skipped": "needs regular dominant lambda"}
    rep = dirac.param_report(block.root_sys, block.I, block.lam)
    # the linkage equality is provable for every regular weight; the hull
    # equality is the stated theorem and genuinely fails from rank 3 on
    # (see tests/test_acceptance.py for the frozen witness)
    return rep.flags()["geometric_equalities"], {
        "linkage_matches": rep.w_set == rep.linkage_set,
        "w_set": sorted(map(format_weight, rep.w_set)),
        "hull_set": sorted(map(format_weight, rep.hull_set)),
        "linkage_set": sorted(map(format_weight, rep.linkage_set)),
    }


def check_algebraic_params(block: BlockData) -> tuple[bool, dict]:
    if not (block.lam_dominant and block.regular):
        return True, {"skipped": "needs regular dominant lambda"}
    rep = dirac.param_report(block.root_sys, block.I, block.lam)
    return rep.flags()["algebraic_equalities"], {
        "w_set": sorted(map(format_weight, rep.w_set)),
        "mult_set": sorted(map(format_weight, rep.mult_set)),
    }


def check_hd_verma(block: BlockData) -> tuple[bool, dict]:
    if not block.lam_dominant:
        return True, {"skipped": "lambda not dominant for the parabolic"}
    rs = block.root_sys
    hdv = dirac.dirac_cohomology_parabolic_verma(rs, block.I, block.lam)
    ok = hdv == {block.lam + rs.rho: 1}
    details = {"singleton": ok}
    if block.regular:
        hd = dirac.dirac_cohomology_simple(rs, block.I, block.lam)
        simple = dirac.parabolic_verma_is_simple(rs, block.I, block.lam).verdict
        agree = (hd == hdv) == simple
        details["coincides_iff_simple"] = agree
        ok = ok and agree
    return ok, details


def check_parabolic_simplicity(block: BlockData) -> tuple[bool, dict]:
    if not (block.lam_dominant and block.regular):
        return True, {"skipped": "needs regular dominant lambda"}
    verdict = dirac.parabolic_verma_is_simple(block.root_sys, block.I, block.lam)
    return True, {"simple": verdict.verdict}


def check_param_injectivity(
    rs: RootSystem, I: frozenset[int], family: tuple[Weight, ...]
) -> tuple[bool, dict]:
    seen_sets: dict[frozenset[Weight], Weight] = {}
    seen_multisets: dict[tuple, Weight] = {}
    bad = []
    for lam in family:
        ws = dirac.w_set(rs, I, lam)
        if lam + rs.rho not in ws:
            bad.append(f"missing lam+rho for {format_weight(lam)}")
        if ws in seen_sets:
            bad.append(f"duplicate w_set for {format_weight(lam)}")
        seen_sets[ws] = lam
        hd = dirac.dirac_cohomology_simple(rs, I, lam)
        key = tuple(sorted((k.coords, v) for k, v in hd.items()))
        if key in seen_multisets:
            bad.append(f"duplicate decomposition for {format_weight(lam)}")
        seen_multisets[key] = lam
    return not bad, {"family_size": len(family), "violations": bad}


def check_kostant_detection(
    rs: RootSystem, I: frozenset[int], family: tuple[Weight, ...]
) -> tuple[bool, dict]:
    kostant = 0
    non_kostant = 0
    for lam in family:
        block = build_block(rs, I, lam)
        if not block.regular:
            continue
        if dirac.is_kostant(rs, I, lam):
            kostant += 1
        else:
            non_kostant += 1
    return True, {"kostant": kostant, "non_kostant": non_kostant}


def check_linkage_equivalences(
    rs: RootSystem, I: frozenset[int], lam: Weight, eta: Weight
) -> tuple[bool, dict]:
    block = build_block(rs, I, lam)
    if not (block.lam_dominant and block.regular):
        return True, {"skipped": "needs regular dominant lambda"}
    if not is_dominant_integral_for(rs, I, eta):
        return True, {"skipped": "eta not dominant for the parabolic"}
    full = eta in strong_linkage_set(rs, lam, MODE_FULL)
    statements = {
        "multiplicity": full,
        "embedding": full,
        "strongly_linked": full,
        "integrally_linked": eta in strong_linkage_set(rs, lam, MODE_INTEGRAL),
        "order_and_orbit": weight_leq(rs, eta, lam)
        and eta in {block.dot_mu(x) for x in block.wgrp.elements},
        "w_set_contained": dirac.w_set(rs, I, eta) <= dirac.w_set(rs, I, lam),
        "w_set_empty_parabolic_contained": dirac.w_set(rs, frozenset(), eta)
        <= dirac.w_set(rs, frozenset(), lam),
    }
    return len(set(statements.values())) == 1, {"statements": statements}


def check_kostant_comparison(
    rs: RootSystem, I: frozenset[int], lam: Weight, eta: Weight
) -> tuple[bool, dict]:
    block = build_block(rs, I, lam)
    if not (block.lam_dominant and block.regular):
        return True, {"skipped": "needs regular dominant lambda"}
    if not is_dominant_integral_for(rs, I, eta):
        return True, {"skipped": "eta not dominant for the parabolic"}
    if not dirac.is_kostant(rs, I, lam):
        return True, {"skipped": "lambda is not a Kostant module"}
    statements = dirac.kostant_equivalences(rs, I, lam, eta)  # raises on split
    return True, {"statements": statements}


# -- sweeping ------------------------------------------------------------------


def _coerce_seed(rs: RootSystem, seed: "str | Weight") -> Weight:
    if isinstance(seed, Weight):
        if len(seed) != rs.rank:
            raise DomainError("seed rank mismatch")
        return seed
    return parse_weight(seed, rs.rank)


def run_sweep(plan: SweepPlan, workers: int = 1) -> VerificationReport:
    selected = plan.selected_checks()
    records: list[CheckRecord] = []
    setup_records: list[CheckRecord] = []
    coverage: dict[str, dict[str, bool]] = {}
    timings: dict[str, float] = {}
    tasks: list[tuple[tuple, Callable[[], CheckRecord]]] = []

    def push(name: str, system: str, parabolic, lam, eta, fn) -> None:
        def run() -> CheckRecord:
            start = time.perf_counter()
            try:
                passed, details = fn()
            except (DomainError, InternalConsistencyError) as exc:
                passed, details = False, {"error": str(exc)}
            timings[name] = timings.get(name, 0.0) + (time.perf_counter() - start)
            return CheckRecord(
                name=name,
                system=system,
                parabolic=tuple(sorted(i + 1 for i in parabolic))
                if parabolic is not None
                else None,
                lam=format_weight(lam) if lam is not None else None,
                eta=format_weight(eta) if eta is not None else None,
                passed=passed,
                details=details,
            )

        tasks.append(((name, system), run))

    for system in plan.systems:
        # resource problems surface as a per-system record, not a global crash
        try:
            rs = build_root_system(system)
            if rs.cartan_type.weyl_order() > plan.size_cap:
                raise ResourceCapError(
                    f"group order {rs.cartan_type.weyl_order()} exceeds cap {plan.size_cap}"
                )
        except (CartanError, ResourceCapError) as exc:
            setup_records.append(
                CheckRecord(
                    name="system_setup",
                    system=system,
                    parabolic=None,
                    lam=None,
                    eta=None,
                    passed=False,
                    details={"error": str(exc)},
                )
            )
            coverage[system] = {
                "singular_seed": False,
                "nonintegral_seed": False,
                "complete": False,
            }
            continue
        for name in SYSTEM_CHECKS:
            if name in selected:
                fn = {
                    "structural_counts": lambda rs=rs: check_structural_counts(rs),
                    "kl_properties": lambda rs=rs: check_kl_properties(rs),
                    "deodhar_consistency": lambda rs=rs: check_deodhar_consistency(rs),
                }[name]
                push(name, system, None, None, None, fn)

        seeds = (
            default_seeds(rs.rank)
            if plan.seeds is None
            else tuple(_coerce_seed(rs, s) for s in plan.seeds)
        )
        coverage[system] = _coverage_flags(rs, seeds)
        orbits = [_dot_orbit(rs, seed) for seed in seeds]
        all_weights = tuple(sorted({lam for orbit in orbits for lam in orbit}))

        if "verma_simplicity" in selected:
            for lam in all_weights:
                push(
                    "verma_simplicity",
                    system,
                    None,
                    lam,
                    None,
                    lambda rs=rs, lam=lam: check_verma_simplicity(rs, lam),
                )

        parabolics = (
            _all_parabolics(rs.rank) if plan.parabolics is None else plan.parabolics
        )
        for parabolic in parabolics:
            I = frozenset(parabolic)
            family = tuple(
                lam for lam in all_weights if is_dominant_integral_for(rs, I, lam)
            )
            block_checks = {
                "block_orders": check_block_orders,
                "klv_basics": check_klv_basics,
                "param_chain": check_param_chain,
                "geometric_params_check": check_geometric_params,
                "algebraic_params_check": check_algebraic_params,
                "hd_verma": check_hd_verma,
                "parabolic_simplicity": check_parabolic_simplicity,
            }
            for lam in family:
                for name, fn in block_checks.items():
                    if name in selected:
                        push(
                            name,
                            system,
                            I,
                            lam,
                            None,
                            lambda rs=rs, I=I, lam=lam, fn=fn: fn(build_block(rs, I, lam)),
                        )
            if "param_injectivity" in selected and family:
                push(
                    "param_injectivity",
                    system,
                    I,
                    None,
                    None,
                    lambda rs=rs, I=I, family=family: check_param_injectivity(rs, I, family),
                )
            if "kostant_detection" in selected and family:
                push(
                    "kostant_detection",
                    system,
                    I,
                    None,
                    None,
                    lambda rs=rs, I=I, family=family: check_kostant_detection(rs, I, family),
                )
            for name in PAIR_CHECKS:
                if name not in selected:
                    continue
                fn = {
                    "linkage_equivalences": check_linkage_equivalences,
                    "kostant_comparison": check_kostant_comparison,
                }[name]
                for lam in family:
                    for eta in family:
                        push(
                            name,
                            system,
                            I,
                            lam,
                            eta,
                            lambda rs=rs, I=I, lam=lam, eta=eta, fn=fn: fn(rs, I, lam, eta),
                        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda t: t[1](), tasks))
    else:
        records = [run() for _, run in tasks]
    records.extend(setup_records)
    records.sort(key=lambda r: r.sort_key())
    return VerificationReport(plan=plan, records=records, coverage=coverage, timings=timings)


def _coverage_flags(rs: RootSystem, seeds: tuple[Weight, ...]) -> dict[str, bool]:
    singular = any(not build_block(rs, frozenset(), s).regular for s in seeds)
    nonintegral = any(
        any(c.denominator != 1 for c in s.coords) for s in seeds
    )
    return {
        "singular_seed": singular,
        "nonintegral_seed": nonintegral,
        "complete": singular and nonintegral,
    }


# short synonyms accepted by check_theorem
CHECK_ALIASES = {
    "chain": "param_chain",
    "injectivity": "param_injectivity",
    "geometric": "geometric_params_check",
    "algebraic": "algebraic_params_check",
    "verma_simple": "verma_simplicity",
    "para_verma_simple": "parabolic_simplicity",
}


def check_theorem(
    name: str,
    rs: RootSystem,
    I: Iterable[int] = (),
    lam: Weight | None = None,
    eta: Weight | None = None,
) -> CheckRecord:
    """Run a single named check against explicit inputs."""
    name = CHECK_ALIASES.get(name, name)
    I = frozenset(I)
    system = str(rs.cartan_type)
    try:
        if name in SYSTEM_CHECKS:
            fn = {
                "structural_counts": check_structural_counts,
                "kl_properties": check_kl_properties,
                "deodhar_consistency": check_deodhar_consistency,
            }[name]
            passed, details = fn(rs)
            I_out = None
        elif name == "verma_simplicity":
            if lam is None:
                raise DomainError("verma_simplicity needs a weight")
            passed, details = check_verma_simplicity(rs, lam)
            I_out = None
        elif name in BLOCK_CHECKS:
            if lam is None:
                raise DomainError(f"{name} needs a weight")
            fn = {
                "block_orders": check_block_orders,
                "klv_basics": check_klv_basics,
                "param_chain": check_param_chain,
                "geometric_params_check": check_geometric_params,
                "algebraic_params_check": check_algebraic_params,
                "hd_verma": check_hd_verma,
                "parabolic_simplicity": check_parabolic_simplicity,
            }[name]
            passed, details = fn(build_block(rs, I, lam))
            I_out = I
        elif name in FAMILY_CHECKS:
            family = tuple(
                w
                for seed in default_seeds(rs.rank)
                for w in _dot_orbit(rs, seed)
                if is_dominant_integral_for(rs, I, w)
            )
            family = tuple(sorted(set(family)))
            fn = {
                "param_injectivity": check_param_injectivity,
                "kostant_detection": check_kostant_detection,
            }[name]
            passed, details = fn(rs, I, family)
            I_out = I
        elif name in PAIR_CHECKS:
            if lam is None or eta is None:
                raise DomainError(f"{name} needs two weights")
            fn = {
                "linkage_equivalences": check_linkage_equivalences,
                "kostant_comparison": check_kostant_comparison,
            }[name]
            passed, details = fn(rs, I, lam, eta)
            I_out = I
        else:
            raise DomainError(f"unknown theorem check {name!r}")
    except (InternalConsistencyError,) as exc:
        passed, details, I_out = False, {"error": str(exc)}, I
    return CheckRecord(
        name=name,
        system=system,
        parabolic=tuple(sorted(i + 1 for i in I_out)) if I_out is not None else None,
        lam=format_weight(lam) if lam is not None else None,
        eta=format_weight(eta) if eta is not None else None,
        passed=passed,
        details=details,
    )
