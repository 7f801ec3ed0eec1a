"""Dirac cohomology of simple highest-weight modules in parabolic category O,
computed through exact Kazhdan-Lusztig combinatorics, plus an exhaustive
desk-scale verifier for the parameterization and simplicity statements."""

from ._kernel import backend_name
from .rootsys import (
    CartanError,
    CartanType,
    DomainError,
    InternalConsistencyError,
    ResourceCapError,
    RootSystem,
    Weight,
    build_root_system,
    format_weight,
    is_dominant_integral_for,
    pairing,
    parabolic_data,
    parse_weight,
)
from .weylgroup import CoxeterSystem, WeylElem, format_word, parse_word
from .klpoly import (
    IntPoly,
    KLCache,
    TYPE_NEG1,
    TYPE_Q,
    get_cache,
    kl,
    mu_coeff,
    mu_tilde,
    parabolic_p,
    parabolic_r,
)
from .blocks import (
    BlockData,
    antidominant_rep,
    build_block,
    integral_subsystem,
    integral_weyl_group,
    is_regular,
    singular_simples,
    strong_linkage_set,
    weight_leq,
)
from .dirac import (
    ParamReport,
    algebraic_params,
    dirac_cohomology_parabolic_verma,
    dirac_cohomology_simple,
    geometric_params,
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
from .verify import SweepPlan, VerificationReport, check_theorem, run_sweep

__version__ = "0.1.0"
