"""Exact root-system combinatorics and Kostant-problem verdicts for Whittaker modules."""

from .rootdata import (
    AlgebraSpec,
    CharacterSupport,
    RootDatum,
    Weight,
    bilinear_form,
    build_root_datum,
    coroot_pairing,
    in_root_lattice,
    is_antidominant,
    is_dominant_integral,
    is_integral_on,
    levi_positive_roots,
    weight,
)
from .search import (
    NegativityWitness,
    find_negativity_witness,
    paper_family_lambda,
    sl2_blocks_oracle,
    sl2_tensor_factors,
)
from .verdict import (
    ModuleKind,
    ProblemRef,
    Status,
    Verdict,
    decide,
    decide_simple_lie,
    decide_simple_super,
    decide_standard_lie,
    decide_standard_super,
    is_typical,
    is_weakly_typical,
)
from .weyl import (
    OrbitResult,
    WeylElement,
    antidominant_representative,
    apply,
    dot_apply,
    enumerate_group,
    same_dot_orbit,
    simple_reflection,
)

__version__ = "0.1.0"
