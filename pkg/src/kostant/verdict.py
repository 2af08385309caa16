"""Decision procedures returning cited Kostant-problem verdicts.

Every decisive verdict names the result it rests on through a stable citation
key (see ``CITATIONS``). Inputs are W_zeta-anti-dominant weights; the
:func:`decide` entry point canonicalizes arbitrary weights first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .rootdata import (
    SUPER_GL,
    SUPER_OSP2,
    SUPER_PE,
    AlgebraSpec,
    CharacterSupport,
    RootDatum,
    Weight,
    add,
    bilinear_form,
    build_root_datum,
    coroot_pairing,
    is_antidominant,
    is_integer,
    is_integral,
    is_integral_on,
)
from .search import NegativityWitness, NotAntidominantError, find_negativity_witness
from .weyl import EnumerationBoundExceeded, antidominant_representative

VERMA_POSITIVITY = "verma-positivity"
INTEGRAL_STANDARD = "integral-standard-whittaker-positivity"
INTEGRAL_SIMPLE_REDUCTION = "integral-simple-whittaker-reduction"
NONSINGULAR_INTEGRAL = "nonsingular-integral-positivity"
SL2_CLASSIFICATION = "sl2-simple-whittaker-classification"
SL2_HIGHEST_WEIGHT = "sl2-simple-highest-weight-positivity"
ABELIAN_TRIVIAL = "abelian-one-dimensional"
TRANSLATION_WITNESS = "finite-dimensional-translation-witness"
KAC_TYPICALITY = "kac-induction-typicality-criterion"
SUPER_VERMA = "super-verma-typicality"
SUPER_INTEGRAL_STANDARD = "super-integral-standard-typicality"
PE_STANDARD = "periplectic-standard-typicality"
SUPER_SIMPLE_REDUCTION = "super-simple-whittaker-reduction"
TYPICAL_ANSWERS_AGREE = "typical-simple-answers-agree"

CITATIONS = {
    VERMA_POSITIVITY: "Verma modules over a reductive Lie algebra are Kostant positive",
    INTEGRAL_STANDARD: "M(lam, zeta) is Kostant positive when lam is integral on Pi_zeta",
    INTEGRAL_SIMPLE_REDUCTION: "L(lam, zeta) answers as L(lam) when lam is integral on Pi_zeta",
    NONSINGULAR_INTEGRAL: "L(lam, zeta) is Kostant positive for integral lam and non-singular zeta",
    SL2_CLASSIFICATION: "over sl(2), L(lam, zeta) with zeta != 0 is negative exactly when "
                        "<lam, alpha^vee> = -(k+2)/2 for a positive odd k",
    SL2_HIGHEST_WEIGHT: "simple highest weight sl(2)-modules are Kostant positive",
    ABELIAN_TRIVIAL: "a rank-zero even part acts on its one-dimensional simple modules by scalars",
    TRANSLATION_WITNESS: "L(lam, zeta) is negative if some w.lam - lam is dominant integral "
                         "and outside the root lattice",
    KAC_TYPICALITY: "the super standard module is positive iff the even one is and lam is typical",
    SUPER_VERMA: "a super Verma module is positive iff its highest weight is typical",
    SUPER_INTEGRAL_STANDARD: "for lam integral on Pi_zeta the super standard module is "
                             "positive iff lam is typical",
    PE_STANDARD: "over pe(n), for lam integral on Pi_zeta the standard module is positive "
                 "iff lam is typical",
    SUPER_SIMPLE_REDUCTION: "for lam integral on Pi_zeta the super simple Whittaker module "
                            "answers as the super simple highest weight module",
    TYPICAL_ANSWERS_AGREE: "for typical lam integral on Pi_zeta, the super simple Whittaker, "
                           "super simple highest weight and even simple highest weight "
                           "modules share one answer",
}


class Status(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    REDUCES_TO = "reduces_to"
    UNKNOWN = "unknown"


class ModuleKind(str, enum.Enum):
    STANDARD_WHITTAKER = "standard_whittaker"
    SIMPLE_WHITTAKER = "simple_whittaker"
    VERMA = "verma"
    SIMPLE_HIGHEST_WEIGHT = "simple_highest_weight"


@dataclass(frozen=True)
class ProblemRef:
    """Parameters of a Kostant problem; ``lam`` is kept canonical."""

    module_kind: ModuleKind
    over: AlgebraSpec
    lam: Weight
    zeta: CharacterSupport

    @classmethod
    def canonical(cls, module_kind: ModuleKind, over: AlgebraSpec, lam: Weight,
                  zeta: CharacterSupport) -> "ProblemRef":
        d = build_root_datum(over)
        rep = antidominant_representative(d, lam, zeta).representative
        return cls(module_kind, over, rep, zeta)


@dataclass(frozen=True)
class Verdict:
    status: Status
    citation: str = ""
    notes: str = ""
    target: Optional[ProblemRef] = None
    witness: Optional[NegativityWitness] = field(default=None, compare=False)

    def __post_init__(self):
        if self.status != Status.UNKNOWN and not self.citation:
            raise ValueError("decisive and reducing verdicts need a citation")
        if (self.status == Status.REDUCES_TO) != (self.target is not None):
            raise ValueError("a target is required exactly for reduces_to verdicts")

    @property
    def decisive(self) -> bool:
        return self.status in (Status.POSITIVE, Status.NEGATIVE)


def _positive(citation, notes=""):
    return Verdict(Status.POSITIVE, citation, notes)


def _negative(citation, notes="", witness=None):
    return Verdict(Status.NEGATIVE, citation, notes, witness=witness)


def _unknown(notes):
    return Verdict(Status.UNKNOWN, "", notes)


def _require_antidominant(d: RootDatum, lam: Weight, zeta: CharacterSupport) -> None:
    if not is_antidominant(d, lam, zeta):
        raise NotAntidominantError(f"{lam} is not W_zeta-anti-dominant for {d.spec}; "
                                   "canonicalize it first")


def _require_super(spec: AlgebraSpec) -> None:
    if not spec.is_super:
        raise ValueError(f"{spec} is not a Lie superalgebra")


# --- typicality -------------------------------------------------------------

def is_typical(spec: AlgebraSpec, lam: Weight) -> bool:
    """Typicality of ``lam`` for a super spec.

    gl(m|n), osp(2|2n): ``(lam + rho_super, alpha) != 0`` on positive odd roots.
    pe(n): ``(lam + rho, alpha) != 1`` on all even roots.
    """
    _require_super(spec)
    d = build_root_datum(spec)
    if spec.kind == SUPER_PE:
        shifted = add(lam, d.rho_even)
        return all(bilinear_form(d, shifted, a) != 1 for a in d.even_roots)
    shifted = add(lam, d.rho_super)
    return all(bilinear_form(d, shifted, a) != 0 for a in d.positive_odd_roots)


def is_weakly_typical(spec: AlgebraSpec, lam: Weight) -> bool:
    if spec.kind != SUPER_PE:
        raise ValueError("weak typicality is defined for pe(n) only")
    d = build_root_datum(spec)
    shifted = add(lam, d.rho_even)
    return all(bilinear_form(d, shifted, a) != 1 for a in d.positive_even_roots)


# --- reductive algebras -----------------------------------------------------

def sl2_closed_form_negative(pairing: Fraction) -> bool:
    """``<lam, alpha^vee> = -(k+2)/2`` for some positive odd integer ``k``."""
    k = -2 * Fraction(pairing) - 2
    return is_integer(k) and k > 0 and k % 2 == 1


def _rank_one_verdict(d: RootDatum, lam: Weight, zeta: CharacterSupport) -> Verdict:
    c = coroot_pairing(d, lam, d.simple_roots[0])
    negative = sl2_closed_form_negative(c)
    witness = find_negativity_witness(d, lam, zeta)
    # in rank one the translation witness exists exactly on the closed-form locus
    assert negative == (witness is not None), (lam, c)
    if negative:
        return _negative(SL2_CLASSIFICATION, f"<lam, alpha^vee> = {c}", witness)
    return _positive(SL2_CLASSIFICATION, f"<lam, alpha^vee> = {c}")


def decide_standard_lie(d: RootDatum, lam: Weight, zeta: CharacterSupport) -> Verdict:
    """Kostant's problem for the standard Whittaker module ``M(lam, zeta)``."""
    _require_antidominant(d, lam, zeta)
    if zeta.is_zero:
        return _positive(VERMA_POSITIVITY, "zeta = 0: M(lam, 0) is the Verma module")
    if is_integral_on(d, lam, zeta):
        return _positive(INTEGRAL_STANDARD)
    if zeta.is_nonsingular:
        # a non-singular standard Whittaker module is simple
        simple = decide_simple_lie(d, lam, zeta)
        if simple.decisive:
            notes = "non-singular zeta: M(lam, zeta) = L(lam, zeta)"
            if simple.notes:
                notes += "; " + simple.notes
            return Verdict(simple.status, simple.citation, notes, witness=simple.witness)
    return _unknown("lam is not integral on Pi_zeta; no criterion applies")


def decide_simple_lie(d: RootDatum, lam: Weight, zeta: CharacterSupport,
                      search: bool = True) -> Verdict:
    """Kostant's problem for the simple Whittaker module ``L(lam, zeta)``.

    Checks, in order: zeta = 0; integral lam with non-singular zeta; the rank
    one closed form; integrality on Pi_zeta (reduction to ``L(lam)``); a
    translation witness for non-singular zeta.
    """
    _require_antidominant(d, lam, zeta)
    if zeta.is_zero and d.rank >= 1:
        if d.rank == 1:
            return _positive(SL2_HIGHEST_WEIGHT)
        target = ProblemRef.canonical(ModuleKind.SIMPLE_HIGHEST_WEIGHT, d.spec, lam, zeta)
        return Verdict(Status.REDUCES_TO, INTEGRAL_SIMPLE_REDUCTION,
                       "zeta = 0: this is the simple highest weight problem", target)
    if zeta.is_nonsingular and is_integral(d, lam):
        if d.rank == 0:
            return _positive(ABELIAN_TRIVIAL)
        if d.rank == 1:
            assert _rank_one_verdict(d, lam, zeta).status == Status.POSITIVE
        return _positive(NONSINGULAR_INTEGRAL)
    if d.rank == 1:
        return _rank_one_verdict(d, lam, zeta)
    if is_integral_on(d, lam, zeta):
        target = ProblemRef.canonical(ModuleKind.SIMPLE_HIGHEST_WEIGHT, d.spec, lam,
                                      d.zero_support())
        return Verdict(Status.REDUCES_TO, INTEGRAL_SIMPLE_REDUCTION, "", target)
    if zeta.is_nonsingular and search:
        try:
            witness = find_negativity_witness(d, lam, zeta)
        except EnumerationBoundExceeded as exc:
            return _unknown(f"witness search skipped: {exc}")
        if witness is not None:
            return _negative(TRANSLATION_WITNESS, f"w = {witness.w.one_line()}", witness)
        return _unknown("no translation witness in W; the witness criterion is one-directional")
    return _unknown("lam is not integral on Pi_zeta and zeta is singular; no criterion applies")


# --- superalgebras ----------------------------------------------------------

def decide_standard_super(spec: AlgebraSpec, lam: Weight, zeta: CharacterSupport) -> Verdict:
    """Kostant's problem for the super standard Whittaker module."""
    _require_super(spec)
    d = build_root_datum(spec)
    _require_antidominant(d, lam, zeta)
    typical = is_typical(spec, lam)
    integral = is_integral_on(d, lam, zeta)
    if spec.kind == SUPER_PE:
        if not integral:
            return _unknown("pe(n) without integrality on Pi_zeta is not decided")
        cite = PE_STANDARD
        if typical:
            return _positive(cite, "lam is typical")
        return _negative(cite, "lam is atypical")

    if zeta.is_zero:
        cite = SUPER_VERMA
    elif integral:
        cite = SUPER_INTEGRAL_STANDARD
    else:
        cite = KAC_TYPICALITY
    if not typical:
        return _negative(cite, "lam is atypical")
    even_spec = spec.even_part()
    even = decide_standard_lie(build_root_datum(even_spec), lam, zeta)
    if even.status == Status.POSITIVE:
        return _positive(cite, "lam is typical; the even standard module is positive")
    if even.status == Status.NEGATIVE:
        return _negative(KAC_TYPICALITY, "the even standard module is negative", even.witness)
    target = ProblemRef.canonical(ModuleKind.STANDARD_WHITTAKER, even_spec, lam, zeta)
    return Verdict(Status.REDUCES_TO, KAC_TYPICALITY, "lam is typical", target)


def decide_simple_super(spec: AlgebraSpec, lam: Weight, zeta: CharacterSupport) -> Verdict:
    """Kostant's problem for the super simple Whittaker module."""
    _require_super(spec)
    d = build_root_datum(spec)
    _require_antidominant(d, lam, zeta)
    if not is_integral_on(d, lam, zeta):
        return _unknown("lam is not integral on Pi_zeta; no super criterion applies")
    if is_typical(spec, lam):
        even_spec = spec.even_part()
        even_d = build_root_datum(even_spec)
        inner = decide_simple_lie(even_d, lam, even_d.zero_support())
        if inner.decisive:
            return Verdict(inner.status, TYPICAL_ANSWERS_AGREE,
                           f"even simple highest weight module: {inner.citation}")
        target = ProblemRef.canonical(ModuleKind.SIMPLE_HIGHEST_WEIGHT, even_spec, lam,
                                      even_d.zero_support())
        return Verdict(Status.REDUCES_TO, TYPICAL_ANSWERS_AGREE, "lam is typical", target)
    target = ProblemRef.canonical(ModuleKind.SIMPLE_HIGHEST_WEIGHT, spec, lam, d.zero_support())
    return Verdict(Status.REDUCES_TO, SUPER_SIMPLE_REDUCTION, "lam is atypical", target)


# --- dispatch ---------------------------------------------------------------

def decide(spec: AlgebraSpec, module_kind: ModuleKind, lam: Weight,
           zeta: Optional[CharacterSupport] = None) -> Tuple[Weight, Verdict]:
    """Canonicalize ``lam`` under ``W_zeta`` and run the matching procedure.

    Returns the canonical weight together with the verdict, so that the answer
    only depends on the isomorphism class of the module.
    """
    module_kind = ModuleKind(module_kind)
    d = build_root_datum(spec)
    if zeta is None or module_kind == ModuleKind.VERMA:
        if zeta is not None and not zeta.is_zero:
            raise ValueError("a Verma module has zeta = 0")
        zeta = d.zero_support()
    if zeta.rank != d.rank:
        raise ValueError(f"character support of rank {zeta.rank} does not match {spec}")
    if module_kind == ModuleKind.SIMPLE_HIGHEST_WEIGHT:
        raise ValueError("simple highest weight modules are reduction targets, not queries")
    canonical = antidominant_representative(d, lam, zeta).representative
    if spec.is_super:
        if module_kind == ModuleKind.SIMPLE_WHITTAKER:
            return canonical, decide_simple_super(spec, canonical, zeta)
        return canonical, decide_standard_super(spec, canonical, zeta)
    if module_kind == ModuleKind.SIMPLE_WHITTAKER:
        return canonical, decide_simple_lie(d, canonical, zeta)
    return canonical, decide_standard_lie(d, canonical, zeta)
