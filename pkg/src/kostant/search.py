"""Constructive negativity witnesses and the rank-one linkage oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional

from .rootdata import (
    AlgebraSpec,
    CharacterSupport,
    RootDatum,
    Weight,
    build_root_datum,
    in_root_lattice,
    is_antidominant,
    is_dominant_integral,
    is_integer,
    sub,
)
from .weyl import WeylElement, dot_apply, enumerate_group

DEFAULT_SL2_SEARCH_BOUND = 64


class SingularCharacterError(ValueError):
    pass


class NotAntidominantError(ValueError):
    pass


@dataclass(frozen=True)
class NegativityWitness:
    """A Weyl element whose dot-shift ``mu = w.lam - lam`` certifies negativity.

    ``mu`` must be the highest weight of a finite-dimensional module and lie
    outside the root lattice.
    """

    w: WeylElement
    mu: Weight
    dominant_integral: bool
    outside_root_lattice: bool


def _check_search_preconditions(d: RootDatum, lam: Weight, zeta: CharacterSupport) -> None:
    if not zeta.is_nonsingular:
        raise SingularCharacterError("negativity search needs a non-singular character")
    if not is_antidominant(d, lam, d.full_support()):
        raise NotAntidominantError(f"{lam} is not anti-dominant for {d.spec}")


def iter_negativity_witnesses(d: RootDatum, lam: Weight, zeta: CharacterSupport,
                              bound: Optional[int] = None) -> Iterator[NegativityWitness]:
    """All witnesses, in the breadth-first enumeration order of ``W``."""
    _check_search_preconditions(d, lam, zeta)
    for w in enumerate_group(d, d.full_support(), bound):
        mu = sub(dot_apply(d, w, lam), lam)
        if is_dominant_integral(d, mu) and not in_root_lattice(d, mu):
            yield NegativityWitness(w, mu, True, True)


def find_negativity_witness(d: RootDatum, lam: Weight, zeta: CharacterSupport,
                            bound: Optional[int] = None) -> Optional[NegativityWitness]:
    """First witness in enumeration order, or None.

    None means only that the search failed; it is not a positivity proof.
    """
    return next(iter_negativity_witnesses(d, lam, zeta, bound), None)


def paper_family_lambda(n: int) -> Weight:
    """The ``gl(n)`` weight with ``lam + rho = sum_k (k-1)/n e_k``.

    Every simple coroot pairs with ``lam + rho`` to ``-1/n``, so ``lam`` is
    anti-dominant and non-integral.
    """
    if n < 2:
        raise ValueError("the family starts at n = 2")
    d = build_root_datum(AlgebraSpec.type_a(n))
    shifted = tuple(Fraction(k, n) for k in range(n))
    return sub(shifted, d.rho_even)


def sl2_tensor_factors(lam: Fraction, n: int) -> List[Fraction]:
    """Highest weights of the composition factors of ``L(n) (x) L(lam)`` over sl(2).

    Weights are identified with their pairing against the simple coroot. Only
    valid for non-integral ``lam``.
    """
    lam = Fraction(lam)
    if is_integer(lam):
        raise ValueError(f"integral weight {lam}: factors are not a simple progression")
    if n < 0:
        raise ValueError("n must be non-negative")
    return [lam + n - 2 * j for j in range(n + 1)]


@dataclass(frozen=True)
class Sl2OracleResult:
    negative: bool
    m: Optional[int] = None


def sl2_blocks_oracle(lam: Fraction, search_bound: int = DEFAULT_SL2_SEARCH_BOUND) -> Sl2OracleResult:
    """Decide the rank-one simple Whittaker problem by scanning translations.

    For ``m = 1 .. search_bound`` the top factor ``L(lam + m)`` of
    ``L(m) (x) L(lam)`` is checked against the dot-orbit ``{lam, -lam - 2}``:
    if it shares the central character of ``L(lam)`` but differs from ``lam``
    by an odd integer, the translate leaves the block of ``lam`` and ``m`` is a
    negativity witness.
    """
    lam = Fraction(lam)
    if is_integer(lam):
        raise ValueError(f"integral weight {lam} belongs to the integral branch")
    # a non-integral rank-one weight is automatically anti-dominant
    if search_bound < 1:
        raise ValueError("search_bound must be positive")
    reflected = -lam - 2
    for m in range(1, search_bound + 1):
        top = sl2_tensor_factors(lam, m)[0]
        if top == reflected and (top - lam) % 2 == 1:
            return Sl2OracleResult(True, m)
    return Sl2OracleResult(False)
