"""Weyl groups as signed permutations, the dot-action and parabolic orbits."""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .rootdata import (
    CharacterSupport,
    DimensionMismatch,
    RootDatum,
    Weight,
    add,
    basis_vector,
    bilinear_form,
    is_antidominant,
    sub,
)

DEFAULT_BOUND = math.factorial(10)
BOUND_ENV = "KOSTANT_WEYL_BOUND"


class EnumerationBoundExceeded(RuntimeError):
    def __init__(self, required: int, bound: int):
        super().__init__(f"group of order {required} exceeds the enumeration bound {bound} "
                         f"(raise it with {BOUND_ENV})")
        self.required = required
        self.bound = bound


def default_bound() -> int:
    value = os.environ.get(BOUND_ENV)
    if value is None:
        return DEFAULT_BOUND
    try:
        bound = int(value)
    except ValueError:
        raise ValueError(f"{BOUND_ENV} must be a positive integer, got {value!r}") from None
    if bound < 1:
        raise ValueError(f"{BOUND_ENV} must be a positive integer, got {value!r}")
    return bound


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation ``e_i -> signs[i] * e_{perm[i]}``."""

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad signs {self.signs}")

    @classmethod
    def identity(cls, dim: int) -> "WeylElement":
        return cls(tuple(range(dim)), (1,) * dim)

    @property
    def dim(self) -> int:
        return len(self.perm)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """``self o other`` (apply ``other`` first)."""
        if other.dim != self.dim:
            raise DimensionMismatch("cannot compose elements of different rank")
        perm = tuple(self.perm[j] for j in other.perm)
        signs = tuple(s * self.signs[j] for s, j in zip(other.signs, other.perm))
        return WeylElement(perm, signs)

    __mul__ = compose

    def inverse(self) -> "WeylElement":
        perm = [0] * self.dim
        signs = [1] * self.dim
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return WeylElement(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.dim)) and all(s == 1 for s in self.signs)

    def one_line(self) -> str:
        """Signed one-line notation: entry i is the (1-based, signed) image of e_i."""
        return "[" + " ".join(("-" if s < 0 else "") + str(j + 1)
                              for j, s in zip(self.perm, self.signs)) + "]"

    def cycles(self) -> str:
        """Cycle notation of the underlying permutation; sign flips marked with a minus."""
        seen, parts = set(), []
        for start in range(self.dim):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(("-" if self.signs[i] < 0 else "") + str(i + 1))
                i = self.perm[i]
            if len(cyc) > 1 or cyc[0].startswith("-"):
                parts.append("(" + " ".join(cyc) + ")")
        return "".join(parts) or "()"

    def matrix(self) -> List[List[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            m[j][i] = s
        return m


def apply(w: WeylElement, lam: Weight) -> Weight:
    if len(lam) != w.dim:
        raise DimensionMismatch(f"element acts on {w.dim} coordinates, weight has {len(lam)}")
    out = [Fraction(0)] * w.dim
    for i, (j, s) in enumerate(zip(w.perm, w.signs)):
        out[j] = lam[i] if s > 0 else -lam[i]
    return tuple(out)


def dot_apply(d: RootDatum, w: WeylElement, lam: Weight) -> Weight:
    """``w . lam = w(lam + rho) - rho`` with the even ``rho``."""
    if len(lam) != d.dim:
        raise DimensionMismatch(f"{d.spec} expects {d.dim} coordinates, got {len(lam)}")
    return sub(apply(w, add(lam, d.rho_even)), d.rho_even)


def _reflect(d: RootDatum, alpha: Weight, mu: Weight) -> Weight:
    c = 2 * bilinear_form(d, mu, alpha) / bilinear_form(d, alpha, alpha)
    return tuple(x - c * a for x, a in zip(mu, alpha))


def simple_reflection(d: RootDatum, index: int) -> WeylElement:
    """``s_alpha`` for the simple root at ``index``, read off its action on the basis."""
    if not 0 <= index < d.rank:
        raise IndexError(f"{d.spec} has {d.rank} simple roots, no index {index}")
    alpha = d.simple_roots[index]
    perm, signs = [], []
    for i in range(d.dim):
        image = _reflect(d, alpha, basis_vector(d.dim, i))
        nonzero = [(k, x) for k, x in enumerate(image) if x != 0]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise ValueError(f"reflection in {alpha} is not a signed permutation")
        k, x = nonzero[0]
        perm.append(k)
        signs.append(1 if x > 0 else -1)
    return WeylElement(tuple(perm), tuple(signs))


def _components(d: RootDatum, indices: List[int]) -> List[List[int]]:
    remaining, comps = set(indices), []
    while remaining:
        stack = [min(remaining)]
        comp = []
        remaining.discard(stack[0])
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(remaining):
                if bilinear_form(d, d.simple_roots[i], d.simple_roots[j]) != 0:
                    remaining.discard(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def group_order(d: RootDatum, S: Optional[CharacterSupport] = None) -> int:
    """Order of the parabolic subgroup generated by the reflections in ``S``.

    Each Dynkin component is of type A_k (order (k+1)!) or, when it contains a
    sign-flip reflection, C_k (order 2^k k!).
    """
    indices = sorted(S.support) if S is not None else list(range(d.rank))
    order = 1
    for comp in _components(d, indices):
        k = len(comp)
        if any(-1 in simple_reflection(d, i).signs for i in comp):
            order *= 2 ** k * math.factorial(k)
        else:
            order *= math.factorial(k + 1)
    return order


def enumerate_group(d: RootDatum, S: Optional[CharacterSupport] = None,
                    bound: Optional[int] = None) -> Iterator[WeylElement]:
    """Yield every element of ``W_S`` once, in breadth-first (shortlex) order.

    Words are extended on the right by generators in increasing index order,
    so each element first appears with its shortlex-minimal reduced word.
    """
    if bound is None:
        bound = default_bound()
    order = group_order(d, S)
    if order > bound:
        raise EnumerationBoundExceeded(order, bound)
    indices = sorted(S.support) if S is not None else list(range(d.rank))
    gens = [simple_reflection(d, i) for i in indices]
    start = WeylElement.identity(d.dim)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        yield x
        for g in gens:
            y = x.compose(g)
            if y not in seen:
                seen.add(y)
                queue.append(y)


@dataclass(frozen=True)
class OrbitResult:
    representative: Weight
    witness: WeylElement
    orbit_size: int


def antidominant_representative(d: RootDatum, lam: Weight, S: Optional[CharacterSupport] = None,
                                bound: Optional[int] = None) -> OrbitResult:
    """Canonical ``W_S``-anti-dominant element of the dot-orbit of ``lam``.

    Several orbit elements can be anti-dominant when ``lam`` is not integral;
    the lexicographically smallest coordinate vector is chosen.
    """
    if S is None:
        S = d.full_support()
    best: Optional[Tuple[Weight, WeylElement]] = None
    images = set()
    for w in enumerate_group(d, S, bound):
        mu = dot_apply(d, w, lam)
        if mu in images:
            continue
        images.add(mu)
        if is_antidominant(d, mu, S) and (best is None or mu < best[0]):
            best = (mu, w)
    # every dot-orbit of a finite reflection group meets the anti-dominant chamber
    assert best is not None
    return OrbitResult(best[0], best[1], len(images))


def dot_orbit(d: RootDatum, lam: Weight, S: Optional[CharacterSupport] = None,
              bound: Optional[int] = None) -> List[Weight]:
    out, seen = [], set()
    for w in enumerate_group(d, S, bound):
        mu = dot_apply(d, w, lam)
        if mu not in seen:
            seen.add(mu)
            out.append(mu)
    return out


def same_dot_orbit(d: RootDatum, lam: Weight, mu: Weight, S: Optional[CharacterSupport] = None,
                   bound: Optional[int] = None) -> bool:
    if len(mu) != d.dim:
        raise DimensionMismatch(f"{d.spec} expects {d.dim} coordinates, got {len(mu)}")
    return any(dot_apply(d, w, lam) == mu for w in enumerate_group(d, S, bound))
