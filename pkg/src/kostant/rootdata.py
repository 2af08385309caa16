"""Algebras, root data and weight predicates.

Weights are tuples of :class:`fractions.Fraction` in the coordinate basis of
the Cartan dual: ``(e_1, ..., e_m, d_1, ..., d_n)`` for ``gl(m|n)``,
``(e, d_1, ..., d_n)`` for ``osp(2|2n)`` (and for ``sp(2n)`` with a central
line), and ``(e_1, ..., e_n)`` for ``pe(n)`` and the type A reductive algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

Weight = Tuple[Fraction, ...]

TYPE_A = "A"
TYPE_C = "C"
SUPER_GL = "gl"
SUPER_OSP2 = "osp2"
SUPER_PE = "pe"

_KINDS = (TYPE_A, TYPE_C, SUPER_GL, SUPER_OSP2, SUPER_PE)


class DimensionMismatch(ValueError):
    pass


def weight(*coords) -> Weight:
    """Build an exact weight from ints, Fractions or ``"p/q"`` strings."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    out = []
    for c in coords:
        if isinstance(c, float):
            raise TypeError("floats are not exact; pass a Fraction or 'p/q' string")
        out.append(Fraction(c))
    return tuple(out)


def zero_weight(dim: int) -> Weight:
    return (Fraction(0),) * dim


def add(mu: Weight, nu: Weight) -> Weight:
    _check_dims(mu, nu)
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Weight, nu: Weight) -> Weight:
    _check_dims(mu, nu)
    return tuple(a - b for a, b in zip(mu, nu))


def scale(c, mu: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * a for a in mu)


def basis_vector(dim: int, i: int) -> Weight:
    return tuple(Fraction(int(k == i)) for k in range(dim))


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def _check_dims(mu: Sequence, nu: Sequence) -> None:
    if len(mu) != len(nu):
        raise DimensionMismatch(f"dimension mismatch: {len(mu)} vs {len(nu)}")


@dataclass(frozen=True)
class AlgebraSpec:
    """Descriptor of one of the supported algebras.

    ``sizes`` holds the block sizes for type A products, ``(n,)`` for
    ``sp(2n)``/``osp(2|2n)``/``pe(n)`` and ``(m, n)`` for ``gl(m|n)``.
    ``central`` only applies to type C and adds a central ``e`` coordinate in
    front of the ``d`` coordinates.
    """

    kind: str
    sizes: Tuple[int, ...]
    central: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if not self.sizes:
            raise ValueError("at least one block size is required")
        if any((not isinstance(s, int)) or s < 1 for s in self.sizes):
            raise ValueError(f"block sizes must be positive integers, got {self.sizes}")
        if self.kind == SUPER_GL and len(self.sizes) != 2:
            raise ValueError("gl(m|n) needs exactly two sizes")
        if self.kind in (TYPE_C, SUPER_OSP2, SUPER_PE) and len(self.sizes) != 1:
            raise ValueError(f"{self.kind} takes a single size")
        if self.central and self.kind != TYPE_C:
            raise ValueError("only type C carries an optional central line")

    @classmethod
    def type_a(cls, *blocks: int) -> "AlgebraSpec":
        return cls(TYPE_A, tuple(blocks))

    @classmethod
    def type_c(cls, n: int, central: bool = False) -> "AlgebraSpec":
        return cls(TYPE_C, (n,), central)

    @classmethod
    def gl(cls, m: int, n: int) -> "AlgebraSpec":
        return cls(SUPER_GL, (m, n))

    @classmethod
    def osp2(cls, n: int) -> "AlgebraSpec":
        return cls(SUPER_OSP2, (n,))

    @classmethod
    def pe(cls, n: int) -> "AlgebraSpec":
        return cls(SUPER_PE, (n,))

    @property
    def is_super(self) -> bool:
        return self.kind in (SUPER_GL, SUPER_OSP2, SUPER_PE)

    @property
    def dim(self) -> int:
        if self.kind in (TYPE_A, SUPER_GL):
            return sum(self.sizes)
        if self.kind == SUPER_OSP2 or (self.kind == TYPE_C and self.central):
            return self.sizes[0] + 1
        return self.sizes[0]

    def even_part(self) -> "AlgebraSpec":
        """The reductive even subalgebra (identity on reductive specs)."""
        if self.kind == SUPER_GL:
            return AlgebraSpec.type_a(*self.sizes)
        if self.kind == SUPER_OSP2:
            return AlgebraSpec.type_c(self.sizes[0], central=True)
        if self.kind == SUPER_PE:
            return AlgebraSpec.type_a(self.sizes[0])
        return self

    def type_a_blocks(self) -> Optional[List[range]]:
        """Coordinate ranges of the type A blocks, or None if not all type A."""
        if self.kind in (TYPE_A, SUPER_GL):
            blocks, start = [], 0
            for s in self.sizes:
                blocks.append(range(start, start + s))
                start += s
            return blocks
        if self.kind == SUPER_PE:
            return [range(self.sizes[0])]
        return None

    def label(self) -> str:
        """Canonical command-line spelling, e.g. ``a:2+1`` or ``gl:2,1``."""
        if self.kind == TYPE_A:
            return "a:" + "+".join(str(s) for s in self.sizes)
        if self.kind == TYPE_C:
            return ("csp:" if self.central else "sp:") + str(self.sizes[0])
        if self.kind == SUPER_GL:
            return "gl:%d,%d" % self.sizes
        return f"{self.kind}:{self.sizes[0]}"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class CharacterSupport:
    """The set of simple roots on which a character of ``n_+`` is nonzero.

    Indices are 0-based positions in ``RootDatum.simple_roots``.
    """

    support: FrozenSet[int]
    rank: int

    def __init__(self, support: Iterable[int], rank: int):
        support = frozenset(support)
        bad = [i for i in support if not 0 <= i < rank]
        if bad:
            raise ValueError(f"simple root indices {sorted(bad)} out of range for rank {rank}")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def zero(cls, rank: int) -> "CharacterSupport":
        return cls((), rank)

    @classmethod
    def nonsingular(cls, rank: int) -> "CharacterSupport":
        return cls(range(rank), rank)

    @property
    def is_zero(self) -> bool:
        return not self.support

    @property
    def is_nonsingular(self) -> bool:
        return len(self.support) == self.rank

    def sorted(self) -> List[int]:
        return sorted(self.support)


@dataclass(frozen=True)
class RootDatum:
    spec: AlgebraSpec
    simple_roots: Tuple[Weight, ...]
    positive_even_roots: Tuple[Weight, ...]
    positive_odd_roots: Tuple[Weight, ...]
    negative_odd_roots: Tuple[Weight, ...]
    signature: Tuple[int, ...]
    rho_even: Weight
    rho_super: Optional[Weight]

    @property
    def dim(self) -> int:
        return len(self.signature)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def even_roots(self) -> Tuple[Weight, ...]:
        return self.positive_even_roots + tuple(scale(-1, a) for a in self.positive_even_roots)

    @cached_property
    def even_root_set(self) -> FrozenSet[Weight]:
        return frozenset(self.even_roots)

    @cached_property
    def _levi_cache(self) -> dict:
        return {}

    def zero_support(self) -> CharacterSupport:
        return CharacterSupport.zero(self.rank)

    def full_support(self) -> CharacterSupport:
        return CharacterSupport.nonsingular(self.rank)

    def support(self, indices: Iterable[int]) -> CharacterSupport:
        return CharacterSupport(indices, self.rank)

    def weight(self, *coords) -> Weight:
        w = weight(*coords)
        if len(w) != self.dim:
            raise DimensionMismatch(f"{self.spec} weights have {self.dim} coordinates, got {len(w)}")
        return w


def _diff(dim: int, i: int, j: int) -> Weight:
    return tuple(Fraction((k == i) - (k == j)) for k in range(dim))


def _plus(dim: int, i: int, j: int) -> Weight:
    return tuple(Fraction((k == i) + (k == j)) for k in range(dim))


def _type_a_roots(dim, blocks):
    simple, positive = [], []
    for block in blocks:
        idx = list(block)
        simple += [_diff(dim, a, b) for a, b in zip(idx, idx[1:])]
        positive += [_diff(dim, a, b) for ai, a in enumerate(idx) for b in idx[ai + 1:]]
    return simple, positive


def _type_c_roots(dim, offset, n):
    idx = list(range(offset, offset + n))
    simple = [_diff(dim, a, b) for a, b in zip(idx, idx[1:])] + [_plus(dim, idx[-1], idx[-1])]
    positive = []
    for ai, a in enumerate(idx):
        for b in idx[ai + 1:]:
            positive += [_diff(dim, a, b), _plus(dim, a, b)]
    positive += [_plus(dim, a, a) for a in idx]
    return simple, positive


def _half_sum(dim: int, roots: Sequence[Weight]) -> Weight:
    total = [Fraction(0)] * dim
    for r in roots:
        for k, x in enumerate(r):
            total[k] += x
    return tuple(x / 2 for x in total)


@lru_cache(maxsize=None)
def build_root_datum(spec: AlgebraSpec) -> RootDatum:
    """Root datum with the distinguished positive systems.

    Roots are listed in a fixed order: type A pairs ``(a, b)`` with ``a < b``
    lexicographically, type C ``d_i - d_j, d_i + d_j`` per pair followed by
    the long roots ``2 d_p``.
    """
    dim = spec.dim
    odd_pos: List[Weight] = []
    odd_neg: List[Weight] = []
    rho_super = None

    if spec.kind == TYPE_A:
        signature = (1,) * dim
        simple, even_pos = _type_a_roots(dim, spec.type_a_blocks())
    elif spec.kind == TYPE_C:
        n = spec.sizes[0]
        offset = 1 if spec.central else 0
        signature = (1,) * offset + (-1,) * n
        simple, even_pos = _type_c_roots(dim, offset, n)
    elif spec.kind == SUPER_GL:
        m, n = spec.sizes
        signature = (1,) * m + (-1,) * n
        simple, even_pos = _type_a_roots(dim, spec.type_a_blocks())
        odd_pos = [_diff(dim, a, b) for a in range(m) for b in range(m, m + n)]
        odd_neg = [scale(-1, r) for r in odd_pos]
    elif spec.kind == SUPER_OSP2:
        n = spec.sizes[0]
        signature = (1,) + (-1,) * n
        simple, even_pos = _type_c_roots(dim, 1, n)
        for p in range(1, n + 1):
            odd_pos += [_plus(dim, 0, p), _diff(dim, 0, p)]
        odd_neg = [scale(-1, r) for r in odd_pos]
    else:  # SUPER_PE
        n = spec.sizes[0]
        signature = (1,) * n
        simple, even_pos = _type_a_roots(dim, [range(n)])
        odd_pos = [_plus(dim, i, j) for i in range(n) for j in range(i, n)]
        odd_neg = [scale(-1, _plus(dim, i, j)) for i in range(n) for j in range(i + 1, n)]

    rho_even = _half_sum(dim, even_pos)
    if spec.kind in (SUPER_GL, SUPER_OSP2):
        rho_super = sub(rho_even, _half_sum(dim, odd_pos))

    return RootDatum(
        spec=spec,
        simple_roots=tuple(simple),
        positive_even_roots=tuple(even_pos),
        positive_odd_roots=tuple(odd_pos),
        negative_odd_roots=tuple(odd_neg),
        signature=signature,
        rho_even=rho_even,
        rho_super=rho_super,
    )


def bilinear_form(d: RootDatum, mu: Weight, nu: Weight) -> Fraction:
    if len(mu) != d.dim or len(nu) != d.dim:
        raise DimensionMismatch(f"{d.spec} expects {d.dim} coordinates, got {len(mu)} and {len(nu)}")
    return sum((s * a * b for s, a, b in zip(d.signature, mu, nu)), Fraction(0))


def coroot_pairing(d: RootDatum, lam: Weight, alpha: Weight) -> Fraction:
    """``<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)`` for an even root."""
    alpha = tuple(alpha)
    if alpha not in d.even_root_set:
        raise ValueError(f"{alpha} is not an even root of {d.spec}")
    norm = bilinear_form(d, alpha, alpha)
    if norm == 0:
        raise ValueError(f"isotropic root {alpha} has no coroot")
    return 2 * bilinear_form(d, lam, alpha) / norm


def simple_pairings(d: RootDatum, lam: Weight) -> Tuple[Fraction, ...]:
    return tuple(coroot_pairing(d, lam, a) for a in d.simple_roots)


def is_integral_on(d: RootDatum, lam: Weight, S: CharacterSupport) -> bool:
    return all(is_integer(coroot_pairing(d, lam, d.simple_roots[i])) for i in S.support)


def is_integral(d: RootDatum, lam: Weight) -> bool:
    return is_integral_on(d, lam, d.full_support())


def _solve_exact(columns: Sequence[Weight], target: Weight) -> Optional[List[Fraction]]:
    """Coefficients c with sum c_j columns[j] == target, or None.

    Columns must be linearly independent (simple roots are).
    """
    rows, cols = len(target), len(columns)
    M = [[columns[j][i] for j in range(cols)] + [target[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][cols] != 0 for i in range(r, rows)):
        return None
    out = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        out[c] = M[i][cols]
    return out


def simple_root_coordinates(d: RootDatum, mu: Weight) -> Optional[List[Fraction]]:
    """Expansion of ``mu`` in the simple even roots, or None if outside their span."""
    if len(mu) != d.dim:
        raise DimensionMismatch(f"{d.spec} expects {d.dim} coordinates, got {len(mu)}")
    if not d.simple_roots:
        return [] if all(x == 0 for x in mu) else None
    return _solve_exact(d.simple_roots, mu)


def levi_positive_roots(d: RootDatum, S: CharacterSupport) -> Tuple[Weight, ...]:
    """Positive even roots in the span of the simple roots indexed by ``S``."""
    cached = d._levi_cache.get(S.support)
    if cached is not None:
        return cached
    out = []
    for root in d.positive_even_roots:
        coeffs = simple_root_coordinates(d, root)
        if all(c == 0 or i in S.support for i, c in enumerate(coeffs)):
            out.append(root)
    d._levi_cache[S.support] = tuple(out)
    return d._levi_cache[S.support]


def is_antidominant(d: RootDatum, lam: Weight, S: Optional[CharacterSupport] = None) -> bool:
    """``<lam + rho, alpha^vee>`` is never a positive integer on the Levi of ``S``."""
    if S is None:
        S = d.full_support()
    shifted = add(lam, d.rho_even)
    for root in levi_positive_roots(d, S):
        c = coroot_pairing(d, shifted, root)
        if is_integer(c) and c > 0:
            return False
    return True


def is_dominant_integral(d: RootDatum, mu: Weight) -> bool:
    return all(is_integer(c) and c >= 0 for c in simple_pairings(d, mu))


def in_root_lattice(d: RootDatum, mu: Weight) -> bool:
    coeffs = simple_root_coordinates(d, mu)
    return coeffs is not None and all(is_integer(c) for c in coeffs)


def format_rational(x: Fraction) -> str:
    return str(x)


def format_weight(mu: Weight) -> str:
    return "(" + ", ".join(str(x) for x in mu) + ")"
