from fractions import Fraction
import random

import pytest
from hypothesis import strategies as st

from kostant.rootdata import SUPER_OSP2, TYPE_C, AlgebraSpec, build_root_datum
from kostant.weyl import enumerate_group

SPECS = [
    AlgebraSpec.type_a(2),
    AlgebraSpec.type_a(3),
    AlgebraSpec.type_a(4),
    AlgebraSpec.type_a(2, 1),
    AlgebraSpec.type_c(1),
    AlgebraSpec.type_c(2),
    AlgebraSpec.type_c(2, central=True),
    AlgebraSpec.gl(1, 1),
    AlgebraSpec.gl(2, 1),
    AlgebraSpec.osp2(2),
    AlgebraSpec.pe(2),
    AlgebraSpec.pe(3),
]

SUPER_SPECS = [s for s in SPECS if s.is_super]

_ELEMENTS = {}


def elements(d, S=None):
    key = (d.spec, None if S is None else S.support)
    if key not in _ELEMENTS:
        _ELEMENTS[key] = list(enumerate_group(d, S))
    return _ELEMENTS[key]


def random_rational(rng, bound=6, dens=(1, 2, 3, 4, 6)):
    q = rng.choice(dens)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_weight(rng, dim, bound=6, dens=(1, 2, 3, 4, 6)):
    return tuple(random_rational(rng, bound, dens) for _ in range(dim))


def fixed_vector(rng, spec, dens=(1, 2, 3, 5)):
    """A random W-fixed vector: constant on type A blocks, free on a central line."""
    def q():
        return Fraction(rng.randint(-9, 9), rng.choice(dens))

    if spec.kind in (TYPE_C, SUPER_OSP2):
        n = spec.sizes[0]
        lead = (q(),) if spec.dim == n + 1 else ()
        return lead + (Fraction(0),) * n
    out = []
    for block in spec.type_a_blocks():
        c = q()
        out += [c] * len(block)
    return tuple(out)


def random_integral_weight(rng, spec, bound=4):
    """Integer coordinates shifted by a W-fixed vector: integral on every simple root."""
    shift = fixed_vector(rng, spec)
    return tuple(Fraction(rng.randint(-bound, bound)) + s for s in shift)


@pytest.fixture
def rng():
    return random.Random(20240611)


def fractions_st(max_num=24, dens=(1, 2, 3, 4, 5, 6)):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.sampled_from(dens))


def weights_st(dim, **kw):
    return st.tuples(*[fractions_st(**kw)] * dim)


def datum(spec):
    return build_root_datum(spec)
