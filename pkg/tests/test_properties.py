"""Randomized property suites for the engine."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import random_homogeneous, random_module
from ghomalg.algebra import GradedRing, RingMap, apply_map, groebner_basis, normal_form
from ghomalg.approximation import embed_totally_reflexive, pushout_step
from ghomalg.complexes import Complex
from ghomalg.duality import dual_into_ring
from ghomalg.field import GF, QQ
from ghomalg.modules import FPModule, ModuleMap
from ghomalg.resolution import free_resolution

SETTINGS = dict(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
seeds = st.integers(0, 2 ** 32 - 1)

HYPER = GradedRing(QQ, ["u", "v"], ["u*v"])
NONGOR = GradedRing(GF(101), ["x", "y"], ["x^2", "x*y", "y^2"])
QXYZ = GradedRing(GF(101), ["x", "y", "z"], ["x*y - z^2"])


def _element(ring, rng, deg):
    return random_homogeneous(ring, deg, rng, density=0.6)


# -- Gröbner normal forms ------------------------------------------------------------

@settings(**SETTINGS)
@given(seeds, st.sampled_from([HYPER, NONGOR, QXYZ]))
def test_normal_form_laws(seed, R):
    rng = random.Random(seed)
    f, g = _element(R, rng, rng.randint(0, 3)), _element(R, rng, rng.randint(0, 3))
    h = _element(R, rng, f.degree if f else 1)
    NF = lambda p: normal_form(p, R)
    assert NF(NF(f)) == NF(f)
    assert NF(f + h) == NF(NF(f) + NF(h))
    assert NF(f * g) == NF(NF(f) * NF(g))


@settings(**SETTINGS)
@given(seeds)
def test_groebner_independent_of_order(seed):
    rng = random.Random(seed)
    P = GradedRing(GF(101), ["x", "y", "z"])
    gens = [random_homogeneous(P, rng.randint(1, 3), rng) for _ in range(rng.randint(1, 4))]
    gens = [g for g in gens if g]
    shuffled = gens[:]
    rng.shuffle(shuffled)
    assert set(groebner_basis(gens, ring=P)) == set(groebner_basis(shuffled, ring=P))


@settings(**SETTINGS)
@given(seeds)
def test_apply_map_is_a_ring_map(seed):
    rng = random.Random(seed)
    A = GradedRing(GF(101), ["a", "b"])
    phi = RingMap(A, QXYZ, [random_homogeneous(QXYZ, 1, rng), random_homogeneous(QXYZ, 1, rng)])
    f, g = random_homogeneous(A, 2, rng), random_homogeneous(A, 2, rng)
    assert apply_map(phi, f + g) == apply_map(phi, f) + apply_map(phi, g)
    assert apply_map(phi, f * g) == normal_form(apply_map(phi, f) * apply_map(phi, g), QXYZ)


# -- resolutions ------------------------------------------------------------------------

@settings(**SETTINGS)
@given(seeds, st.sampled_from([HYPER, NONGOR, QXYZ]))
def test_resolution_is_minimal_and_exact(seed, R):
    M = random_module(R, random.Random(seed))
    res = free_resolution(M, 3)
    assert res.check()


@settings(**SETTINGS)
@given(seeds)
def test_dual_biduality_on_free_modules(seed):
    rng = random.Random(seed)
    F = FPModule.free(HYPER, tuple(rng.randint(-2, 2) for _ in range(rng.randint(1, 3))))
    assert dual_into_ring(F).biduality_is_iso()


# -- shift and truncation ------------------------------------------------------------

def _hf(M, lo=-6, hi=10):
    return [M.hilbert_function(d) for d in range(lo, hi)]


@settings(**SETTINGS)
@given(seeds, st.integers(-3, 3))
def test_shift_homology(seed, s):
    C = free_resolution(random_module(NONGOR, random.Random(seed)), 3).complex
    D = C.shift(s)
    D.check()
    for l in C.degrees():
        assert _hf(D.homology(l + s)) == _hf(C.homology(l))
    assert C.shift(s).shift(-s).terms.keys() == C.terms.keys()


@settings(**SETTINGS)
@given(seeds, st.integers(0, 4))
def test_truncation_homology(seed, n):
    C = free_resolution(random_module(NONGOR, random.Random(seed)), 3).complex
    up, low = C.truncate_above(n), C.truncate_below(n - 1)
    for l in C.degrees():
        if l > n:
            assert _hf(up.homology(l)) == _hf(C.homology(l))
        if l < n - 1:
            assert _hf(low.homology(l)) == _hf(C.homology(l))
    # degreewise, C is the extension of its two brutal truncations
    for l in C.degrees():
        assert C.term(l).ngens == up.term(l).ngens + low.term(l).ngens


# -- the pushout step ----------------------------------------------------------------

@settings(max_examples=12, deadline=None)
@given(seeds)
def test_pushout_preserves_homology(seed):
    rng = random.Random(seed)
    R = HYPER
    M = random_module(R, rng)
    res = free_resolution(M, 2)
    P = res.complex
    # cut at degree 1 with the first syzygy, then push out along its reflexive embedding
    terms = {0: P.term(0), 1: FPModule(R, P.term(1).degrees, P.matrix(2))}
    X = Complex(R, terms, {1: ModuleMap(terms[1], terms[0], P.matrix(1))})
    G = X.term(1)
    if G.ngens == 0:
        return
    iota, _, _ = embed_totally_reflexive(G, 3, check=False)
    if not iota.is_injective():
        return
    Y, f = pushout_step(X, 1, iota)
    for l in (0, 1):
        assert _hf(X.homology(l)) == _hf(Y.homology(l))
