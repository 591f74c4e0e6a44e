import pytest

from ghomalg.approximation import (ApproximationError, approximation_triangle, build_reflexive_tail,
                                   embed_totally_reflexive, pushout_step, rotate_triangle)
from ghomalg.complexes import Complex
from ghomalg.invariants import gdim, is_totally_reflexive
from ghomalg.modules import FPModule, Matrix, ModuleMap


def _hf(M, lo=-3, hi=6):
    return [M.hilbert_function(d) for d in range(lo, hi)]


# -- pushout step --------------------------------------------------------------

def test_pushout_identity(hyper):
    R = hyper
    k = FPModule.residue_field(R)
    F = FPModule.free(R, (0,))
    X = Complex(R, {1: F, 0: k}, {1: ModuleMap(F, k, Matrix.identity(R, (0,)))})
    Y, f = pushout_step(X, 1, F.identity())
    assert Y.term(1).degrees == X.term(1).degrees
    assert _hf(Y.term(0)) == _hf(X.term(0))
    assert f.is_quasi_isomorphism()


def test_pushout_onto_socle(cubic):
    R = cubic
    k = FPModule.residue_field(R)
    X = Complex(R, {3: k})
    iota = ModuleMap(k, FPModule.free(R, (-2,)), Matrix.from_rows(R, [["x^2"]], (-2,)))
    Y, f = pushout_step(X, 3, iota)
    assert Y.term(3).is_free() and Y.term(2).dim() == 2
    assert Y.homology(3).dim() == 1 and Y.homology_is_zero(2)


def test_pushout_split_inclusion(hyper):
    R = hyper
    Rf = FPModule.free(R, (0,))
    R2 = FPModule.free(R, (0, 0))
    k = FPModule.residue_field(R)
    X = Complex(R, {1: Rf, 0: k}, {1: ModuleMap(Rf, k, Matrix.identity(R, (0,)))})
    iota = ModuleMap(Rf, R2, Matrix.from_rows(R, [[1], [0]]))
    Y, f = pushout_step(X, 1, iota)
    coker, _ = f.at(0).cokernel()
    assert coker.minimal().is_free() and coker.minimal().ngens == 1
    assert all(f.on_homology(l).is_isomorphism() for l in (0, 1))


def test_pushout_rejects_non_injective(hyper):
    R = hyper
    k = FPModule.residue_field(R)
    X = Complex(R, {1: FPModule.free(R, (0,))})
    with pytest.raises(ApproximationError):
        pushout_step(X, 1, ModuleMap(X.term(1), k, Matrix.identity(R, (0,))))


# -- embeddings ----------------------------------------------------------------

@pytest.mark.parametrize("g, other", [("u", "v"), ("v", "u")])
def test_embed_cyclic(hyper, g, other):
    R = hyper
    iota, C, rep = embed_totally_reflexive(FPModule.cyclic(R, [g]))
    assert iota.matrix.nrows == 1 and iota.matrix.entry(0, 0) == R(other)
    assert iota.target.degrees == (-1,)
    assert _hf(C) == _hf(FPModule.cyclic(R, [other], degree=-1))
    assert rep.value is True


def test_embed_free(hyper):
    iota, C, _ = embed_totally_reflexive(FPModule.free(hyper, (0, 1)))
    assert iota.is_isomorphism() and C.is_zero()


# -- tails and triangles ---------------------------------------------------------

def test_reflexive_tail_n_equals_d_plus_1(hyper):
    k = FPModule.residue_field(hyper)
    t = build_reflexive_tail(k, 2)
    C = t.complex
    assert sorted(C.terms) == [0, 1] and C.term(0).is_free()
    G1 = C.term(1)
    assert G1.ngens == 2 and is_totally_reflexive(G1, 6).value
    assert t.comparison.is_quasi_isomorphism() and t.augmentation.is_isomorphism()
    assert t.initial.sup_inf() == (0, 0)


def test_reflexive_tail_n_equals_d(hyper):
    k = FPModule.residue_field(hyper)
    t = build_reflexive_tail(k, 1)
    C = t.complex
    assert sorted(C.terms) == [0, 1] and C.term(1).is_free()
    assert is_totally_reflexive(C.term(0), 6).value
    assert C.sup_inf() == (0, 0) and t.comparison.is_quasi_isomorphism()
    assert t.augmentation.is_isomorphism()


def test_reflexive_tail_free(hyper):
    F = FPModule.free(hyper, (0, 2))
    t = build_reflexive_tail(F, 0)
    assert sorted(t.complex.terms) == [0] and sorted(t.complex.term(0).degrees) == [0, 2]


def test_triangle_n0(hyper):
    k = FPModule.residue_field(hyper)
    r = approximation_triangle(k, 0)
    assert r.ok() and r.pd_P.value == 1
    inj, conn, inc = r.four_term
    # 0 -> k -> H_0(P) -> H_0(H) -> 0
    assert inj.is_injective() and conn.is_surjective() and inc.target.is_zero()
    assert is_totally_reflexive(conn.target, 6).value


def test_triangle_n1(hyper):
    k = FPModule.residue_field(hyper)
    r = approximation_triangle(k, 1)
    assert r.ok()
    inj, conn, inc = r.four_term
    # 0 -> H_1(P) -> H_1(H) -> k -> 0 with H_1(P) free
    assert inj.source.is_zero()
    assert conn.source.is_free() and conn.is_injective()
    assert inc.is_surjective() and inc.target.dim() == 1
    rot = rotate_triangle(r)
    assert rot.ok()


def test_triangle_free_module(hyper):
    F = FPModule.free(hyper, (0, 1))
    r = approximation_triangle(F, 0)
    assert r.ok() and not r.H.terms
    assert sorted(r.P.term(0).degrees) == [0, 1]
    rot = rotate_triangle(r)
    assert rot.ok() and not rot.H.terms


def test_triangle_requires_finite_gdim(nongor):
    with pytest.raises(ApproximationError):
        approximation_triangle(FPModule.residue_field(nongor), 0, B=4)


def test_triangle_n_above_gdim(hyper):
    with pytest.raises(ApproximationError):
        approximation_triangle(FPModule.residue_field(hyper), 2)


def test_rotations_of_examples(hyper):
    k = FPModule.residue_field(hyper)
    for n in (0, 1):
        assert rotate_triangle(approximation_triangle(k, n)).ok()


def test_triangle_inherits_certified_status(hyper):
    r = approximation_triangle(FPModule.residue_field(hyper), 1)
    assert r.status == "certified-up-to-bound"
    g = gdim(FPModule.free(hyper, (0,)))
    assert approximation_triangle(FPModule.free(hyper, (0,)), 0, gdim_report=g).status == "exact"
