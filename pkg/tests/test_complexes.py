import math

from ghomalg.algebra import GradedRing, RingMap
from ghomalg.complexes import (ChainMap, Complex, FreeComplex, hom_into_module, homology,
                               restrict_scalars, shift, sup_inf, tensor_with_module, truncate)
from ghomalg.field import QQ
from ghomalg.modules import FPModule, Matrix, ModuleMap
from ghomalg.resolution import free_resolution

INF = math.inf


def koszul(P):
    x, y = P.gens
    return FreeComplex(P, {2: (2,), 1: (1, 1), 0: (0,)}, {
        2: Matrix.from_rows(P, [[-y], [x]], (1, 1)),
        1: Matrix.from_rows(P, [[x, y]]),
    }, check=True)


def test_koszul_homology(qxy):
    K = koszul(qxy)
    H0 = K.homology(0)
    assert H0.dim() == 1 and H0.ngens == 1
    assert K.homology_is_zero(1) and K.homology_is_zero(2)
    assert sup_inf(K) == (0, 0)


def test_zero_differentials(hyper):
    C = FreeComplex(hyper, {1: (0,), 0: (0, 1)})
    assert homology(C, 1).is_free() and homology(C, 1).ngens == 1
    assert homology(C, 0).ngens == 2
    M = Complex(hyper, {0: FPModule.residue_field(hyper)})
    assert M.sup_inf() == (0, 0)


def test_multiplication_by_u(hyper):
    R = hyper
    C = FreeComplex(R, {1: (1,), 0: (0,)}, {1: Matrix.from_rows(R, [["u"]])})
    H0, H1 = C.homology(0), C.homology(1)
    assert H0.ngens == 1 and [H0.hilbert_function(d) for d in range(4)] == [1, 1, 1, 1]
    # H_1 = ker u = (v), generated in internal degree 2 (one above the twist)
    assert H1.ngens == 1 and H1.degrees == (2,)


def test_exact_complex_sup_inf(qxy):
    P = qxy
    C = FreeComplex(P, {1: (0,), 0: (0,)}, {1: Matrix.identity(P, (0,))})
    assert C.sup_inf() == (-INF, INF)


def test_tensor_flat_module(poly_pair):
    A, S, phi = poly_pair
    res = free_resolution(FPModule.residue_field(A), 3)
    T = tensor_with_module(res.complex, restrict_scalars(phi, FPModule.free(S, (0,))))
    assert all(T.homology_is_zero(i) for i in range(1, 4))


def test_tensor_with_x_acting_as_zero():
    A = GradedRing(QQ, ["x"])
    S = GradedRing(QQ, ["x", "y"])
    phi = RingMap(A, S, ["x"])
    N = restrict_scalars(phi, FPModule.cyclic(S, ["x"]))
    for t in (1, 2, 3):
        C = FreeComplex(A, {1: (t,), 0: (0,)}, {1: Matrix.from_rows(A, [[f"x^{t}"]])})
        T = tensor_with_module(C, N)
        for i in (0, 1):
            H = T.homology(i)
            assert H.ngens == 1 and not H.is_zero()
            assert [H.hilbert_function(d + H.degrees[0]) for d in range(3)] == [1, 1, 1]


def test_tensor_k_over_cubic(cubic):
    k = FPModule.residue_field(cubic)
    T = tensor_with_module(free_resolution(k, 6).complex, k)
    assert [T.homology(i).dim() for i in range(6)] == [1] * 6


def test_hom_into_ring_and_k(hyper, cubic):
    res = free_resolution(FPModule.residue_field(hyper), 3)
    H = hom_into_module(res.complex, FPModule.free(hyper, (0,)))
    assert H.homology_is_zero(0) and not H.homology_is_zero(-1)
    F = FreeComplex(hyper, {0: (0, 1)})
    N = FPModule.residue_field(hyper)
    assert hom_into_module(F, N).homology(0).dim() == 2
    k = FPModule.residue_field(cubic)
    Hk = hom_into_module(free_resolution(k, 5).complex, k)
    assert [Hk.homology(-i).dim() for i in range(5)] == [1] * 5


def test_hom_and_tensor_against_ring(hyper):
    R = hyper
    C = FreeComplex(R, {1: (1,), 0: (0,)}, {1: Matrix.from_rows(R, [["u"]])})
    T = tensor_with_module(C, FPModule.free(R, (0,)))
    for i in (0, 1):
        assert T.homology(i).degrees == C.homology(i).degrees


def test_truncate_bookkeeping(hyper):
    R = hyper
    C = FreeComplex(R, {2: (2,), 1: (1,), 0: (0,)},
                    {2: Matrix.from_rows(R, [["v"]], (1,)), 1: Matrix.from_rows(R, [["u"]])})
    up, low, surj, inc = truncate(C, 1)
    assert sorted(up.terms) == [1, 2] and sorted(low.terms) == [0]
    assert surj.is_chain_map() and inc.is_chain_map() and surj.is_degreewise_surjective()
    up, low, _, _ = truncate(C, 0)
    assert sorted(up.terms) == [0, 1, 2] and not low.terms
    up, low, _, _ = truncate(C, 3)
    assert not up.terms and sorted(low.terms) == [0, 1, 2]


def test_shift_moves_homology(hyper):
    R = hyper
    C = FreeComplex(R, {1: (1,), 0: (0,)}, {1: Matrix.from_rows(R, [["u"]])})
    for s in (-2, 1, 3):
        D = shift(C, s)
        assert D.sup_inf() == (C.sup_inf()[0] + s, C.sup_inf()[1] + s)
        assert D.homology(s).degrees == C.homology(0).degrees
        D.check()


def test_chain_map_on_homology(qxy):
    K = koszul(qxy)
    ident = K.identity()
    assert ident.is_chain_map() and ident.is_quasi_isomorphism()
    k = Complex(qxy, {0: FPModule.residue_field(qxy)})
    aug = ChainMap(K, k, {0: ModuleMap(K.term(0), k.term(0), Matrix.identity(qxy, (0,)))})
    assert aug.is_chain_map() and aug.is_quasi_isomorphism()
