from ghomalg.algebra import GradedRing, RingMap
from ghomalg.complexes import FreeComplex, base_change_complex, restrict_scalars
from ghomalg.duality import (dual_into_ring, injective_hull, injective_hull_truncation,
                             matlis_biduality_map, matlis_dual, matlis_dual_map)
from ghomalg.field import GF, QQ
from ghomalg.modules import FPModule, Matrix, ModuleMap, kernel, syzygy
from ghomalg.resolution import betti_table, free_resolution

import pytest


def _iso(M, N):
    """Isomorphism test for cyclic-or-small modules via Hilbert functions and minimal gens."""
    a, b = M.minimal(), N.minimal()
    return (sorted(a.degrees) == sorted(b.degrees)
            and all(a.hilbert_function(d) == b.hilbert_function(d) for d in range(-4, 8)))


# -- syzygies -----------------------------------------------------------------

def test_syzygy_of_u_v(hyper):
    R = hyper
    K = syzygy(Matrix.from_rows(R, [["u", "v"]])).embedding
    assert K.ncols == 2
    cols = {tuple(str(K.entry(i, j)) for i in range(2)) for j in range(2)}
    assert cols == {("v", "0"), ("0", "u")}


def test_syzygy_of_identity(hyper):
    assert syzygy(Matrix.identity(hyper, (0, 0))).is_zero()


def test_syzygy_of_x_over_cubic(cubic):
    K = kernel(Matrix.from_rows(cubic, [["x"]]))
    assert K.ncols == 1 and K.entry(0, 0) == cubic("x^2")


def test_module_map_well_defined(hyper):
    R = hyper
    k = FPModule.residue_field(R)
    Ru = FPModule.cyclic(R, ["u"])
    f = ModuleMap(Ru, k, Matrix.identity(R, (0,)))
    assert f.is_well_defined() and f.is_surjective() and not f.is_injective()
    g = ModuleMap(k, Ru, Matrix.identity(R, (0,)))
    assert not g.is_well_defined()


# -- resolutions ---------------------------------------------------------------

def test_resolution_of_k_over_hypersurface(hyper):
    res = free_resolution(FPModule.residue_field(hyper), 3)
    assert res.ranks() == [1, 2, 2, 2]
    assert res.check()


def test_resolution_of_free_module(hyper):
    res = free_resolution(FPModule.free(hyper, (2,)), 5)
    assert res.terminated and res.length == 0
    assert res.ranks() == [1, 0, 0, 0, 0, 0]


def test_periodic_resolution_over_cubic(cubic):
    res = free_resolution(FPModule.residue_field(cubic), 4)
    assert res.ranks() == [1, 1, 1, 1, 1]
    ds = [res.matrix(i).entry(0, 0) for i in range(1, 5)]
    assert ds == [cubic("x"), cubic("x^2"), cubic("x"), cubic("x^2")]
    assert res.check()


def test_betti_tables(hyper, nongor):
    assert betti_table(FPModule.residue_field(nongor), 6).ranks() == [2 ** i for i in range(7)]
    t = betti_table(FPModule.free(hyper, (0,)), 4)
    assert t.ranks() == [1, 0, 0, 0, 0] and t[(0, 0)] == 1
    bt = betti_table(FPModule.residue_field(hyper), 5)
    assert bt.ranks() == [1, 2, 2, 2, 2, 2]
    # the resolution of k over uv is linear
    assert all(bt[(i, i)] == bt.rank(i) for i in range(6))
    assert "total:" in bt.format()


def test_resolution_memoized_and_extendable(hyper):
    k = FPModule.residue_field(hyper)
    a = free_resolution(k, 3)
    b = free_resolution(k, 6)
    assert b.ranks()[:4] == a.ranks()
    assert b.check()


# -- duals ---------------------------------------------------------------------

def test_dual_of_cyclic(hyper):
    R = hyper
    d = dual_into_ring(FPModule.cyclic(R, ["u"]))
    # Hom(R/(u), R) = (0 :_R u) = (v), a copy of R/(u) generated in degree 1
    assert _iso(d.dual, FPModule.cyclic(R, ["u"], degree=1))
    assert d.biduality_is_iso()


def test_dual_of_free_and_k(hyper):
    R = hyper
    d = dual_into_ring(FPModule.free(R, (0, 2)))
    assert sorted(d.dual.degrees) == [-2, 0] and d.dual.is_free()
    assert d.biduality_is_iso()
    assert dual_into_ring(FPModule.residue_field(R)).dual.is_zero()


def test_matlis_duals(cubic, nongor):
    E = matlis_dual(FPModule.free(cubic, (0,)))
    assert E.ngens == 1 and E.dim() == 3
    assert _iso(E, FPModule.free(cubic, (-2,)))
    k = FPModule.residue_field(cubic)
    assert _iso(matlis_dual(k), k)
    E3 = injective_hull(nongor)
    assert E3.ngens == 2 and E3.dim() == 3


def test_matlis_dual_requires_finite_length(hyper):
    with pytest.raises(ValueError):
        matlis_dual(FPModule.free(hyper, (0,)))
    with pytest.raises(ValueError):
        injective_hull(hyper)


def test_matlis_biduality(nongor):
    for M in (FPModule.residue_field(nongor), FPModule.free(nongor, (0,)), injective_hull(nongor)):
        b = matlis_biduality_map(M)
        assert b.is_well_defined() and b.is_isomorphism()


def test_matlis_dual_map_is_contravariant(cubic):
    R = cubic
    k = FPModule.residue_field(R)
    f = ModuleMap(FPModule.free(R, (0,)), k, Matrix.identity(R, (0,)))
    fd = matlis_dual_map(f)
    assert fd.is_well_defined() and fd.is_injective() and not fd.is_surjective()


def test_injective_hull_truncations():
    P = GradedRing(GF(101), ["x"])
    E1 = injective_hull_truncation(P, 1)
    assert E1.ngens == 1 and E1.dim() == 1
    E3 = injective_hull_truncation(P, 3)
    assert E3.ngens == 1 and E3.dim() == 3
    assert _iso(E3, FPModule.cyclic(P, ["x^3"], degree=-2))
    E, inc = injective_hull_truncation(P, 2, with_inclusion=True)
    assert inc.is_well_defined() and inc.is_injective()


def test_injective_hull_truncation_stabilizes(cubic):
    E = injective_hull(cubic)
    for t in (3, 4):
        assert _iso(injective_hull_truncation(cubic, t), E)


# -- restriction and base change -----------------------------------------------

def test_restrict_scalars():
    A = GradedRing(QQ, ["x"])
    S = GradedRing(QQ, ["x", "y"])
    phi = RingMap(A, S, ["x"])
    h = restrict_scalars(phi, FPModule.free(S, (0,)))
    assert h.act(A("x")).matrix.entry(0, 0) == S("x")
    assert restrict_scalars(phi, FPModule.cyclic(S, ["x"])).acts_as_zero(A("x"))
    ident = restrict_scalars(RingMap.identity(A), FPModule.residue_field(A))
    assert ident.phi.is_identity() and ident.module.ngens == 1


def test_base_change_complex():
    A = GradedRing(QQ, ["x"])
    S = GradedRing(QQ, ["x", "y"])
    F = FreeComplex(A, {1: (1,), 0: (0,)}, {1: Matrix.from_rows(A, [["x"]])})
    G = base_change_complex(RingMap(A, S, ["x"]), F)
    assert G.ring is S and G.matrix(1).entry(0, 0) == S("x")
    same = base_change_complex(RingMap.identity(A), F)
    assert same.matrix(1) == F.matrix(1)
    T = GradedRing(QQ, ["x", "y"], ["x^2"])
    F2 = FreeComplex(A, {1: (2,), 0: (0,)}, {1: Matrix.from_rows(A, [["x^2"]])})
    Z = base_change_complex(RingMap(A, T, ["x"]), F2)
    assert Z.matrix(1).is_zero()
