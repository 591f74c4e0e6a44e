"""Duals into the ring and Matlis duals of finite-length modules."""

from dataclasses import dataclass

from .algebra import _monomials_of_length
from .modules import FPModule, Matrix, ModuleMap, kernel, poly_times_vec

__all__ = [
    "DualData", "dual_into_ring", "matlis_dual", "matlis_dual_map",
    "matlis_biduality_map", "injective_hull", "injective_hull_truncation",
]


@dataclass
class DualData:
    """``M* = Hom(M, R)`` with its generators and the biduality map.

    ``generators`` has one column per generator of ``dual``, written in the
    dual basis of the free cover of M.  ``biduality`` is ``M -> M**``.
    """

    module: FPModule
    dual: FPModule
    generators: Matrix
    bidual: FPModule
    bidual_generators: Matrix
    biduality: ModuleMap

    def biduality_is_iso(self):
        return self.biduality.is_isomorphism()


def _dual_presentation(M):
    K = kernel(M.relations.transpose())
    return FPModule(M.ring, K.col_degrees, kernel(K)), K


def dual_into_ring(M):
    """``Hom_R(M, R)`` as the kernel of the transposed relations, plus biduality."""
    Md, K = _dual_presentation(M)
    Mdd, K2 = _dual_presentation(Md)
    evaluation = K.transpose()
    lifted = K2.lift_matrix(evaluation) if K2.ncols else Matrix.zero(M.ring, (), M.degrees)
    bid = ModuleMap(M, Mdd, Matrix(M.ring, Mdd.degrees, lifted.columns, M.degrees,
                                   reduce=False, check=False))
    return DualData(M, Md, K, Mdd, K2, bid)


# -- Matlis duality ------------------------------------------------------------

class _Basis:
    """Standard-term basis of a finite-length module, degree by degree."""

    def __init__(self, M):
        self.M = M
        self.by_degree = {d: M.standard_terms(d) for d in M.degree_range()}
        self.flat = [(d, t) for d, ts in sorted(self.by_degree.items()) for t in ts]
        self.index = {t: i for i, (_, t) in enumerate(self.flat)}

    def coords(self, vec):
        """Coordinates of a (reduced) vector as ``{basis index: coeff}``."""
        rem = self.M.normal_form(vec)
        return {self.index[t]: c for t, c in rem.items()}


def _times(M, mono, term):
    F = M.ring.field
    p, m = term
    return poly_times_vec(F, {mono: F.one()}, {(p, m): F.one()})


def _matlis_raw(M):
    """Unpruned presentation of ``Hom_k(M, k)``: one generator per basis element."""
    ring = M.ring
    F = ring.field
    basis = _Basis(M)
    degrees = tuple(-d for d, _ in basis.flat)
    one = ring.ctx.one
    cols, cdeg = [], []
    for i in range(ring.nvars):
        x = tuple(1 if j == i else 0 for j in range(ring.nvars))
        w = ring.degrees[i]
        # (x f_b)(c) = f_b(x c): collect, for each b, the c with x c having a b-coordinate
        action = {}
        for ci, (d, t) in enumerate(basis.flat):
            for bi, c in basis.coords(_times(M, x, t)).items():
                action.setdefault(bi, {})[(ci, one)] = c
        for bi, (d, t) in enumerate(basis.flat):
            col = {(bi, x): F.one()}
            for key, c in action.get(bi, {}).items():
                col[key] = F.neg(c)
            cols.append(col)
            cdeg.append(-d + w)
    rel = Matrix(ring, degrees, cols, cdeg, reduce=True, check=False)
    return FPModule(ring, degrees, rel), basis


def matlis_dual(M):
    """``Hom_k(M, k)`` with the contragredient action, minimally presented.

    Defined for modules of finite length (every module over an artinian ring).
    """
    if not M.has_finite_length():
        raise ValueError("Matlis dual is only available for finite-length modules; "
                         "use injective_hull_truncation for E(k) over non-artinian rings")
    return _matlis_raw(M)[0].minimal()


def _pruned_dual(M):
    raw, basis = _matlis_raw(M)
    Mp, to_new, to_old = raw.prune()
    return raw, basis, Mp, to_new, to_old


def matlis_dual_map(f):
    """``f^∨: N^∨ -> M^∨`` for ``f: M -> N`` between finite-length modules.

    Source and target are the presentations returned by ``matlis_dual``.
    """
    M, N = f.source, f.target
    rawM, bM, pM, newM, _ = _pruned_dual(M)
    rawN, bN, pN, _, oldN = _pruned_dual(N)
    ring = M.ring
    one = ring.ctx.one
    cols = [{} for _ in range(rawN.ngens)]
    for bi, (d, (p, m)) in enumerate(bM.flat):
        img = f.matrix.apply(_times(M, m, (p, one)))
        for ci, c in bN.coords(img).items():
            cols[ci][(bi, one)] = c
    raw_map = Matrix(ring, rawM.degrees, cols, rawN.degrees, reduce=False, check=False)
    mat = newM.matrix @ raw_map @ oldN.matrix
    return ModuleMap(pN, pM, mat)


def _pairing(raw, basis, vec, target_vec):
    """Value of the functional ``vec`` (in raw dual generators) on ``target_vec``."""
    M = basis.M
    F = M.ring.field
    total = F.zero()
    for (bi, m), c in vec.items():
        coords = basis.coords(poly_times_vec(F, {m: F.one()}, target_vec))
        total = F.add(total, F.mul(c, coords.get(bi, F.zero())))
    return total


def matlis_biduality_map(M):
    """The evaluation map ``M -> (M^∨)^∨`` (raw presentations), for finite-length M."""
    ring = M.ring
    F = ring.field
    one = ring.ctx.one
    raw1, b1 = _matlis_raw(M)
    raw2, b2 = _matlis_raw(raw1)
    cols = []
    for i in range(M.ngens):
        e = {(i, one): F.one()}
        col = {}
        # ev_e is supported on the dual basis in degree -deg(e_i)
        for k, (d, t) in enumerate(b2.flat):
            if d != -M.degrees[i]:
                continue
            val = _pairing(raw1, b1, {t: F.one()}, e)
            if val:
                col[(k, one)] = val
        cols.append(col)
    return ModuleMap(M, raw2, Matrix(ring, raw2.degrees, cols, M.degrees, reduce=False, check=False))


def injective_hull(ring):
    """``E(k) = R^∨`` for an artinian ring."""
    if not ring.is_artinian():
        raise ValueError("E(k) has no finite presentation over a non-artinian ring")
    return matlis_dual(FPModule.free(ring, (0,)))


def _power_of_max(ring, t):
    return FPModule.cyclic(ring, [ring.monomial(m) for m in _monomials_of_length(ring.nvars, t)])


def injective_hull_truncation(ring, t, with_inclusion=False):
    """``E_t = (R/m^t)^∨``; optionally also the inclusion ``E_t -> E_{t+1}``."""
    if t < 1:
        raise ValueError("t must be positive")
    Q = _power_of_max(ring, t)
    E = matlis_dual(Q)
    if not with_inclusion:
        return E
    Q1 = _power_of_max(ring, t + 1)
    surj = ModuleMap(Q1, Q, Matrix.identity(ring, (0,)))
    return E, matlis_dual_map(surj)
