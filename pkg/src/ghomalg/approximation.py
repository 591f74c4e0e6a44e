"""Approximation triangles for modules of finite G-dimension.

Starting from a minimal resolution ``P`` of N with ``Gdim N = d``, the
complex ``C(d+1) = 0 -> G_d -> P_{d-1} -> ... -> P_0`` (with ``G_d`` the
d-th syzygy) is modified one degree at a time: the totally reflexive module
in degree ``m`` is embedded into a free module and the complex is pushed out
along that embedding.  ``C(n)`` has free modules in degrees ``>= n`` and a
totally reflexive module in degree ``n - 1``; cutting it there gives the
triangle ``N -> P -> H -> ΣN`` with ``pd P = d`` and ``Gdim H <= n``.
"""

import math
from dataclasses import dataclass, field

from .complexes import ChainMap, Complex, TrianglePresentation, hom_into_module
from .duality import dual_into_ring
from .invariants import CERTIFIED, EXACT, UNKNOWN, InvariantReport, gdim, is_totally_reflexive
from .linalg import rank
from .modules import FPModule, Matrix, ModuleMap
from .resolution import free_resolution

__all__ = [
    "pushout_step", "embed_totally_reflexive", "build_reflexive_tail", "ReflexiveTail",
    "approximation_triangle", "ApproximationResult", "rotate_triangle", "RotatedTriangle",
    "exact_in_degrees",
]

INF = math.inf


class ApproximationError(ValueError):
    pass


# -- the pushout step --------------------------------------------------------------

def pushout_step(X, n, iota, check=True):
    """Push the complex X out along an injective ``iota: X_n -> Q``.

    Returns ``(Y, f)`` where ``Y_n = Q``, ``Y_{n-1} = (Q ⊕ X_{n-1}) / {(ι x, -β x)}``
    (minimally presented), the other terms are those of X, and ``f: X -> Y``
    is the induced chain map.
    """
    ring = X.ring
    Xn, Xm = X.term(n), X.term(n - 1)
    if iota.source.degrees != Xn.degrees:
        raise ApproximationError("iota does not start at the degree-n term")
    if check:
        if not iota.is_well_defined():
            raise ApproximationError("iota is not a well-defined degree-0 map")
        if not iota.is_injective():
            raise ApproximationError("iota is not injective")
    Q = iota.target
    beta = X.d(n).matrix
    q = Q.ngens
    F = ring.field
    cols, degs = [], []
    for j in range(Xn.ngens):
        col = dict(iota.matrix.columns[j])
        for (p, m), c in beta.columns[j].items():
            col[(q + p, m)] = F.neg(c)
        cols.append(col)
        degs.append(Xn.degrees[j])
    rel = Q.relations.direct_sum(Xm.relations).hstack(
        Matrix(ring, Q.degrees + Xm.degrees, cols, degs, reduce=True, check=False))
    raw = FPModule(ring, Q.degrees + Xm.degrees, rel)
    Ym, to_new, to_old = raw.prune()
    inc_q = Matrix(ring, raw.degrees, [{(i, ring.ctx.one): F.one()} for i in range(q)],
                   Q.degrees, reduce=False, check=False)
    inc_x = Matrix(ring, raw.degrees, [{(q + i, ring.ctx.one): F.one()} for i in range(Xm.ngens)],
                   Xm.degrees, reduce=False, check=False)

    terms = dict(X.terms)
    terms[n] = Q
    terms[n - 1] = Ym
    diffs = {l: f for l, f in X.diffs.items() if l not in (n - 1, n, n + 1)}
    if (n + 1) in X.terms:
        diffs[n + 1] = ModuleMap(X.term(n + 1), Q, iota.matrix @ X.d(n + 1).matrix)
    diffs[n] = ModuleMap(Q, Ym, to_new.matrix @ inc_q)
    if (n - 2) in X.terms:
        gamma = _gamma_prime(ring, X.d(n - 1).matrix, q, raw, X.term(n - 2))
        diffs[n - 1] = ModuleMap(Ym, X.term(n - 2), gamma @ to_old.matrix)
    Y = Complex(ring, terms, diffs)
    maps = {l: X.term(l).identity() for l in X.terms if l not in (n, n - 1)}
    maps[n] = iota
    maps[n - 1] = ModuleMap(Xm, Ym, to_new.matrix @ inc_x)
    f = ChainMap(X, Y, maps)
    if check:
        problems = _check_pushout(X, Y, f, n, iota)
        if problems:
            raise ApproximationError("; ".join(problems))
    return Y, f


def _gamma_prime(ring, gamma, q, raw, target):
    """``γ'(y, x) = γ(x)`` as a matrix on the raw pushout generators."""
    cols = [{} for _ in range(q)] + [dict(c) for c in gamma.columns]
    return Matrix(ring, target.degrees, cols, raw.degrees, reduce=False, check=False)


def _check_pushout(X, Y, f, n, iota):
    problems = []
    for l, g in Y.diffs.items():
        if not g.is_well_defined():
            problems.append(f"Y differential {l} is not well defined")
    if not f.is_chain_map():
        problems.append("X -> Y is not a chain map")
    # Coker ι -> Coker ι' induced by Q -> Y_{n-1}
    ci, _ = iota.cokernel()
    cip, _ = f.at(n - 1).cokernel()
    induced = ModuleMap(ci, cip, Y.d(n).matrix)
    if not induced.is_well_defined() or not induced.is_isomorphism():
        problems.append("Coker ι -> Coker ι' is not an isomorphism")
    lo = min(X.lo, Y.lo)
    hi = max(X.hi, Y.hi)
    for l in range(lo, hi + 1):
        if not f.on_homology(l).is_isomorphism():
            problems.append(f"H_{l}(X) -> H_{l}(Y) is not an isomorphism")
    return problems


# -- embedding a totally reflexive module ---------------------------------------------

def embed_totally_reflexive(G, B=8, check=True):
    """Embed G into a free module via a minimal free cover of ``G*``.

    Returns ``(iota, C, report)`` with ``C = Coker iota`` and ``report`` the
    total-reflexivity report of C.
    """
    data = dual_into_ring(G)
    if check and not data.biduality_is_iso():
        raise ApproximationError("G is not reflexive: biduality is not an isomorphism")
    K = data.generators
    F = FPModule.free(G.ring, tuple(-c for c in K.col_degrees))
    iota = ModuleMap(G, F, K.transpose())
    if check and not iota.is_injective():
        raise ApproximationError("embedding G -> F is not injective")
    C = FPModule(G.ring, F.degrees, iota.matrix).minimal()
    report = is_totally_reflexive(C, B) if check else None
    return iota, C, report


# -- descending construction ------------------------------------------------------

@dataclass
class ReflexiveTail:
    """The complex ``C(n)`` with a quasi-isomorphism ``C(d+1) -> C(n)``.

    ``C(d+1)`` is the resolution of N cut at the d-th syzygy, so its only
    homology is ``H_0 = N``; ``augmentation`` identifies that ``H_0`` with N.
    """

    N: FPModule
    d: int
    n: int
    complex: Complex
    comparison: ChainMap
    augmentation: ModuleMap
    reflexive_reports: dict = field(default_factory=dict)
    status: str = CERTIFIED

    @property
    def G(self):
        return self.complex.term(self.n - 1)

    @property
    def initial(self):
        return self.comparison.source


def _require_finite_gdim(N, B):
    rep = gdim(N, B)
    if rep.status == UNKNOWN or not isinstance(rep.value, int):
        raise ApproximationError(f"G-dimension is not certified finite ({rep})")
    return rep


def _reflexive(G, B, reports, m):
    tr = is_totally_reflexive(G, B)
    reports[m] = tr.to_dict()
    if not tr.value:
        raise ApproximationError(f"G_{m} failed total reflexivity: {tr.certificate}")
    return tr.status


def build_reflexive_tail(N, n, B=8, gdim_report=None):
    """``C(n)``: free in degrees ``>= n``, totally reflexive in ``n - 1``, ``≃ N``."""
    rep = gdim_report or _require_finite_gdim(N, B)
    d = rep.value
    if n > d + 1:
        raise ApproximationError(f"n = {n} exceeds Gdim + 1 = {d + 1}")
    if n < 0:
        raise ApproximationError("n must be nonnegative")
    ring = N.ring
    res = free_resolution(N, d + 1)
    P = res.complex
    terms = {l: P.term(l) for l in range(d)}
    terms[d] = FPModule(ring, P.term(d).degrees, P.matrix(d + 1))
    diffs = {l: ModuleMap(terms[l], terms[l - 1], P.matrix(l)) for l in range(1, d + 1)}
    C = Complex(ring, terms, diffs)
    aug = ModuleMap(C.homology(0), N, res.augmentation.matrix @ C.cycles(0))
    comparison = C.identity()
    reports = {d: rep.certificate.get("totally_reflexive")}
    status = EXACT if rep.status == EXACT else CERTIFIED
    for m in range(d, n - 1, -1):
        G = C.term(m)
        if m != d and _reflexive(G, B, reports, m) != EXACT:
            status = CERTIFIED
        iota, _, _ = embed_totally_reflexive(G, B, check=False)
        C, f = pushout_step(C, m, iota)
        comparison = f.compose(comparison)
    G = C.term(n - 1)
    if n - 1 not in reports and G.ngens and _reflexive(G, B, reports, n - 1) != EXACT:
        status = CERTIFIED
    return ReflexiveTail(N, d, n, C, comparison, aug, reports, status)


# -- the triangle ---------------------------------------------------------------------

def exact_in_degrees(maps, degrees):
    """Check ``0 -> A -> B -> C -> D -> 0`` degreewise by ranks over k.

    Returns ``{degree: (dims, ranks, ok)}``.
    """
    out = {}
    F = maps[0].ring.field
    for j in degrees:
        dims = [maps[0].source.hilbert_function(j)] + [f.target.hilbert_function(j) for f in maps]
        ranks = []
        for f in maps:
            mat, nc, nr = f.degree_matrix(j)
            ranks.append(rank(mat, F) if nc and nr else 0)
        ok = ranks[0] == dims[0] and ranks[-1] == dims[-1]
        for i in range(1, len(maps)):
            ok = ok and dims[i] - ranks[i] == ranks[i - 1]
        out[j] = (dims, ranks, ok)
    return out


def _degree_window(modules, width=3):
    if all(M.has_finite_length() for M in modules):
        lo, hi = None, None
        for M in modules:
            r = M.degree_range()
            if len(r):
                lo = r.start if lo is None else min(lo, r.start)
                hi = r.stop - 1 if hi is None else max(hi, r.stop - 1)
        return range(0) if lo is None else range(lo, hi + 1)
    degs = [d for M in modules for d in M.degrees] + \
           [d for M in modules for d in M.relations.col_degrees]
    if not degs:
        return range(0)
    return range(min(degs), max(degs) + width + 1)


def _pd_report(P, d, name="pd"):
    """``pd P = d`` for a free complex living in degrees ``<= d``, via ``Ext^d(P, S) != 0``."""
    S = FPModule.free(P.ring, (0,))
    if not P.terms:
        return InvariantReport(name, -INF, EXACT, certificate={"zero_complex": True})
    top = P.hi
    E = hom_into_module(P, S)
    nonzero = not E.homology_is_zero(-top)
    value = top if nonzero else None
    status = EXACT if nonzero else UNKNOWN
    return InvariantReport(name, value, status, certificate={
        "top_degree": top, "witness": f"Ext^{top}(P, S) != 0" if nonzero else None})


def _le(a, b):
    return a <= b


@dataclass
class ApproximationResult:
    """Verified approximation triangle ``N -> P -> H -> ΣN``."""

    triangle: TrianglePresentation
    n: int
    d: int
    tail: ReflexiveTail
    pd_P: InvariantReport
    gdim_H: InvariantReport
    four_term: list
    checks: dict
    degreewise: dict
    status: str

    @property
    def P(self):
        return self.triangle.P

    @property
    def H(self):
        return self.triangle.H

    @property
    def N(self):
        return self.triangle.N

    def ok(self):
        return all(self.checks.values())

    def summary(self):
        return {
            "n": self.n, "d": self.d, "status": self.status,
            "pd_P": self.pd_P.to_dict(), "gdim_H": self.gdim_H.to_dict(),
            "checks": dict(self.checks),
            "homology_dims": {f"H_{self.n}(P)": _hf(self.four_term[1].source),
                              f"H_{self.n}(H)": _hf(self.four_term[2].source)},
        }


def _hf(M):
    return {"ngens": M.ngens, "degrees": list(M.degrees)}


def approximation_triangle(N, n, B=8, gdim_report=None, check=True):
    """The triangle ``N -> P -> H -> ΣN`` with ``P = C(n)_{>=n}``, ``H = Σ C(n)_{<=n-1}``."""
    rep = gdim_report or _require_finite_gdim(N, B)
    d = rep.value
    if n > d:
        raise ApproximationError(f"n = {n} exceeds Gdim = {d}")
    tail = build_reflexive_tail(N, n, B, rep)
    C = tail.complex
    P = C.truncate_above(n)
    K = C.truncate_below(n - 1)
    H = K.shift(1)
    SN = C.shift(1)
    to_P = ChainMap(C, P, {l: C.term(l).identity() for l in P.terms})
    connecting = ChainMap(P, H, {n: C.d(n)} if n in P.terms and n in H.terms else {})
    inclusion = ChainMap(H, SN, {l: H.term(l).identity() for l in H.terms})
    tri = TrianglePresentation(C, P, H, to_P, connecting, inclusion, n)

    four = [to_P.on_homology(n), connecting.on_homology(n), inclusion.on_homology(n)]
    four_modules = [four[0].source, four[1].source, four[2].source, four[2].target]
    window = _degree_window(four_modules)
    degreewise = exact_in_degrees(four, window) if any(M.ngens for M in four_modules) else {}

    pd_P = _pd_report(P, d)
    G = C.term(n - 1)
    g_tr = tail.reflexive_reports.get(n - 1)
    gdim_H = InvariantReport("gdim_upper(H)", n if H.terms else -INF,
                             CERTIFIED if H.terms else EXACT, B, certificate={
                                 "shape": "totally reflexive module followed by free modules",
                                 "degrees": [H.lo, H.hi] if H.terms else [],
                                 "reflexive_term": g_tr, "reflexive_ngens": G.ngens})

    supN, infN = C.sup_inf()
    supP, infP = P.sup_inf()
    supH, infH = H.sup_inf()
    checks = {
        "triangle_chain_maps": not tri.check(),
        "pd_P_equals_gdim_N": pd_P.value == d,
        "gdim_H_at_most_n": gdim_H.value <= n,
        "inf_P_ge_n_ge_sup_H": _le(n, infP) and _le(supH, n),
        "sup_P_le_max_n_sup_N": _le(supP, max(n, supN)),
        "inf_H_ge_min_n_infN_plus_1": _le(min(n, infN + 1), infH),
        "four_term_exact": (four[0].is_injective() and four[0].is_exact_with(four[1])
                            and four[1].is_exact_with(four[2]) and four[2].is_surjective()),
        "four_term_degreewise": all(ok for _, _, ok in degreewise.values()),
        "comparison_on_H0": (tail.comparison.is_quasi_isomorphism()
                             and tail.augmentation.is_isomorphism()),
    }
    status = EXACT if (tail.status == EXACT and rep.status == EXACT) else CERTIFIED
    result = ApproximationResult(tri, n, d, tail, pd_P, gdim_H, four, checks, degreewise, status)
    if check and not result.ok():
        failed = [k for k, v in checks.items() if not v]
        raise ApproximationError(f"approximation postconditions failed: {failed}")
    return result


@dataclass
class RotatedTriangle:
    """``P' -> H' -> N -> ΣP'`` with ``P' = Σ^{-1}P`` and ``H' = Σ^{-1}H``."""

    P: Complex
    H: Complex
    N: Complex
    to_H: ChainMap
    to_N: ChainMap
    to_SP: ChainMap
    pd_P: InvariantReport
    gdim_H: InvariantReport
    checks: dict

    def ok(self):
        return all(self.checks.values())


def rotate_triangle(result, check=True):
    """Rotate ``N -> P -> H -> ΣN`` to ``Σ^{-1}P -> Σ^{-1}H -> N -> P`` and re-verify."""
    tri = result.triangle
    Pp = tri.P.shift(-1)
    Hp = tri.H.shift(-1)
    to_H = tri.connecting.shift(-1)
    to_N = ChainMap(Hp, tri.N, {l: Hp.term(l).identity() for l in Hp.terms})
    to_SP = tri.to_P
    pd_P = _pd_report(Pp, result.d - 1) if Pp.terms else InvariantReport("pd", -INF, EXACT)
    n = result.n
    gdim_H = InvariantReport("gdim_upper(H')", n - 1 if Hp.terms else -INF,
                             result.gdim_H.status, result.gdim_H.bound,
                             certificate=dict(result.gdim_H.certificate))
    checks = {
        "chain_maps": to_H.is_chain_map() and to_N.is_chain_map() and to_SP.is_chain_map(),
        "pd_P_prime": pd_P.value == (result.d - 1 if Pp.terms else -INF),
        "gdim_H_prime_at_most_n_minus_1": gdim_H.value <= n - 1,
        "H_prime_to_N_injective_degreewise": all(to_N.at(l).is_injective() for l in Hp.terms),
    }
    rot = RotatedTriangle(Pp, Hp, tri.N, to_H, to_N, to_SP, pd_P, gdim_H, checks)
    if check and not rot.ok():
        failed = [k for k, v in checks.items() if not v]
        raise ApproximationError(f"rotated triangle checks failed: {failed}")
    return rot
