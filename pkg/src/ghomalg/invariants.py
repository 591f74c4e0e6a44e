"""Homological invariants with explicit status and certificates.

Semidecidable quantities (total reflexivity, G-dimension, Gorenstein flat
dimension) are reported with a status so that a bounded search that found
nothing is never confused with a proof.
"""

import math
from dataclasses import dataclass, field
from typing import Any

from .complexes import ModuleHandle, hom_into_module, restrict_scalars, tensor_with_module
from .duality import dual_into_ring, injective_hull, injective_hull_truncation
from .modules import FPModule, Matrix
from .resolution import free_resolution

__all__ = [
    "InvariantReport", "EXACT", "CERTIFIED", "UNKNOWN",
    "as_handle", "depth", "ext", "tor_over_phi", "ext_complex", "tor_complex",
    "fd_bounded", "pd_bounded", "is_totally_reflexive", "gdim", "gfd_bounded",
    "rfd_bounded", "supp_member_max",
]

EXACT = "exact"
CERTIFIED = "certified-up-to-bound"
UNKNOWN = "unknown"

INF = math.inf


def _ext_int(v):
    if isinstance(v, bool) or v is None:
        return v
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return v


@dataclass
class InvariantReport:
    """A computed invariant.

    ``value`` is an int, ``±inf`` or a bool (for yes/no properties).  With
    status ``unknown`` the value is the best lower bound found, if any.
    """

    name: str
    value: Any
    status: str
    bound: int | None = None
    tmax: int | None = None
    certificate: dict = field(default_factory=dict)

    @property
    def is_exact(self):
        return self.status == EXACT

    @property
    def is_unknown(self):
        return self.status == UNKNOWN

    def __str__(self):
        v = _ext_int(self.value)
        if self.status == UNKNOWN:
            return f"{self.name} = Unknown({self.bound})"
        tag = "" if self.status == EXACT else f" [certified to B={self.bound}" + (
            f", t={self.tmax}]" if self.tmax is not None else "]")
        return f"{self.name} = {v}{tag}"

    def to_dict(self):
        return {
            "name": self.name,
            "value": _ext_int(self.value),
            "status": self.status,
            "bound": self.bound,
            "tmax": self.tmax,
            "certificate": _jsonable(self.certificate),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float) and math.isinf(x):
        return _ext_int(x)
    if isinstance(x, InvariantReport):
        return x.to_dict()
    return x


def as_handle(N):
    """Wrap a module over R as a handle along the identity."""
    if isinstance(N, ModuleHandle):
        return N
    from .algebra import RingMap
    return restrict_scalars(RingMap.identity(N.ring), N)


def _residue_field(ring):
    cache = ring.__dict__.setdefault("_residue_cache", {})
    k = cache.get("k")
    if k is None:
        k = cache.setdefault("k", FPModule.residue_field(ring))
    return k


# -- Ext and Tor ---------------------------------------------------------------

def ext_complex(M, N, B):
    """``Hom_R(F, N)`` for a minimal resolution F of M computed through ``B + 1``."""
    h = as_handle(N)
    res = free_resolution(M, B + 1)
    return hom_into_module(res.complex, h), res


def tor_complex(M, N, B):
    """``F ⊗_R N`` for a minimal resolution F of M computed through ``B + 1``."""
    h = as_handle(N)
    res = free_resolution(M, B + 1)
    return tensor_with_module(res.complex, h), res


def ext(M, N, i):
    """``Ext^i_R(M, N)`` as a module over the ring of N."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    C, _ = ext_complex(M, N, i)
    return C.homology(-i)


def tor_over_phi(M, N, i):
    """``Tor_i^R(M, N)`` for N a module over S regarded over R."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    C, _ = tor_complex(M, N, i)
    return C.homology(i)


def _nonvanishing(C, degrees):
    return [i for i in degrees if not C.homology_is_zero(i)]


# -- depth, flat and projective dimension ----------------------------------------------

def depth(N, B=8):
    """``depth_R N``: least i with ``Ext^i_R(k, N) != 0``."""
    if B < 1:
        raise ValueError("bound must be positive")
    h = as_handle(N)
    if h.is_zero():
        return InvariantReport("depth", INF, EXACT, B, certificate={"zero_module": True})
    k = _residue_field(h.ring)
    C, res = ext_complex(k, h, B)
    for i in range(B + 1):
        if not C.homology_is_zero(-i):
            return InvariantReport("depth", i, EXACT, B, certificate={
                "witness": f"Ext^{i}(k, N) != 0",
                "witness_degree": i,
                "vanishing": list(range(i)),
                "ext_generators": C.homology(-i).ngens,
            })
    if res.terminated:
        # Ext(k, N) vanishes identically beyond pd k
        return InvariantReport("depth", INF, EXACT, B, certificate={
            "vanishing": list(range(B + 1)), "pd_k": res.length})
    return InvariantReport("depth", None, UNKNOWN, B, certificate={"vanishing": list(range(B + 1))})


def fd_bounded(N, B=8):
    """``fd_R N = sup{i : Tor_i(k, N) != 0}`` searched through ``B``."""
    if B < 1:
        raise ValueError("bound must be positive")
    h = as_handle(N)
    if h.is_zero():
        return InvariantReport("fd", -INF, EXACT, B, certificate={"zero_module": True})
    k = _residue_field(h.ring)
    C, res_k = tor_complex(k, h, B)
    nz = _nonvanishing(C, range(B + 1))
    value = max(nz) if nz else -INF
    cert = {"nonvanishing": nz, "window": [0, B]}
    if res_k.terminated:
        cert["reason"] = f"k has a finite resolution of length {res_k.length}"
        return InvariantReport("fd", value, EXACT, B, certificate=cert)
    if h.phi.is_identity():
        res_n = free_resolution(h.module, B + 1)
        if res_n.terminated:
            cert["reason"] = f"N has a finite free resolution of length {res_n.length}"
            return InvariantReport("fd", res_n.length, EXACT, B, certificate=cert)
    if nz and max(nz) == B:
        return InvariantReport("fd", value, UNKNOWN, B, certificate=cert)
    return InvariantReport("fd", value, CERTIFIED, B, certificate=cert)


def pd_bounded(M, B=8):
    """Projective dimension of a module over its own ring, via its minimal resolution."""
    if M.is_zero():
        return InvariantReport("pd", -INF, EXACT, B, certificate={"zero_module": True})
    res = free_resolution(M, B + 1)
    ranks = res.ranks()
    if res.terminated and res.length <= B:
        return InvariantReport("pd", res.length, EXACT, B, certificate={"betti_ranks": ranks})
    return InvariantReport("pd", None, UNKNOWN, B, certificate={"betti_ranks": ranks})


# -- total reflexivity and G-dimension -----------------------------------------------

def is_totally_reflexive(G, B=8):
    """Biduality plus ``Ext^{1..B}(G, R) = 0 = Ext^{1..B}(G*, R)``.

    Success is only certified up to ``B`` (exact for free modules); a failure
    is an exact refutation with a witness.
    """
    if B < 1:
        raise ValueError("bound must be positive")
    R = FPModule.free(G.ring, (0,))
    if G.is_free() or G.minimal().is_free():
        return InvariantReport("totally_reflexive", True, EXACT, B, certificate={"free": True})
    C, _ = ext_complex(G, R, B)
    for i in range(1, B + 1):
        if not C.homology_is_zero(-i):
            return InvariantReport("totally_reflexive", False, EXACT, B, certificate={
                "witness": f"Ext^{i}(G, R) != 0", "witness_degree": i, "module": "G"})
    data = dual_into_ring(G)
    if not data.biduality_is_iso():
        return InvariantReport("totally_reflexive", False, EXACT, B,
                               certificate={"witness": "biduality G -> G** is not an isomorphism"})
    C, _ = ext_complex(data.dual, R, B)
    for i in range(1, B + 1):
        if not C.homology_is_zero(-i):
            return InvariantReport("totally_reflexive", False, EXACT, B, certificate={
                "witness": f"Ext^{i}(G*, R) != 0", "witness_degree": i, "module": "G*"})
    return InvariantReport("totally_reflexive", True, CERTIFIED, B, certificate={
        "biduality": True, "ext_vanishing": [1, B], "dual_ext_vanishing": [1, B]})


def syzygy_module(M, d):
    """The d-th syzygy ``Coker(F_{d+1} -> F_d)`` of a minimal resolution (``d = 0``: M pruned)."""
    C = free_resolution(M, d + 1).complex
    if C.rank(d) == 0:
        return FPModule.zero(M.ring)
    return FPModule(M.ring, C.term(d).degrees, C.matrix(d + 1))


def gdim(N, B=8):
    """G-dimension: ``d = sup{i <= B : Ext^i(N, R) != 0}`` plus a reflexive d-th syzygy."""
    if B < 1:
        raise ValueError("bound must be positive")
    if N.is_zero():
        return InvariantReport("gdim", -INF, EXACT, B, certificate={"zero_module": True})
    R = FPModule.free(N.ring, (0,))
    C, res = ext_complex(N, R, B)
    nz = _nonvanishing(C, [-i for i in range(1, B + 1)])
    nz = [-i for i in nz]
    ranks = free_resolution(N, B).ranks()
    if res.terminated and res.length <= B:
        return InvariantReport("gdim", res.length, EXACT, B, certificate={
            "reason": "finite projective dimension", "pd": res.length, "betti_ranks": ranks})
    d = max(nz) if nz else 0
    evidence = {"ext_nonvanishing": nz, "window": [1, B], "betti_ranks": ranks}
    if d >= B:
        return InvariantReport("gdim", None, UNKNOWN, B, certificate=evidence)
    G = syzygy_module(N, d)
    tr = is_totally_reflexive(G, B)
    if tr.value:
        evidence.update({"syzygy_degree": d, "syzygy_degrees": list(G.degrees),
                         "totally_reflexive": tr.to_dict()})
        return InvariantReport("gdim", d, CERTIFIED, B, certificate=evidence)
    evidence["reflexivity_failure"] = tr.certificate
    return InvariantReport("gdim", None, UNKNOWN, B, certificate=evidence)


# -- Gorenstein flat and restricted flat dimension ---------------------------------------

def _tor_sup(J, h, B):
    C, _ = tor_complex(J, h, B)
    nz = _nonvanishing(C, range(B + 1))
    return (max(nz) if nz else -INF), nz


def gfd_bounded(N, tests=None, tmax=4, B=8):
    """Lower-bound certificate for ``Gfd_R N`` from Tor against injective test modules.

    ``tests`` is a list of ``(name, module)`` pairs.  The default test set is
    ``{m}``: the exact ``E(k) = R^∨`` when R is artinian, otherwise the
    truncations ``E_t`` for ``t = 1..tmax``.  Reported values are running
    maxima, so they never decrease as ``t`` or ``B`` grow.

    ``tests="pairing"`` uses the graded injective hull ``E(k)`` itself, for
    N finite over R: ``Tor_i(E(k), N)`` is the graded dual of
    ``Ext^i_R(N, R)``, so nonvanishing is read off the Ext side.
    """
    if tmax < 1 or B < 1:
        raise ValueError("bounds must be positive")
    h = as_handle(N)
    R = h.ring
    if tests is not None and not tests:
        raise ValueError("empty test set")
    if h.is_zero():
        return InvariantReport("gfd", -INF, EXACT, B, tmax, certificate={"zero_module": True})
    per_test = []
    if tests == "pairing":
        if not h.phi.is_identity():
            raise ValueError("the Matlis pairing test needs N finite over R")
        C, _ = ext_complex(h.module, FPModule.free(R, (0,)), B)
        nz = [i for i in range(B + 1) if not C.homology_is_zero(-i)]
        v = max(nz) if nz else -INF
        cert = {"per_test": [{"test": "E(k) via Matlis pairing", "value": v, "running": v,
                              "nonvanishing": nz}], "stabilized": True}
        status = UNKNOWN if v == B else CERTIFIED
        return InvariantReport("gfd", v, status, B, tmax, certificate=cert)
    if tests is None:
        if R.is_artinian():
            tests = [("E(k)", injective_hull(R))]
        else:
            tests = [(f"E_{t}", injective_hull_truncation(R, t)) for t in range(1, tmax + 1)]
    running = -INF
    for name, J in tests:
        v, nz = _tor_sup(J, h, B)
        running = max(running, v)
        per_test.append({"test": name, "value": v, "running": running, "nonvanishing": nz})
    stabilized = len(per_test) == 1 or per_test[-1]["value"] == per_test[-2]["value"]
    cert = {"per_test": per_test, "stabilized": stabilized}
    if running == B:
        return InvariantReport("gfd", running, UNKNOWN, B, tmax, certificate=cert)
    return InvariantReport("gfd", running, CERTIFIED, B, tmax, certificate=cert)


def rfd_bounded(X, tests, B=8):
    """Lower bound for ``Rfd_R X`` from test modules of certified finite flat dimension."""
    if not tests:
        raise ValueError("empty test set")
    h = as_handle(X)
    if h.is_zero():
        return InvariantReport("rfd", -INF, EXACT, B, certificate={"zero_module": True})
    rows = []
    best = -INF
    for T in tests:
        fdT = fd_bounded(T, B)
        if fdT.status != EXACT:
            raise ValueError("test module has no exact flat dimension certificate")
        v, nz = _tor_sup(T, h, B)
        best = max(best, v)
        rows.append({"fd": _ext_int(fdT.value), "value": v, "nonvanishing": nz})
    return InvariantReport("rfd", best, CERTIFIED, B, certificate={"per_test": rows})


def supp_member_max(N):
    """Whether ``m`` lies in the small support of N: ``k ⊗_R N = N / mN != 0``."""
    h = as_handle(N)
    if h.is_zero():
        return InvariantReport("m_in_supp", False, EXACT, certificate={"zero_module": True})
    M = h.module
    extra, degs = [], []
    for x in h.phi.images:
        for g in range(M.ngens):
            if x:
                extra.append({(g, m): c for m, c in x.coeffs.items()})
                degs.append(M.degrees[g] + x.degree)
    rel = M.relations.hstack(Matrix(M.ring, M.degrees, extra, degs))
    Q = FPModule(M.ring, M.degrees, rel)
    nonzero = not Q.is_zero()
    return InvariantReport("m_in_supp", nonzero, EXACT, certificate={
        "tor0_generators": Q.minimal().ngens, "bottom_degree": 0})
