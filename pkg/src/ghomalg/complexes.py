"""Bounded chain complexes of finitely presented modules.

Indexing is homological throughout: ``d(l)`` maps degree ``l`` to
``l - 1``.  Cochain constructions such as ``Hom(C, N)`` put
``Hom(C_l, N)`` in homological degree ``-l``.
"""

import math
from dataclasses import dataclass
from functools import cached_property

from .linalg import rank
from .modules import FPModule, Matrix, ModuleMap, kernel, subquotient

__all__ = [
    "Complex", "FreeComplex", "ChainMap", "ModuleHandle", "restrict_scalars",
    "base_change_complex", "tensor_with_module", "hom_into_module",
    "homology", "sup_inf", "truncate", "shift", "TrianglePresentation",
]

INF = math.inf


class Complex:
    """A bounded complex ``terms[l]`` with differentials ``diffs[l]: C_l -> C_{l-1}``."""

    def __init__(self, ring, terms, diffs=None, check=False):
        self.ring = ring
        self.terms = {l: M for l, M in terms.items() if M.ngens}
        self.diffs = {}
        for l, f in (diffs or {}).items():
            if l in self.terms and (l - 1) in self.terms:
                self.diffs[l] = f
        if check:
            self.check()

    @property
    def lo(self):
        return min(self.terms) if self.terms else 0

    @property
    def hi(self):
        return max(self.terms) if self.terms else -1

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def term(self, l):
        M = self.terms.get(l)
        return M if M is not None else FPModule.zero(self.ring)

    def d(self, l):
        f = self.diffs.get(l)
        if f is not None:
            return f
        src, tgt = self.term(l), self.term(l - 1)
        return ModuleMap(src, tgt, Matrix.zero(self.ring, tgt.degrees, src.degrees))

    def is_free(self):
        return all(M.is_free() for M in self.terms.values())

    def __repr__(self):
        body = ", ".join(f"{l}: {self.terms[l].ngens}" for l in sorted(self.terms, reverse=True))
        return f"Complex({{{body}}})"

    def check(self):
        """Raise unless every differential is well defined and d∘d = 0."""
        for l, f in self.diffs.items():
            if not f.is_well_defined():
                raise ValueError(f"differential d_{l} is not well defined")
        for l in self.degrees():
            if l in self.diffs and (l - 1) in self.diffs:
                if not self.d(l - 1).compose(self.d(l)).is_zero():
                    raise ValueError(f"d_{l - 1} ∘ d_{l} != 0")
        return True

    # -- homology -------------------------------------------------------------
    def _homology_data(self, l):
        cache = self.__dict__.setdefault("_hcache", {})
        if l in cache:
            return cache[l]
        C = self.term(l)
        if C.ngens == 0:
            data = (FPModule.zero(self.ring), Matrix.zero(self.ring, (), ()), Matrix.zero(self.ring, (), ()))
            cache[l] = data
            return data
        prev = self.term(l - 1)
        D = self.d(l).matrix
        Zfull = kernel(D.hstack(prev.relations)) if prev.ngens else Matrix.identity(self.ring, C.degrees)
        k = C.ngens
        cyc = [{(p, m): c for (p, m), c in col.items() if p < k} for col in Zfull.columns]
        from .modules import mingens
        Z = mingens(self.ring, C.degrees, cyc)
        B = C.relations.hstack(self.d(l + 1).matrix) if (l + 1) in self.terms else C.relations
        H, _ = subquotient(Z, B)
        Hp, _, to_old = H.prune()
        cycles = Z @ to_old.matrix
        cache[l] = (Hp, cycles, B)
        return cache[l]

    def homology(self, l):
        return self._homology_data(l)[0]

    def cycles(self, l):
        """Generators of ``H_l`` as vectors in the generators of ``C_l``."""
        return self._homology_data(l)[1]

    def homology_is_zero(self, l):
        cache = self.__dict__.get("_hcache", {})
        if l not in cache and self._finite_around(l):
            return self.homology_dim(l) == 0
        return self.homology(l).is_zero()

    def _finite_around(self, l):
        return all(self.term(i).has_finite_length() for i in (l - 1, l, l + 1))

    def _rank(self, l, j):
        """Rank of ``d_l`` in internal degree j (0 when d_l is absent)."""
        if l not in self.diffs:
            return 0
        cache = self.__dict__.setdefault("_rank_cache", {})
        key = (l, j)
        if key not in cache:
            mat, nc, nr = self.d(l).degree_matrix(j)
            cache[key] = rank(mat, self.ring.field) if nc and nr else 0
        return cache[key]

    def homology_hilbert(self, l):
        """``{j: dim_k H_l(C)_j}`` by degreewise ranks; terms near l must have finite length."""
        if not self._finite_around(l):
            raise ValueError("degreewise homology needs finite-length terms")
        C = self.term(l)
        out = {}
        for j in C.degree_range():
            dim = C.hilbert_function(j) - self._rank(l, j) - self._rank(l + 1, j)
            if dim:
                out[j] = dim
        return out

    def homology_dim(self, l):
        """``dim_k H_l(C)`` for complexes of finite-length modules."""
        return sum(self.homology_hilbert(l).values())

    def sup_inf(self):
        nz = [l for l in self.degrees() if not self.homology_is_zero(l)]
        if not nz:
            return (-INF, INF)
        return (max(nz), min(nz))

    # -- constructions -----------------------------------------------------------
    def shift(self, s):
        """Σ^s: degree ``l + s`` holds ``C_l``; differentials pick up ``(-1)^s``."""
        sign = -1 if s % 2 else 1
        terms = {l + s: M for l, M in self.terms.items()}
        diffs = {l + s: (f if sign == 1 else -f) for l, f in self.diffs.items()}
        return type(self)._from_parts(self.ring, terms, diffs)

    @classmethod
    def _from_parts(cls, ring, terms, diffs):
        return Complex(ring, terms, diffs)

    def truncate_above(self, n):
        """Brutal truncation ``C_{>=n}``."""
        return Complex(self.ring, {l: M for l, M in self.terms.items() if l >= n},
                       {l: f for l, f in self.diffs.items() if l > n})

    def truncate_below(self, n):
        """Brutal truncation ``C_{<=n}``."""
        return Complex(self.ring, {l: M for l, M in self.terms.items() if l <= n},
                       {l: f for l, f in self.diffs.items() if l <= n})

    def identity(self):
        return ChainMap(self, self, {l: M.identity() for l, M in self.terms.items()})

    def hilbert_table(self, internal_degrees):
        """``{(l, j): dim_k H_l(C)_j}`` over the given internal degrees."""
        return {(l, j): self.homology(l).hilbert_function(j)
                for l in self.degrees() for j in internal_degrees}


class FreeComplex(Complex):
    """A complex of graded free modules, given by twists and matrices."""

    def __init__(self, ring, degrees, matrices=None, check=False):
        terms = {l: FPModule.free(ring, degs) for l, degs in degrees.items()}
        diffs = {}
        for l, A in (matrices or {}).items():
            if l in terms and (l - 1) in terms:
                diffs[l] = ModuleMap(terms[l], terms[l - 1], A)
        super().__init__(ring, terms, diffs, check=False)
        if check:
            self.check()
        if not self.is_free():
            raise ValueError("FreeComplex terms must be free")

    @classmethod
    def _from_parts(cls, ring, terms, diffs):
        degrees = {l: M.degrees for l, M in terms.items()}
        return cls(ring, degrees, {l: f.matrix for l, f in diffs.items()})

    def matrix(self, l):
        return self.d(l).matrix

    def rank(self, l):
        return self.term(l).ngens

    def truncate_above(self, n):
        return FreeComplex._from_parts(self.ring, {l: M for l, M in self.terms.items() if l >= n},
                                       {l: f for l, f in self.diffs.items() if l > n})

    def truncate_below(self, n):
        return FreeComplex._from_parts(self.ring, {l: M for l, M in self.terms.items() if l <= n},
                                       {l: f for l, f in self.diffs.items() if l <= n})


def homology(C, l):
    return C.homology(l)


def sup_inf(C):
    return C.sup_inf()


def shift(C, s):
    return C.shift(s)


def truncate(C, n):
    """``(C_{>=n}, C_{<=n-1})`` with the canonical surjection and inclusion."""
    upper = C.truncate_above(n)
    lower = C.truncate_below(n - 1)
    surj = ChainMap(C, upper, {l: C.term(l).identity() for l in upper.terms})
    inc = ChainMap(lower, C, {l: C.term(l).identity() for l in lower.terms})
    return upper, lower, surj, inc


class ChainMap:
    """Degreewise module maps ``source_l -> target_l`` (missing ones are zero)."""

    def __init__(self, source, target, maps):
        self.source = source
        self.target = target
        self.maps = dict(maps)

    def at(self, l):
        f = self.maps.get(l)
        if f is not None:
            return f
        src, tgt = self.source.term(l), self.target.term(l)
        return ModuleMap(src, tgt, Matrix.zero(self.source.ring, tgt.degrees, src.degrees))

    def is_chain_map(self):
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        for l in range(lo, hi + 2):
            a = self.target.d(l).compose(self.at(l))
            b = self.at(l - 1).compose(self.source.d(l))
            if not a.equals(b):
                return False
        return all(f.is_well_defined() for f in self.maps.values())

    def is_degreewise_surjective(self):
        return all(self.at(l).is_surjective() for l in self.target.terms)

    def on_homology(self, l):
        """The induced map ``H_l(source) -> H_l(target)``."""
        Hs = self.source.homology(l)
        Ht, cyc_t, bnd_t = self.target._homology_data(l)
        ring = self.source.ring
        if Hs.ngens == 0 or Ht.ngens == 0:
            return ModuleMap(Hs, Ht, Matrix.zero(ring, Ht.degrees, Hs.degrees))
        cyc_s = self.source.cycles(l)
        images = self.at(l).matrix @ cyc_s
        lifter = cyc_t.hstack(bnd_t)
        k = Ht.ngens
        cols = []
        for j, col in enumerate(images.columns):
            c = lifter.lift(col)
            if c is None:
                raise ValueError(f"image of a cycle in degree {l} is not a cycle")
            cols.append({(p, m): v for (p, m), v in c.items() if p < k})
        return ModuleMap(Hs, Ht, Matrix(ring, Ht.degrees, cols, Hs.degrees, reduce=False, check=False))

    def is_quasi_isomorphism(self):
        lo = min(self.source.lo, self.target.lo)
        hi = max(self.source.hi, self.target.hi)
        return all(self.on_homology(l).is_isomorphism() for l in range(lo, hi + 1))

    def shift(self, s):
        """Σ^s of the map; components are unchanged, only relabelled."""
        return ChainMap(self.source.shift(s), self.target.shift(s),
                        {l + s: f for l, f in self.maps.items()})

    def compose(self, other):
        """``self ∘ other``."""
        degs = set(self.maps) & set(other.maps)
        return ChainMap(other.source, self.target, {l: self.maps[l].compose(other.maps[l]) for l in degs})


# -- scalar restriction and base change ------------------------------------------

class ModuleHandle:
    """An S-module N regarded as an R-module through ``phi: R -> S``.

    No R-presentation is formed; R-linear functors are evaluated by working
    over S with base-changed free R-complexes.
    """

    def __init__(self, phi, module):
        if module.ring is not phi.target and module.ring != phi.target:
            raise ValueError("module is not over the target of the ring map")
        self.phi = phi
        self.module = module

    @property
    def ring(self):
        return self.phi.source

    @property
    def base_ring(self):
        return self.phi.target

    def act(self, r):
        """Multiplication by ``r`` (an element of R) on N, as an S-linear map."""
        N = self.module
        img = self.phi(self.phi.source._import(r))
        cols = [{(g, m): c for m, c in img.coeffs.items()} for g in range(N.ngens)]
        deg = img.degree if img else 0
        return ModuleMap(N.twist(deg), N, Matrix(self.phi.target, N.degrees, cols,
                                                 tuple(d + deg for d in N.degrees)))

    def acts_as_zero(self, r):
        return self.act(r).is_zero()

    def is_zero(self):
        return self.module.is_zero()

    def __repr__(self):
        return f"ModuleHandle({self.module!r} via {self.phi!r})"


def restrict_scalars(phi, N):
    return ModuleHandle(phi, N)


def base_change_complex(phi, F):
    """``F ⊗_R S`` for a free complex F over ``phi.source``."""
    if not F.is_free():
        raise ValueError("base change is defined here for free complexes only")
    degrees = {l: M.degrees for l, M in F.terms.items()}
    mats = {l: f.matrix.map_ring(phi) for l, f in F.diffs.items()}
    out = FreeComplex(phi.target, degrees, mats)
    for l in out.degrees():
        if l in out.diffs and (l - 1) in out.diffs:
            if not out.d(l - 1).matrix.__matmul__(out.d(l).matrix).is_zero():
                raise ValueError("d∘d != 0 after base change: ill-formed ring map")
    return out


def _as_handle(N):
    if isinstance(N, ModuleHandle):
        return N
    from .algebra import RingMap
    return ModuleHandle(RingMap.identity(N.ring), N)


def _tensor_term(N, degrees):
    """``⊕_i N(-a_i)`` ordered as ``(i, g) -> i * ngens + g``."""
    out = FPModule.zero(N.ring)
    for a in degrees:
        out = out.direct_sum(N.twist(-a))
    return out


def tensor_with_module(C, N):
    """The complex ``C ⊗_R N`` over S, for a free complex C over R."""
    h = _as_handle(N)
    M = h.module
    terms = {l: _tensor_term(M, T.degrees) for l, T in C.terms.items()}
    diffs = {}
    for l, f in C.diffs.items():
        A = f.matrix.map_ring(h.phi) if not h.phi.is_identity() else f.matrix
        K = A.kron(M.degrees)
        diffs[l] = ModuleMap(terms[l], terms[l - 1], K)
    return Complex(h.base_ring, terms, diffs)


def hom_into_module(C, N):
    """``Hom_R(C, N)`` over S; ``Hom(C_l, N)`` sits in homological degree ``-l``."""
    h = _as_handle(N)
    M = h.module
    G = M.ngens
    S = h.base_ring
    terms = {-l: _tensor_term(M, tuple(-a for a in T.degrees)) for l, T in C.terms.items()}
    diffs = {}
    for l, f in C.diffs.items():
        # Hom(d_l, N): Hom(C_{l-1}, N) -> Hom(C_l, N), degree -(l-1) -> -l
        A = f.matrix.map_ring(h.phi) if not h.phi.is_identity() else f.matrix
        src, tgt = terms[-(l - 1)], terms[-l]
        cols = [{} for _ in range(src.ngens)]
        for j, col in enumerate(A.columns):
            for (i, m), c in col.items():
                for g in range(G):
                    cols[i * G + g][(j * G + g, m)] = c
        diffs[-(l - 1)] = ModuleMap(src, tgt, Matrix(S, tgt.degrees, cols, src.degrees,
                                                     reduce=False, check=False))
    return Complex(S, terms, diffs)


@dataclass
class TrianglePresentation:
    """Chain-level data for ``N -> P -> H -> ΣN``.

    ``N -> P`` is degreewise surjective with kernel ``K`` and ``H = ΣK``;
    ``connecting`` is the chain map ``P -> H`` and ``inclusion`` the map
    ``H -> ΣN`` (Σ of ``K -> N``).
    """

    N: Complex
    P: Complex
    H: Complex
    to_P: ChainMap
    connecting: ChainMap
    inclusion: ChainMap
    n: int

    @cached_property
    def K(self):
        return self.H.shift(-1)

    def check(self):
        problems = []
        if not self.to_P.is_chain_map():
            problems.append("N -> P is not a chain map")
        if not self.to_P.is_degreewise_surjective():
            problems.append("N -> P is not degreewise surjective")
        if not self.connecting.is_chain_map():
            problems.append("P -> H is not a chain map")
        if not self.inclusion.is_chain_map():
            problems.append("H -> ΣN is not a chain map")
        return problems
