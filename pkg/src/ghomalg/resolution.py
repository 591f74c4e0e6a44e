"""Minimal graded free resolutions and Betti tables."""

import threading
from collections import Counter

from .complexes import FreeComplex
from .modules import FPModule, Matrix, ModuleMap, kernel

__all__ = ["Resolution", "BettiTable", "free_resolution", "betti_table"]

_LOCK = threading.RLock()


class _ResolutionState:
    """Differentials computed so far for one module; extended on demand."""

    def __init__(self, M):
        Mp, to_new, to_old = M.prune()
        self.pruned = Mp
        self.to_new = to_new
        self.to_old = to_old
        self.degrees = [Mp.degrees]
        self.mats = [None]
        self.terminated = False
        if Mp.ngens and any(Mp.relations.columns):
            self.degrees.append(Mp.relations.col_degrees)
            self.mats.append(Mp.relations)
        elif Mp.ngens == 0:
            self.degrees = [()]
            self.terminated = True
        else:
            self.terminated = True

    def extend(self, B):
        while not self.terminated and len(self.mats) <= B:
            K = kernel(self.mats[-1])
            if K.ncols == 0:
                self.terminated = True
                break
            self.degrees.append(K.col_degrees)
            self.mats.append(K)


def _state(M):
    st = M.__dict__.get("_res_state")
    if st is None:
        with _LOCK:
            st = M.__dict__.get("_res_state")
            if st is None:
                st = _ResolutionState(M)
                M.__dict__["_res_state"] = st
    return st


class Resolution:
    """A minimal free resolution ``F_B -> ... -> F_0 -> M`` truncated at ``B``.

    ``terminated`` is True when ``F_{i+1} = 0`` was observed for some
    ``i <= B``; then ``length`` is the projective dimension.
    """

    def __init__(self, module, complex, augmentation, bound, terminated, minimal=True):
        self.module = module
        self.complex = complex
        self.augmentation = augmentation
        self.bound = bound
        self.terminated = terminated
        self.minimal = minimal

    @property
    def ring(self):
        return self.module.ring

    @property
    def length(self):
        return self.complex.hi if self.terminated else None

    def rank(self, i):
        return self.complex.rank(i)

    def ranks(self):
        return [self.complex.rank(i) for i in range(self.bound + 1)]

    def matrix(self, i):
        return self.complex.matrix(i)

    def betti_table(self):
        tab = {}
        for i in range(self.bound + 1):
            for d, c in Counter(self.complex.term(i).degrees).items():
                tab[(i, d)] = c
        return BettiTable(tab, self.bound)

    def __repr__(self):
        return f"Resolution(ranks={self.ranks()}, terminated={self.terminated})"

    def check(self):
        """Verify d∘d = 0, exactness in ``1..B-1``, minimality and ``H_0 ≅ M``."""
        C = self.complex
        C.check()
        for i in range(1, self.bound):
            if not C.homology(i).is_zero():
                raise AssertionError(f"resolution has homology in degree {i}")
        if self.minimal:
            one = self.ring.ctx.one
            for l, f in C.diffs.items():
                for col in f.matrix.columns:
                    if any(m == one for (_, m) in col):
                        raise AssertionError(f"unit entry in differential {l}")
        H0 = FPModule(self.ring, C.term(0).degrees, C.matrix(1) if 1 in C.diffs
                      else Matrix.zero(self.ring, C.term(0).degrees, ()))
        aug = ModuleMap(H0, self.module, self.augmentation.matrix)
        if not aug.is_well_defined() or not aug.is_isomorphism():
            raise AssertionError("augmentation does not identify H_0 with the module")
        return True


class BettiTable:
    """Graded Betti numbers ``β_{i,j}``, with ``i`` homological."""

    def __init__(self, table, bound):
        self.table = {k: v for k, v in table.items() if v}
        self.bound = bound

    def __getitem__(self, key):
        return self.table.get(key, 0)

    def rank(self, i):
        return sum(v for (a, _), v in self.table.items() if a == i)

    def ranks(self):
        return [self.rank(i) for i in range(self.bound + 1)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.table == other.table

    def __repr__(self):
        return f"BettiTable({self.ranks()})"

    def format(self):
        """Macaulay2-style display: rows ``j - i``, columns ``i``."""
        if not self.table:
            return "total: 0"
        rows = sorted({j - i for i, j in self.table})
        cols = range(self.bound + 1)
        width = max(len(str(v)) for v in self.table.values()) + 1
        width = max(width, max(len(str(c)) for c in cols) + 1)
        lines = ["       " + "".join(str(c).rjust(width) for c in cols),
                 "total: " + "".join(str(self.rank(c)).rjust(width) for c in cols)]
        for r in rows:
            cells = "".join((str(self[(c, c + r)]) if self[(c, c + r)] else ".").rjust(width) for c in cols)
            lines.append(f"{r:>5}: " + cells)
        return "\n".join(lines)

    def to_dict(self):
        return {f"{i},{j}": v for (i, j), v in sorted(self.table.items())}


def free_resolution(M, B=8):
    """Minimal graded free resolution of ``M`` through homological degree ``B``."""
    if B < 0:
        raise ValueError("bound must be nonnegative")
    st = _state(M)
    with _LOCK:
        st.extend(B)
        top = min(B, len(st.mats) - 1)
        degrees = {i: st.degrees[i] for i in range(top + 1)}
        mats = {i: st.mats[i] for i in range(1, top + 1)}
        terminated = st.terminated and len(st.mats) - 1 <= B
    C = FreeComplex(M.ring, degrees, mats)
    aug = ModuleMap(FPModule.free(M.ring, st.pruned.degrees), M, st.to_old.matrix)
    return Resolution(M, C, aug, B, terminated)


def betti_table(M, B=8):
    return free_resolution(M, B).betti_table()
