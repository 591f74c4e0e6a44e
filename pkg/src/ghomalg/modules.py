"""Homogeneous matrices, finitely presented graded modules and their maps.

Every finite module is a cokernel ``coker(A: R^s -> R^r)`` with generator
degrees ``a_1..a_r``.  Submodule questions (membership, kernels, lifting
through a matrix) all reduce to one Gröbner computation in ``R^(r+s)``
where the tracking block ``e_{r+j}`` records how each column was used.
"""

from functools import cached_property

from .gb import buchberger, mono_mul, vec_degree
from .algebra import Polynomial, monomials_of_degree

__all__ = [
    "Matrix", "FPModule", "ModuleMap", "kernel", "mingens", "syzygy",
    "subquotient",
]


def poly_times_vec(F, poly, vec):
    out = {}
    p = F.p
    for m1, c1 in poly.items():
        for (pos, m2), c2 in vec.items():
            t = (pos, mono_mul(m1, m2))
            v = out.get(t, 0) + c1 * c2
            if p:
                v %= p
            if v == 0:
                out.pop(t, None)
            else:
                out[t] = v
    return out


def vec_add(F, a, b, scale=1):
    out = dict(a)
    p = F.p
    for t, c in b.items():
        v = out.get(t, 0) + scale * c
        if p:
            v %= p
        if v == 0:
            out.pop(t, None)
        else:
            out[t] = v
    return out


def vec_entries(vec):
    """Split a vector into ``{pos: poly_dict}``."""
    rows = {}
    for (pos, m), c in vec.items():
        rows.setdefault(pos, {})[m] = c
    return rows


def shift_positions(vec, offset):
    return {(p + offset, m): c for (p, m), c in vec.items()}


class Matrix:
    """A homogeneous matrix over a graded ring, stored by columns.

    Column ``j`` is a vector in ``R^nrows`` of degree ``col_degrees[j]``
    with respect to the row twists ``row_degrees``; entries are kept in
    normal form modulo the ring's ideal.
    """

    def __init__(self, ring, row_degrees, columns, col_degrees, reduce=True, check=True):
        self.ring = ring
        self.row_degrees = tuple(row_degrees)
        if reduce:
            columns = [ring._ideal_basis.reduce(c) if ring.reduced_gb else dict(c) for c in columns]
        self.columns = list(columns)
        self.col_degrees = tuple(col_degrees)
        if len(self.columns) != len(self.col_degrees):
            raise ValueError("one degree per column required")
        if check:
            self.check_homogeneous()

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.columns)

    def check_homogeneous(self):
        ctx = self.ring.ctx
        n = self.nrows
        for j, col in enumerate(self.columns):
            for (pos, m) in col:
                if pos >= n:
                    raise ValueError(f"column {j} has an entry in row {pos} >= {n}")
                if ctx.degree(m) + self.row_degrees[pos] != self.col_degrees[j]:
                    raise ValueError(
                        f"matrix entry ({pos},{j}) is not homogeneous of degree "
                        f"{self.col_degrees[j] - self.row_degrees[pos]}")

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_rows(cls, ring, rows, row_degrees=None, col_degrees=None):
        """Build from a list of rows of ring elements, inferring column degrees."""
        rows = [[ring._import(e) for e in row] for row in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        row_degrees = tuple(row_degrees) if row_degrees is not None else (0,) * nrows
        cols, degs = [], []
        for j in range(ncols):
            col = {}
            deg = None
            for i in range(nrows):
                e = rows[i][j]
                if not e.is_homogeneous():
                    raise ValueError(f"entry ({i},{j}) = {e} is not homogeneous")
                for m, c in e.coeffs.items():
                    col[(i, m)] = c
                if e:
                    d = e.degree + row_degrees[i]
                    if deg is not None and d != deg:
                        raise ValueError(f"column {j} is not homogeneous")
                    deg = d
            if col_degrees is not None:
                deg = col_degrees[j]
            cols.append(col)
            degs.append(deg if deg is not None else 0)
        return cls(ring, row_degrees, cols, degs)

    @classmethod
    def identity(cls, ring, degrees):
        one = ring.ctx.one
        return cls(ring, degrees, [{(i, one): ring.field.one()} for i in range(len(degrees))],
                   degrees, reduce=False, check=False)

    @classmethod
    def zero(cls, ring, row_degrees, col_degrees):
        return cls(ring, row_degrees, [{} for _ in col_degrees], col_degrees, reduce=False, check=False)

    # -- access ----------------------------------------------------------------
    def entry(self, i, j):
        return Polynomial._raw(self.ring, {m: c for (p, m), c in self.columns[j].items() if p == i})

    def rows(self):
        return [[self.entry(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def is_zero(self):
        return not any(self.columns)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.row_degrees == other.row_degrees
                and self.col_degrees == other.col_degrees and self.columns == other.columns)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows())
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    # -- algebra ---------------------------------------------------------------
    def apply(self, vec):
        """Image of a vector in R^ncols."""
        F = self.ring.field
        out = {}
        for pos, poly in vec_entries(vec).items():
            out = vec_add(F, out, poly_times_vec(F, poly, self.columns[pos]))
        return self.ring._ideal_basis.reduce(out) if self.ring.reduced_gb else out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("matrix shapes do not compose")
        return Matrix(self.ring, self.row_degrees, [self.apply(c) for c in other.columns],
                      other.col_degrees, reduce=False, check=False)

    def __add__(self, other):
        F = self.ring.field
        return Matrix(self.ring, self.row_degrees,
                      [vec_add(F, a, b) for a, b in zip(self.columns, other.columns)],
                      self.col_degrees, reduce=False, check=False)

    def __neg__(self):
        F = self.ring.field
        return Matrix(self.ring, self.row_degrees,
                      [{t: F.neg(c) for t, c in col.items()} for col in self.columns],
                      self.col_degrees, reduce=False, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        if c == 0:
            return Matrix.zero(self.ring, self.row_degrees, self.col_degrees)
        return Matrix(self.ring, self.row_degrees,
                      [{t: F.mul(c, v) for t, v in col.items()} for col in self.columns],
                      self.col_degrees, reduce=False, check=False)

    def transpose(self, shift=0):
        """Transpose, as a map of duals: row/column twists are negated.

        ``shift`` is added to all resulting degrees.
        """
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for (i, m), c in col.items():
                cols[i][(j, m)] = c
        return Matrix(self.ring, tuple(shift - d for d in self.col_degrees), cols,
                      tuple(shift - d for d in self.row_degrees), reduce=False, check=False)

    def hstack(self, *others):
        cols = list(self.columns)
        degs = list(self.col_degrees)
        for o in others:
            if o.row_degrees != self.row_degrees:
                raise ValueError("hstack: row twists differ")
            cols.extend(o.columns)
            degs.extend(o.col_degrees)
        return Matrix(self.ring, self.row_degrees, cols, degs, reduce=False, check=False)

    def vstack(self, other):
        if other.col_degrees != self.col_degrees:
            raise ValueError("vstack: column degrees differ")
        off = self.nrows
        cols = [{**a, **shift_positions(b, off)} for a, b in zip(self.columns, other.columns)]
        return Matrix(self.ring, self.row_degrees + other.row_degrees, cols, self.col_degrees,
                      reduce=False, check=False)

    def direct_sum(self, other):
        off = self.nrows
        cols = [dict(c) for c in self.columns] + [shift_positions(c, off) for c in other.columns]
        return Matrix(self.ring, self.row_degrees + other.row_degrees, cols,
                      self.col_degrees + other.col_degrees, reduce=False, check=False)

    def select_columns(self, idx):
        return Matrix(self.ring, self.row_degrees, [self.columns[j] for j in idx],
                      [self.col_degrees[j] for j in idx], reduce=False, check=False)

    def select_rows(self, idx):
        where = {i: k for k, i in enumerate(idx)}
        cols = [{(where[p], m): c for (p, m), c in col.items() if p in where} for col in self.columns]
        return Matrix(self.ring, [self.row_degrees[i] for i in idx], cols, self.col_degrees,
                      reduce=False, check=False)

    def twist(self, s):
        """Same matrix between twisted free modules: all degrees minus ``s``."""
        return Matrix(self.ring, tuple(d - s for d in self.row_degrees), self.columns,
                      tuple(d - s for d in self.col_degrees), reduce=False, check=False)

    def map_ring(self, phi):
        """Entrywise image under a ring map (base change of free modules)."""
        if phi.source is not self.ring and phi.source != self.ring:
            raise ValueError("matrix is not over the map's source ring")
        cols = []
        for col in self.columns:
            out = {}
            for pos, poly in vec_entries(col).items():
                for m, c in phi.apply_dict(poly).items():
                    out[(pos, m)] = c
            cols.append(out)
        return Matrix(phi.target, self.row_degrees, cols, self.col_degrees, reduce=False, check=False)

    def kron(self, degrees):
        """``self ⊗ id`` on blocks: row ``(i, g)`` has twist ``row_i + degrees[g]``."""
        G = len(degrees)
        rd = tuple(r + d for r in self.row_degrees for d in degrees)
        cols, cd = [], []
        for j, col in enumerate(self.columns):
            for g in range(G):
                cols.append({(i * G + g, m): c for (i, m), c in col.items()})
                cd.append(self.col_degrees[j] + degrees[g])
        return Matrix(self.ring, rd, cols, cd, reduce=False, check=False)

    # -- Gröbner data ------------------------------------------------------------
    @cached_property
    def column_basis(self):
        """Gröbner basis of the column span plus I * R^nrows."""
        basis, _ = buchberger(self.ring.ctx, self.row_degrees, self.columns)
        return basis

    @cached_property
    def tracked_basis(self):
        """Gröbner basis of ``(col_j, e_j)`` in ``R^(nrows+ncols)``, columns block first."""
        r = self.nrows
        one = self.ring.ctx.one
        F = self.ring.field
        gens = []
        for j, col in enumerate(self.columns):
            v = dict(col)
            v[(r + j, one)] = F.one()
            gens.append(v)
        basis, _ = buchberger(self.ring.ctx, self.row_degrees + self.col_degrees, gens)
        return basis

    def reduce(self, vec):
        """Normal form of ``vec`` modulo the column span (and I)."""
        return self.column_basis.reduce(vec)

    def contains(self, vec):
        return not self.reduce(vec)

    def lift(self, vec):
        """Coefficients ``c`` with ``self @ c == vec`` (mod I), or None."""
        r = self.nrows
        rem = self.tracked_basis.reduce(vec)
        if any(p < r for (p, _) in rem):
            return None
        F = self.ring.field
        c = {(p - r, m): F.neg(v) for (p, m), v in rem.items()}
        return self.ring._ideal_basis.reduce(c) if self.ring.reduced_gb else c

    def lift_matrix(self, other):
        """Matrix X with ``self @ X == other``; raises if impossible."""
        cols = []
        for j, col in enumerate(other.columns):
            c = self.lift(col)
            if c is None:
                raise ValueError(f"column {j} is not in the image")
            cols.append(c)
        return Matrix(self.ring, self.col_degrees, cols, other.col_degrees, reduce=False, check=False)


def kernel(A):
    """Minimal generators of ``ker(A: R^ncols -> R^nrows)``, as a matrix."""
    r = A.nrows
    syz = [shift_positions(v, -r) for lt, _, v in A.tracked_basis.elements if lt[0] >= r]
    return mingens(A.ring, A.col_degrees, syz)


def mingens(ring, degrees, vecs):
    """A minimal homogeneous generating set, as the columns of a matrix."""
    if ring.reduced_gb:
        vecs = [ring._ideal_basis.reduce(v) for v in vecs]
    vecs = [v for v in vecs if v]
    ctx = ring.ctx
    _, kept = buchberger(ctx, tuple(degrees), vecs, minimal=True, reduced=False)
    cols = [vecs[i] for i in kept]
    return Matrix(ring, degrees, cols, [vec_degree(ctx, v, degrees) for v in cols],
                  reduce=False, check=False)


class FPModule:
    """A finitely presented graded module ``coker(relations)``.

    ``degrees`` are the generator twists; ``relations`` is a matrix with
    ``len(degrees)`` rows.  ``embedding`` optionally records the generators
    as vectors of an ambient free module (for kernels and syzygies).
    """

    def __init__(self, ring, degrees, relations=None, embedding=None):
        self.ring = ring
        self.degrees = tuple(degrees)
        if relations is None:
            relations = Matrix.zero(ring, self.degrees, ())
        if relations.row_degrees != self.degrees:
            raise ValueError("relation matrix rows must match generator degrees")
        self.relations = relations
        self.embedding = embedding

    # -- constructors ----------------------------------------------------------
    @classmethod
    def free(cls, ring, degrees):
        return cls(ring, degrees)

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def cyclic(cls, ring, polys, degree=0):
        """``R/(polys)`` with its generator in ``degree``."""
        return cls(ring, (degree,), Matrix.from_rows(ring, [list(polys)], (degree,)))

    @classmethod
    def residue_field(cls, ring, degree=0):
        return cls.cyclic(ring, ring.gens, degree)

    @classmethod
    def from_rows(cls, ring, rows, degrees=None):
        if degrees is None:
            degrees = (0,) * len(rows)
        return cls(ring, degrees, Matrix.from_rows(ring, rows, degrees))

    @property
    def ngens(self):
        return len(self.degrees)

    def __repr__(self):
        return f"FPModule(ngens={self.ngens}, nrels={self.relations.ncols}, degrees={list(self.degrees)})"

    # -- structure ---------------------------------------------------------------
    @property
    def basis(self):
        return self.relations.column_basis

    def normal_form(self, vec):
        return self.relations.reduce(vec)

    def is_free(self):
        return not any(self.relations.columns)

    @cached_property
    def _is_zero(self):
        leads = {lt for lt, _, _ in self.basis.elements}
        one = self.ring.ctx.one
        return all((p, one) in leads for p in range(self.ngens))

    def is_zero(self):
        return self.ngens == 0 or self._is_zero

    def standard_terms(self, d):
        """Basis of the degree-``d`` part: standard terms ``(pos, mono)``."""
        out = []
        b = self.basis
        for p, a in enumerate(self.degrees):
            for m in monomials_of_degree(self.ring.degrees, d - a):
                if b.find((p, m)) is None:
                    out.append((p, m))
        return out

    def hilbert_function(self, d):
        return len(self.standard_terms(d))

    @cached_property
    def _power_bounds(self):
        """Per generator, the least pure powers of each variable that are leads."""
        n = self.ring.nvars
        leads = [(lt[0], lt[1]) for lt, _, _ in self.basis.elements]
        ring_leads = [lm for lm, _ in self.ring.ctx.reducers]
        out = []
        for p in range(self.ngens):
            b = [None] * n
            for m in [m for q, m in leads if q == p] + ring_leads:
                nz = [i for i, e in enumerate(m) if e]
                if len(nz) == 1:
                    i = nz[0]
                    b[i] = m[i] if b[i] is None else min(b[i], m[i])
                elif not nz:
                    b = [0] * n
                    break
            out.append(b)
        return out

    def has_finite_length(self):
        return all(None not in b for b in self._power_bounds)

    def degree_range(self):
        """Internal degrees that can carry the module (finite length only)."""
        if not self.has_finite_length():
            raise ValueError("module does not have finite length")
        w = self.ring.degrees
        lo, hi = None, None
        for a, b in zip(self.degrees, self._power_bounds):
            if any(e == 0 for e in b):
                continue
            top = a + sum((e - 1) * wi for e, wi in zip(b, w))
            lo = a if lo is None else min(lo, a)
            hi = top if hi is None else max(hi, top)
        if lo is None:
            return range(0)
        return range(lo, hi + 1)

    def dim(self):
        """Dimension over the residue field (finite-length modules only)."""
        return sum(self.hilbert_function(d) for d in self.degree_range())

    def coordinates(self, vec, d):
        """Coordinates of a degree-``d`` vector in the standard basis of ``M_d``."""
        rem = self.normal_form(vec)
        terms = self.standard_terms(d)
        index = {t: i for i, t in enumerate(terms)}
        F = self.ring.field
        out = [F.zero()] * len(terms)
        for t, c in rem.items():
            out[index[t]] = c
        return out

    # -- operations ----------------------------------------------------------------
    def twist(self, s):
        """``M(s)``: the same module with all degrees lowered by ``s``."""
        return FPModule(self.ring, tuple(d - s for d in self.degrees), self.relations.twist(s))

    def direct_sum(self, other):
        return FPModule(self.ring, self.degrees + other.degrees,
                        self.relations.direct_sum(other.relations))

    def identity(self):
        return ModuleMap(self, self, Matrix.identity(self.ring, self.degrees))

    def generator(self, i):
        return {(i, self.ring.ctx.one): self.ring.field.one()}

    def prune(self):
        """Minimal presentation: ``(M', to_new: M -> M', to_old: M' -> M)``."""
        return prune(self)

    def minimal(self):
        return self.prune()[0]


def _unit_entry(cols, alive, one):
    for j, col in enumerate(cols):
        if col is None:
            continue
        for (p, m), c in col.items():
            if m == one and p in alive:
                return j, p, c
    return None


def prune(M):
    """Split off unit entries of the presentation, then minimize relations."""
    ring = M.ring
    F = ring.field
    one = ring.ctx.one
    red = ring._ideal_basis.reduce if ring.reduced_gb else (lambda v: v)
    cols = [dict(c) for c in M.relations.columns if c]
    alive = set(range(M.ngens))
    # image of each old generator, as a vector in old positions
    image = {i: {(i, one): F.one()} for i in range(M.ngens)}
    while True:
        hit = _unit_entry(cols, alive, one)
        if hit is None:
            break
        j, i, c = hit
        pivot = cols[j]
        cols[j] = None
        # e_i = -(1/c) * (pivot - c e_i)
        rest = {t: v for t, v in pivot.items() if t[0] != i}
        sub = {t: F.neg(F.div(v, c)) for t, v in rest.items()}
        for k, col in enumerate(cols):
            if col is None:
                continue
            entry = {m: v for (p, m), v in col.items() if p == i}
            if entry:
                col = {t: v for t, v in col.items() if t[0] != i}
                cols[k] = red(vec_add(F, col, poly_times_vec(F, entry, sub)))
        for g, vec in image.items():
            entry = {m: v for (p, m), v in vec.items() if p == i}
            if entry:
                vec = {t: v for t, v in vec.items() if t[0] != i}
                image[g] = red(vec_add(F, vec, poly_times_vec(F, entry, sub)))
        alive.discard(i)
    order = sorted(alive)
    where = {old: new for new, old in enumerate(order)}
    degrees = tuple(M.degrees[i] for i in order)

    def remap(v):
        return {(where[p], m): c for (p, m), c in v.items()}

    rels = [remap(c) for c in cols if c]
    rel_matrix = mingens(ring, degrees, rels)
    Mp = FPModule(ring, degrees, rel_matrix)
    to_new = ModuleMap(M, Mp, Matrix(ring, degrees, [remap(image[i]) for i in range(M.ngens)],
                                     M.degrees, reduce=False, check=False))
    to_old = ModuleMap(Mp, M, Matrix(ring, M.degrees, [{(old, one): F.one()} for old in order],
                                     degrees, reduce=False, check=False))
    if M.embedding is not None:
        Mp.embedding = M.embedding.select_columns(order)
    return Mp, to_new, to_old


def subquotient(gens, rels):
    """Presentation of ``(im gens + im rels) / im rels`` on the columns of ``gens``.

    Returns ``(module, map into coker(rels))``.
    """
    ring = gens.ring
    k = gens.ncols
    Z = kernel(gens.hstack(rels))
    top = [{(p, m): c for (p, m), c in col.items() if p < k} for col in Z.columns]
    relm = Matrix(ring, gens.col_degrees, [c for c in top if c],
                  [d for c, d in zip(top, Z.col_degrees) if c], reduce=False, check=False)
    relm = mingens(ring, gens.col_degrees, relm.columns)
    mod = FPModule(ring, gens.col_degrees, relm, embedding=gens)
    amb = FPModule(ring, gens.row_degrees, rels)
    return mod, ModuleMap(mod, amb, gens)


def syzygy(A):
    """Kernel of the map of free modules given by ``A``, as a presented module.

    The returned module's ``embedding`` holds the minimal kernel generators.
    """
    K = kernel(A)
    rel = kernel(K)
    return FPModule(A.ring, K.col_degrees, rel, embedding=K)


class ModuleMap:
    """A degree-0 homomorphism given on generators by ``matrix``."""

    def __init__(self, source, target, matrix, check=False):
        if matrix.nrows != target.ngens or matrix.ncols != source.ngens:
            raise ValueError(
                f"map matrix is {matrix.nrows}x{matrix.ncols}, expected {target.ngens}x{source.ngens}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            if matrix.row_degrees != target.degrees or matrix.col_degrees != source.degrees:
                raise ValueError("map matrix twists do not match the modules")
            matrix.check_homogeneous()
            if not self.is_well_defined():
                raise ValueError("map does not send relations to relations")

    @property
    def ring(self):
        return self.source.ring

    def __repr__(self):
        return f"ModuleMap({self.source.ngens} -> {self.target.ngens})"

    def image_of(self, vec):
        return self.matrix.apply(vec)

    def is_well_defined(self):
        return all(self.target.relations.contains(self.matrix.apply(c))
                   for c in self.source.relations.columns)

    def is_zero(self):
        return all(self.target.relations.contains(c) for c in self.matrix.columns)

    def compose(self, other):
        """``self ∘ other``."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        return ModuleMap(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        return ModuleMap(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self):
        return ModuleMap(self.source, self.target, -self.matrix)

    def equals(self, other):
        return (self - other).is_zero()

    def kernel_generators(self):
        """Generators (in source generator coordinates) of the kernel."""
        k = self.source.ngens
        Z = kernel(self.matrix.hstack(self.target.relations))
        top = [{(p, m): c for (p, m), c in col.items() if p < k} for col in Z.columns]
        return mingens(self.ring, self.source.degrees, top)

    def kernel(self):
        """``(K, inclusion K -> source)`` with K minimally presented."""
        gens = self.kernel_generators()
        K, inc = subquotient(gens, self.source.relations)
        Kp, _, to_old = K.prune()
        inc = ModuleMap(Kp, self.source, (inc.matrix @ to_old.matrix))
        return Kp, inc

    def cokernel(self):
        rel = self.target.relations.hstack(self.matrix)
        C = FPModule(self.ring, self.target.degrees, rel)
        return C, ModuleMap(self.target, C, Matrix.identity(self.ring, self.target.degrees))

    def image(self):
        """``(I, inclusion I -> target)``."""
        I, inc = subquotient(self.matrix, self.target.relations)
        Ip, _, to_old = I.prune()
        return Ip, ModuleMap(Ip, self.target, inc.matrix @ to_old.matrix)

    def is_injective(self):
        gens = self.kernel_generators()
        return all(self.source.relations.contains(c) for c in gens.columns)

    def is_surjective(self):
        return self.cokernel()[0].is_zero()

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()

    def is_exact_with(self, after):
        """Whether ``source -> target -> after.target`` is exact at ``target``."""
        if not after.compose(self).is_zero():
            return False
        image = self.matrix.hstack(self.target.relations)
        return all(image.contains(c) for c in after.kernel_generators().columns)

    def degree_matrix(self, d):
        """The linear map ``source_d -> target_d`` in standard-term bases."""
        F = self.ring.field
        src = self.source.standard_terms(d)
        tgt_terms = self.target.standard_terms(d)
        index = {t: i for i, t in enumerate(tgt_terms)}
        mat = [[F.zero()] * len(src) for _ in tgt_terms]
        for j, (p, m) in enumerate(src):
            v = poly_times_vec(F, {m: F.one()}, self.matrix.columns[p])
            v = self.target.normal_form(v)
            for t, c in v.items():
                mat[index[t]][j] = c
        return mat, len(src), len(tgt_terms)

