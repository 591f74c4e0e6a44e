"""Polynomials, graded quotient rings and ring maps.

A :class:`GradedRing` is ``P/I`` with ``P = F[x_1..x_n]`` positively
graded and ``I`` homogeneous; its irrelevant ideal ``m = (x_1..x_n)``
plays the part of the maximal ideal.  All canonical representatives
are normal forms with respect to the reduced Gröbner basis of ``I``.
"""

from functools import cached_property

from .field import Field
from .gb import Basis, Context, buchberger, mono_degree, mono_mul

__all__ = [
    "TermOrder", "GradedRing", "Polynomial", "RingMap",
    "groebner_basis", "normal_form", "ideal_member", "is_regular_element",
    "apply_map",
]


def _degrevlex_key(m, w):
    return (mono_degree(m, w), tuple(-e for e in reversed(m)))


def _deglex_key(m, w):
    return (mono_degree(m, w), m)


class TermOrder:
    KINDS = {"degrevlex": _degrevlex_key, "deglex": _deglex_key}

    def __init__(self, kind="degrevlex", weights=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        if weights is not None and any(w <= 0 for w in weights):
            raise ValueError("term order weights must be positive")
        self.kind = kind
        self.weights = None if weights is None else tuple(weights)

    @property
    def key(self):
        return self.KINDS[self.kind]

    def __eq__(self, other):
        return isinstance(other, TermOrder) and (self.kind, self.weights) == (other.kind, other.weights)

    def __hash__(self):
        return hash((self.kind, self.weights))

    def __repr__(self):
        return f"TermOrder({self.kind!r})"


class Polynomial:
    """An element of the polynomial ring underlying a :class:`GradedRing`.

    Arithmetic is carried out in ``P``; use :func:`normal_form` (or
    ``ring.reduce``) to obtain the canonical representative modulo ``I``.
    """

    __slots__ = ("ring", "coeffs", "__dict__")

    def __init__(self, ring, coeffs=None):
        self.ring = ring
        F = ring.field
        clean = {}
        for m, c in (coeffs or {}).items():
            if len(m) != ring.nvars:
                raise ValueError(f"exponent vector {m} does not match {ring.nvars} variables")
            c = F(c) if not isinstance(c, int) or F.p == 0 else c % F.p
            if c != 0:
                clean[tuple(m)] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, ring, coeffs):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = coeffs
        return obj

    @cached_property
    def terms(self):
        key = self.ring.ctx.key
        return tuple(sorted(self.coeffs.items(), key=lambda t: key(t[0]), reverse=True))

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead_monomial(self):
        return self.terms[0][0]

    def degrees(self):
        return {self.ring.ctx.degree(m) for m in self.coeffs}

    @property
    def degree(self):
        ds = self.degrees()
        return max(ds) if ds else None

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring.nvars != self.ring.nvars or other.ring.field != self.ring.field:
                raise ValueError("polynomials from incompatible rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = F.add(out.get(m, 0), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial._raw(self.ring, {m: F.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mono_mul(m1, m2)
                v = F.add(out.get(m, 0), F.mul(c1, c2))
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.nvars == other.ring.nvars and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        return self.ring.format_poly(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self})"


class GradedRing:
    """``F[x_1..x_n] / I`` with positive variable degrees and homogeneous I."""

    def __init__(self, field, names, ideal=(), degrees=None, order="degrevlex"):
        if isinstance(field, int):
            field = Field(field)
        self.field = field
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.degrees = tuple(degrees) if degrees is not None else (1,) * self.nvars
        if len(self.degrees) != self.nvars or any(d <= 0 for d in self.degrees):
            raise ValueError("variable degrees must be positive, one per variable")
        self.order = order if isinstance(order, TermOrder) else TermOrder(order, self.degrees)
        self._poly_ctx = Context(field, self.nvars, self.degrees, self.order.key)
        self.ctx = self._poly_ctx
        gens = []
        for g in ideal:
            g = self._import(g)
            if not g.is_homogeneous():
                raise ValueError(f"defining generator {g} is not homogeneous")
            if g and g.degree <= 0:
                raise ValueError(f"defining generator {g} must have positive degree")
            if g:
                gens.append(g)
        self.ideal_gens = tuple(gens)
        gb = groebner_basis(gens, self.order, ring=self) if gens else []
        self.reduced_gb = tuple(gb)
        reducers = [(g.lead_monomial, dict(g.coeffs)) for g in gb]
        self.ctx = Context(field, self.nvars, self.degrees, self.order.key, reducers)
        self._ideal_basis = Basis(self.ctx)

    # -- construction helpers ------------------------------------------------
    def _import(self, g):
        if isinstance(g, Polynomial):
            if g.ring.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return Polynomial._raw(self, dict(g.coeffs))
        if isinstance(g, str):
            return self.parse(g)
        return self.constant(g)

    def __call__(self, value):
        return self._import(value)

    def parse(self, text):
        from .harness.parser import parse_polynomial
        return parse_polynomial(text, self)

    def constant(self, c):
        return Polynomial(self, {tuple([0] * self.nvars): c})

    def zero(self):
        return Polynomial._raw(self, {})

    def one(self):
        return self.constant(1)

    def var(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): self.field.one()})

    @property
    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps, coeff=1):
        return Polynomial(self, {tuple(exps): coeff})

    def format_poly(self, coeffs):
        if not coeffs:
            return "0"
        key = self.ctx.key
        parts = []
        for m, c in sorted(coeffs.items(), key=lambda t: key(t[0]), reverse=True):
            if self.field.p:
                neg = False
                cs = str(c)
            else:
                neg = c < 0
                cs = str(abs(c))
            mono = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(self.names, m) if e)
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if neg:
                parts.append(("-", body))
            else:
                parts.append(("+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ideal arithmetic ----------------------------------------------------
    def reduce(self, f):
        return normal_form(f, self)

    def reduce_dict(self, coeffs):
        if not self.reduced_gb:
            return dict(coeffs)
        v = self._ideal_basis.reduce({(0, m): c for m, c in coeffs.items()})
        return {m: c for (_, m), c in v.items()}

    def is_polynomial_ring(self):
        return not self.reduced_gb

    @cached_property
    def _pure_power_bounds(self):
        bounds = {}
        for g in self.reduced_gb:
            m = g.lead_monomial
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                i = nz[0]
                bounds[i] = min(bounds.get(i, m[i]), m[i])
        return bounds

    def is_artinian(self):
        return len(self._pure_power_bounds) == self.nvars

    @cached_property
    def nilpotency_index(self):
        """Least s with m^s = 0, or None when the ring is not artinian."""
        if not self.is_artinian():
            return None
        s = max((sum(m) for m in self.standard_monomials()), default=0) + 1
        while True:
            if all(not self.reduce_dict({m: 1}) for m in _monomials_of_length(self.nvars, s)):
                return s
            s += 1

    @cached_property
    def _all_standard(self):
        import itertools
        b = self._pure_power_bounds
        leads = [g.lead_monomial for g in self.reduced_gb]
        out = [m for m in itertools.product(*(range(b[i]) for i in range(self.nvars)))
               if not any(all(a <= c for a, c in zip(l, m)) for l in leads)]
        return tuple(sorted(out, key=self.ctx.key))

    def standard_monomials(self, degree=None):
        """Monomials outside the lead ideal: of one degree, or all (artinian)."""
        if degree is None:
            if not self.is_artinian():
                raise ValueError("ring is not artinian")
            return list(self._all_standard)
        leads = [g.lead_monomial for g in self.reduced_gb]
        return [m for m in monomials_of_degree(self.degrees, degree)
                if not any(all(a <= b for a, b in zip(l, m)) for l in leads)]

    def hilbert_function(self, degree):
        return len(self.standard_monomials(degree))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, GradedRing)
            and (self.field, self.names, self.degrees, self.order) ==
            (other.field, other.names, other.degrees, other.order)
            and [g.coeffs for g in self.reduced_gb] == [g.coeffs for g in other.reduced_gb])

    def __hash__(self):
        return hash((self.field, self.names, self.degrees))

    def __repr__(self):
        base = f"{self.field}[{','.join(self.names)}]"
        if self.ideal_gens:
            base += " / (" + ", ".join(str(g) for g in self.ideal_gens) + ")"
        return base


def _monomials_of_length(n, s):
    return monomials_of_degree((1,) * n, s)


def monomials_of_degree(weights, degree):
    n = len(weights)
    out = []
    if degree < 0:
        return out

    def rec(i, left, acc):
        if i == n - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc + [left // weights[i]]))
            return
        for e in range(left // weights[i], -1, -1):
            rec(i + 1, left - e * weights[i], acc + [e])

    if n == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


def groebner_basis(gens, order=None, ring=None):
    """Reduced Gröbner basis of the ideal generated by homogeneous ``gens``.

    Buchberger's algorithm with degree-by-degree (sugar) pair selection and
    full inter-reduction; the output is sorted by decreasing lead monomial.
    """
    gens = [g for g in gens if g]
    if ring is None:
        if not gens:
            return []
        ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"groebner_basis: {g} is not homogeneous")
    if order is None:
        order = ring.order
    weights = order.weights if order.weights is not None else ring.degrees
    ctx = Context(ring.field, ring.nvars, weights, order.key)
    vecs = [{(0, m): c for m, c in g.coeffs.items()} for g in gens]
    basis, _ = buchberger(ctx, (0,), vecs)
    out = []
    for lt, lc, v in basis.elements:
        out.append(Polynomial._raw(ring, {m: c for (_, m), c in v.items()}))
    out.sort(key=lambda p: ctx.key(max(p.coeffs, key=ctx.key)), reverse=True)
    return out


def normal_form(f, ring):
    """Remainder of ``f`` modulo the reduced Gröbner basis of the ring's ideal."""
    if f.ring.nvars != ring.nvars:
        raise ValueError(f"variable-count mismatch: {f.ring.nvars} vs {ring.nvars}")
    return Polynomial._raw(ring, ring.reduce_dict(f.coeffs))


def ideal_member(f, ring):
    return normal_form(f, ring).is_zero()


def is_regular_element(f, ring):
    """True iff multiplication by ``f`` is injective on the ring."""
    f = ring._import(f)
    if not f.is_homogeneous() or f.is_zero() or f.degree <= 0:
        raise ValueError("is_regular_element needs a homogeneous element of positive degree")
    from .modules import Matrix, kernel
    col = {(0, m): c for m, c in ring.reduce_dict(f.coeffs).items()}
    if not col:
        return False
    A = Matrix(ring, [0], [col], [f.degree])
    # (0 :_R f) is the kernel of the 1x1 matrix [f]
    return kernel(A).ncols == 0


class RingMap:
    """A degree-preserving homomorphism ``source -> target``.

    ``images`` gives one homogeneous target element per source variable.
    """

    def __init__(self, source, target, images, check=True):
        if len(images) != source.nvars:
            raise ValueError(f"ring map needs {source.nvars} images, got {len(images)}")
        if source.field != target.field:
            raise ValueError("ring map between different coefficient fields")
        self.source = source
        self.target = target
        self.images = tuple(normal_form(target._import(f), target) for f in images)
        if check:
            for i, f in enumerate(self.images):
                if f and (not f.is_homogeneous() or f.degree != source.degrees[i]):
                    raise ValueError(
                        f"image of {source.names[i]} must be homogeneous of degree {source.degrees[i]}")
            for g in source.ideal_gens:
                if not apply_map(self, g).is_zero():
                    raise ValueError(f"ring map does not kill defining relation {g}")

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.gens, check=False)

    def is_identity(self):
        return self.source is self.target and all(
            f == self.target.var(i) for i, f in enumerate(self.images))

    def apply_dict(self, coeffs):
        """Image of a source polynomial dict, as a reduced target dict."""
        if self.is_identity():
            return self.target.reduce_dict(coeffs)
        cache = self.__dict__.setdefault("_powers", {})
        tgt = self.target
        F = tgt.field
        out = {}
        for m, c in coeffs.items():
            term = {tgt.ctx.one: c}
            for i, e in enumerate(m):
                if e:
                    pw = cache.get((i, e))
                    if pw is None:
                        pw = tgt.reduce_dict((self.images[i] ** e).coeffs)
                        cache[(i, e)] = pw
                    term = _mul_dicts(F, term, pw)
            for mm, cc in term.items():
                v = F.add(out.get(mm, 0), cc)
                if v == 0:
                    out.pop(mm, None)
                else:
                    out[mm] = v
        return tgt.reduce_dict(out)

    def __call__(self, f):
        return apply_map(self, f)

    def __repr__(self):
        return f"RingMap({self.source} -> {self.target}: {[str(f) for f in self.images]})"


def _mul_dicts(F, a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = mono_mul(m1, m2)
            v = F.add(out.get(m, 0), F.mul(c1, c2))
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
    return out


def apply_map(phi, f):
    """Substitute the images of the variables, then reduce in the target."""
    if f.ring.nvars != phi.source.nvars:
        raise ValueError("apply_map: polynomial is not over the map's source")
    return Polynomial._raw(phi.target, phi.apply_dict(f.coeffs))
