"""Homogeneous Buchberger algorithm for submodules of free modules over P/I.

Vectors are dicts ``{(pos, mono): coeff}`` where ``mono`` is an exponent
tuple.  The module order is position-over-term with *smaller* positions
larger, so an elimination of a block of positions is obtained by placing
that block first.  The defining ideal I of the ambient ring enters as
virtual generators ``g * e_pos`` for every ``g`` in its reduced basis;
they are never stored, only used as reducers and S-pair partners.
"""

import heapq


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_degree(m, weights):
    return sum(e * w for e, w in zip(m, weights))


class Context:
    """Arithmetic context shared by all computations over one ring.

    ``reducers`` holds the monic reduced Gröbner basis of the defining
    ideal as ``(lead_mono, poly_dict)`` pairs.
    """

    def __init__(self, field, nvars, weights, order_key, reducers=()):
        self.field = field
        self.nvars = nvars
        self.weights = tuple(weights)
        self._order_key = order_key
        self._keys = {}
        self.reducers = tuple(reducers)
        self.one = tuple([0] * nvars)

    def key(self, mono):
        k = self._keys.get(mono)
        if k is None:
            k = self._order_key(mono, self.weights)
            self._keys[mono] = k
        return k

    def term_key(self, term):
        return (-term[0], self.key(term[1]))

    def degree(self, mono):
        return mono_degree(mono, self.weights)


def lead_term(ctx, v):
    return max(v, key=ctx.term_key)


def vec_degree(ctx, v, twists):
    pos, m = next(iter(v))
    return ctx.degree(m) + twists[pos]


def add_scaled(ctx, target, src, coeff, shift=None, pos=None):
    """target += coeff * x^shift * src, in place.

    ``src`` is a vector, or a polynomial dict placed at ``pos``.
    """
    p = ctx.field.p
    if pos is None:
        items = src.items() if shift is None else (
            ((q, mono_mul(m, shift)), c) for (q, m), c in src.items())
    else:
        items = (((pos, m if shift is None else mono_mul(m, shift)), c)
                 for m, c in src.items())
    for t, c in items:
        val = target.get(t, 0) + coeff * c
        if p:
            val %= p
        if val == 0:
            target.pop(t, None)
        else:
            target[t] = val
    return target


class Basis:
    """A set of module elements indexed by lead position for reduction."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.elements = []          # (lead_term, lead_coeff, vec)
        self.by_pos = {}

    def add(self, v):
        lt = lead_term(self.ctx, v)
        entry = (lt, v[lt], v)
        self.elements.append(entry)
        self.by_pos.setdefault(lt[0], []).append(entry)
        return entry

    def find(self, term):
        pos, m = term
        for lm, g in self.ctx.reducers:
            if mono_divides(lm, m):
                return (lm, 1, g, True)
        for (lp, lm), lc, g in self.by_pos.get(pos, ()):
            if mono_divides(lm, m):
                return (lm, lc, g, False)
        return None

    def reduce(self, v, full=True):
        """Remainder of ``v`` (not modified) under division by the basis."""
        ctx = self.ctx
        F = ctx.field
        work = dict(v)
        rem = {}
        while work:
            t = max(work, key=ctx.term_key)
            c = work[t]
            r = self.find(t)
            if r is None:
                if not full:
                    rem.update(work)
                    return rem
                rem[t] = c
                del work[t]
                continue
            lm, lc, g, is_ideal = r
            f = F.neg(F.div(c, lc))
            shift = mono_div(t[1], lm)
            if is_ideal:
                add_scaled(ctx, work, g, f, shift, pos=t[0])
            else:
                add_scaled(ctx, work, g, f, shift)
        return rem

    def is_standard(self, term):
        return self.find(term) is None


def _spair(ctx, a, b):
    (ta, ca, va), (tb, cb, vb) = a, b
    lcm = mono_lcm(ta[1], tb[1])
    F = ctx.field
    s = add_scaled(ctx, {}, va, F.inv(ca), mono_div(lcm, ta[1]))
    return add_scaled(ctx, s, vb, F.neg(F.inv(cb)), mono_div(lcm, tb[1]))


def _ideal_spair(ctx, a, k):
    ta, ca, va = a
    lm, g = ctx.reducers[k]
    lcm = mono_lcm(ta[1], lm)
    F = ctx.field
    s = add_scaled(ctx, {}, va, F.inv(ca), mono_div(lcm, ta[1]))
    return add_scaled(ctx, s, g, F.neg(F.one()), mono_div(lcm, lm), pos=ta[0])


def buchberger(ctx, twists, gens, minimal=False, reduced=True):
    """Gröbner basis of the submodule spanned by ``gens`` plus I * free.

    Pairs are processed degree by degree (for homogeneous input the sugar
    degree is the true degree), ties broken by position and lcm order.
    Returns ``(basis, kept)`` where ``kept`` lists the indices of the input
    generators that were not redundant when reached: with ``minimal`` these
    form a minimal generating set of the submodule modulo I.
    """
    basis = Basis(ctx)
    pending = []
    seq = 0
    for idx, g in enumerate(gens):
        if g:
            heapq.heappush(pending, (vec_degree(ctx, g, twists), 1, (), seq, idx))
            seq += 1
    kept = []
    pairs = []

    def push_pairs(i):
        nonlocal seq
        ti = basis.elements[i][0]
        pos, mi = ti
        cand = []
        for j in range(i):
            tj = basis.elements[j][0]
            if tj[0] != pos:
                continue
            lcm = mono_lcm(mi, tj[1])
            cand.append((lcm, j))
        for k, (lm, _) in enumerate(ctx.reducers):
            lcm = mono_lcm(mi, lm)
            cand.append((lcm, -1 - k))
        # chain criterion on the new pairs: drop (i, j) when some other new
        # pair's lcm properly divides it
        keep = []
        for lcm, j in cand:
            dominated = False
            for lcm2, j2 in cand:
                if j2 != j and lcm2 != lcm and mono_divides(lcm2, lcm):
                    dominated = True
                    break
            if not dominated:
                keep.append((lcm, j))
        seen = set()
        for lcm, j in keep:
            if lcm in seen and j >= 0:
                continue
            seen.add(lcm)
            deg = ctx.degree(lcm) + twists[pos]
            heapq.heappush(pairs, (deg, 0, ctx.key(lcm), seq, (i, j)))
            seq += 1

    def insert(v):
        basis.add(v)
        push_pairs(len(basis.elements) - 1)

    while pairs or pending:
        deg_p = pairs[0][0] if pairs else None
        deg_g = pending[0][0] if pending else None
        if deg_g is None or (deg_p is not None and deg_p <= deg_g):
            _, _, _, _, (i, j) = heapq.heappop(pairs)
            if j >= 0:
                s = _spair(ctx, basis.elements[i], basis.elements[j])
            else:
                s = _ideal_spair(ctx, basis.elements[i], -1 - j)
            if s:
                r = basis.reduce(s)
                if r:
                    insert(r)
        else:
            _, _, _, _, idx = heapq.heappop(pending)
            r = basis.reduce(gens[idx])
            if r:
                kept.append(idx)
                insert(r)

    if reduced:
        basis = interreduce(ctx, basis)
    return basis, kept


def interreduce(ctx, basis):
    """Reduced basis: minimal leads, tails reduced, monic."""
    F = ctx.field
    elems = basis.elements
    keep = []
    for a, (ta, _, va) in enumerate(elems):
        redundant = False
        for b, (tb, _, _) in enumerate(elems):
            if b != a and tb[0] == ta[0] and mono_divides(tb[1], ta[1]) and (tb != ta or b < a):
                redundant = True
                break
        if not redundant:
            keep.append(va)
    tmp = Basis(ctx)
    for v in keep:
        tmp.add(v)
    out = Basis(ctx)
    for lt, lc, v in sorted(tmp.elements, key=lambda e: ctx.term_key(e[0]), reverse=True):
        tail = dict(v)
        del tail[lt]
        tail = tmp.reduce(tail)
        inv = F.inv(lc)
        new = {t: F.mul(c, inv) for t, c in tail.items()}
        new[lt] = F.one()
        out.add(new)
    return out
