"""Buchberger's algorithm for ideals and graded submodules of free modules.

Everything runs on sparse vectors ``{(pos, exp): coeff}``.  Pairs are chosen
by the normal strategy (smallest lcm degree first, ties by generator index)
and pruned with Buchberger's product and chain criteria.  When generators are
homogeneous, inputs are interleaved with S-pairs degree by degree, which also
identifies a minimal generating subset of the input for free.

Syzygies are read off the S-pair reductions (Schreyer) and pulled back to the
original generators through the recorded representations.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .free import FreeModule, ModuleVector, vec_iadd, vec_neg, vec_scale_poly
from .poly import (
    BlockElimination,
    MonomialOrder,
    Poly,
    Ring,
    add_exp,
    divides,
    lcm_exp,
    sub_exp,
)


# ---------------------------------------------------------------------------
# term orders on (pos, exp)


class TermOrder:
    """Order on module terms; ``key`` is a flat int tuple, larger is bigger."""

    def __init__(self, ring: Ring, shifts=(0,)):
        self.ring = ring
        self.shifts = tuple(shifts)
        self._keys = {}
        self._nkeys = {}

    def degree(self, term) -> int:
        return self.ring.wdeg(term[1]) + self.shifts[term[0]]

    def key(self, term):
        k = self._keys.get(term)
        if k is None:
            k = self._keys[term] = self._key(term)
        return k

    def nkey(self, term):
        k = self._nkeys.get(term)
        if k is None:
            k = self._nkeys[term] = tuple([-v for v in self.key(term)])
        return k


class PlainOrder(TermOrder):
    """Ring order, ties by position.  Used for ideals."""

    def _key(self, term):
        return self.ring.key(term[1]) + (-term[0],)


class TopOrder(TermOrder):
    """Degree (with shifts) first, then ring order, then position (lower index larger)."""

    def _key(self, term):
        return (self.degree(term),) + self.ring.key(term[1]) + (-term[0],)


class SchreyerOrder(TermOrder):
    """``x^a e_i`` compared by ``x^a * lt(g_i)`` in the parent order, ties by position."""

    def __init__(self, ring: Ring, parent: TermOrder, leads, shifts):
        super().__init__(ring, shifts)
        self.parent = parent
        self.leads = list(leads)

    def _key(self, term):
        p, e = term
        lp, le = self.leads[p]
        return self.parent.key((lp, add_exp(le, e))) + (-p,)


# ---------------------------------------------------------------------------
# reduction


def _find_divisor(lts_by_pos, term):
    p, e = term
    for k, le in lts_by_pos.get(p, ()):
        if divides(le, e):
            return k, le
    return None


def _reduce(fld, order, vec, gens, lts_by_pos, lcs, record=False, full=True):
    """Reduce ``vec`` (consumed) by ``gens``.

    Returns ``(remainder, quotients)`` with ``quotients`` a dict
    ``k -> {exp: coeff}`` such that ``vec = sum q_k * gens[k] + remainder``.
    """
    nkey = order.nkey
    heap = [(nkey(t), t) for t in vec]
    heapq.heapify(heap)
    rem = {}
    quot = {} if record else None
    div, mul, sub, neg = fld.div, fld.mul, fld.sub, fld.neg
    while heap:
        _, t = heapq.heappop(heap)
        c = vec.get(t)
        if c is None:
            continue
        hit = _find_divisor(lts_by_pos, t)
        if hit is None:
            rem[t] = c
            del vec[t]
            if not full:
                rem.update(vec)
                vec.clear()
                break
            continue
        k, le = hit
        mexp = sub_exp(t[1], le)
        m = div(c, lcs[k])
        for (p, e), gc in gens[k].items():
            tt = (p, add_exp(e, mexp))
            d = mul(m, gc)
            v = vec.get(tt)
            if v is None:
                vec[tt] = neg(d)
                heapq.heappush(heap, (nkey(tt), tt))
            else:
                v = sub(v, d)
                if v == 0:
                    del vec[tt]
                else:
                    vec[tt] = v
        if record:
            q = quot.setdefault(k, {})
            old = q.get(mexp)
            if old is None:
                q[mexp] = m
            else:
                old = fld.add(old, m)
                if old == 0:
                    del q[mexp]
                else:
                    q[mexp] = old
    return rem, quot


def _leading(order, vec):
    return max(vec, key=order.key)


# ---------------------------------------------------------------------------
# Buchberger


@dataclass
class GBData:
    """Raw result of :func:`groebner_vectors`."""

    order: TermOrder
    gens: list
    lts: list
    reps: list = None
    minimal_inputs: list = dc_field(default_factory=list)
    ninputs: int = 0

    def __post_init__(self):
        self.lts_by_pos = {}
        for k, t in enumerate(self.lts):
            self.lts_by_pos.setdefault(t[0], []).append((k, t[1]))
        self.lcs = [g[t] for g, t in zip(self.gens, self.lts)]

    def reduce(self, fld, terms: dict, record=False):
        return _reduce(fld, self.order, dict(terms), self.gens, self.lts_by_pos, self.lcs, record)

    def express(self, fld, terms: dict):
        """Write ``terms`` (assumed in the span) through the *inputs*; None if not a member."""
        rem, quot = self.reduce(fld, terms, record=True)
        if rem:
            return None
        out = {}
        for k, q in quot.items():
            vec_iadd(fld, out, vec_scale_poly(fld, self.reps[k], q))
        return out


def groebner_vectors(fld, order: TermOrder, inputs, *, rank_one=False, track=False, reduce=True):
    """Buchberger on sparse vectors.

    ``inputs`` is a list of term dicts.  With ``track`` each basis element
    carries its representation in the free module on the inputs (position =
    input index).  Returns a :class:`GBData`; its ``gens`` form a reduced
    Groebner basis (monic) sorted ascending by leading term when ``reduce``.
    """
    nvars = order.ring.nvars
    zero_exp = (0,) * nvars
    G, L, LC, REP = [], [], [], []
    lts_by_pos = {}
    pairs = []
    pending = set()
    minimal = []

    queue = []
    for idx, v in enumerate(inputs):
        if v:
            queue.append((max(order.degree(t) for t in v), idx))
    queue.sort()
    qpos = 0

    def add(vec, rep):
        lt = _leading(order, vec)
        lc = vec[lt]
        if lc != fld.one:
            inv = fld.inv(lc)
            vec = {t: fld.mul(c, inv) for t, c in vec.items()}
            if rep is not None:
                rep = {t: fld.mul(c, inv) for t, c in rep.items()}
        n = len(G)
        for k in range(n):
            lk = L[k]
            if lk[0] != lt[0]:
                continue
            if rank_one and all(a == 0 or b == 0 for a, b in zip(lk[1], lt[1])):
                continue
            d = order.degree((lt[0], lcm_exp(lk[1], lt[1])))
            heapq.heappush(pairs, (d, k, n))
            pending.add((k, n))
        G.append(vec)
        L.append(lt)
        LC.append(fld.one)
        REP.append(rep)
        lts_by_pos.setdefault(lt[0], []).append((n, lt[1]))

    def chain(i, j):
        lp = L[i][0]
        lcm = lcm_exp(L[i][1], L[j][1])
        for k, le in lts_by_pos.get(lp, ()):
            if k == i or k == j or not divides(le, lcm):
                continue
            if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
                continue
            return True
        return False

    def finish(vec, rep0, quot):
        rem = vec
        rep = None
        if track:
            rep = dict(rep0)
            for k, q in quot.items():
                vec_iadd(fld, rep, vec_neg(fld, vec_scale_poly(fld, REP[k], q)))
        return rem, rep

    while True:
        dp = pairs[0][0] if pairs else None
        di = queue[qpos][0] if qpos < len(queue) else None
        if dp is None and di is None:
            break
        if dp is not None and (di is None or dp <= di):
            _, i, j = heapq.heappop(pairs)
            pending.discard((i, j))
            if chain(i, j):
                continue
            lcm = lcm_exp(L[i][1], L[j][1])
            mi = sub_exp(lcm, L[i][1])
            mj = sub_exp(lcm, L[j][1])
            s = {}
            vec_iadd(fld, s, G[i], mi)
            vec_iadd(fld, s, G[j], mj, fld.neg(fld.one))
            rep0 = None
            if track:
                rep0 = {}
                vec_iadd(fld, rep0, REP[i], mi)
                vec_iadd(fld, rep0, REP[j], mj, fld.neg(fld.one))
            if not s:
                continue
            rem, quot = _reduce(fld, order, s, G, lts_by_pos, LC, record=track)
            if rem:
                add(*finish(rem, rep0, quot))
        else:
            _, idx = queue[qpos]
            qpos += 1
            rep0 = {(idx, zero_exp): fld.one} if track else None
            rem, quot = _reduce(fld, order, dict(inputs[idx]), G, lts_by_pos, LC, record=track)
            if rem:
                minimal.append(idx)
                add(*finish(rem, rep0, quot))

    if not reduce:
        return GBData(order, G, L, REP if track else None, minimal, len(inputs))

    # minimal basis, then tail reduction
    keep = []
    for i, (p, e) in enumerate(L):
        redundant = False
        for k, (q, f) in enumerate(L):
            if k != i and q == p and divides(f, e) and (f != e or k < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    keep.sort(key=lambda i: order.key(L[i]))
    G2 = [G[i] for i in keep]
    L2 = [L[i] for i in keep]
    R2 = [REP[i] for i in keep] if track else None
    by_pos = {}
    for k, t in enumerate(L2):
        by_pos.setdefault(t[0], []).append((k, t[1]))
    lcs = [fld.one] * len(G2)
    for k in range(len(G2)):
        vec = dict(G2[k])
        lt = L2[k]
        del vec[lt]
        others = {p: [(j, e) for j, e in lst if j != k] for p, lst in by_pos.items()}
        rem, quot = _reduce(fld, order, vec, G2, others, lcs, record=track)
        rem[lt] = fld.one
        G2[k] = rem
        if track and quot:
            rep = dict(R2[k])
            for j, q in quot.items():
                vec_iadd(fld, rep, vec_neg(fld, vec_scale_poly(fld, R2[j], q)))
            R2[k] = rep
    return GBData(order, G2, L2, R2, minimal, len(inputs))


# ---------------------------------------------------------------------------
# public bases


def poly_to_vec(f: Poly) -> dict:
    return {(0, e): c for e, c in f.terms.items()}


def vec_to_poly(ring: Ring, v: dict) -> Poly:
    return Poly(ring, {e: c for (_, e), c in v.items()})


class IdealBasis:
    """Generators of a homogeneous ideal; Groebner data is computed lazily."""

    def __init__(self, ring: Ring, gens, is_groebner=False, order: MonomialOrder = None):
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.is_groebner = is_groebner
        self.order = order or ring.order
        self._gb = None
        self._gb_tracked = None
        self._minimal = None

    def __repr__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __len__(self):
        return len(self.gens)

    def _term_order(self):
        return PlainOrder(self.ring)

    def gb_data(self, track=False) -> GBData:
        if track:
            if self._gb_tracked is None:
                self._gb_tracked = groebner_vectors(
                    self.ring.field, self._term_order(), [poly_to_vec(g) for g in self.gens],
                    rank_one=True, track=True,
                )
            return self._gb_tracked
        if self._gb is None:
            if self._gb_tracked is not None:
                self._gb = self._gb_tracked
            else:
                self._gb = groebner_vectors(
                    self.ring.field, self._term_order(), [poly_to_vec(g) for g in self.gens],
                    rank_one=True,
                )
        return self._gb

    def groebner(self) -> "IdealBasis":
        """Reduced Groebner basis, sorted ascending by leading monomial."""
        data = self.gb_data()
        out = IdealBasis(self.ring, [vec_to_poly(self.ring, g) for g in data.gens], True, self.order)
        out._gb = data
        return out

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_unit(self) -> bool:
        return any(not any(t[1]) for t in self.gb_data().lts)

    def is_zero(self) -> bool:
        return not self.gens

    def minimal_generators(self):
        """A minimal homogeneous generating set, drawn from the reduced Groebner basis."""
        if self._minimal is None:
            gb = self.groebner().gens
            data = groebner_vectors(self.ring.field, self._term_order(), [poly_to_vec(g) for g in gb], rank_one=True, reduce=False)
            self._minimal = [gb[i] for i in sorted(data.minimal_inputs)]
        return self._minimal

    def generator_degrees(self):
        return [g.degree() for g in self.minimal_generators()]

    def contains(self, f: Poly) -> bool:
        return ideal_membership(f, self)

    def __eq__(self, other):
        if not isinstance(other, IdealBasis):
            return NotImplemented
        return self.ring == other.ring and self.groebner().gens == other.groebner().gens

    def __hash__(self):
        return hash(tuple(self.groebner().gens))


class ModuleBasis:
    """Generators of a graded submodule of ``ambient``."""

    def __init__(self, ambient: FreeModule, gens, is_groebner=False, order: TermOrder = None):
        self.ambient = ambient
        self.gens = [g if isinstance(g, ModuleVector) else ModuleVector(ambient, g) for g in gens]
        self.gens = [g for g in self.gens if not g.is_zero()]
        self.is_groebner = is_groebner
        self.module_order = order or TopOrder(ambient.ring, ambient.shifts)
        self._gb = None
        self._gb_tracked = None

    def __len__(self):
        return len(self.gens)

    def gb_data(self, track=False) -> GBData:
        fld = self.ambient.ring.field
        if track:
            if self._gb_tracked is None:
                self._gb_tracked = groebner_vectors(fld, self.module_order, [g.terms for g in self.gens], track=True)
            return self._gb_tracked
        if self._gb is None:
            self._gb = self._gb_tracked or groebner_vectors(fld, self.module_order, [g.terms for g in self.gens])
        return self._gb

    def groebner(self) -> "ModuleBasis":
        data = self.gb_data()
        out = ModuleBasis(self.ambient, [ModuleVector(self.ambient, g) for g in data.gens], True, self.module_order)
        out._gb = data
        return out

    def minimal_generators(self):
        data = groebner_vectors(self.ambient.ring.field, self.module_order, [g.terms for g in self.gens], reduce=False)
        return [self.gens[i] for i in sorted(data.minimal_inputs)]

    def contains(self, v: ModuleVector) -> bool:
        rem, _ = self.gb_data().reduce(self.ambient.ring.field, v.terms)
        return not rem


# ---------------------------------------------------------------------------
# operations


def buchberger(basis):
    """Reduced Groebner basis of an :class:`IdealBasis` or :class:`ModuleBasis`."""
    return basis.groebner()


def normal_form(f, gb, record=False):
    """``(remainder, quotients)`` of ``f`` against the Groebner basis of ``gb``.

    ``quotients[k]`` multiplies ``gb.groebner().gens[k]``; it is None unless
    ``record``.
    """
    data = gb.gb_data()
    if isinstance(f, Poly):
        ring = f.ring
        rem, quot = data.reduce(ring.field, poly_to_vec(f), record)
        r = vec_to_poly(ring, rem)
        if not record:
            return r, None
        qs = [Poly(ring, dict(quot.get(k, {}))) for k in range(len(data.gens))]
        return r, qs
    ring = f.module.ring
    rem, quot = data.reduce(ring.field, f.terms, record)
    r = ModuleVector(f.module, rem)
    if not record:
        return r, None
    return r, [Poly(ring, dict(quot.get(k, {}))) for k in range(len(data.gens))]


def ideal_membership(f: Poly, I: IdealBasis) -> bool:
    if f.is_zero():
        return True
    rem, _ = normal_form(f, I)
    return rem.is_zero()


def ideal_power(I: IdealBasis, n: int) -> IdealBasis:
    if n < 0:
        raise ValueError("negative power")
    ring = I.ring
    if n == 0:
        return IdealBasis(ring, [ring.one()])
    gens = list(I.gens)
    cur = list(gens)
    for _ in range(n - 1):
        seen = {}
        for a in cur:
            for b in gens:
                p = a * b
                seen.setdefault(frozenset(p.terms.items()), p)
        cur = list(seen.values())
    return IdealBasis(ring, cur)


def _aux_ring(ring: Ring) -> Ring:
    """``K[t, x...]`` with ``t`` of weight 0 and a block order eliminating ``t``."""
    names = ("_t",) + ring.names
    return Ring(ring.nvars + 1, names, ring.field, False, BlockElimination(1), (0,) + tuple(ring.weights))


def ideal_intersection(I: IdealBasis, J: IdealBasis) -> IdealBasis:
    """Intersection via the elimination of ``t`` from ``t*I + (1-t)*J``."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return IdealBasis(ring, [])
    S = _aux_ring(ring)
    fld = ring.field
    t_exp = (1,) + (0,) * ring.nvars
    inputs = []
    for f in I.gens:
        inputs.append({(0, (1,) + e): c for e, c in f.terms.items()})
    for g in J.gens:
        v = {}
        for e, c in g.terms.items():
            v[(0, (0,) + e)] = c
            v[(0, add_exp((0,) + e, t_exp))] = fld.neg(c)
        inputs.append(v)
    data = groebner_vectors(fld, PlainOrder(S), inputs, rank_one=True)
    out = []
    for g in data.gens:
        if all(e[0] == 0 for (_, e) in g):
            out.append(Poly(ring, {e[1:]: c for (_, e), c in g.items()}))
    res = IdealBasis(ring, out, is_groebner=True)
    return res.groebner()


def ideal_intersection_many(ideals) -> IdealBasis:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_intersection(acc, J)
    return acc


def exact_division(g: Poly, f: Poly) -> Poly:
    """``g / f`` when ``f`` divides ``g``; raises otherwise."""
    data = groebner_vectors(g.ring.field, PlainOrder(g.ring), [poly_to_vec(f)], rank_one=True, reduce=False)
    rem, quot = data.reduce(g.ring.field, poly_to_vec(g), record=True)
    if rem:
        raise ArithmeticError(f"{f} does not divide {g}")
    q = Poly(g.ring, dict(quot.get(0, {})))
    return q.scale(g.ring.field.inv(f.leading_coefficient()))


def colon_ideal(I: IdealBasis, f: Poly) -> IdealBasis:
    """``I : (f)`` computed as ``(I cap (f)) / f``."""
    if f.is_zero():
        raise ValueError("colon by zero")
    K = ideal_intersection(I, IdealBasis(I.ring, [f]))
    return IdealBasis(I.ring, [exact_division(g, f) for g in K.gens]).groebner()


def ideal_sum(*ideals) -> IdealBasis:
    ring = ideals[0].ring
    gens = []
    for I in ideals:
        gens.extend(I.gens)
    return IdealBasis(ring, gens)


def hilbert_function(I: IdealBasis, t: int) -> int:
    """``dim_K (R/I)_t`` by counting standard monomials."""
    if t < 0:
        return 0
    lts = [e for (_, e) in I.gb_data().lts]
    count = 0
    for m in I.ring.monomials_of_degree(t):
        if not any(divides(e, m) for e in lts):
            count += 1
    return count


def ideal_dimension(I: IdealBasis, t: int) -> int:
    """``dim_K I_t``."""
    return len(I.ring.monomials_of_degree(t)) - hilbert_function(I, t)


# ---------------------------------------------------------------------------
# syzygies


def _as_vectors(gens):
    """Normalise Polys / ModuleVectors to (ambient FreeModule, [term dicts])."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if isinstance(gens[0], Poly):
        ring = gens[0].ring
        return FreeModule(ring, (0,)), [poly_to_vec(g) for g in gens]
    return gens[0].module, [g.terms for g in gens]


def schreyer_syzygies(fld, data: GBData, shifts):
    """Syzygies of the Groebner basis ``data.gens`` from S-pair reductions.

    Only pairs whose leading-term syzygy is a minimal generator of the
    leading-term module on its position are used; the resulting vectors
    (in the free module on the basis, with the given shifts) still form a
    Groebner basis for the Schreyer order.
    """
    n = len(data.gens)
    L = data.lts
    out = []
    one = fld.one
    for k in range(n):
        cands = []
        for l in range(k + 1, n):
            if L[l][0] != L[k][0]:
                continue
            m = sub_exp(lcm_exp(L[k][1], L[l][1]), L[k][1])
            cands.append((l, m))
        chosen = []
        for l, m in cands:
            dominated = False
            for l2, m2 in cands:
                if l2 != l and divides(m2, m) and (m2 != m or l2 < l):
                    dominated = True
                    break
            if not dominated:
                chosen.append((l, m))
        for l, mk in chosen:
            lcm = add_exp(L[k][1], mk)
            ml = sub_exp(lcm, L[l][1])
            ck = fld.inv(data.lcs[k])
            cl = fld.inv(data.lcs[l])
            s = {}
            vec_iadd(fld, s, data.gens[k], mk, ck)
            vec_iadd(fld, s, data.gens[l], ml, fld.neg(cl))
            rem, quot = data.reduce(fld, s, record=True)
            if rem:
                raise ArithmeticError("S-pair failed to reduce to zero; basis is not Groebner")
            tau = {(k, mk): ck}
            vec_iadd(fld, tau, {(l, ml): fld.neg(cl)})
            for j, q in quot.items():
                for e, c in q.items():
                    vec_iadd(fld, tau, {(j, e): fld.neg(c)})
            out.append(tau)
    return out


def syzygy_vectors(fld, ambient: FreeModule, vecs, minimal=True):
    """Generators of the kernel of ``e_i -> vecs[i]``, as term dicts on the inputs.

    Returns ``(shifts, syzygies)`` where ``shifts[i]`` is the degree of
    ``vecs[i]``.
    """
    ring = ambient.ring
    shifts = []
    for v in vecs:
        if not v:
            raise ValueError("zero generator has no degree")
        degs = {ambient.term_degree(t) for t in v}
        if len(degs) != 1:
            raise ValueError("generators must be homogeneous")
        shifts.append(degs.pop())
    order = TopOrder(ring, ambient.shifts) if ambient.rank > 1 or any(ambient.shifts) else PlainOrder(ring)
    rank_one = ambient.rank == 1
    data = groebner_vectors(fld, order, vecs, rank_one=rank_one, track=True)
    gb_shifts = [order.degree(t) for t in data.lts]
    taus = schreyer_syzygies(fld, data, gb_shifts)
    raw = []
    for tau in taus:
        acc = {}
        for (j, e), c in tau.items():
            vec_iadd(fld, acc, data.reps[j], e, c)
        if acc:
            raw.append(acc)
    zero_exp = (0,) * ring.nvars
    for i, v in enumerate(vecs):
        rem, quot = data.reduce(fld, v, record=True)
        assert not rem
        acc = {(i, zero_exp): fld.one}
        for j, q in quot.items():
            vec_iadd(fld, acc, vec_neg(fld, vec_scale_poly(fld, data.reps[j], q)))
        if acc:
            raw.append(acc)
    if minimal and raw:
        src_order = TopOrder(ring, shifts)
        md = groebner_vectors(fld, src_order, raw, reduce=False)
        raw = [raw[i] for i in sorted(md.minimal_inputs)]
    return shifts, raw


def syzygies(gens, minimal=True) -> ModuleBasis:
    """Syzygy module of homogeneous generators (Polys or ModuleVectors)."""
    ambient, vecs = _as_vectors(gens)
    ring = ambient.ring
    shifts, raw = syzygy_vectors(ring.field, ambient, vecs, minimal)
    src = FreeModule(ring, shifts)
    return ModuleBasis(src, [ModuleVector(src, v) for v in raw])


def verify_groebner(fld, data: GBData) -> bool:
    """Every S-pair of the basis reduces to zero (no criteria applied)."""
    n = len(data.gens)
    for i in range(n):
        for j in range(i + 1, n):
            if data.lts[i][0] != data.lts[j][0]:
                continue
            lcm = lcm_exp(data.lts[i][1], data.lts[j][1])
            s = {}
            vec_iadd(fld, s, data.gens[i], sub_exp(lcm, data.lts[i][1]), fld.inv(data.lcs[i]))
            vec_iadd(fld, s, data.gens[j], sub_exp(lcm, data.lts[j][1]), fld.neg(fld.inv(data.lcs[j])))
            rem, _ = data.reduce(fld, s)
            if rem:
                return False
    return True
