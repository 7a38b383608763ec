"""Comparison maps between resolutions and the ``I subset R_1 J`` criterion.

Given resolutions ``F`` of ``I`` and ``G`` of ``J`` with ``I subset J``,
:func:`lift_chain_map` builds degree-0 maps ``f_j : F_j -> G_j`` with
``aug_G o f_0 = aug_F`` and ``f_j o d_F = d_G o f_{j+1}``.  The constrained
variant lifts every column through ``(c_1..c_n) -> sum x_k c_k`` so that all
entries land in the irrelevant ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .free import ChainMap, vec_iadd
from .gb import (
    IdealBasis,
    PlainOrder,
    TopOrder,
    groebner_vectors,
    ideal_membership,
    normal_form,
)
from .linalg import Echelon
from .poly import Poly, add_exp, divides, partial_derivative
from .resolve import Resolution


class LiftError(ArithmeticError):
    pass


class ContainmentError(LiftError):
    pass


class EulerError(ArithmeticError):
    pass


@dataclass
class ComparisonMaps:
    maps: list
    constrained: bool = False

    def __len__(self):
        return len(self.maps)

    def __getitem__(self, j):
        return self.maps[j]

    def min_entry_degree(self):
        """Smallest degree of a nonzero entry, or None when all maps vanish."""
        best = None
        for f in self.maps:
            for col in f.columns:
                for (_, e) in col:
                    d = sum(e)
                    best = d if best is None or d < best else best
        return best


def _image_columns(res: Resolution, j: int):
    """Columns of the map into ``F_j`` (augmentation for ``j = -1``)."""
    return res.differential(j).columns


def _r1_data(res: Resolution, j: int):
    """Tracked Groebner data of ``R_1 * image(F_{j+1} -> F_j)``.

    Inputs are indexed ``k * rank + r`` for ``x_k`` times column ``r``.
    """
    cache = res.__dict__.setdefault("_r1_gb", {})
    if j not in cache:
        ring = res.ring
        cols = _image_columns(res, j)
        inputs = []
        for k in range(ring.nvars):
            xk = tuple(1 if i == k else 0 for i in range(ring.nvars))
            for col in cols:
                inputs.append({(p, add_exp(e, xk)): c for (p, e), c in col.items()})
        if j == -1:
            order = PlainOrder(ring)
            data = groebner_vectors(ring.field, order, inputs, rank_one=True, track=True)
        else:
            order = TopOrder(ring, res.module(j).shifts)
            data = groebner_vectors(ring.field, order, inputs, track=True)
        cache[j] = (data, len(cols))
    return cache[j]


def _express(res: Resolution, j: int, v: dict, constrained: bool):
    """Column in ``F_{j+1}`` mapping onto ``v`` under ``F_{j+1} -> F_j``."""
    ring = res.ring
    fld = ring.field
    if not constrained:
        return res.image_gb(j).express(fld, v)
    data, rank = _r1_data(res, j)
    combo = data.express(fld, v)
    if combo is None:
        return None
    nv = ring.nvars
    merged = {}
    for (idx, e), c in combo.items():
        k, r = divmod(idx, rank)
        xk = tuple(1 if i == k else 0 for i in range(nv))
        vec_iadd(fld, merged, {(r, add_exp(e, xk)): c})
    return merged


def _lift(resM: Resolution, resN: Resolution, constrained: bool) -> ComparisonMaps:
    ring = resM.ring
    if resN.ring != ring:
        raise LiftError("resolutions over different rings")
    J = resN.resolved_ideal
    for g in resM.generators:
        if not ideal_membership(g, J):
            raise ContainmentError(f"generator {g} of the source ideal is not in the target ideal")
    maps = []
    # f_0
    cols = []
    for k, col in enumerate(resM.augmentation.columns):
        c = _express(resN, -1, col, constrained)
        if c is None:
            kind = "R_1-constrained " if constrained else ""
            raise LiftError(f"{kind}lift of generator {k} failed")
        cols.append(c)
    maps.append(ChainMap(resM.module(0), resN.module(0), cols))
    for j in range(resM.length):
        dM = resM.differentials[j]
        f = maps[-1]
        target = resN.module(j + 1)
        cols = []
        for c, col in enumerate(dM.columns):
            v = f.apply_terms(col)
            if not v:
                cols.append({})
                continue
            if j >= resN.length:
                raise LiftError(f"nonzero cycle at level {j} but the target resolution stops")
            w = _express(resN, j, v, constrained)
            if w is None:
                kind = "R_1-constrained " if constrained else ""
                raise LiftError(f"{kind}lift failed at level {j + 1}, column {c}")
            cols.append(w)
        maps.append(ChainMap(resM.module(j + 1), target, cols))
    return ComparisonMaps(maps, constrained)


def lift_chain_map(resM: Resolution, resN: Resolution) -> ComparisonMaps:
    """Comparison maps covering the inclusion ``I(resM) subset I(resN)``."""
    return _lift(resM, resN, False)


def lift_chain_map_R1(resM: Resolution, resN: Resolution) -> ComparisonMaps:
    """Comparison maps whose entries all have positive degree.

    Refuses (:class:`ContainmentError`) unless ``I subset R_1 J``.  A level
    whose cycle is not in ``R_1`` times the next image raises
    :class:`LiftError`.
    """
    if not check_R1_containment(resM.resolved_ideal, resN.resolved_ideal):
        raise ContainmentError("source ideal is not contained in R_1 times the target ideal")
    return _lift(resM, resN, True)


def check_commutation(resM: Resolution, resN: Resolution, cmaps: ComparisonMaps) -> bool:
    """``aug_N o f_0 = aug_M`` and ``f_j o d_M = d_N o f_{j+1}`` exactly."""
    f0 = cmaps.maps[0]
    if (resN.augmentation.compose(f0) - resM.augmentation).is_zero() is False:
        return False
    for j in range(resM.length):
        left = cmaps.maps[j].compose(resM.differentials[j])
        f_next = cmaps.maps[j + 1]
        if j < resN.length:
            right = resN.differentials[j].compose(f_next)
            if not (left - right).is_zero():
                return False
        elif not left.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# containment criterion and witnesses


def _r1_span(J: IdealBasis, t: int) -> Echelon:
    ring = J.ring
    ech = Echelon(ring.field)
    for g in J.minimal_generators() if not J.is_unit() else [ring.one()]:
        d = g.degree()
        if t - d < 1:
            continue
        for m in ring.monomials_of_degree(t - d):
            ech.add({add_exp(e, m): c for e, c in g.terms.items()})
    return ech


def check_R1_containment(I: IdealBasis, J: IdealBasis) -> bool:
    """Every minimal generator of ``I`` lies in the K-span of ``R_1 * J``, degree by degree."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    if I.is_zero():
        return True
    if J.is_zero():
        return False
    spans = {}
    for g in I.minimal_generators():
        t = g.degree()
        if t not in spans:
            spans[t] = _r1_span(J, t)
        if not spans[t].contains(dict(g.terms)):
            return False
    return True


@dataclass
class EulerWitness:
    """``f = sum_i x_i * factors[i]`` with each factor's membership certificate."""

    poly: Poly
    factors: list
    certificates: list
    ok: bool
    failed: list = dc_field(default_factory=list)

    def recombine(self) -> Poly:
        ring = self.poly.ring
        total = ring.zero()
        for i, q in enumerate(self.factors):
            total = total + ring.var(i) * q
        return total


def euler_witness(f: Poly, J: IdealBasis) -> EulerWitness:
    """Decompose ``f`` by Euler's identity and test each ``dF/dx_i / deg`` against ``J``."""
    ring = f.ring
    fld = ring.field
    if not f.is_homogeneous() or f.is_zero():
        raise EulerError("need a nonzero homogeneous form")
    delta = f.degree()
    if fld.from_int(delta) == 0:
        raise EulerError(f"degree {delta} vanishes in characteristic {fld.p}")
    inv = fld.inv(fld.from_int(delta))
    factors, certs, failed = [], [], []
    for i in range(ring.nvars):
        q = partial_derivative(f, i).scale(inv)
        factors.append(q)
        if q.is_zero():
            certs.append([])
            continue
        rem, quot = normal_form(q, J, record=True)
        certs.append(quot)
        if not rem.is_zero():
            failed.append(i)
    return EulerWitness(f, factors, certs, not failed, failed)


def degree_shift_check(I: IdealBasis, J: IdealBasis) -> bool:
    """Smallest generator degree of ``I`` exceeds the largest of ``J``."""
    di = I.generator_degrees()
    dj = J.generator_degrees()
    if not di:
        return True
    return min(di) > max(dj, default=0)


def is_monomial_ideal(I: IdealBasis) -> bool:
    return all(g.is_monomial() for g in I.groebner().gens)


def monomial_containment(I: IdealBasis, J: IdealBasis):
    """Direct check for monomial ideals; None when either is not monomial."""
    if not (is_monomial_ideal(I) and is_monomial_ideal(J)):
        return None
    jm = [g.leading_monomial() for g in J.groebner().gens]
    n = I.ring.nvars
    for g in I.minimal_generators():
        e = g.leading_monomial()
        found = False
        for k in range(n):
            if e[k] == 0:
                continue
            q = tuple(v - (1 if i == k else 0) for i, v in enumerate(e))
            if any(divides(m, q) for m in jm):
                found = True
                break
        if not found:
            return False
    return True


def euler_containment(I: IdealBasis, J: IdealBasis):
    """True when every minimal generator has an Euler witness; None if the characteristic forbids it."""
    p = I.ring.field.p
    gens = I.minimal_generators()
    if p and any(g.degree() >= p for g in gens):
        return None
    return all(euler_witness(g, J).ok for g in gens)


def criterion_witnesses(I: IdealBasis, J: IdealBasis) -> dict:
    """Containment verdict plus every witness that certifies it."""
    fired = []
    if degree_shift_check(I, J):
        fired.append("degree-shift")
    e = euler_containment(I, J)
    if e:
        fired.append("euler")
    mono = monomial_containment(I, J)
    if mono:
        fired.append("monomial-direct")
    verdict = check_R1_containment(I, J)
    if verdict:
        fired.append("linear-algebra")
    return {"holds": verdict, "witnesses": fired}
