import random

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import in_span, monomials
from fatcone.arith import GF, QQ
from fatcone.fatpoints import FatPointScheme, fat_point_ideal, truncation
from fatcone.gb import IdealBasis, ideal_membership
from fatcone.lift import (
    ContainmentError,
    EulerError,
    check_R1_containment,
    check_commutation,
    criterion_witnesses,
    degree_shift_check,
    euler_witness,
    lift_chain_map,
    lift_chain_map_R1,
    monomial_containment,
)
from fatcone.poly import polynomial_ring, standard_ring
from fatcone.resolve import direct_resolution, unit_resolution

R = polynomial_ring("x,y")
x, y = R.gens()


def ideal(*gens):
    return IdealBasis(gens[0].ring, list(gens))


def brute_R1(I, J):
    """Every minimal generator of I is a K-combination of x_k * (basis of J_{t-1})."""
    ring = I.ring
    n = ring.nvars
    fld = ring.field
    for g in I.minimal_generators():
        t = g.degree()
        polys = []
        for h in J.minimal_generators():
            for m in monomials(n, t - 1 - h.degree()):
                for k in range(n):
                    e = tuple(a + (1 if i == k else 0) for i, a in enumerate(m))
                    polys.append(({tuple(u + v for u, v in zip(f, e)): c for f, c in h.terms.items()}, t))
        if not polys or not in_span(fld, n, polys, dict(g.terms), t):
            return False
    return True


def test_identity_lift():
    res = direct_resolution(ideal(x**2, x * y, y**2))
    maps = lift_chain_map(res, res)
    assert check_commutation(res, res, maps)
    f0 = maps[0]
    # f_0 is an isomorphism: its constant matrix is invertible
    assert all(f0.entry(r, c).is_constant() for r in range(3) for c in range(3))


def test_lift_square_into_maximal_ideal():
    resM = direct_resolution(ideal(x**2, x * y, y**2))
    resN = direct_resolution(ideal(x, y))
    maps = lift_chain_map(resM, resN)
    assert check_commutation(resM, resN, maps)
    assert len(maps) == 2


def test_principal_lift():
    S = polynomial_ring("x1,x2")
    a, _ = S.gens()
    resM, resN = direct_resolution(ideal(a**2)), direct_resolution(ideal(a))
    maps = lift_chain_map(resM, resN)
    assert maps[0].entry(0, 0) == a
    assert len(maps) == 1


def test_lift_rejects_non_containment():
    with pytest.raises(ContainmentError):
        lift_chain_map(direct_resolution(ideal(x)), direct_resolution(ideal(y)))


def test_constrained_lifts():
    resM = direct_resolution(ideal(x**2, x * y, y**2))
    resN = direct_resolution(ideal(x, y))
    maps = lift_chain_map_R1(resM, resN)
    assert maps.constrained and check_commutation(resM, resN, maps)
    for f in maps.maps:
        for r in range(f.target.rank):
            for c in range(f.source.rank):
                e = f.entry(r, c)
                assert e.is_zero() or e.degree() == 1
    S = polynomial_ring("x1,x2")
    a, _ = S.gens()
    m = lift_chain_map_R1(direct_resolution(ideal(a**2)), direct_resolution(ideal(a)))
    assert m[0].entry(0, 0) == a and m.min_entry_degree() == 1
    with pytest.raises(ContainmentError):
        lift_chain_map_R1(direct_resolution(ideal(x**2)), direct_resolution(ideal(x**2)))


def test_constrained_ladder_collinear():
    Z = FatPointScheme(1, (((1, 0), 2), ((0, 1), 2)))
    ring = Z.ring(1)
    res = [unit_resolution(ring)] + [direct_resolution(fat_point_ideal(truncation(Z, i), ring)) for i in (1, 2)]
    for i in (1, 2):
        maps = lift_chain_map_R1(res[i], res[i - 1])
        assert check_commutation(res[i], res[i - 1], maps)
        assert maps.min_entry_degree() is None or maps.min_entry_degree() >= 1


def test_containment_examples():
    assert check_R1_containment(ideal(x**2, x * y, y**2), ideal(x, y))
    assert not check_R1_containment(ideal(x**2), ideal(x**2))
    unit = IdealBasis(R, [R.one()])
    assert check_R1_containment(ideal(x, y), unit)


def test_euler_examples():
    S = polynomial_ring("x1,x2")
    a, b = S.gens()
    f = a**2 * b
    w = euler_witness(f, ideal(a, b))
    assert w.ok and w.recombine() == f
    assert w.factors[0] == (a * b).scale(QQ.coerce("2/3"))
    assert w.factors[1] == (a * a).scale(QQ.coerce("1/3"))
    T = polynomial_ring("x1,x2", GF(2))
    with pytest.raises(EulerError):
        euler_witness(T.var(0) ** 2, ideal(T.var(0)))
    P2 = standard_ring(3)
    Z3 = FatPointScheme(2, (((0, 0, 1), 3),))
    J = fat_point_ideal(FatPointScheme(2, (((0, 0, 1), 2),)))
    f = P2.var(0) ** 3
    assert ideal_membership(f, fat_point_ideal(Z3))
    assert euler_witness(f, J).ok


def test_euler_failure_reported():
    w = euler_witness(x * y, ideal(x**2))
    assert not w.ok and w.failed


def test_degree_shift_examples():
    assert degree_shift_check(ideal(x**3), ideal(x))
    assert degree_shift_check(ideal(x**2, x * y, y**2), ideal(x, y))
    assert not degree_shift_check(ideal(x**2), ideal(x**2, y**2))


def test_monomial_direct():
    assert monomial_containment(ideal(x**2, x * y), ideal(x)) is True
    assert monomial_containment(ideal(x**2), ideal(x**2)) is False
    assert monomial_containment(ideal(x + y), ideal(x, y)) is None


def random_ideal(seed, fld, maxdeg):
    rng = random.Random(seed)
    ring = standard_ring(3, fld)
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, maxdeg)
        mons = ring.monomials_of_degree(d)
        f = ring.from_dict({m: fld.coerce(rng.randint(-2, 2)) for m in rng.sample(mons, min(3, len(mons)))})
        if not f.is_zero():
            gens.append(f)
    return IdealBasis(ring, gens or [ring.var(0)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([QQ, GF(2), GF(3)]))
def test_containment_matches_brute_force(seed, fld):
    J = random_ideal(seed, fld, 2)
    rng = random.Random(seed)
    gens = []
    for g in J.gens:
        gens.append(g * standard_ring(3, fld).var(rng.randrange(3)) ** rng.randint(0, 1))
    I = IdealBasis(J.ring, gens)
    verdict = check_R1_containment(I, J)
    assert verdict == brute_R1(I, J)
    if degree_shift_check(I, J):
        assert verdict
    if monomial_containment(I, J) is not None:
        assert monomial_containment(I, J) == verdict


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_euler_success_implies_containment(seed):
    J = random_ideal(seed, QQ, 2)
    rng = random.Random(seed)
    ring = J.ring
    f = J.gens[0] * ring.var(rng.randrange(3)) * ring.var(rng.randrange(3))
    w = euler_witness(f, J)
    assert w.recombine() == f
    if w.ok:
        assert check_R1_containment(IdealBasis(ring, [f]), J)


def test_witness_summary():
    out = criterion_witnesses(ideal(x**2, x * y, y**2), ideal(x, y))
    assert out["holds"]
    assert {"degree-shift", "euler", "monomial-direct", "linear-algebra"} <= set(out["witnesses"])
    out = criterion_witnesses(ideal(x**2), ideal(x**2))
    assert not out["holds"] and out["witnesses"] == []
