import random

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import span_rank, syzygy_dim
from conftest import with_trivial_summand
from fatcone.arith import GF, QQ
from fatcone.free import ChainMap, FreeModule, GradingError
from fatcone.gb import IdealBasis, ideal_power
from fatcone.poly import polynomial_ring, standard_ring
from fatcone.resolve import (
    BiPoly,
    Resolution,
    ResolutionError,
    betti,
    direct_resolution,
    exactness_report,
    format_betti_table,
    graded_dims,
    is_minimal,
    minimize,
    parse_betti_table,
    poincare,
    unit_resolution,
    verify_complex,
    verify_exactness,
)

R = polynomial_ring("x1,x2")
x1, x2 = R.gens()
T, X = BiPoly.T(), BiPoly.X()


def koszul(sign=1):
    F0 = FreeModule(R, (1, 1))
    F1 = FreeModule(R, (2,))
    aug = ChainMap.from_matrix(F0, FreeModule(R, (0,)), [[x1, x2]])
    d = ChainMap.from_matrix(F1, F0, [[x2], [-x1 if sign > 0 else x1]])
    return Resolution(R, [F0, F1], [d], aug)


def test_principal():
    res = direct_resolution(IdealBasis(R, [x1]))
    assert poincare(res) == T
    assert res.length == 0


def test_koszul_resolution():
    res = direct_resolution(IdealBasis(R, [x1, x2]))
    assert poincare(res) == 2 * T + X * T * T
    assert is_minimal(res) and verify_complex(res) and verify_exactness(res, 6)


def test_square_of_point_ideal():
    S = standard_ring(3)
    I = ideal_power(IdealBasis(S, [S.var(0), S.var(1)]), 2)
    res = direct_resolution(I)
    assert poincare(res) == 3 * BiPoly.T(2) + 2 * X * BiPoly.T(3)
    # brute-force: degree-3 syzygies among the three quadrics
    gens = [(dict(g.terms), 2) for g in I.minimal_generators()]
    assert syzygy_dim(QQ, 3, gens, 3) == 2


def test_reduced_point_in_p3():
    S = standard_ring(4)
    res = direct_resolution(IdealBasis(S, [S.var(0), S.var(1), S.var(2)]))
    assert poincare(res) == 3 * T + 3 * X * T**2 + X * X * T**3


def test_unit_ideal():
    assert poincare(unit_resolution(R)) == BiPoly.one()
    assert poincare(direct_resolution(IdealBasis(R, [R.one()]))) == 1


def test_rejects_bad_input():
    with pytest.raises(ResolutionError):
        direct_resolution(IdealBasis(R, [x1 + R.one()]))
    with pytest.raises(ResolutionError):
        direct_resolution(IdealBasis(R, []))


def test_verify_complex_detects_sign():
    assert verify_complex(koszul())
    assert not verify_complex(koszul(sign=-1))


def test_verify_exactness_detects_missing_syzygy():
    S = standard_ring(3)
    res = direct_resolution(IdealBasis(S, list(S.gens())))
    F1 = res.modules[1]
    keep = list(range(F1.rank - 1))
    G1 = FreeModule(S, [F1.shifts[k] for k in keep])
    d0 = ChainMap(G1, res.modules[0], [res.differentials[0].columns[k] for k in keep])
    broken = Resolution(S, [res.modules[0], G1], [d0], res.augmentation)
    ok, bound, failures = exactness_report(broken, 6)
    assert not ok
    assert failures[0][0] == F1.shifts[-1]


def test_minimize_fixpoint_and_trivial_summand():
    res = direct_resolution(IdealBasis(R, [x1**2, x1 * x2, x2**2]))
    assert minimize(res) is res
    fat = with_trivial_summand(res, 3)
    assert verify_complex(fat) and verify_exactness(fat)
    assert not is_minimal(fat)
    slim = minimize(fat)
    assert is_minimal(slim)
    assert betti(slim) == betti(res)
    assert slim.resolved_ideal == res.resolved_ideal
    assert IdealBasis(R, slim.generators) == IdealBasis(R, res.generators)


def test_grading_enforced():
    F0 = FreeModule(R, (1,))
    with pytest.raises(GradingError):
        ChainMap.from_matrix(FreeModule(R, (1,)), F0, [[x1]])


def test_betti_table_text():
    P = 3 * BiPoly.T(2) + 2 * X * BiPoly.T(3)
    text = format_betti_table(P)
    assert text == "     0  1\n2:   3  .\n3:   .  2"
    assert parse_betti_table(text) == P
    assert str(P) == "3*T^2 + 2*X*T^3"
    assert str(BiPoly.one()) == "1"


def test_poincare_string_sorting():
    P = T**4 + X * T**5 + T**2 + X * T**4 + T**3
    assert str(P) == "T^2 + T^3 + T^4 + X*T^4 + X*T^5"
    assert BiPoly.from_list(P.to_list()) == P


def random_ideal(seed, fld):
    rng = random.Random(seed)
    ring = standard_ring(3, fld)
    gens = []
    for _ in range(rng.randint(1, 4)):
        d = rng.randint(1, 3)
        mons = ring.monomials_of_degree(d)
        f = ring.from_dict({m: fld.coerce(rng.randint(-2, 2)) for m in rng.sample(mons, min(3, len(mons)))})
        if not f.is_zero():
            gens.append(f)
    return ring, gens or [ring.var(1)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([QQ, GF(2), GF(5)]))
def test_random_resolutions(seed, fld):
    ring, gens = random_ideal(seed, fld)
    I = IdealBasis(ring, gens)
    res = direct_resolution(I)
    assert verify_complex(res) and is_minimal(res)
    bound = res.max_shift() + 2
    assert verify_exactness(res, bound)
    # Euler characteristic against a brute-force dim I_t
    polys = [(dict(g.terms), g.degree()) for g in gens]
    for t in range(bound + 1):
        dims = graded_dims(res, t)
        chi = sum((-1) ** j * d for j, d in enumerate(dims))
        assert chi == span_rank(fld, 3, polys, t)
    # independent of generator order
    rng = random.Random(seed)
    for _ in range(2):
        perm = list(gens)
        rng.shuffle(perm)
        assert betti(direct_resolution(IdealBasis(ring, perm))) == betti(res)
