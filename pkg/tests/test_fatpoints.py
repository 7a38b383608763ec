import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import fat_point_conditions
from conftest import FIXTURE_NAMES, load_fixture
from fatcone.arith import GF, QQ
from fatcone.fatpoints import (
    FatPointScheme,
    SchemeError,
    embed_in_hyperplane,
    fat_point_ideal,
    load_scheme,
    point_ideal,
    residual_scheme,
    restrict_to_hyperplane,
    scheme_from_dict,
    scheme_to_dict,
    truncation,
)
from fatcone.gb import IdealBasis, colon_ideal, hilbert_function, ideal_membership, ideal_sum
from fatcone.poly import embed_R_to_Rprime, standard_ring


def scheme(n, pts, fld=QQ):
    return FatPointScheme(n, tuple((tuple(c), m) for c, m in pts), fld)


def test_point_ideal_examples():
    S = standard_ring(3)
    assert point_ideal((0, 0, 1), S) == IdealBasis(S, [S.var(0), S.var(1)])
    L = standard_ring(2)
    I = point_ideal((1, 1), L)
    assert I == IdealBasis(L, [L.var(0) - L.var(1)])
    with pytest.raises(SchemeError):
        point_ideal((0, 0, 0), S)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4).filter(any), st.sampled_from([QQ, GF(5)]))
def test_point_ideal_generators_vanish_and_are_independent(coords, fld):
    S = standard_ring(4, fld)
    pt = [fld.coerce(c) for c in coords]
    if all(c == 0 for c in pt):
        return
    I = point_ideal(pt, S)
    assert len(I.gens) == 3
    for g in I.gens:
        assert g.evaluate(pt) == 0
    assert hilbert_function(I, 1) == 1


def test_fat_point_ideal_examples():
    L = standard_ring(2)
    assert fat_point_ideal(scheme(1, []), L).is_unit()
    Z = scheme(1, [((1, 0), 2), ((0, 1), 1)])
    x0, x1 = L.gens()
    assert fat_point_ideal(Z) == IdealBasis(L, [x1**2 * x0])
    S = standard_ring(3)
    a, b, _ = S.gens()
    assert fat_point_ideal(scheme(2, [((0, 0, 1), 2)])) == IdealBasis(S, [a**2, a * b, b**2])


def test_zero_multiplicity_points_ignored():
    Z = scheme(2, [((0, 0, 1), 2), ((0, 1, 0), 0)])
    assert fat_point_ideal(Z) == fat_point_ideal(scheme(2, [((0, 0, 1), 2)]))


def test_scheme_validation():
    with pytest.raises(SchemeError):
        scheme(2, [((0, 0, 1), 1), ((0, 0, 2), 1)])
    with pytest.raises(SchemeError):
        scheme(2, [((0, 0, 0), 1)])
    with pytest.raises(SchemeError):
        scheme(2, [((0, 1), 1)])
    with pytest.raises(SchemeError):
        scheme(2, [((0, 0, 1), -1)])
    # distinct over Q but equal over GF(2)
    scheme(1, [((1, 1), 1), ((1, 3), 1)])
    with pytest.raises(SchemeError):
        scheme(1, [((1, 1), 1), ((1, 3), 1)], GF(2))


def test_truncation_and_residual():
    Z = scheme(2, [((0, 0, 1), 2), ((0, 1, 0), 1)])
    assert truncation(Z, 1).multiplicities == [1, 0]
    assert truncation(Z, 2) == Z
    assert truncation(Z, 0).is_empty()
    with pytest.raises(SchemeError):
        truncation(Z, 3)
    W = scheme(2, [((0, 0, 1), 2)])
    assert residual_scheme(W, 1).multiplicities == [1]
    assert residual_scheme(W, 0) == W
    assert residual_scheme(W, 2).is_empty()


def test_embedding():
    Z = scheme(1, [((1, 0), 2)])
    E = embed_in_hyperplane(Z)
    assert E.points[0].coords == (0, 1, 0) and E.multiplicities == [2]
    assert embed_in_hyperplane(scheme(1, [])).is_empty()
    EE = embed_in_hyperplane(E)
    assert EE.support_codim() == 2
    assert restrict_to_hyperplane(E) == Z
    with pytest.raises(SchemeError, match=r"point 0 \[1:0:1\]"):
        restrict_to_hyperplane(scheme(2, [((1, 0, 1), 1)]))


def test_nested_ladder():
    Z = scheme(2, [((0, 1, 0), 3), ((0, 0, 1), 2), ((0, 1, 1), 1)])
    ideals = [fat_point_ideal(truncation(Z, i)) for i in range(4)]
    for small, big in zip(ideals[1:], ideals):
        # I(Z_{i+1}) subset I(Z_i)
        assert all(ideal_membership(g, big) for g in small.gens)


def random_scheme(seed, n, fld, max_mult=3, npts=(1, 3), hyperplane=False):
    rng = random.Random(seed)
    pts = []
    tries = 0
    while len(pts) < rng.randint(*npts) and tries < 50:
        tries += 1
        coords = [rng.randint(-3, 3) for _ in range(n + 1)]
        if hyperplane:
            coords[0] = 0
        try:
            Z = FatPointScheme(n, tuple(pts + [(tuple(coords), rng.randint(1, max_mult))]), fld)
        except SchemeError:
            continue
        pts = [(p.coords, p.mult) for p in Z.points]
    return FatPointScheme(n, tuple(pts), fld)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([(1, QQ), (2, QQ), (2, GF(3)), (3, QQ)]))
def test_hilbert_function_against_vanishing_conditions(seed, case):
    n, fld = case
    Z = random_scheme(seed, n, fld, max_mult=3 if n < 3 else 2)
    I = fat_point_ideal(Z)
    pts = [(p.coords, p.mult) for p in Z.points]
    top = sum(Z.multiplicities) + 1
    for t in range(top + 1):
        assert hilbert_function(I, t) == fat_point_conditions(fld, n + 1, pts, t)
    # in large degree the quotient has dimension deg Z
    assert hilbert_function(I, top) == Z.degree()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_colon_identity_on_fixtures(name):
    Z, _ = load_fixture(name)
    I = fat_point_ideal(Z)
    x0 = Z.ring().var(0)
    for i in range(Z.max_multiplicity + 1):
        assert colon_ideal(I, x0**i) == fat_point_ideal(residual_scheme(Z, i))


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_decomposition_identity_on_fixtures(name):
    Z, _ = load_fixture(name)
    Rp = Z.ring()
    Y = restrict_to_hyperplane(Z)
    R = Y.ring(1)
    m = Z.max_multiplicity
    parts = []
    for i in range(m + 1):
        Ii = fat_point_ideal(truncation(Y, i), R)
        gens = [embed_R_to_Rprime(g, Rp) * Rp.var(0) ** (m - i) for g in Ii.gens]
        parts.append(IdealBasis(Rp, gens))
    assert ideal_sum(*parts) == fat_point_ideal(Z)


def test_json_roundtrip(tmp_path):
    Z = scheme(2, [((0, "1/2", 1), 2), ((0, 1, 0), 1)])
    d = scheme_to_dict(Z)
    assert d["points"][0]["coords"] == ["0", "1/2", "1"]
    assert scheme_from_dict(d) == Z
    path = tmp_path / "z.json"
    path.write_text(json.dumps(d))
    Z2, raw = load_scheme(path)
    assert Z2 == Z and raw == d
    W, _ = load_scheme(path, GF(5))
    assert W.field == GF(5) and W.points[0].coords == (0, 3, 1)


def test_json_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("[1, 2]")
    with pytest.raises(SchemeError):
        load_scheme(p)
    p.write_text("{")
    with pytest.raises(SchemeError):
        load_scheme(p)
    with pytest.raises(SchemeError):
        scheme_from_dict({"points": []})
