import functools
import json
from pathlib import Path

import pytest

from fatcone.fatpoints import fat_point_ideal, scheme_from_dict
from fatcone.free import ChainMap, FreeModule
from fatcone.hypercone import construct
from fatcone.resolve import Resolution, direct_resolution

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "fatcone" / "fixtures"
FIXTURE_NAMES = sorted(p.stem for p in FIXTURES.glob("*.json"))


def load_fixture(name):
    data = json.loads((FIXTURES / f"{name}.json").read_text())
    return scheme_from_dict(data), data


@functools.lru_cache(maxsize=None)
def built(name):
    """(scheme, raw, ladder, cone, ideal, oracle resolution) for a fixture, computed once."""
    Z, data = load_fixture(name)
    ladder, cone = construct(Z, data.get("codim", 1))
    I = fat_point_ideal(Z)
    return Z, data, ladder, cone, I, direct_resolution(I)


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_name(request):
    return request.param


def with_trivial_summand(res, a):
    """``res`` plus ``R(-a) -> R(-a)`` sitting in homological positions 1 and 0."""
    ring = res.ring
    m0, m1 = res.modules[0], res.modules[1]
    F0 = FreeModule(ring, m0.shifts + (a,))
    F1 = FreeModule(ring, m1.shifts + (a,))
    zero = (0,) * ring.nvars
    r0 = m0.rank
    # the new F_0 generator maps to an element of the ideal of degree a
    g = res.generators[0] * ring.var(0) ** (a - m0.shifts[0])
    aug_cols = [dict(c) for c in res.augmentation.columns] + [{(0, e): v for e, v in g.terms.items()}]
    aug = ChainMap(F0, FreeModule(ring, (0,)), aug_cols)
    # compensate so the composite stays zero: new F_1 generator maps to e_new - x^k e_0
    col = {(r0, zero): ring.field.one}
    for e, v in (ring.var(0) ** (a - m0.shifts[0])).terms.items():
        col[(0, e)] = ring.field.neg(v)
    d0 = ChainMap(F1, F0, [dict(c) for c in res.differentials[0].columns] + [col])
    mods = [F0, F1] + res.modules[2:]
    diffs = [d0] + res.differentials[1:]
    if len(diffs) > 1:
        # rows of the next map up gain nothing; source unchanged
        diffs[1] = ChainMap(res.modules[2], F1, res.differentials[1].columns)
    return Resolution(ring, mods, diffs, aug)
