"""Resolutions of fat points in a hyperplane by amalgamated mapping cones.

For ``Z'`` supported in ``x0 = 0`` of ``P^n`` with maximum multiplicity ``m``
the ladder ``Z_0 = 0 subset Z_1 subset ... subset Z_m`` lives in ``P^{n-1}``
(ring ``R``).  Resolutions ``F_{i,*}`` of ``I(Z_i)`` and comparison maps
``f_i : F_{i,*} -> F_{i-1,*}`` are glued into a complex over ``R' = R[x0]``:

    F'_0 = sum_i F_{i,0}(-(m-i))
    F'_j = sum_{i>=1} F_{i,j}(-(m-i)) + F_{i,j-1}(-(m-i)-1)      (j >= 1)

with base generators mapping by ``phi_i`` and cone generators ``s`` by
``x0*s - f_i(s) - phi_i(s)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fatpoints import (
    FatPointScheme,
    SchemeError,
    fat_point_ideal,
    restrict_to_hyperplane,
    truncation,
)
from .free import ChainMap, FreeModule
from .gb import IdealBasis
from .lift import (
    LiftError,
    check_R1_containment,
    check_commutation,
    lift_chain_map,
    lift_chain_map_R1,
)
from .poly import Ring, embed_R_to_Rprime
from .resolve import (
    BiPoly,
    Resolution,
    betti,
    direct_resolution,
    exactness_report,
    is_minimal,
    minimize,
    unit_resolution,
    verify_complex,
)


class ConstructionError(AssertionError):
    """A mathematical identity of the construction failed; indicates a bug."""


@dataclass
class LadderData:
    scheme: FatPointScheme
    m: int
    ring: Ring
    ambient: Ring
    ideals: list
    resolutions: list
    comparisons: list
    criterion_flags: list
    start: int = 0

    @property
    def all_flags(self) -> bool:
        return all(self.criterion_flags)

    @property
    def constrained(self) -> bool:
        return all(c.constrained for c in self.comparisons[1:])


def _check_support(Z: FatPointScheme):
    if Z.is_empty():
        raise SchemeError("the zero scheme has no ladder")
    restrict_to_hyperplane(Z)


def build_ladder(Z: FatPointScheme, start: int = 0, resolver=None) -> LadderData:
    """Ideals, resolutions and comparison maps for ``Z_1 .. Z_m``.

    ``start`` is the index of the leading variable of ``Z``'s ring.  The
    ``resolver`` turns a scheme in the hyperplane (and its ring offset) into a
    resolution; the default resolves its ideal directly.
    """
    _check_support(Z)
    Y = restrict_to_hyperplane(Z)
    m = Z.max_multiplicity
    ambient = Z.ring(start)
    ring = Y.ring(start + 1)
    ideals = [IdealBasis(ring, [ring.one()], is_groebner=True)]
    resolutions = [unit_resolution(ring)]
    for i in range(1, m + 1):
        Yi = truncation(Y, i)
        if resolver is None:
            I = fat_point_ideal(Yi, ring)
            res = direct_resolution(I)
        else:
            res = resolver(Yi, start + 1)
            I = res.resolved_ideal
        ideals.append(I)
        resolutions.append(res)
    comparisons = [None]
    flags = []
    for i in range(1, m + 1):
        flag = check_R1_containment(ideals[i], ideals[i - 1])
        flags.append(flag)
        cmap = None
        if flag:
            try:
                cmap = lift_chain_map_R1(resolutions[i], resolutions[i - 1])
            except LiftError:
                cmap = None
        if cmap is None:
            cmap = lift_chain_map(resolutions[i], resolutions[i - 1])
        if not check_commutation(resolutions[i], resolutions[i - 1], cmap):
            raise ConstructionError(f"comparison map {i} -> {i - 1} does not commute")
        comparisons.append(cmap)
    return LadderData(Z, m, ring, ambient, ideals, resolutions, comparisons, flags, start)


def _embed_col(col: dict, row_offset: int, x0_power: int = 0, fld=None) -> dict:
    """Shift rows, prepend the ``x0`` exponent, and negate when ``fld`` is given."""
    out = {}
    for (p, e), c in col.items():
        out[(p + row_offset, (x0_power,) + e)] = fld.neg(c) if fld is not None else c
    return out


def _merge(fld, acc: dict, part: dict):
    for k, v in part.items():
        w = fld.add(acc.get(k, fld.zero), v)
        if w == 0:
            acc.pop(k, None)
        else:
            acc[k] = w


def cone_resolution(ladder: LadderData, check: bool = True) -> Resolution:
    """Assemble ``F'_*`` over ``R'``; the result is a complex resolving ``I(Z')``."""
    Rp = ladder.ambient
    fld = Rp.field
    m = ladder.m
    res = ladder.resolutions
    cmp = ladder.comparisons
    length = max(r.length for r in res[1:]) + 1

    # layout[j]: (i, homological index, cone?) -> offset of that block in F'_j
    layout = []
    modules = []
    for j in range(length + 1):
        blocks = []
        if j == 0:
            for i in range(m, -1, -1):
                blocks.append((i, 0, False))
        else:
            for i in range(m, 0, -1):
                blocks.append((i, j, False))
                blocks.append((i, j - 1, True))
        placed = {}
        shifts, labels = [], []
        for (i, h, cone) in blocks:
            F = res[i].module(h)
            placed[(i, h, cone)] = len(shifts)
            extra = (m - i) + (1 if cone else 0)
            for k, s in enumerate(F.shifts):
                shifts.append(s + extra)
                labels.append((k, i, h, "cone" if cone else "base"))
        layout.append(placed)
        modules.append(FreeModule(Rp, shifts, labels))
    while len(modules) > 1 and modules[-1].rank == 0:
        modules.pop()
        layout.pop()

    # augmentation
    aug_cols = []
    for i in range(m, -1, -1):
        for col in res[i].augmentation.columns:
            aug_cols.append(_embed_col(col, 0, m - i))
    target = FreeModule(Rp, (0,))
    augmentation = ChainMap(modules[0], target, aug_cols)

    x0 = (1,) + (0,) * (Rp.nvars - 1)
    diffs = []
    for j in range(1, len(modules)):
        src, below = layout[j], layout[j - 1]
        cols = [None] * modules[j].rank
        for (i, h, cone), off in src.items():
            F = res[i].module(h)
            if not cone:
                # base s in F_{i,j}: phi_{i,j-1}(s) in base block (i, j-1)
                d = res[i].differential(h - 1)
                tgt = below[(i, h - 1, False)]
                for k in range(F.rank):
                    cols[off + k] = _embed_col(d.columns[k], tgt)
                continue
            # cone s in F_{i,h}, h = j-1
            f = cmp[i].maps[h] if h < len(cmp[i].maps) else None
            for k in range(F.rank):
                col = {(below[(i, h, False)] + k, x0): fld.one}
                if f is not None and f.columns[k]:
                    _merge(fld, col, _embed_col(f.columns[k], below[(i - 1, h, False)], 0, fld))
                if h >= 1:
                    d = res[i].differential(h - 1)
                    _merge(fld, col, _embed_col(d.columns[k], below[(i, h - 1, True)], 0, fld))
                cols[off + k] = col
        diffs.append(ChainMap(modules[j], modules[j - 1], cols, check=check))
    out = Resolution(Rp, modules, diffs, augmentation)
    if check and not verify_complex(out):
        raise ConstructionError("constructed maps do not form a complex")
    return out


def theorem_poincare(polys, m: int) -> BiPoly:
    """``(1 + XT) * sum_{0<i<=m} T^{m-i} P(Z_i) + T^m``."""
    polys = list(polys)
    if m < 1 or len(polys) != m:
        raise ValueError(f"need {m} ladder polynomials, got {len(polys)}")
    total = BiPoly()
    for i, P in enumerate(polys, start=1):
        total = total + BiPoly.T(m - i) * P
    return (BiPoly.one() + BiPoly.X() * BiPoly.T()) * total + BiPoly.T(m)


def ladder_poincare(ladder: LadderData) -> BiPoly:
    polys = []
    for r in ladder.resolutions[1:]:
        polys.append(betti(r if is_minimal(r) else minimize(r)))
    return theorem_poincare(polys, ladder.m)


def decomposition_ideal(ladder: LadderData) -> IdealBasis:
    """``sum_i x0^{m-i} I(Z_i) R'``."""
    Rp = ladder.ambient
    x0 = Rp.var(0)
    gens = []
    for i, I in enumerate(ladder.ideals):
        for g in I.minimal_generators():
            gens.append(embed_R_to_Rprime(g, Rp) * x0 ** (ladder.m - i))
    return IdealBasis(Rp, gens)


def _check_codim(Z: FatPointScheme, c: int):
    if not 0 <= c < Z.ambient_dim:
        raise SchemeError(f"codimension {c} outside [0, {Z.ambient_dim - 1}] for P^{Z.ambient_dim}")
    fmt = Z.field.fmt
    for k, p in enumerate(Z.points):
        if any(x != 0 for x in p.coords[:c]):
            where = "the hyperplane x0 = 0" if c == 1 else f"the codimension-{c} coordinate subspace"
            raise SchemeError(f"point {k} [{':'.join(fmt(x) for x in p.coords)}] is not in {where}")


def construct(Z: FatPointScheme, codim: int = 1, start: int = 0):
    """Outermost ladder and the cone resolution over the full ring.

    For ``codim > 1`` each stage resolves the ladder ideals one hyperplane
    further in, and the innermost stage resolves directly.  Non-minimal
    intermediate results are minimized before they feed the next stage.
    """
    _check_codim(Z, codim)
    if codim < 1:
        raise SchemeError("the cone construction needs codimension at least 1")

    def inner(Y, s):
        if Y.is_empty():
            return unit_resolution(Y.ring(s))
        r = tower_resolution(Y, codim - 1, s)
        return r if is_minimal(r) else minimize(r)

    ladder = build_ladder(Z, start, resolver=None if codim == 1 else inner)
    return ladder, cone_resolution(ladder)


def tower_resolution(Z: FatPointScheme, c: int, start: int = 0) -> Resolution:
    """Resolve ``I(Z)`` for support in ``x_start = ... = x_{start+c-1} = 0``."""
    _check_codim(Z, c)
    if Z.is_empty():
        return unit_resolution(Z.ring(start))
    if c == 0:
        return direct_resolution(fat_point_ideal(Z, Z.ring(start)))
    return construct(Z, c, start)[1]


@dataclass
class Report:
    criterion_flags: list
    minimal: bool
    betti: BiPoly
    poincare_constructed: BiPoly
    poincare_formula: BiPoly
    exactness_bound: int
    exactness_ok: bool
    complex_ok: bool
    ideal_ok: bool
    status: str
    minimized_betti: BiPoly = None
    oracle_betti: BiPoly = None
    failures: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "criterion_flags": list(self.criterion_flags),
            "minimal": self.minimal,
            "betti": self.betti.table_text(),
            "poincare_constructed": str(self.poincare_constructed),
            "poincare_formula": str(self.poincare_formula),
            "exactness_bound": self.exactness_bound,
            "exactness_ok": self.exactness_ok,
            "complex_ok": self.complex_ok,
            "ideal_ok": self.ideal_ok,
            "status": self.status,
        }
        if self.minimized_betti is not None:
            out["minimized_betti"] = self.minimized_betti.table_text()
        if self.oracle_betti is not None:
            out["oracle_betti"] = self.oracle_betti.table_text()
        return out


def construction_report(Z: FatPointScheme, codim: int = 1, *, bound: int = None,
                        oracle: bool = False, exactness: bool = True) -> Report:
    """Build ``F'_*`` and collect every check; the zero scheme is rejected."""
    ladder, cone = construct(Z, codim)
    I = fat_point_ideal(Z)
    ideal_ok = cone.resolved_ideal == I
    complex_ok = verify_complex(cone)
    if exactness:
        ex_ok, used, failures = exactness_report(cone, bound, I)
    else:
        ex_ok, used, failures = None, None, []
    minimal = is_minimal(cone)
    P = betti(cone)
    formula = ladder_poincare(ladder)
    minimized = None
    if ladder.all_flags and minimal:
        status = "minimal resolution"
    elif minimal:
        status = "minimal resolution (criterion not verified)"
    else:
        status = "resolution, minimality unverified"
        minimized = betti(minimize(cone))
    ob = betti(direct_resolution(I)) if oracle else None
    return Report(ladder.criterion_flags, minimal, P, P, formula, used, ex_ok, complex_ok,
                  ideal_ok, status, minimized, ob, failures)
