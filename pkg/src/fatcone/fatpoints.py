"""Fat point schemes ``m_1 p_1 + ... + m_r p_r`` and their ideals."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import QQ, Field, parse_field
from .gb import IdealBasis, ideal_intersection, ideal_power
from .poly import Ring, standard_ring


class SchemeError(ValueError):
    pass


@dataclass(frozen=True)
class FatPoint:
    coords: tuple
    mult: int


@dataclass(frozen=True)
class FatPointScheme:
    """Points of ``P^n`` with nonnegative multiplicities.

    Points of multiplicity zero are kept so that truncations of the same
    scheme index their points identically.
    """

    ambient_dim: int
    points: tuple
    field: Field = QQ

    def __post_init__(self):
        n = self.ambient_dim
        if n < 1:
            raise SchemeError("ambient dimension must be at least 1")
        pts = []
        for i, pt in enumerate(self.points):
            if not isinstance(pt, FatPoint):
                coords, mult = pt
                pt = FatPoint(tuple(coords), int(mult))
            coords = tuple(self.field.coerce(c) for c in pt.coords)
            if len(coords) != n + 1:
                raise SchemeError(f"point {i} has {len(coords)} coordinates, expected {n + 1}")
            if all(c == 0 for c in coords):
                raise SchemeError(f"point {i} is the zero vector")
            if pt.mult < 0:
                raise SchemeError(f"point {i} has negative multiplicity")
            pts.append(FatPoint(coords, pt.mult))
        for i in range(len(pts)):
            for j in range(i):
                if proportional(self.field, pts[i].coords, pts[j].coords):
                    raise SchemeError(f"points {j} and {i} coincide projectively")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def multiplicities(self):
        return [p.mult for p in self.points]

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities, default=0)

    def is_empty(self) -> bool:
        return self.max_multiplicity == 0

    def degree(self) -> int:
        """Length of the scheme: ``sum C(m_k - 1 + n, n)``."""
        from math import comb

        return sum(comb(m - 1 + self.ambient_dim, self.ambient_dim) for m in self.multiplicities if m > 0)

    def with_multiplicities(self, mults) -> "FatPointScheme":
        return FatPointScheme(
            self.ambient_dim,
            tuple(FatPoint(p.coords, int(m)) for p, m in zip(self.points, mults)),
            self.field,
        )

    def ring(self, start: int = 0) -> Ring:
        return standard_ring(self.ambient_dim + 1, self.field, start)

    def support_codim(self) -> int:
        """Number of leading coordinates vanishing at every point of the support."""
        pts = [p for p in self.points if p.mult > 0] or list(self.points)
        c = 0
        while c <= self.ambient_dim and all(p.coords[c] == 0 for p in pts):
            c += 1
        return c

    def fmt(self) -> str:
        f = self.field
        parts = []
        for p in self.points:
            parts.append(f"{p.mult}*[{':'.join(f.fmt(c) for c in p.coords)}]")
        return " + ".join(parts) if parts else "0"


def proportional(fld, a, b) -> bool:
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if fld.sub(fld.mul(a[i], b[j]), fld.mul(a[j], b[i])) != 0:
                return False
    return True


def point_ideal(coords, ring: Ring) -> IdealBasis:
    """Linear forms ``a_piv*x_k - a_k*x_piv`` with ``piv`` the first nonzero coordinate."""
    fld = ring.field
    coords = [fld.coerce(c) for c in coords]
    if len(coords) != ring.nvars:
        raise SchemeError(f"point has {len(coords)} coordinates, ring has {ring.nvars} variables")
    piv = next((k for k, c in enumerate(coords) if c != 0), None)
    if piv is None:
        raise SchemeError("the zero vector is not a point")
    gens = []
    xp = ring.var(piv)
    for k in range(ring.nvars):
        if k == piv:
            continue
        g = ring.var(k).scale(coords[piv]) - xp.scale(coords[k])
        gens.append(g)
    return IdealBasis(ring, gens)


def fat_point_ideal(Z: FatPointScheme, ring: Ring = None) -> IdealBasis:
    """``I_1^{m_1} cap ... cap I_r^{m_r}``; the empty scheme gives ``(1)``."""
    ring = ring or Z.ring()
    if ring.nvars != Z.ambient_dim + 1:
        raise SchemeError("ring does not match the ambient space")
    parts = [ideal_power(point_ideal(p.coords, ring), p.mult) for p in Z.points if p.mult > 0]
    if not parts:
        return IdealBasis(ring, [ring.one()], is_groebner=True)
    acc = parts[0].groebner()
    for J in parts[1:]:
        acc = ideal_intersection(acc, J)
    return acc


def truncation(Z: FatPointScheme, i: int) -> FatPointScheme:
    """``Z_i``: multiplicities ``(m_k - (m - i))_+``; ``Z_0`` empty, ``Z_m = Z``."""
    m = Z.max_multiplicity
    if not 0 <= i <= m:
        raise SchemeError(f"truncation index {i} outside [0, {m}]")
    return Z.with_multiplicities([max(mk - (m - i), 0) for mk in Z.multiplicities])


def residual_scheme(Z: FatPointScheme, i: int) -> FatPointScheme:
    """Scheme residual to ``x0^i``: multiplicities ``(m_k - i)_+``."""
    m = Z.max_multiplicity
    if not 0 <= i <= m:
        raise SchemeError(f"residual index {i} outside [0, {m}]")
    return Z.with_multiplicities([max(mk - i, 0) for mk in Z.multiplicities])


def embed_in_hyperplane(Z: FatPointScheme) -> FatPointScheme:
    """Regard ``P^n`` as the hyperplane ``x0 = 0`` of ``P^{n+1}``."""
    fld = Z.field
    return FatPointScheme(
        Z.ambient_dim + 1,
        tuple(FatPoint((fld.zero,) + p.coords, p.mult) for p in Z.points),
        fld,
    )


def restrict_to_hyperplane(Z: FatPointScheme) -> FatPointScheme:
    """Inverse of :func:`embed_in_hyperplane`; every point must have ``x0 = 0``."""
    for k, p in enumerate(Z.points):
        if p.coords[0] != 0:
            raise SchemeError(
                f"point {k} [{':'.join(Z.field.fmt(c) for c in p.coords)}] is not on the hyperplane x0 = 0"
            )
    if Z.ambient_dim < 2:
        raise SchemeError("the hyperplane of P^1 is a single point; need ambient dimension >= 2")
    return FatPointScheme(
        Z.ambient_dim - 1,
        tuple(FatPoint(p.coords[1:], p.mult) for p in Z.points),
        Z.field,
    )


# ---------------------------------------------------------------------------
# JSON scheme files


def scheme_from_dict(data: dict, field: Field = None) -> FatPointScheme:
    try:
        fld = field or parse_field(data.get("field", "q"))
        n = int(data["ambient_dim"])
        pts = []
        for k, p in enumerate(data.get("points", [])):
            coords = [fld.coerce(str(c)) for c in p["coords"]]
            pts.append(FatPoint(tuple(coords), int(p.get("mult", 1))))
    except (KeyError, TypeError) as exc:
        raise SchemeError(f"malformed scheme description: {exc}") from exc
    return FatPointScheme(n, tuple(pts), fld)


def scheme_to_dict(Z: FatPointScheme) -> dict:
    return {
        "ambient_dim": Z.ambient_dim,
        "field": Z.field.spec_string,
        "points": [
            {"coords": [Z.field.fmt(c) for c in p.coords], "mult": p.mult} for p in Z.points
        ],
    }


def load_scheme(path, field: Field = None):
    """Read a scheme file; returns ``(scheme, raw dict)``."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemeError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise SchemeError(f"{path}: expected a JSON object")
    return scheme_from_dict(data, field), data
