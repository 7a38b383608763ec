"""Graded free resolutions of homogeneous ideals.

Conventions: a :class:`Resolution` resolves an ideal ``I`` (not ``R/I``), so
``F_0`` is free on generators of ``I`` and the augmentation ``F_0 -> R``
sends each generator to its polynomial.  ``differentials[j]`` is the map
``F_{j+1} -> F_j``.  Betti numbers ``a_ij`` count generators of ``F_j`` of
degree ``i``; the Poincare polynomial is ``sum a_ij T^i X^j``.
"""

from __future__ import annotations

from .free import ChainMap, FreeModule, vec_iadd
from .gb import (
    IdealBasis,
    PlainOrder,
    TopOrder,
    groebner_vectors,
    hilbert_function,
    poly_to_vec,
    syzygy_vectors,
)
from .linalg import Echelon
from .poly import Poly, Ring, add_exp


class ResolutionError(ValueError):
    pass


class Resolution:
    def __init__(self, ring: Ring, modules, differentials, augmentation: ChainMap, ideal: IdealBasis = None):
        self.ring = ring
        self.modules = list(modules)
        self.differentials = list(differentials)
        self.augmentation = augmentation
        if len(self.differentials) != max(len(self.modules) - 1, 0):
            raise ResolutionError("need one differential between each pair of modules")
        self._ideal = ideal
        self._image_gb = {}

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def generators(self):
        """Polynomials the generators of ``F_0`` map to."""
        return [Poly(self.ring, {e: c for (_, e), c in col.items()}) for col in self.augmentation.columns]

    @property
    def resolved_ideal(self) -> IdealBasis:
        if self._ideal is None:
            self._ideal = IdealBasis(self.ring, self.generators)
        return self._ideal

    def module(self, j: int) -> FreeModule:
        if 0 <= j < len(self.modules):
            return self.modules[j]
        return FreeModule(self.ring, ())

    def differential(self, j: int):
        """``F_{j+1} -> F_j``; ``j = -1`` gives the augmentation."""
        if j == -1:
            return self.augmentation
        if 0 <= j < len(self.differentials):
            return self.differentials[j]
        return None

    def image_gb(self, j: int):
        """Tracked Groebner data of the image of ``F_{j+1} -> F_j`` (``j=-1``: the ideal)."""
        if j not in self._image_gb:
            fld = self.ring.field
            if j == -1:
                # track through the F_0 generators, not the user's generating set
                order = PlainOrder(self.ring)
                cols = self.augmentation.columns
                self._image_gb[j] = groebner_vectors(fld, order, cols, rank_one=True, track=True)
            else:
                d = self.differentials[j]
                order = TopOrder(self.ring, d.target.shifts)
                self._image_gb[j] = groebner_vectors(fld, order, d.columns, track=True)
        return self._image_gb[j]

    def shifts(self):
        return [m.shifts for m in self.modules]

    def max_shift(self) -> int:
        return max((s for m in self.modules for s in m.shifts), default=0)

    def __repr__(self):
        ranks = " <- ".join(str(m.rank) for m in self.modules)
        return f"Resolution({ranks})"


# ---------------------------------------------------------------------------
# Betti numbers


class BiPoly:
    """Integer polynomial in ``T`` and ``X``: ``{(t_exp, x_exp): coeff}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def T(cls, n=1):
        return cls({(n, 0): 1})

    @classmethod
    def X(cls, n=1):
        return cls({(0, n): 1})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in _bp(other).coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_bp(other))

    def __mul__(self, other):
        other = _bp(other)
        out = {}
        for (a, b), u in self.coeffs.items():
            for (c, d), v in other.coeffs.items():
                k = (a + c, b + d)
                out[k] = out.get(k, 0) + u * v
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = BiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == BiPoly.one() * other if other else not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self.coeffs.values())

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            parts = []
            if j == 1:
                parts.append("X")
            elif j > 1:
                parts.append(f"X^{j}")
            if i == 1:
                parts.append("T")
            elif i > 1:
                parts.append(f"T^{i}")
            a = abs(c)
            if not parts:
                body = str(a)
            elif a == 1:
                body = "*".join(parts)
            else:
                body = f"{a}*" + "*".join(parts)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    __repr__ = __str__

    def to_table(self) -> dict:
        """``{homological index j: {degree i: a_ij}}``."""
        table = {}
        for (i, j), c in self.coeffs.items():
            table.setdefault(j, {})[i] = c
        return table

    def table_text(self) -> str:
        return format_betti_table(self)

    def to_list(self):
        """Sorted ``[[degree, homological index, count], ...]`` for JSON."""
        return [[i, j, c] for (i, j), c in sorted(self.coeffs.items())]

    @classmethod
    def from_list(cls, items):
        return cls({(i, j): c for i, j, c in items})


def _bp(x):
    if isinstance(x, BiPoly):
        return x
    return BiPoly({(0, 0): int(x)})


BettiTable = BiPoly


def format_betti_table(P: BiPoly) -> str:
    """Rows are degrees, columns homological indices, ``.`` for zero."""
    if not P.coeffs:
        return "(zero)"
    cols = range(0, max(j for _, j in P.coeffs) + 1)
    rows = range(min(i for i, _ in P.coeffs), max(i for i, _ in P.coeffs) + 1)
    labels = {i: f"{i}:" for i in rows}
    lw = max(len(s) for s in labels.values()) + 1
    cells = {(i, j): (str(P[(i, j)]) if P[(i, j)] else ".") for i in rows for j in cols}
    cw = max([len(str(j)) for j in cols] + [len(c) for c in cells.values()]) + 2
    lines = [" " * lw + "".join(str(j).rjust(cw) for j in cols)]
    for i in rows:
        lines.append(labels[i].ljust(lw) + "".join(cells[(i, j)].rjust(cw) for j in cols))
    return "\n".join(lines)


def parse_betti_table(text: str) -> BiPoly:
    lines = [l for l in text.splitlines() if l.strip()]
    cols = [int(c) for c in lines[0].split()]
    coeffs = {}
    for line in lines[1:]:
        head, *cells = line.split()
        i = int(head.rstrip(":"))
        for j, c in zip(cols, cells):
            if c != ".":
                coeffs[(i, j)] = int(c)
    return BiPoly(coeffs)


def betti(res: Resolution) -> BiPoly:
    coeffs = {}
    for j, F in enumerate(res.modules):
        for s in F.shifts:
            coeffs[(s, j)] = coeffs.get((s, j), 0) + 1
    return BiPoly(coeffs)


def poincare(res: Resolution) -> BiPoly:
    return betti(res)


# ---------------------------------------------------------------------------
# construction


def _unit_resolution(ring: Ring) -> Resolution:
    F0 = FreeModule(ring, (0,), labels=("1",))
    target = FreeModule(ring, (0,))
    aug = ChainMap(F0, target, [{(0, (0,) * ring.nvars): ring.field.one}])
    return Resolution(ring, [F0], [], aug, IdealBasis(ring, [ring.one()]))


def unit_resolution(ring: Ring) -> Resolution:
    """``0 -> R -> (1) -> 0``."""
    return _unit_resolution(ring)


def direct_resolution(I: IdealBasis, *, minimize_output=True) -> Resolution:
    """Minimal graded free resolution by iterated syzygies.

    At every step the syzygy generators are pruned to a minimal generating
    set, so the result is already minimal; :func:`minimize` then runs as a
    check that nothing is left to split off.
    """
    ring = I.ring
    if I.is_zero():
        raise ResolutionError("cannot resolve the zero ideal")
    if not I.is_homogeneous():
        raise ResolutionError("ideal is not homogeneous")
    if I.is_unit():
        return _unit_resolution(ring)
    fld = ring.field
    gens = I.minimal_generators()
    target = FreeModule(ring, (0,))
    F0 = FreeModule(ring, [g.degree() for g in gens])
    aug = ChainMap(F0, target, [poly_to_vec(g) for g in gens])
    modules = [F0]
    diffs = []
    vecs = [poly_to_vec(g) for g in gens]
    ambient = target
    while True:
        shifts, syz = syzygy_vectors(fld, ambient, vecs, minimal=True)
        if not syz:
            break
        Fj = modules[-1]
        Fn = FreeModule(ring, [Fj.term_degree(next(iter(v))) for v in syz])
        diffs.append(ChainMap(Fn, Fj, syz))
        modules.append(Fn)
        ambient, vecs = Fj, syz
        if len(modules) > ring.nvars + 1:
            raise ResolutionError("resolution longer than the Hilbert syzygy bound")
    res = Resolution(ring, modules, diffs, aug, I)
    if minimize_output:
        res = minimize(res)
    if res.length > ring.nvars - 1:
        raise ResolutionError("minimal resolution exceeds the Hilbert syzygy bound")
    return res


def is_minimal(res: Resolution) -> bool:
    return not any(d.has_unit_entry() for d in res.differentials)


def _drop_row(col: dict, r: int) -> dict:
    out = {}
    for (p, e), v in col.items():
        if p == r:
            continue
        out[(p - 1 if p > r else p, e)] = v
    return out


def minimize(res: Resolution) -> Resolution:
    """Split off trivial summands ``R(-a) -> R(-a)`` until no unit entries remain."""
    ring = res.ring
    fld = ring.field
    zero = (0,) * ring.nvars
    shifts = [list(m.shifts) for m in res.modules]
    labels = [list(m.labels) for m in res.modules]
    diffs = [[dict(c) for c in d.columns] for d in res.differentials]
    aug = [dict(c) for c in res.augmentation.columns]
    changed = False

    def find_unit():
        for j in range(len(diffs) - 1, -1, -1):
            for c, col in enumerate(diffs[j]):
                for (r, e), v in col.items():
                    if e == zero:
                        return j, r, c, v
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        changed = True
        j, r, c, u = hit
        cols = diffs[j]
        pivot = cols[c]
        uinv = fld.inv(u)
        for k, col in enumerate(cols):
            if k == c:
                continue
            entry = {e: v for (p, e), v in col.items() if p == r}
            for e, v in entry.items():
                vec_iadd(fld, col, pivot, e, fld.neg(fld.mul(v, uinv)))
        new_cols = []
        for k, col in enumerate(cols):
            if k == c:
                continue
            assert not any(p == r for (p, _) in col)
            new_cols.append(_drop_row(col, r))
        diffs[j] = new_cols
        # F_{j+1} loses generator c: delete row c of the next differential up
        if j + 1 < len(diffs):
            diffs[j + 1] = [_drop_row(col, c) for col in diffs[j + 1]]
        # F_j loses generator r: delete column r of the map below
        if j >= 1:
            del diffs[j - 1][r]
        else:
            del aug[r]
        del shifts[j + 1][c], labels[j + 1][c]
        del shifts[j][r], labels[j][r]
        while len(shifts) > 1 and not shifts[-1]:
            shifts.pop()
            labels.pop()
            diffs.pop()

    if not changed:
        return res
    modules = [FreeModule(ring, s, l) for s, l in zip(shifts, labels)]
    target = FreeModule(ring, (0,))
    maps = [ChainMap(modules[j + 1], modules[j], diffs[j]) for j in range(len(diffs))]
    out = Resolution(ring, modules, maps, ChainMap(modules[0], target, aug), res._ideal)
    return out


# ---------------------------------------------------------------------------
# verification


def verify_complex(res: Resolution) -> bool:
    """All consecutive composites vanish exactly, including the augmentation."""
    maps = [res.augmentation] + res.differentials
    for a, b in zip(maps, maps[1:]):
        if not a.compose(b).is_zero():
            return False
    return True


def _graded_basis(F: FreeModule, t: int):
    index = {}
    for k, s in enumerate(F.shifts):
        for m in F.ring.monomials_of_degree(t - s):
            index[(k, m)] = len(index)
    return index


def _graded_rank(d: ChainMap, t: int, tindex) -> int:
    fld = d.target.ring.field
    ech = Echelon(fld)
    ring = d.target.ring
    for k, s in enumerate(d.source.shifts):
        col = d.columns[k]
        if not col:
            continue
        for m in ring.monomials_of_degree(t - s):
            row = {}
            for (p, e), v in col.items():
                row[tindex[(p, add_exp(e, m))]] = v
            ech.add(row)
    return ech.rank


def graded_dims(res: Resolution, t: int):
    return [len(_graded_basis(F, t)) for F in res.modules]


def exactness_report(res: Resolution, degree_bound: int = None, ideal: IdealBasis = None):
    """Per-degree kernel/image dimensions; returns ``(ok, bound, failures)``."""
    if degree_bound is None:
        degree_bound = res.max_shift() + 2
    ideal = ideal or res.resolved_ideal
    failures = []
    target = FreeModule(res.ring, (0,))
    maps = [res.augmentation] + res.differentials
    for t in range(0, degree_bound + 1):
        bases = [_graded_basis(target, t)] + [_graded_basis(F, t) for F in res.modules]
        ranks = [_graded_rank(d, t, bases[k]) for k, d in enumerate(maps)]
        dim_I = len(bases[0]) - hilbert_function(ideal, t)
        if ranks[0] != dim_I:
            failures.append((t, "augmentation", ranks[0], dim_I))
        for j in range(len(res.modules)):
            dim_F = len(bases[j + 1])
            ker = dim_F - ranks[j]
            im = ranks[j + 1] if j + 1 < len(ranks) else 0
            if ker != im:
                failures.append((t, j, ker, im))
    return (not failures), degree_bound, failures


def verify_exactness(res: Resolution, degree_bound: int = None, ideal: IdealBasis = None) -> bool:
    ok, _, _ = exactness_report(res, degree_bound, ideal)
    return ok
