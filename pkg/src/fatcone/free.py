"""Graded free modules, their elements, and degree-0 maps between them.

A vector is stored sparsely as ``{(position, exponent): coefficient}``; this
is also the representation the Groebner engine works on, so module and
ideal computations share one code path (an ideal lives in the rank-1 free
module with shift 0).
"""

from __future__ import annotations

from .poly import Poly, Ring, add_exp


class GradingError(ValueError):
    pass


class FreeModule:
    """``R(-shifts[0]) + ... + R(-shifts[r-1])`` with provenance labels."""

    __slots__ = ("ring", "shifts", "labels")

    def __init__(self, ring: Ring, shifts, labels=None):
        self.ring = ring
        self.shifts = tuple(int(s) for s in shifts)
        if labels is None:
            labels = tuple(range(len(self.shifts)))
        self.labels = tuple(labels)
        if len(self.labels) != len(self.shifts):
            raise ValueError("labels and shifts differ in length")

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and self.ring == other.ring
            and self.shifts == other.shifts
        )

    def __hash__(self):
        return hash(self.shifts)

    def __repr__(self):
        return f"FreeModule(rank={self.rank}, shifts={list(self.shifts)})"

    def zero(self) -> "ModuleVector":
        return ModuleVector(self, {})

    def basis_vector(self, k: int) -> "ModuleVector":
        return ModuleVector(self, {(k, (0,) * self.ring.nvars): self.ring.field.one})

    def vector(self, coords) -> "ModuleVector":
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        terms = {}
        for k, c in enumerate(coords):
            if isinstance(c, Poly):
                if c.ring != self.ring:
                    raise ValueError("coordinate from a different ring")
                items = c.terms.items()
            else:
                items = self.ring.const(c).terms.items()
            for e, v in items:
                terms[(k, e)] = v
        return ModuleVector(self, terms)

    def term_degree(self, term) -> int:
        return self.ring.wdeg(term[1]) + self.shifts[term[0]]


def vec_degree(module: FreeModule, terms: dict) -> int:
    if not terms:
        return None
    return module.term_degree(next(iter(terms)))


def vec_is_homogeneous(module: FreeModule, terms: dict) -> bool:
    return len({module.term_degree(t) for t in terms}) <= 1


def vec_iadd(fld, acc: dict, terms: dict, exp=None, c=None):
    """``acc += c * x^exp * terms`` in place (``c`` raw field value, default 1)."""
    add, mul = fld.add, fld.mul
    for (p, e), v in terms.items():
        if exp is not None:
            e = add_exp(e, exp)
        if c is not None:
            v = mul(v, c)
        t = (p, e)
        old = acc.get(t)
        if old is None:
            acc[t] = v
        else:
            old = add(old, v)
            if old == 0:
                del acc[t]
            else:
                acc[t] = old
    return acc


def vec_scale_poly(fld, terms: dict, poly_terms: dict) -> dict:
    out = {}
    for e, c in poly_terms.items():
        vec_iadd(fld, out, terms, e, c)
    return out


def vec_neg(fld, terms: dict) -> dict:
    neg = fld.neg
    return {t: neg(v) for t, v in terms.items()}


class ModuleVector:
    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: dict):
        self.module = module
        self.terms = terms

    @property
    def coords(self):
        ring = self.module.ring
        rows = [dict() for _ in range(self.module.rank)]
        for (p, e), c in self.terms.items():
            rows[p][e] = c
        return [Poly(ring, r) for r in rows]

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        return vec_degree(self.module, self.terms)

    def is_homogeneous(self) -> bool:
        return vec_is_homogeneous(self.module, self.terms)

    def _fld(self):
        return self.module.ring.field

    def __add__(self, other: "ModuleVector"):
        acc = dict(self.terms)
        vec_iadd(self._fld(), acc, other.terms)
        return ModuleVector(self.module, acc)

    def __neg__(self):
        return ModuleVector(self.module, vec_neg(self._fld(), self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, f):
        if isinstance(f, Poly):
            return ModuleVector(self.module, vec_scale_poly(self._fld(), self.terms, f.terms))
        c = self._fld().coerce(f)
        if c == 0:
            return self.module.zero()
        mul = self._fld().mul
        return ModuleVector(self.module, {t: mul(v, c) for t, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class ChainMap:
    """Degree-0 map ``source -> target`` stored as one target vector per source generator."""

    __slots__ = ("source", "target", "columns")

    def __init__(self, source: FreeModule, target: FreeModule, columns, check=True):
        self.source = source
        self.target = target
        self.columns = [c if isinstance(c, dict) else c.terms for c in columns]
        if len(self.columns) != source.rank:
            raise ValueError(f"{len(self.columns)} columns for a rank {source.rank} source")
        if check:
            self.check_graded()

    @classmethod
    def from_matrix(cls, source, target, matrix, check=True):
        """``matrix[r][c]`` is the Poly entry in row r (target) and column c (source)."""
        cols = []
        for c in range(source.rank):
            terms = {}
            for r in range(target.rank):
                entry = matrix[r][c]
                if not isinstance(entry, Poly):
                    entry = target.ring.const(entry)
                for e, v in entry.terms.items():
                    terms[(r, e)] = v
            cols.append(terms)
        return cls(source, target, cols, check)

    def check_graded(self):
        tdeg = self.target.term_degree
        for c, col in enumerate(self.columns):
            want = self.source.shifts[c]
            for t in col:
                if tdeg(t) != want:
                    raise GradingError(
                        f"column {c} has a term of degree {tdeg(t)}, expected {want}"
                    )

    @property
    def matrix(self):
        ring = self.target.ring
        rows = [[dict() for _ in range(self.source.rank)] for _ in range(self.target.rank)]
        for c, col in enumerate(self.columns):
            for (r, e), v in col.items():
                rows[r][c][e] = v
        return [[Poly(ring, d) for d in row] for row in rows]

    def entry(self, r: int, c: int) -> Poly:
        return Poly(self.target.ring, {e: v for (p, e), v in self.columns[c].items() if p == r})

    def column(self, c: int) -> ModuleVector:
        return ModuleVector(self.target, self.columns[c])

    def apply_terms(self, terms: dict) -> dict:
        fld = self.target.ring.field
        out = {}
        for (p, e), v in terms.items():
            vec_iadd(fld, out, self.columns[p], e, v)
        return out

    def apply(self, v: ModuleVector) -> ModuleVector:
        return ModuleVector(self.target, self.apply_terms(v.terms))

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self o other``."""
        if other.target.rank != self.source.rank:
            raise ValueError("incompatible maps")
        return ChainMap(other.source, self.target, [self.apply_terms(c) for c in other.columns], check=False)

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def has_unit_entry(self) -> bool:
        return any(not any(e) for col in self.columns for (_, e) in col)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        fld = self.target.ring.field
        cols = []
        for a, b in zip(self.columns, other.columns):
            acc = dict(a)
            vec_iadd(fld, acc, vec_neg(fld, b))
            cols.append(acc)
        return ChainMap(self.source, self.target, cols, check=False)

    def __repr__(self):
        return f"ChainMap({self.source.rank} -> {self.target.rank})"
