"""Sparse multivariate polynomials over an exact field.

A polynomial is a dict ``{exponent tuple: coefficient}`` with no zero
coefficients, bundled with the :class:`Ring` it lives in.  Rings for the
hyperplane construction use the convention that ``x0`` is variable index 0 of
``R' = K[x0..xd]`` and ``R = K[x1..xd]`` is identified with the last ``d``
variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement

from .arith import QQ, Field, FieldElement


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex``, ``lex`` or ``block`` (two grevlex blocks, first ``k`` vars dominant)."""

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exp: tuple) -> tuple:
        if self.kind == "grevlex":
            return _grevlex(exp)
        if self.kind == "lex":
            return exp
        return _grevlex(exp[: self.k]) + _grevlex(exp[self.k:])


def _grevlex(exp):
    return (sum(exp),) + tuple(-e for e in reversed(exp))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def BlockElimination(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


@dataclass(frozen=True)
class Ring:
    nvars: int
    names: tuple
    field: Field = QQ
    first_var_is_x0: bool = False
    order: MonomialOrder = GREVLEX
    weights: tuple = None
    _keycache: dict = dc_field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.nvars < 1:
            raise RingError("a ring needs at least one variable")
        if len(self.names) != self.nvars or len(set(self.names)) != self.nvars:
            raise RingError(f"variable names {self.names} invalid for {self.nvars} variables")
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * self.nvars)

    def key(self, exp):
        k = self._keycache.get(exp)
        if k is None:
            k = self._keycache[exp] = self.order.key(exp)
        return k

    def wdeg(self, exp) -> int:
        if self.weights is None or all(w == 1 for w in self.weights):
            return sum(exp)
        return sum(w * e for w, e in zip(self.weights, exp))

    # constructors -------------------------------------------------------
    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.field.one})

    def const(self, c) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {(0,) * self.nvars: c} if c != 0 else {})

    def var(self, i: int) -> "Poly":
        exp = [0] * self.nvars
        exp[i] = 1
        return Poly(self, {tuple(exp): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp, c=1) -> "Poly":
        c = self.field.coerce(c)
        return Poly(self, {tuple(exp): c} if c != 0 else {})

    def from_dict(self, d) -> "Poly":
        f = self.field
        out = {}
        for e, c in d.items():
            c = f.coerce(c)
            if c != 0:
                out[tuple(e)] = c
        return Poly(self, out)

    def parse(self, text: str) -> "Poly":
        return parse_poly(self, text)

    def monomials_of_degree(self, t: int):
        """All exponent tuples of total degree ``t`` (descending grevlex)."""
        if t < 0:
            return []
        n = self.nvars
        out = []
        for combo in combinations_with_replacement(range(n), t):
            e = [0] * n
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
        out.sort(key=_grevlex, reverse=True)
        return out

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.nvars, self.names, self.field, self.first_var_is_x0, order, self.weights)

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]"


def polynomial_ring(names, field: Field = QQ, first_var_is_x0: bool = False) -> Ring:
    if isinstance(names, str):
        names = tuple(n.strip() for n in names.split(","))
    return Ring(len(names), tuple(names), field, first_var_is_x0)


def standard_ring(nvars: int, field: Field = QQ, start: int = 0) -> Ring:
    """``K[x{start}, ..., x{start+nvars-1}]``."""
    names = tuple(f"x{i}" for i in range(start, start + nvars))
    return Ring(nvars, names, field, first_var_is_x0=(start == 0))


def add_exp(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def sub_exp(a, b):
    return tuple([y - x for x, y in zip(b, a)])


def lcm_exp(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


class Poly:
    """Immutable polynomial value; ``terms`` must not be mutated."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt = None

    # inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self._lt is None:
            key = self.ring.key
            e = max(self.terms, key=key)
            self._lt = (e, self.terms[e])
        return self._lt

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.wdeg(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.ring.wdeg(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.field.zero)

    # arithmetic ------------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        add = self.ring.field.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = add(v, c)
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c):
        c = self.ring.field.coerce(c)
        if c == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Poly(self.ring, {e: mul(v, c) for e, v in self.terms.items()})

    def mul_term(self, exp, c):
        """Multiply by the single term ``c * x^exp`` (``c`` a raw field value)."""
        if c == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Poly(self.ring, {add_exp(e, exp): mul(v, c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scale(other)
        other = self._check(other)
        f = self.ring.field
        add, mul = f.add, f.mul
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = add_exp(e1, e2)
                v = mul(c1, c2)
                if e in out:
                    v = add(out[e], v)
                    if v == 0:
                        del out[e]
                        continue
                out[e] = v
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point):
        f = self.ring.field
        pt = [f.coerce(v) for v in point]
        total = f.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = f.mul(v, x if k == 1 else _fpow(f, x, k))
            total = f.add(total, v)
        return total

    def partial_derivative(self, i: int) -> "Poly":
        return partial_derivative(self, i)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _fpow(f, x, k):
    r = f.one
    for _ in range(k):
        r = f.mul(r, x)
    return r


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_scalar_mul(c, f: Poly) -> Poly:
    return f.scale(c)


def partial_derivative(f: Poly, i: int) -> Poly:
    if not 0 <= i < f.ring.nvars:
        raise IndexError(f"variable index {i} out of range")
    fld = f.ring.field
    out = {}
    for e, c in f.terms.items():
        k = e[i]
        if k == 0:
            continue
        v = fld.mul(c, fld.from_int(k))
        if v == 0:
            continue
        ne = list(e)
        ne[i] -= 1
        out[tuple(ne)] = v
    return Poly(f.ring, out)


def embed_R_to_Rprime(f: Poly, target: Ring) -> Poly:
    """Canonical inclusion: ``target`` has one extra leading variable."""
    if target.nvars != f.ring.nvars + 1 or target.field != f.ring.field:
        raise RingError(f"cannot embed {f.ring} into {target}")
    return Poly(target, {(0,) + e: c for e, c in f.terms.items()})


def restrict_to_hyperplane(f: Poly, target: Ring) -> Poly:
    """Set the leading variable to zero and drop it."""
    if target.nvars + 1 != f.ring.nvars or target.field != f.ring.field:
        raise RingError(f"cannot restrict {f.ring} to {target}")
    return Poly(target, {e[1:]: c for e, c in f.terms.items() if e[0] == 0})


def format_monomial(ring: Ring, exp) -> str:
    parts = []
    for name, k in zip(ring.names, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    fld = f.ring.field
    out = []
    for e, c in f.sorted_terms():
        neg = fld.is_negative(c)
        a = -c if neg else c
        mono = format_monomial(f.ring, e)
        cs = fld.fmt(a)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse ``3*x0^2*x1 - 1/2*x2^3`` style text (no parentheses)."""
    names = {n: i for i, n in enumerate(ring.names)}
    fld = ring.field
    s = text.strip()
    if not s:
        raise RingError("empty polynomial text")
    pos = 0
    result = {}
    sign = 1
    expect_term = True
    coeff = fld.one
    exp = [0] * ring.nvars
    seen_factor = False

    def flush():
        nonlocal coeff, exp, seen_factor
        if not seen_factor:
            raise RingError(f"dangling operator in {text!r}")
        c = coeff if sign > 0 else fld.neg(coeff)
        e = tuple(exp)
        v = fld.add(result.get(e, fld.zero), c)
        if v == 0:
            result.pop(e, None)
        else:
            result[e] = v
        coeff = fld.one
        exp = [0] * ring.nvars
        seen_factor = False

    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise RingError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        num, name, caret, star, pm, lp, rp = m.groups()
        if lp or rp:
            raise RingError("parentheses are not supported")
        if pm:
            if seen_factor:
                flush()
                sign = 1 if pm == "+" else -1
            elif expect_term and pm == "-":
                sign = -sign
            expect_term = True
            continue
        if star:
            if not seen_factor:
                raise RingError(f"misplaced '*' in {text!r}")
            continue
        if num:
            coeff = fld.mul(coeff, fld.parse(num))
            seen_factor = True
            expect_term = False
            continue
        if name:
            if name not in names:
                raise RingError(f"unknown variable {name!r}")
            power = 1
            m2 = re.compile(r"\s*\^\s*(\d+)").match(s, pos)
            if m2:
                power = int(m2.group(1))
                pos = m2.end()
            exp[names[name]] += power
            seen_factor = True
            expect_term = False
            continue
        if caret:
            raise RingError(f"misplaced '^' in {text!r}")
    flush()
    return Poly(ring, result)
