"""Exact coefficient fields: the rationals and prime fields GF(p).

Polynomial code stores raw coefficient values (``Fraction`` for Q, ``int``
residues in ``[0, p)`` for GF(p)) and routes arithmetic through a
:class:`Field` instance.  :class:`FieldElement` is the user-facing wrapper
that remembers which field a value belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_WORD = 2**63


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Base class; use :class:`Rationals` or :class:`PrimeField`."""

    kind: str
    p: int

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))


class Rationals(Field):
    kind = "Rationals"
    p = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"cannot coerce element of {value.field} into {self}")
            return value.value
        if isinstance(value, float):
            raise FieldError("floating point coefficients are not exact")
        return Fraction(value)

    def parse(self, text: str):
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational {text!r}") from exc

    def fmt(self, a) -> str:
        return str(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n: int):
        return Fraction(n)

    def is_negative(self, a) -> bool:
        return a < 0

    def __repr__(self):
        return "QQ"

    @property
    def spec_string(self) -> str:
        return "q"


class PrimeField(Field):
    kind = "PrimeField"
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= MAX_WORD:
            raise FieldError(f"characteristic {p} does not fit in a machine word")
        self.p = p

    def coerce(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"cannot coerce element of {value.field} into {self}")
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} has no image in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, float):
            raise FieldError("floating point coefficients are not exact")
        return int(value) % self.p

    def parse(self, text: str):
        text = text.strip()
        try:
            return self.coerce(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad GF({self.p}) element {text!r}") from exc

    def fmt(self, a) -> str:
        return str(a)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def from_int(self, n: int):
        return n % self.p

    def is_negative(self, a) -> bool:
        return False

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def spec_string(self) -> str:
        return f"gf:{self.p}"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Parse ``q`` or ``gf:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("gf:"):
        try:
            p = int(t[3:])
        except ValueError as exc:
            raise FieldError(f"bad field string {text!r}") from exc
        return PrimeField(p)
    raise FieldError(f"unsupported field {text!r} (expected 'q' or 'gf:<p>')")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return FieldElement(self.field, other)
        if other.field != self.field:
            raise FieldError(f"mixed fields: {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return self.field.fmt(self.value)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_neg(a: FieldElement) -> FieldElement:
    return -a


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
