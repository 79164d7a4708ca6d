"""Exact scalar fields: prime fields GF(p) and the rationals.

Raw field elements are plain Python values so that the elimination loops stay
cheap: an ``int`` in ``range(p)`` for GF(p), a ``fractions.Fraction`` for Q.
:class:`Scalar` wraps a raw value together with its field for callers that
want checked arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import BadScalar, DivisionByZero, FieldMismatch, NotAPrime

Raw = Union[int, Fraction]

MAX_PRIME = 1 << 16

_INT_RE = re.compile(r"[+-]?\d+\Z")
_FRAC_RE = re.compile(r"([+-]?\d+)/(\d+)\Z")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field GF(p) when ``p`` is set, the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise NotAPrime(f"field characteristic must be an integer, got {self.p!r}")
            if not 2 <= self.p < MAX_PRIME or not is_prime(self.p):
                raise NotAPrime(f"{self.p} is not a prime below 2^16")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.p is not None else "Q"

    @property
    def tag(self) -> str:
        """Short tag used by the CLI (``gf2``, ``q``)."""
        return f"gf{self.p}" if self.p is not None else "q"

    def __repr__(self) -> str:
        return self.name

    @property
    def zero(self) -> Raw:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Raw:
        return 1 if self.p is not None else Fraction(1)

    def coerce(self, value: object) -> Raw:
        """Convert an int, Fraction, Scalar or literal string to a canonical raw value."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise BadScalar(f"not a scalar: {value!r}")
        if self.p is not None:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise BadScalar(f"{value} is not an element of {self}")
                value = value.numerator
            if not isinstance(value, int):
                raise BadScalar(f"not a scalar of {self}: {value!r}")
            return value % self.p
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise BadScalar(f"not a scalar of {self}: {value!r}")

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZero(f"zero has no inverse in {self}")
        if self.p is not None:
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def add(self, a: Raw, b: Raw) -> Raw:
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a: Raw, b: Raw) -> Raw:
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a: Raw) -> Raw:
        return (-a) % self.p if self.p is not None else -a

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def parse(self, token: str) -> Raw:
        """Parse a scalar literal: an integer, or ``a/b`` over Q."""
        token = token.strip()
        if _INT_RE.match(token):
            return self.coerce(int(token))
        m = _FRAC_RE.match(token)
        if m and self.p is None:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise BadScalar(f"zero denominator in {token!r}")
            return Fraction(num, den)
        raise BadScalar(f"bad scalar literal {token!r} for {self}")

    def format(self, a: Raw) -> str:
        return str(a)

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return iter(range(self.p))

    def scalar(self, value: object) -> "Scalar":
        return Scalar(self, self.coerce(value))


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


QQ = FieldSpec(None)


def field_from_tag(tag: str) -> FieldSpec:
    """``gf2``/``gf3``/``gf5``/... or ``q``."""
    tag = tag.strip().lower()
    if tag == "q":
        return QQ
    if tag.startswith("gf") and tag[2:].isdigit():
        return FieldSpec(int(tag[2:]))
    raise ValueError(f"unknown field tag {tag!r}")


@dataclass(frozen=True)
class Scalar:
    """An element of a :class:`FieldSpec`, always stored in canonical form."""

    field: FieldSpec
    value: Raw

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other: object) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.coerce(other)
        return NotImplemented  # type: ignore[return-value]

    def _wrap(self, raw: Raw) -> "Scalar":
        return Scalar(self.field, raw)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self) -> "Scalar":
        return self._wrap(self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __str__(self) -> str:
        return self.field.format(self.value)


_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact ``a op b`` for ``op`` in add/sub/mul/div."""
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return getattr(a, _OPS[op])(b)
