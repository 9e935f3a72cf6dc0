"""Exact scalars over Z, Q and F_p, plus the small amount of field linear
algebra the rest of the package needs.

Elements of graded rings store *raw* canonical values (``int`` for Z and
F_p, ``Fraction`` for Q) for speed; :class:`Scalar` is the checked,
ring-tagged wrapper used at API boundaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

__all__ = [
    "CoefficientRing",
    "Scalar",
    "ZZ",
    "QQ",
    "GF",
    "MixedRingError",
    "NotInvertibleError",
    "is_prime",
    "invert",
    "row_reduce",
    "field_rank",
]

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "F"


class MixedRingError(TypeError):
    """Operands live in different coefficient rings."""


class NotInvertibleError(ArithmeticError):
    """Zero, or a non-unit of Z, was inverted."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """One of Z, Q or F_p.

    >>> GF(5)
    CoefficientRing('F_5')
    >>> QQ.is_field, ZZ.is_field
    (True, False)
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError(f"F_p needs a prime modulus, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        else:
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> CoefficientRing:
        """Parse ``Z``, ``Q`` or ``F_<p>``."""
        text = text.strip()
        if text == INTEGERS:
            return ZZ
        if text == RATIONALS:
            return QQ
        m = re.fullmatch(r"F_?(\d+)", text)
        if m:
            p = int(m.group(1))
            if not is_prime(p):
                raise ValueError(f"F_{p}: {p} is not prime")
            return GF(p)
        raise ValueError(f"unknown coefficient ring {text!r}")

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"F_{self.modulus}"
        return self.kind

    def __repr__(self):
        return f"CoefficientRing({str(self)!r})"

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == PRIME_FIELD else 0

    # raw-value arithmetic -------------------------------------------------

    def normalize(self, value: Any) -> int | Fraction:
        """Map an int, Fraction or Scalar to this ring's canonical raw value."""
        if isinstance(value, Scalar):
            if value.ring != self:
                raise MixedRingError(f"{value.ring} scalar used in {self}")
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if self.kind == INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return value.numerator
            if not isinstance(value, int):
                raise TypeError(f"cannot coerce {value!r} into Z")
            return value
        if self.kind == RATIONALS:
            if not isinstance(value, (int, Fraction)):
                raise TypeError(f"cannot coerce {value!r} into Q")
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ValueError(f"{value} has no image in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F_{p}")
        return value % p

    def __call__(self, value: Any) -> Scalar:
        return Scalar(self, self.normalize(value))

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def invert_raw(self, value: int | Fraction) -> int | Fraction:
        if value == 0:
            raise NotInvertibleError("cannot invert zero")
        if self.kind == INTEGERS:
            if value in (1, -1):
                return value
            raise NotInvertibleError(f"{value} is not a unit in Z")
        if self.kind == RATIONALS:
            return 1 / Fraction(value)
        return pow(int(value), -1, self.modulus)


ZZ = CoefficientRing(INTEGERS)
QQ = CoefficientRing(RATIONALS)


def GF(p: int) -> CoefficientRing:
    return CoefficientRing(PRIME_FIELD, p)


@dataclass(frozen=True)
class Scalar:
    """An exact element of a :class:`CoefficientRing`.

    Construct through the ring (``GF(5)(12)``) so the value is canonical.
    """

    ring: CoefficientRing
    value: int | Fraction

    def _other(self, other) -> int | Fraction:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise MixedRingError(f"cannot combine {self.ring} and {other.ring} scalars")
            return other.value
        return self.ring.normalize(other)

    def __add__(self, other):
        return self.ring(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring(self.value - self._other(other))

    def __rsub__(self, other):
        return self.ring(self._other(other) - self.value)

    def __mul__(self, other):
        return self.ring(self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring(-self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise MixedRingError(f"cannot compare {self.ring} and {other.ring} scalars")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ring.normalize(other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.ring}({self.value})"


def invert(a: Scalar) -> Scalar:
    """Multiplicative inverse; raises :class:`NotInvertibleError` for zero
    and for non-units of Z."""
    return Scalar(a.ring, a.ring.invert_raw(a.value))


def _raw_rows(matrix: Sequence[Sequence[Any]], ring: CoefficientRing) -> list[list]:
    rows = [list(r) for r in matrix]
    if rows:
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError(f"ragged matrix: row {i} has length {len(r)}, expected {width}")
    return [[ring.normalize(x) for x in r] for r in rows]


def row_reduce(rows: Iterable[Sequence[Any]], ring: CoefficientRing) -> list[list]:
    """Reduced row echelon form over a field, zero rows dropped.

    Entries may be ints, Fractions or Scalars of ``ring``; the result holds
    raw canonical values.
    """
    if not ring.is_field:
        raise ValueError(f"row reduction needs a field, got {ring}")
    m = _raw_rows(list(rows), ring)
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = ring.invert_raw(m[pivot_row][col])
        m[pivot_row] = [ring.normalize(x * inv) for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [ring.normalize(a - f * b) for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def field_rank(matrix: Sequence[Sequence[Any]], ring: CoefficientRing | None = None) -> int:
    """Rank of a matrix over Q or F_p by exact elimination.

    ``ring`` may be omitted when the entries are Scalars.

    >>> field_rank([[1, 2], [2, 4]], QQ)
    1
    """
    matrix = [list(r) for r in matrix]
    if ring is None:
        found = [x for r in matrix for x in r if isinstance(x, Scalar)]
        if not found:
            raise ValueError("coefficient ring required for a matrix of plain numbers")
        ring = found[0].ring
    return len(row_reduce(matrix, ring))
