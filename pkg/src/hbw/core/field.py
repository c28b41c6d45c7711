"""
Scalar Fields for Exact Linear Algebra

Two coefficient fields are supported:
- the rationals Q, values stored as fractions.Fraction
- prime fields F_p, values stored as int in [0, p)

A field object carries the arithmetic. Matrices and representations store
raw values and route every operation through their field, so the same
elimination code runs over both.

Descriptors:
- "q" or "rationals"     -> Q
- "p:<prime>" or "prime <prime>" -> F_p
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

_PRIME_DESCRIPTOR = re.compile(r'^(?:p:|prime\s+)(\d+)$')


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Field:
    """Base class for scalar fields; subclasses operate on raw values."""

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def coerce(self, value: Any) -> Any:
        """Map an int, Fraction or numeric string into the field."""
        raise NotImplementedError

    def contains(self, value: Any) -> bool:
        """Check that a raw value is a canonical element of this field."""
        raise NotImplementedError

    def add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def neg(self, x: Any) -> Any:
        raise NotImplementedError

    def mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def inv(self, x: Any) -> Any:
        raise NotImplementedError

    def sub(self, x: Any, y: Any) -> Any:
        return self.add(x, self.neg(y))

    def div(self, x: Any, y: Any) -> Any:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: Any) -> bool:
        return x == 0

    def format(self, x: Any) -> str:
        return str(x)

    @property
    def descriptor(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class RationalField(Field):
    """The field Q of rational numbers."""

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, bool):
            raise ValueError(f"Not a rational scalar: {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"Not a rational scalar: {value!r}") from None
        raise ValueError(f"Not a rational scalar: {value!r}")

    def contains(self, value: Any) -> bool:
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("Zero has no inverse in Q")
        return 1 / Fraction(x)

    @property
    def descriptor(self) -> str:
        return "q"

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    """
    The prime field F_p.

    Attributes:
        p: The characteristic; must be prime
    """
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"Field characteristic must be prime, got {self.p}")

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def coerce(self, value: Any) -> int:
        if isinstance(value, bool):
            raise ValueError(f"Not a scalar: {value!r}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            value = RATIONALS.coerce(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ValueError(f"{value} has no image in F_{self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        raise ValueError(f"Not a scalar: {value!r}")

    def contains(self, value: Any) -> bool:
        return (
            isinstance(value, int)
            and not isinstance(value, bool)
            and 0 <= value < self.p
        )

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def neg(self, x: int) -> int:
        return (-x) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError(f"Zero has no inverse in F_{self.p}")
        return pow(x, -1, self.p)

    @property
    def descriptor(self) -> str:
        return f"p:{self.p}"

    def __str__(self) -> str:
        return f"F_{self.p}"


RATIONALS = RationalField()


def parse_field(text: str) -> Field:
    """
    Parse a field descriptor.

    Args:
        text: "q", "rationals", "p:<prime>" or "prime <prime>"

    Returns:
        The corresponding field

    Raises:
        ValueError: If the descriptor is unknown or the modulus is not prime
    """
    cleaned = text.strip().lower()
    if cleaned in ("q", "rationals"):
        return RATIONALS
    match = _PRIME_DESCRIPTOR.match(cleaned)
    if match:
        return PrimeField(int(match.group(1)))
    raise ValueError(f"Unknown field descriptor: {text!r}")
