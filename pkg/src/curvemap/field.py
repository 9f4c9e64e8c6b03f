"""Exact coefficient fields: a large prime field and arbitrary-precision rationals.

Scalars are plain Python values, ints in ``[0, p)`` for the prime field and
``fractions.Fraction`` (always reduced) for the rationals.  The field object
carries the arithmetic; there is no wrapper element type.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InstanceError

DEFAULT_PRIME = 2147483647
MIN_PRIME = 1 << 20

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10**24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Coordinate box for random sampling in rational mode.
_RATIONAL_BOX = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every integer below 3.3e24."""
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
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


class PrimeField:
    """Residues modulo a prime p >= 2**20, stored as ints in [0, p)."""

    __slots__ = ("p",)
    modular = True

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < MIN_PRIME:
            raise InstanceError(f"prime modulus must be at least 2**20, got {p}")
        if not is_prime(p):
            raise InstanceError(f"modulus {p} is not prime")
        self.p = p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def conv(self, value):
        """Coerce an int or Fraction into a residue."""
        if isinstance(value, Fraction):
            return value.numerator % self.p * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

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
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def rand(self, rng):
        return rng.randrange(self.p)

    def fmt(self, a) -> str:
        """Balanced representative, so small negative values print readably."""
        return str(a - self.p if a > self.p // 2 else a)

    def sort_key(self, a):
        return a

    def json_config(self):
        return {"mode": "prime", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """The rationals, via fractions.Fraction."""

    __slots__ = ()
    modular = False

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def conv(self, value):
        return Fraction(value)

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
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def rand(self, rng):
        return Fraction(rng.randint(-_RATIONAL_BOX, _RATIONAL_BOX))

    def fmt(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        return a

    def json_config(self):
        return {"mode": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()
