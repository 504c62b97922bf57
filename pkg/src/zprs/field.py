"""Exact arithmetic in the prime field Z_p.

Elements are immutable values carrying their modulus.  Primality is checked
eagerly (trial division; all moduli in this package are desk-scale), so
downstream modules may assume p is prime.  Division uses Fermat
exponentiation a / b = a * b^(p-2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, ModulusMismatch, NoSquareRootOfMinusOne, NotAUnit, NotPrime


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class FieldElement:
    """An element of Z_p, stored as the canonical representative in [0, p-1]."""

    value: int
    p: int

    def __post_init__(self):
        ensure_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FieldElement") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.value * other.value % self.p, self.p)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        if other.value == 0:
            raise DivisionByZero(f"division by zero in Z_{self.p}")
        return self * other.inverse()

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.p, self.p)

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"zero has no inverse in Z_{self.p}")
        return FieldElement(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


@lru_cache(maxsize=None)
def find_kappa(p: int) -> FieldElement:
    """Smallest kappa in [1, p-1] with kappa^2 = -1 (mod p).

    Exists exactly when p = 2 or p = 1 (mod 4); otherwise raises
    ``NoSquareRootOfMinusOne``.  Exhaustive search is fine at desk scale.
    """
    ensure_prime(p)
    for k in range(1, p):
        if k * k % p == (p - 1) % p:
            return FieldElement(k, p)
    raise NoSquareRootOfMinusOne(f"-1 is not a square mod {p} (p = 3 mod 4)")


def unit_order(a: FieldElement) -> int:
    """Multiplicative order of a nonzero element: smallest t >= 1 with a^t = 1."""
    if a.value == 0:
        raise NotAUnit(f"0 is not a unit in Z_{a.p}")
    t, x = 1, a.value
    while x != 1:
        x = x * a.value % a.p
        t += 1
    return t
