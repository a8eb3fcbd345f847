"""Prime field arithmetic.

Every protocol value (gradients, shares, check values) lives in F_q for a
prime q. Elements are canonical Python ints in [0, q); `PrimeField` carries
the modulus and the operations, and `FieldElement` is a thin checked wrapper
for callers that want operator syntax and cross-field safety. Python ints
keep the 122-bit intermediate products of the default 61-bit field exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ConfigurationError, FieldMismatchError

MERSENNE61 = (1 << 61) - 1  # default modulus, 2^61 - 1

# Smallest modulus accepted without the explicit small-field opt-in. Below
# this, a blind forgery survives verification with probability > 2^-32.
MIN_SECURE_MODULUS = 1 << 32

# Sufficient Miller-Rabin witness set for all n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality test for n below ~3.3e24 (covers 64-bit q and
    the ~66-bit packing moduli built on top of it)."""
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic witness range")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _inverse(a: int, m: int) -> int:
    """Modular inverse via the extended Euclidean algorithm."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse")
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroDivisionError(f"{a} is not invertible mod {m}")
    return old_s % m


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_q.

    q must be prime (checked deterministically). Moduli at or below 2^32
    give a forgery-miss probability worse than 2^-32 and are only accepted
    with ``allow_small=True`` (brute-force test fields such as q=97).
    """

    q: int
    allow_small: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or not is_prime(self.q):
            raise ConfigurationError(f"field modulus {self.q!r} is not prime")
        if self.q < MIN_SECURE_MODULUS and not self.allow_small:
            raise ConfigurationError(
                f"modulus {self.q} is below 2^32; pass allow_small=True for test fields"
            )

    # -- arithmetic on canonical ints (the fast path) -----------------------

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.q if s >= self.q else s

    def sub(self, a: int, b: int) -> int:
        s = a - b
        return s + self.q if s < 0 else s

    def mul(self, a: int, b: int) -> int:
        return a * b % self.q

    def neg(self, a: int) -> int:
        return self.q - a if a else 0

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        return _inverse(a, self.q)

    def reduce(self, x: int) -> int:
        return x % self.q

    def sample(self, rng: random.Random) -> int:
        """Uniform element of [0, q) by rejection on q.bit_length() bits.

        No modulo bias: candidates at or above q are redrawn.
        """
        k = self.q.bit_length()
        while True:
            v = rng.getrandbits(k)
            if v < self.q:
                return v

    def sample_distinct(self, rng: random.Random, count: int) -> list[int]:
        """Sample ``count`` pairwise-distinct elements."""
        if count > self.q:
            raise ConfigurationError(f"cannot draw {count} distinct values from F_{self.q}")
        seen: set[int] = set()
        out: list[int] = []
        while len(out) < count:
            v = self.sample(rng)
            if v not in seen:
                seen.add(v)
                out.append(v)
        return out

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def __contains__(self, value: int) -> bool:
        return isinstance(value, int) and 0 <= value < self.q


@dataclass(frozen=True)
class FieldElement:
    """A checked element of a specific prime field.

    Mixing elements of different fields raises FieldMismatchError. The
    value is always canonical: 0 <= value < q.
    """

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.q:
            raise ConfigurationError(f"{self.value} is not canonical in F_{self.field.q}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field.q != self.field.q:
            raise FieldMismatchError(
                f"cannot combine elements of F_{self.field.q} and F_{other.field.q}"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field.neg(self.value), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value
