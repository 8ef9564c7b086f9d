"""Arithmetic in the finite fields GF(2^k) for k <= 12.

These fields show up as residue fields of the places of P^1 over GF(2) that
divide a discriminant of degree at most 12.  Elements are GF(2)[t]
polynomials of degree < k reduced modulo a fixed monic irreducible, encoded
as ints exactly like :mod:`gf2fib.polys`.  All output is deterministic
because the modulus table below is frozen.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .polys import BitPoly, is_irreducible, pdeg, pdivmod, pmod, pmul, psquare

# Fixed moduli, one monic irreducible per extension degree.  Frozen constants
# so that every run of every tool prints identical field elements; the test
# suite re-checks irreducibility of each entry.
FIELD_MODULI: dict[int, int] = {
    1: 0b11,                # t+1 (any degree-1 modulus gives the prime field)
    2: 0b111,               # t^2+t+1
    3: 0b1011,              # t^3+t+1
    4: 0b10011,             # t^4+t+1
    5: 0b100101,            # t^5+t^2+1
    6: 0b1011011,           # t^6+t^4+t^3+t+1
    7: 0b10000011,          # t^7+t+1
    8: 0b100011101,         # t^8+t^4+t^3+t^2+1
    9: 0b1000010001,        # t^9+t^4+1
    10: 0b10001101111,      # t^10+t^6+t^5+t^3+t^2+t+1
    11: 0b100000000101,     # t^11+t^2+1
    12: 0b1000011101011,    # t^12+t^7+t^6+t^5+t^3+t+1
}


@dataclass(frozen=True)
class FieldSpec:
    """A concrete model of GF(2^k): extension degree plus monic irreducible modulus."""

    k: int
    modulus: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if pdeg(self.modulus) != self.k:
            raise ValueError("modulus degree does not match k")
        if not is_irreducible(self.modulus):
            raise ValueError("modulus is reducible")

    @property
    def order(self) -> int:
        return 1 << self.k


@lru_cache(maxsize=None)
def field(k: int) -> "FF":
    """The standard GF(2^k) built on the frozen modulus table."""
    if k not in FIELD_MODULI:
        raise ValueError(f"no modulus on file for GF(2^{k})")
    return FF(FieldSpec(k, FIELD_MODULI[k]))


def field_for_modulus(modulus: int) -> "FF":
    """GF(2^deg) presented by an explicit irreducible modulus (used for the
    residue field at a specific place)."""
    return FF(FieldSpec(pdeg(modulus), modulus))


class FF:
    """Operation bundle for one finite field GF(2^k).

    Elements are plain ints (polynomial encodings reduced mod the modulus);
    keeping them raw makes the local reduction loops cheap and makes lifting
    back to GF(2)[t] the identity.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.k = spec.k
        self.modulus = spec.modulus

    def __repr__(self) -> str:
        return f"FF(GF(2^{self.k}), mod={BitPoly(self.modulus)})"

    def reduce(self, f: int) -> int:
        return pmod(f, self.modulus) if f >> self.k else f

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return self.reduce(pmul(a, b))

    def square(self, a: int) -> int:
        return self.reduce(psquare(a))

    def pow(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.square(base)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverting 0 in a finite field")
        # extended Euclid in GF(2)[t]
        r0, r1 = self.modulus, a
        s0, s1 = 0, 1
        while r1:
            q, r = pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 ^ pmul(q, s1)
        assert r0 == 1
        return self.reduce(s0)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int) -> int:
        return self.square(a)

    def sqrt(self, a: int) -> int:
        """Unique square root; Frobenius is bijective so x -> x^(2^(k-1))."""
        for _ in range(self.k - 1):
            a = self.square(a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace down to GF(2), returned as 0 or 1."""
        acc, x = a, a
        for _ in range(self.k - 1):
            x = self.square(x)
            acc ^= x
        assert acc in (0, 1)
        return acc

    def enumerate(self) -> Iterator[int]:
        return iter(range(self.spec.order))

    def artin_schreier_roots(self, c: int) -> list[int]:
        """Solutions of x^2 + x = c: two if trace(c) = 0, none otherwise."""
        if self.trace(c):
            return []
        if self.k % 2 == 1:
            # half-trace closed form works in odd degree
            x = c
            acc = c
            for _ in range((self.k - 1) // 2):
                x = self.square(self.square(x))
                acc ^= x
            root = acc
        else:
            root = next(x for x in self.enumerate()
                        if self.square(x) ^ x == c)
        assert self.square(root) ^ root == c
        return sorted((root, root ^ 1))

    def quadratic_roots(self, b: int, c: int) -> list[int]:
        """Roots in the field of Y^2 + b*Y + c.

        For b = 0 the square root is unique (inseparable); otherwise the
        substitution Y = b*Z reduces to Artin-Schreier form.
        """
        if b == 0:
            return [self.sqrt(c)]
        binv = self.inv(b)
        cc = self.mul(self.mul(c, binv), binv)
        return sorted(self.mul(b, z) for z in self.artin_schreier_roots(cc))

    def quadratic_splits(self, b: int, c: int) -> bool:
        """Whether Y^2 + b*Y + c (b != 0) has its two distinct roots in the field."""
        if b == 0:
            raise ValueError("quadratic is inseparable")
        binv = self.inv(b)
        return self.trace(self.mul(self.mul(c, binv), binv)) == 0

    def cubic_root_count(self, c2: int, c1: int, c0: int) -> int:
        """Number of roots in the field of T^3 + c2 T^2 + c1 T + c0 (0, 1, 2 or 3)."""
        return sum(
            1 for x in self.enumerate()
            if self.mul(self.mul(x, x), x) ^ self.mul(c2, self.square(x))
            ^ self.mul(c1, x) ^ c0 == 0
        )


@dataclass(frozen=True)
class FFElement:
    """An element of a specified field; convenience wrapper for the public API."""

    spec: FieldSpec
    repr_bits: int

    def __post_init__(self):
        if pdeg(self.repr_bits) >= self.spec.k:
            raise ValueError("element representative not reduced")

    def _ff(self) -> FF:
        return FF(self.spec)

    def __add__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        return FFElement(self.spec, self.repr_bits ^ other.repr_bits)

    def __mul__(self, other: "FFElement") -> "FFElement":
        self._check(other)
        return FFElement(self.spec, self._ff().mul(self.repr_bits, other.repr_bits))

    def inverse(self) -> "FFElement":
        return FFElement(self.spec, self._ff().inv(self.repr_bits))

    def frobenius(self) -> "FFElement":
        return FFElement(self.spec, self._ff().frobenius(self.repr_bits))

    def _check(self, other: "FFElement"):
        if self.spec != other.spec:
            raise ValueError("elements live in different fields")

    def __str__(self) -> str:
        return str(BitPoly(self.repr_bits))
