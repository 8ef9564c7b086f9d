"""Dense polynomials over GF(2) in one variable, encoded as Python integers.

The polynomial c_0 + c_1 t + ... + c_n t^n is the integer c_0 + 2 c_1 + ... +
2^n c_n.  The zero polynomial is 0; every nonzero polynomial automatically has
leading coefficient 1, so the representation is canonical.  Addition is XOR,
multiplication is carryless, and everything stays exact.

Module-level functions operate on raw ints (these are used in hot loops);
:class:`BitPoly` is a thin immutable wrapper with operators for everything
else.  Degrees are tiny throughout the package (discriminants have degree at
most 12, local-model bookkeeping stays below a few hundred bits), so no
asymptotically clever algorithms are needed.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator


def pdeg(f: int) -> int:
    """Degree of f, with -1 standing in for the degree of the zero polynomial."""
    return f.bit_length() - 1


def pmul(f: int, g: int) -> int:
    """Carryless product of two GF(2)[t] polynomials."""
    if f == 0 or g == 0:
        return 0
    # iterate over the sparser operand
    if f.bit_count() > g.bit_count():
        f, g = g, f
    acc = 0
    while f:
        low = f & -f
        acc ^= g * low  # g << k with k = trailing zero count
        f ^= low
    return acc


def psquare(f: int) -> int:
    """Square of f; in characteristic 2 this just spreads the bits apart."""
    acc = 0
    i = 0
    while f:
        if f & 1:
            acc |= 1 << (2 * i)
        f >>= 1
        i += 1
    return acc


def ppow(f: int, e: int) -> int:
    """f**e by repeated squaring."""
    acc = 1
    base = f
    while e:
        if e & 1:
            acc = pmul(acc, base)
        base = psquare(base)
        e >>= 1
    return acc


def pdivmod(f: int, g: int) -> tuple[int, int]:
    """Quotient and remainder of polynomial long division; g must be nonzero."""
    if g == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dg = pdeg(g)
    q = 0
    while True:
        shift = pdeg(f) - dg
        if shift < 0:
            return q, f
        q ^= 1 << shift
        f ^= g << shift


def pmod(f: int, g: int) -> int:
    return pdivmod(f, g)[1]


def pexactdiv(f: int, g: int) -> int:
    """Exact division; raises if g does not divide f."""
    q, r = pdivmod(f, g)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def pgcd(f: int, g: int) -> int:
    while g:
        f, g = g, pmod(f, g)
    return f


def pval(f: int, g: int) -> int:
    """Valuation of f at the (nonconstant) polynomial g: max k with g^k | f.

    f must be nonzero.
    """
    if f == 0:
        raise ValueError("valuation of the zero polynomial is undefined")
    v = 0
    while True:
        q, r = pdivmod(f, g)
        if r:
            return v
        v += 1
        f = q


def peval_bit(f: int, x: int) -> int:
    """Evaluate f at x in GF(2): x = 0 gives the constant term, x = 1 the parity."""
    if x == 0:
        return f & 1
    return f.bit_count() & 1


def psubst(f: int, g: int) -> int:
    """Composition f(g(t)) by Horner evaluation."""
    acc = 0
    for i in range(pdeg(f), -1, -1):
        acc = pmul(acc, g)
        if (f >> i) & 1:
            acc ^= 1
    return acc


def preverse(f: int, n: int) -> int:
    """t^n * f(1/t) for deg f <= n: the coefficient word reversed in width n+1."""
    if pdeg(f) > n:
        raise ValueError("degree exceeds reversal width")
    acc = 0
    for i in range(n + 1):
        if (f >> i) & 1:
            acc |= 1 << (n - i)
    return acc


def pderiv(f: int) -> int:
    """Formal derivative: odd-degree coefficients shift down, even ones vanish."""
    acc = 0
    i = 1
    while f >> i:
        if (f >> i) & 1:
            acc |= 1 << (i - 1)
        i += 2
    return acc


@lru_cache(maxsize=None)
def irreducibles(max_deg: int) -> tuple[int, ...]:
    """All monic irreducible polynomials of degree 1..max_deg, sorted by
    (degree, encoding), found by sieving with trial division."""
    found: list[int] = []
    for d in range(1, max_deg + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if d > 1 and not f & 1:
                continue  # divisible by t
            if all(pmod(f, p) for p in found if 2 * pdeg(p) <= d):
                found.append(f)
    return tuple(found)


def is_irreducible(f: int) -> bool:
    """Trial-division irreducibility test (constants are not irreducible)."""
    d = pdeg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    return all(pmod(f, p) for p in irreducibles(d // 2))


def factor(f: int) -> list[tuple[int, int]]:
    """Factor a nonzero polynomial into monic irreducibles with multiplicities,
    sorted by (degree, encoding).

    Inputs in this package have degree at most 12, so trial division over the
    sieved irreducibles of degree <= 6 splits off every factor of a reducible
    polynomial; whatever survives with positive degree is itself irreducible.
    """
    if f == 0:
        raise ValueError("cannot factor the zero polynomial")
    out: list[tuple[int, int]] = []
    half = max(1, pdeg(f) // 2)
    for p in irreducibles(half):
        if pdeg(p) > pdeg(f) // 2:
            break
        m = 0
        while True:
            q, r = pdivmod(f, p)
            if r:
                break
            f = q
            m += 1
        if m:
            out.append((p, m))
    if pdeg(f) >= 1:
        out.append((f, 1))
    out.sort(key=lambda pm: (pdeg(pm[0]), pm[0]))
    return out


# --- text grammar -----------------------------------------------------------
#
# Polynomials print as sums of "t^k" / "t" / "1" (descending powers), e.g.
# "t^6+t^5" or "t^2+t+1"; "0" is the zero polynomial.  The parser additionally
# accepts products with explicit "*" or parenthesized factors, so inputs like
# "t^5*(t+1)" round-trip through the equation grammar.


class PolyParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.pos = pos


def format_poly(f: int) -> str:
    if f == 0:
        return "0"
    terms = []
    for i in range(pdeg(f), -1, -1):
        if (f >> i) & 1:
            terms.append("t^%d" % i if i > 1 else ("t" if i == 1 else "1"))
    return "+".join(terms)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.s = text.replace(" ", "")
        self.i = 0

    def error(self, msg: str) -> PolyParseError:
        return PolyParseError(self.text, self.i, msg)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def parse_sum(self) -> int:
        acc = self.parse_product()
        while self.peek() == "+":
            self.i += 1
            acc ^= self.parse_product()
        return acc

    def parse_product(self) -> int:
        acc = self.parse_atom()
        while True:
            c = self.peek()
            if c == "*":
                self.i += 1
                acc = pmul(acc, self.parse_atom())
            elif c == "(" or c == "t":
                acc = pmul(acc, self.parse_atom())
            else:
                return acc

    def parse_atom(self) -> int:
        c = self.peek()
        if c == "(":
            self.i += 1
            inner = self.parse_sum()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.i += 1
            return inner
        if c == "t":
            self.i += 1
            if self.peek() == "^":
                self.i += 1
                j = self.i
                while self.i < len(self.s) and self.s[self.i].isdigit():
                    self.i += 1
                if self.i == j:
                    raise self.error("expected exponent")
                return 1 << int(self.s[j:self.i])
            return 2
        if c in ("0", "1"):
            self.i += 1
            return int(c)
        raise self.error("expected term")

    def parse_all(self) -> int:
        if not self.s:
            raise self.error("empty polynomial")
        v = self.parse_sum()
        if self.i != len(self.s):
            raise self.error("trailing input")
        return v


def parse_poly(text: str) -> int:
    return _Parser(text).parse_all()


class BitPoly:
    """Immutable GF(2)[t] polynomial wrapping the integer encoding."""

    __slots__ = ("bits",)

    def __init__(self, bits: "int | str | BitPoly" = 0):
        if isinstance(bits, BitPoly):
            bits = bits.bits
        elif isinstance(bits, str):
            bits = parse_poly(bits)
        elif not isinstance(bits, int) or bits < 0:
            raise TypeError("BitPoly expects a nonnegative int, str, or BitPoly")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *a):
        raise AttributeError("BitPoly is immutable")

    @property
    def degree(self) -> int:
        return pdeg(self.bits)

    def __add__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(self.bits ^ BitPoly(other).bits)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(pmul(self.bits, BitPoly(other).bits))

    def __pow__(self, e: int) -> "BitPoly":
        return BitPoly(ppow(self.bits, e))

    def __divmod__(self, other: "BitPoly") -> tuple["BitPoly", "BitPoly"]:
        q, r = pdivmod(self.bits, BitPoly(other).bits)
        return BitPoly(q), BitPoly(r)

    def __floordiv__(self, other: "BitPoly") -> "BitPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "BitPoly") -> "BitPoly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, BitPoly):
            return self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BitPoly", self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return format_poly(self.bits)

    def __repr__(self) -> str:
        return f"BitPoly({str(self)!r})"

    def gcd(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(pgcd(self.bits, BitPoly(other).bits))

    def factor(self) -> list[tuple["BitPoly", int]]:
        return [(BitPoly(p), m) for p, m in factor(self.bits)]

    def is_irreducible(self) -> bool:
        return is_irreducible(self.bits)

    def substitute(self, other: "BitPoly") -> "BitPoly":
        return BitPoly(psubst(self.bits, BitPoly(other).bits))

    def __call__(self, x: int) -> int:
        return peval_bit(self.bits, x)


T = BitPoly(2)
ONE = BitPoly(1)
ZERO = BitPoly(0)


def all_polys(max_deg: int) -> Iterator[int]:
    """All polynomials of degree <= max_deg (including 0), ascending encoding."""
    return iter(range(1 << (max_deg + 1)))
