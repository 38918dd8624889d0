"""Polynomial arithmetic over GF(2), including the quotient ring mod x^n - 1.

A polynomial is stored as a bit-packed integer: bit i of ``mask`` holds the
coefficient of x^i.  Addition is XOR, multiplication is carry-less.  The zero
polynomial has mask 0 and degree ``None`` (an explicit sentinel, so Euclid's
loop never has to do arithmetic on a fake negative degree).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BinaryPolynomial:
    """Bit-packed polynomial over GF(2); immutable."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("polynomial mask must be nonnegative")

    @property
    def degree(self) -> int | None:
        """Largest exponent with a set coefficient, or None for the zero polynomial."""
        return self.mask.bit_length() - 1 if self.mask else None

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.mask.bit_length()) if (self.mask >> i) & 1)

    def coefficient(self, i: int) -> int:
        return (self.mask >> i) & 1 if i >= 0 else 0

    @classmethod
    def from_support(cls, exponents) -> BinaryPolynomial:
        """Build from an iterable of exponents; repeats cancel in pairs."""
        mask = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            mask ^= 1 << e
        return cls(mask)

    @classmethod
    def x_power(cls, k: int) -> BinaryPolynomial:
        if k < 0:
            raise ValueError("exponents must be nonnegative")
        return cls(1 << k)

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return add(self, other)

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return mul(self, other)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({format_poly(self)!r})"


ZERO = BinaryPolynomial(0)
ONE = BinaryPolynomial(1)
X = BinaryPolynomial(2)


def add(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    """Coefficientwise XOR."""
    return BinaryPolynomial(p.mask ^ q.mask)


def mul(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    """Carry-less product (no reduction)."""
    a, b = p.mask, q.mask
    if a < b:
        a, b = b, a
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return BinaryPolynomial(acc)


def divmod_poly(p: BinaryPolynomial, q: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    """Quotient and remainder of p by q; q must be nonzero."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    a, b = p.mask, q.mask
    dq = b.bit_length() - 1
    quo = 0
    while a.bit_length() - 1 >= dq and a:
        shift = (a.bit_length() - 1) - dq
        a ^= b << shift
        quo ^= 1 << shift
    return BinaryPolynomial(quo), BinaryPolynomial(a)


def mod_poly(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    return divmod_poly(p, q)[1]


def gcd(p: BinaryPolynomial, q: BinaryPolynomial) -> BinaryPolynomial:
    """Euclidean gcd; errors when both arguments are zero."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd undefined for two zero polynomials")
    a, b = p, q
    while not b.is_zero:
        a, b = b, mod_poly(a, b)
    return a


def x_pow_minus_one(n: int) -> BinaryPolynomial:
    """x^n - 1, which over GF(2) is x^n + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return BinaryPolynomial((1 << n) | 1)


def reduce_mod_xn(p: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """Reduce modulo x^n - 1: exponents wrap around mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    mask = p.mask
    low = (1 << n) - 1
    while mask >> n:
        mask = (mask & low) ^ (mask >> n)
    return BinaryPolynomial(mask)


def mul_mod(p: BinaryPolynomial, q: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """Product in GF(2)[x]/(x^n - 1)."""
    return reduce_mod_xn(mul(p, q), n)


def substitute_power(p: BinaryPolynomial, k: int, n: int) -> BinaryPolynomial:
    """p(x^k) mod x^n - 1: each exponent i maps to i*k mod n, collisions cancel."""
    if k < 1:
        raise ValueError("k must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    mask = 0
    for e in p.support():
        mask ^= 1 << (e * k % n)
    return BinaryPolynomial(mask)


def parse_poly(text: str) -> BinaryPolynomial:
    """Parse the textual form ``term ("+" term)*`` with term one of 0, 1, x, x^INT.

    Raises ValueError naming the offending position on malformed input.
    """
    mask = 0
    pos = 0
    if not text.strip():
        raise ValueError("empty polynomial at position 0")
    for chunk in text.split("+"):
        term = chunk.strip()
        at = pos + chunk.index(term) if term else pos
        if term == "0":
            pass
        elif term == "1":
            mask ^= 1
        elif term == "x":
            mask ^= 2
        elif term.startswith("x^"):
            exp = term[2:]
            if not exp.isdigit():
                raise ValueError(f"invalid exponent {exp!r} at position {at}")
            mask ^= 1 << int(exp)
        else:
            raise ValueError(f"invalid term {term!r} at position {at}")
        pos += len(chunk) + 1
    return BinaryPolynomial(mask)


def format_poly(p: BinaryPolynomial) -> str:
    """Inverse of parse_poly, exponents ascending; the zero polynomial prints as 0."""
    if p.is_zero:
        return "0"
    parts = []
    for e in p.support():
        parts.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return "+".join(parts)
