"""Generalized bicycle construction and weight-2 canonical forms.

A GB code is built from two polynomials A, B modulo x^n - 1 through their
circulants: h_x = [A | B], h_z = [B^T | A^T].  Circulants commute, so the
pair is always a valid CSS code.  For generators of weight two, invertible
exponent substitutions and generator swaps reduce any pair to the canonical
shape (1 + x, 1 + x^alpha, n) without changing code parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import css, gf2matrix, gf2poly
from .css import CssCode
from .gf2poly import BinaryPolynomial


@dataclass(frozen=True)
class GbSpec:
    a: BinaryPolynomial
    b: BinaryPolynomial
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        for p in (self.a, self.b):
            if not p.is_zero and p.degree > self.n - 1:
                raise ValueError("generator degree exceeds n - 1")

    @property
    def length(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class CanonicalW2:
    """The canonical weight-2 pair (1 + x, 1 + x^alpha) over x^n - 1."""

    alpha: int
    n: int
    mirrored: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.alpha <= self.n - 1:
            raise ValueError("alpha must lie in [1, n - 1]")

    def spec(self) -> GbSpec:
        return GbSpec(
            gf2poly.BinaryPolynomial.from_support([0, 1]),
            gf2poly.BinaryPolynomial.from_support([0, self.alpha]),
            self.n,
        )


def canonical_spec(alpha: int, n: int) -> GbSpec:
    return CanonicalW2(alpha, n).spec()


def build(spec: GbSpec) -> CssCode:
    """Construct the CSS code; orthogonality is re-asserted by the validator."""
    mat_a = gf2matrix.circulant(spec.a, spec.n)
    mat_b = gf2matrix.circulant(spec.b, spec.n)
    h_x = gf2matrix.hstack(mat_a, mat_b)
    h_z = gf2matrix.hstack(gf2matrix.transpose(mat_b), gf2matrix.transpose(mat_a))
    return css.new_css(h_x, h_z)


def dimension_formula(spec: GbSpec) -> int:
    """2 deg gcd(a, b, x^n - 1); agrees with the rank-based dimension."""
    g = gf2poly.x_pow_minus_one(spec.n)
    for p in (spec.a, spec.b):
        if not p.is_zero:
            g = gf2poly.gcd(g, p)
    return 2 * g.degree


def shift_normalize(spec: GbSpec) -> GbSpec:
    """Divide each generator by its lowest monomial, giving nonzero constant terms.

    Multiplying a generator by a power of x permutes qubits, so the returned
    spec defines an equivalent code.
    """
    if spec.a.is_zero or spec.b.is_zero:
        raise ValueError("cannot shift-normalize a zero generator")
    shifted = []
    for p in (spec.a, spec.b):
        low = (p.mask & -p.mask).bit_length() - 1
        shifted.append(BinaryPolynomial(p.mask >> low))
    return GbSpec(shifted[0], shifted[1], spec.n)


def canonicalize_w2(u: int, v: int, n: int, reduce_mirror: bool = False) -> CanonicalW2:
    """Reduce the pair (1 + x^u, 1 + x^v) mod x^n - 1 to canonical (1 + x, 1 + x^alpha).

    Substituting x -> x^k for k invertible mod n preserves code parameters,
    which gives alpha = v * u^{-1} mod n.  If u shares a factor with n but v
    does not, the generators are swapped first; if neither exponent is
    invertible the reduction is refused rather than guessed.

    With ``reduce_mirror=True`` the symmetry alpha <-> n - alpha is applied to
    bring alpha below n/2, and the flag is recorded on the result.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    u %= n
    v %= n
    if u == 0 or v == 0:
        raise ValueError("generator 1 + x^e reduces to zero mod x^n - 1 (e = 0 mod n)")
    if math.gcd(u, n) == 1:
        alpha = v * pow(u, -1, n) % n
    elif math.gcd(v, n) == 1:
        alpha = u * pow(v, -1, n) % n
    else:
        raise ValueError(
            f"cannot reduce (u={u}, v={v}) to 1 + x^alpha form: "
            f"neither exponent is invertible modulo {n}"
        )
    mirrored = False
    if reduce_mirror and alpha > n - alpha:
        alpha = n - alpha
        mirrored = True
    return CanonicalW2(alpha, n, mirrored)


def weight2_exponents(spec: GbSpec) -> tuple[int, int] | None:
    """Exponents (u, v) when both shift-normalized generators look like 1 + x^e."""
    try:
        norm = shift_normalize(spec)
    except ValueError:
        return None
    exps = []
    for p in (norm.a, norm.b):
        sup = p.support()
        if len(sup) != 2 or sup[0] != 0:
            return None
        exps.append(sup[1])
    return exps[0], exps[1]
