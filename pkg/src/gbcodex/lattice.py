"""Integer 2D lattices: reduction, shortest vectors, short-vector enumeration.

The lattice attached to a canonical weight-2 GB code is spanned by (n, 0) and
(-alpha, 1); a point (x, y) belongs to it exactly when x + alpha*y = 0 mod n.
All norms are kept in exact integer arithmetic (squared Euclidean length and
L1 length); floats appear only as presentation output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

Vec = tuple[int, int]


def _dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1]


def _norm2(a: Vec) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _l1(a: Vec) -> int:
    return abs(a[0]) + abs(a[1])


def ceil_sqrt(m: int) -> int:
    """Smallest integer c with c*c >= m, computed exactly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    c = math.isqrt(m)
    return c if c * c == m else c + 1


@dataclass(frozen=True)
class Lattice2D:
    b1: Vec
    b2: Vec

    def __post_init__(self) -> None:
        if self._signed_det() == 0:
            raise ValueError("basis is degenerate")

    def _signed_det(self) -> int:
        return self.b1[0] * self.b2[1] - self.b1[1] * self.b2[0]

    @property
    def det(self) -> int:
        return abs(self._signed_det())


def gb_lattice(alpha: int, n: int) -> Lattice2D:
    """The lattice {(x, y) : x + alpha*y = 0 mod n}, basis (n, 0), (-alpha, 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= alpha <= n - 1:
        raise ValueError("alpha must lie in [1, n - 1]")
    return Lattice2D((n, 0), (-alpha, 1))


def contains(lat: Lattice2D, t: Vec) -> bool:
    """Membership by solving the integer coordinates with Cramer's rule."""
    det = lat._signed_det()
    c1 = t[0] * lat.b2[1] - t[1] * lat.b2[0]
    c2 = lat.b1[0] * t[1] - lat.b1[1] * t[0]
    return c1 % det == 0 and c2 % det == 0


def _sign_normalize(v: Vec) -> Vec:
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def gauss_reduce(lat: Lattice2D) -> Lattice2D:
    """Lagrange-Gauss reduction; afterwards b1 is a shortest nonzero vector.

    Exit condition: |b1| <= |b2| and |<b1, b2>| <= |b1|^2 / 2.
    """
    b1, b2 = lat.b1, lat.b2
    if _norm2(b1) > _norm2(b2):
        b1, b2 = b2, b1
    while True:
        n1 = _norm2(b1)
        q = (2 * _dot(b1, b2) + n1) // (2 * n1)  # nearest integer, exact
        b2 = (b2[0] - q * b1[0], b2[1] - q * b1[1])
        if _norm2(b2) >= n1:
            break
        b1, b2 = b2, b1
    b1 = _sign_normalize(b1)
    b2 = _sign_normalize(b2)
    if _norm2(b1) == _norm2(b2) and b2 < b1:
        b1, b2 = b2, b1
    return Lattice2D(b1, b2)


def shortest_norm2(lat: Lattice2D) -> int:
    """Exact squared length of a shortest nonzero vector."""
    return _norm2(gauss_reduce(lat).b1)


class EuclideanMinimum(NamedTuple):
    norm2: int
    value: float


def lambda_euclid(lat: Lattice2D) -> EuclideanMinimum:
    """Shortest-vector length; the squared norm is exact, the float is derived."""
    n2 = shortest_norm2(lat)
    return EuclideanMinimum(n2, math.sqrt(n2))


def enumerate_short(lat: Lattice2D, radius_l1: int) -> list[Vec]:
    """All nonzero lattice vectors with L1 norm <= radius_l1, each listed once.

    Coefficient bounds come from the reduced basis: for Gauss-reduced b1, b2
    and any c1 b1 + c2 b2 of Euclidean norm <= R, |c_i|^2 <= 4R^2 / (3 |b_i|^2).
    L1 <= radius implies Euclidean <= radius, so the double loop is enclosing.
    """
    if radius_l1 < 1:
        raise ValueError("radius must be at least 1")
    red = gauss_reduce(lat)
    b1, b2 = red.b1, red.b2
    n1, n2 = _norm2(b1), _norm2(b2)
    r2 = radius_l1 * radius_l1
    c1_max = math.isqrt(4 * r2 // (3 * n1))
    c2_max = math.isqrt(4 * r2 // (3 * n2))
    out = []
    for c1 in range(-c1_max, c1_max + 1):
        for c2 in range(-c2_max, c2_max + 1):
            v = (c1 * b1[0] + c2 * b2[0], c1 * b1[1] + c2 * b2[1])
            if v != (0, 0) and _l1(v) <= radius_l1:
                out.append(v)
    out.sort(key=lambda v: (_l1(v), v[0], v[1]))
    return out


class L1Minimum(NamedTuple):
    value: int
    witness: Vec


def min_l1(lat: Lattice2D) -> L1Minimum:
    """Minimum L1 norm over nonzero lattice vectors, with one witness.

    The witness is the lexicographically smallest (|x|+|y|, x, y) among the
    minimizers, so catalogs are deterministic.
    """
    red = gauss_reduce(lat)
    candidates = enumerate_short(lat, _l1(red.b1))
    best = candidates[0]  # sorted by (L1, x, y); b1 itself guarantees nonempty
    return L1Minimum(_l1(best), best)
