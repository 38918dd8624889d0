"""Distance bounds from the 2D lattice attached to a canonical code.

The canonical pair (1 + x, 1 + x^alpha) over x^n - 1 determines the integer
lattice {(x, y) : x + alpha*y = 0 mod n}.  The code's minimum distance is at
least the Euclidean length of the shortest nonzero lattice vector, and a
staircase walk realizing a minimal-L1 lattice vector gives an explicit
logical operator, hence an upper bound.  When alpha^2 = -1 mod n the squared
lattice minimum is a positive multiple of n, so the distance scales like
sqrt(n) at length 2n.
"""

from gbcodex import (
    determine,
    enumerate_short,
    gauss_reduce,
    gb_lattice,
    lambda_euclid,
    min_l1,
    sqrt_minus_one_all,
)


def main():
    for n in (13, 29, 74):
        alpha = sqrt_minus_one_all(n)[0]
        lat = gb_lattice(alpha, n)
        red = gauss_reduce(lat)
        lam = lambda_euclid(lat)
        l1 = min_l1(lat)
        print(f"n={n} alpha={alpha}")
        print(f"  reduced basis   : {red.b1}, {red.b2}")
        print(f"  lambda^2        = {lam.norm2}  (lambda = {lam.value:.3f}, multiple of n: {lam.norm2 % n == 0})")
        print(f"  min L1          = {l1.value}  witness {l1.witness}")
        print(f"  short vectors   : {enumerate_short(lat, l1.value)}")

        report = determine(alpha, n)
        exact = report.exact if report.exact is not None else "open"
        print(f"  distance report : lower={report.guaranteed_lower} upper={report.upper_bound} "
              f"exact={exact} method={report.method}")
        print(f"  certificate     : edges {list(report.certificate)}")
        print()


if __name__ == "__main__":
    main()
