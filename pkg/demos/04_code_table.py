"""Catalog every admissible length up to 200 and print the resulting table.

An admissible circulant size factors as 2^e times primes congruent to 1 mod
4 (e at most 1); exactly these n admit alpha with alpha^2 = -1 mod n, which
makes the lattice bound scale as sqrt(n).  For each n the sweep tries one
alpha per mirror pair and keeps the report with the strongest certified
lower bound.
"""

from gbcodex import sweep_catalog


def main():
    entries = sweep_catalog(200)
    print(f"{'code':>14} {'n':>4} {'alpha':>5} {'bounds':>9} {'status':<18} {'family':<17}")
    for e in entries:
        r = e.report
        exact = f"= {r.exact}" if r.exact is not None else f"in [{r.guaranteed_lower}, {r.upper_bound}]"
        code = f"[[{e.length}, {e.k}, {e.d}]]"
        print(f"{code:>14} {e.n:>4} {e.alpha:>5} {exact:>9} {r.method:<18} {e.tag:<17}")
    print()
    print(f"{len(entries)} codes; every d is the weight of an explicitly verified logical operator")
    exact_count = sum(1 for e in entries if e.report.exact is not None)
    print(f"{exact_count} entries are exact (bounds met or the exhaustive sweep settled them)")


if __name__ == "__main__":
    main()
