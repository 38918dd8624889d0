"""Catalog sweep over admissible lengths, persistence, and re-verification.

The sweep visits every admissible n with 2n <= max_length, takes one
representative per mirror pair of square roots of -1, runs the distance
pipeline, and keeps the report with the strongest certified lower bound per
n (ties broken toward the smaller alpha).  Entries serialize to
newline-delimited JSON (full records, round-trippable) or to a flat CSV
export; every numeric field is an exact integer.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import arithmetic, css, gbcode
from .distance import DEFAULT_BUDGET, DistanceBudget, DistanceReport, determine
from .lattice import Vec, ceil_sqrt, gauss_reduce, gb_lattice, min_l1, shortest_norm2
from .torus_graph import EdgeVector

SCHEMA_NAME = "gb-catalog"
SCHEMA_VERSION = 1

TAG_KITAEV = "kitaev"
TAG_OPTIMIZED = "optimized-kitaev"
TAG_NEW = "new"

CSV_COLUMNS = ["length", "k", "d", "n", "alpha", "lower", "upper", "method"]


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    alpha: int
    alphas: tuple[int, ...]
    report: DistanceReport
    lambda2: int
    min_l1: int
    basis: tuple[Vec, Vec]
    t_witness: Vec
    tag: str

    @property
    def length(self) -> int:
        return 2 * self.n

    @property
    def k(self) -> int:
        return self.report.k

    @property
    def d(self) -> int:
        """The certified distance column: always an achieved upper bound."""
        return self.report.upper_bound


def classify_family(alpha: int, n: int) -> str:
    """Tag an (alpha, n) pair as grid-family, rotated-grid-family, or new.

    The orbit {alpha, n - alpha} collects the mirror symmetry; for roots of
    -1 the modular inverse coincides with the mirror.
    """
    orbit = {alpha % n, (n - alpha) % n}
    m = math.isqrt(n)
    if m * m == n and m % n in orbit:
        return TAG_KITAEV
    # n = 2t^2 + 2t + 1 has the rotated-grid representative (t+1)/t mod n.
    t = (math.isqrt(2 * n - 1) - 1) // 2
    for cand in (t, t + 1):
        if cand >= 1 and 2 * cand * cand + 2 * cand + 1 == n:
            if math.gcd(cand, n) == 1 and (cand + 1) * pow(cand, -1, n) % n in orbit:
                return TAG_OPTIMIZED
    return TAG_NEW


def analyze_length(n: int, budget: DistanceBudget = DEFAULT_BUDGET, seed: int = arithmetic.DEFAULT_SEED) -> CatalogEntry | None:
    """Best catalog entry for one admissible n, or None when no root exists."""
    roots = arithmetic.sqrt_minus_one_all(n, seed)
    if not roots:
        return None
    classes = sorted({min(a, n - a) for a in roots})
    reports = [determine(alpha, n, budget) for alpha in classes]
    best = max(reports, key=lambda r: (r.guaranteed_lower, -r.alpha))
    lat = gb_lattice(best.alpha, n)
    reduced = gauss_reduce(lat)
    l1 = min_l1(lat)
    return CatalogEntry(
        n=n,
        alpha=best.alpha,
        alphas=tuple(roots),
        report=best,
        lambda2=shortest_norm2(lat),
        min_l1=l1.value,
        basis=(reduced.b1, reduced.b2),
        t_witness=l1.witness,
        tag=classify_family(best.alpha, n),
    )


def _worker_count() -> int:
    raw = os.environ.get("GBCODEX_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep_catalog(
    max_length: int,
    budget: DistanceBudget = DEFAULT_BUDGET,
    seed: int = arithmetic.DEFAULT_SEED,
) -> list[CatalogEntry]:
    """All best-per-n entries with 2n <= max_length, sorted by (d, length, alpha)."""
    lengths = [n for n in range(1, max_length // 2 + 1) if arithmetic.is_admissible(n)]
    workers = _worker_count()
    if workers > 1 and len(lengths) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(analyze_length, lengths, [budget] * len(lengths), [seed] * len(lengths)))
    else:
        results = [analyze_length(n, budget, seed) for n in lengths]
    entries = [e for e in results if e is not None]
    entries.sort(key=lambda e: (e.d, e.length, e.alpha))
    return entries


def entry_to_dict(entry: CatalogEntry) -> dict:
    r = entry.report
    return {
        "n": entry.n,
        "alpha": entry.alpha,
        "alphas": list(entry.alphas),
        "length": entry.length,
        "k": r.k,
        "d": entry.d,
        "lower": r.lower_bound,
        "hypothesis_met": r.hypothesis_met,
        "parity_refined_lower": r.parity_refined_lower,
        "upper": r.upper_bound,
        "exact": r.exact,
        "method": r.method,
        "closed_by": r.closed_by,
        "z_side": r.z_side,
        "certificate": list(r.certificate),
        "lambda2": entry.lambda2,
        "min_l1": entry.min_l1,
        "basis": [list(entry.basis[0]), list(entry.basis[1])],
        "t_witness": list(entry.t_witness),
        "tag": entry.tag,
    }


def entry_from_dict(data: dict) -> CatalogEntry:
    report = DistanceReport(
        n=data["n"],
        alpha=data["alpha"],
        k=data["k"],
        lower_bound=data["lower"],
        hypothesis_met=data["hypothesis_met"],
        parity_refined_lower=data["parity_refined_lower"],
        upper_bound=data["upper"],
        certificate=tuple(data["certificate"]),
        exact=data["exact"],
        method=data["method"],
        closed_by=data["closed_by"],
        z_side=data["z_side"],
    )
    return CatalogEntry(
        n=data["n"],
        alpha=data["alpha"],
        alphas=tuple(data["alphas"]),
        report=report,
        lambda2=data["lambda2"],
        min_l1=data["min_l1"],
        basis=(tuple(data["basis"][0]), tuple(data["basis"][1])),
        t_witness=tuple(data["t_witness"]),
        tag=data["tag"],
    )


def _header_dict(max_length: int, budget: DistanceBudget, seed: int) -> dict:
    return {
        "schema": SCHEMA_NAME,
        "version": SCHEMA_VERSION,
        "max_length": max_length,
        "kernel_cap": budget.kernel_cap,
        "parity_refinement": budget.use_parity_refinement,
        "certificate_slack": budget.certificate_slack,
        "seed": seed,
    }


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_json(entries: list[CatalogEntry], max_length: int, budget: DistanceBudget, seed: int) -> str:
    lines = [_dump(_header_dict(max_length, budget, seed))]
    lines.extend(_dump(entry_to_dict(e)) for e in entries)
    return "\n".join(lines) + "\n"


def render_csv(entries: list[CatalogEntry]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in entries:
        d = entry_to_dict(e)
        writer.writerow([d[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def write_catalog(
    path: str,
    entries: list[CatalogEntry],
    max_length: int,
    budget: DistanceBudget = DEFAULT_BUDGET,
    seed: int = arithmetic.DEFAULT_SEED,
    fmt: str = "json",
) -> None:
    if fmt == "json":
        text = render_json(entries, max_length, budget, seed)
    elif fmt == "csv":
        text = render_csv(entries)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def read_catalog_json(path: str) -> tuple[dict, list[CatalogEntry]]:
    header = None
    entries = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            if header is None:
                header = record
            else:
                entries.append(entry_from_dict(record))
    return header or {}, entries


def _verify_entry(data: dict) -> list[str]:
    """Recompute one JSON record's invariants; returns human-readable problems."""
    problems = []
    n, alpha = data["n"], data["alpha"]
    if not 1 <= alpha <= n - 1:
        return [f"alpha {alpha} outside [1, {n - 1}]"]
    for a in data["alphas"]:
        if a * a % n != (n - 1) % n:
            problems.append(f"claimed root {a} has {a}^2 != -1 mod {n}")
    spec = gbcode.canonical_spec(alpha, n)
    code = gbcode.build(spec)  # raises if the pair were not orthogonal
    k = css.dimension(code)
    if k != data["k"] or k != gbcode.dimension_formula(spec):
        problems.append(f"k mismatch: stored {data['k']}, rank-based {k}")
    if data["length"] != 2 * n:
        problems.append(f"length {data['length']} != 2n")
    lat = gb_lattice(alpha, n)
    if shortest_norm2(lat) != data["lambda2"]:
        problems.append("lambda2 does not match the recomputed lattice minimum")
    if min_l1(lat).value != data["min_l1"]:
        problems.append("min_l1 does not match the recomputed lattice minimum")
    lower, upper, exact, d = data["lower"], data["upper"], data["exact"], data["d"]
    if lower > upper:
        problems.append(f"bound ordering violated: lower {lower} > upper {upper}")
    if exact is not None and not lower <= exact <= upper:
        problems.append(f"exact {exact} outside [{lower}, {upper}]")
    if d != upper:
        problems.append(f"d {d} != upper bound {upper}")
    if d < ceil_sqrt(n):
        problems.append(f"d {d} below ceil(sqrt(n)) = {ceil_sqrt(n)}")
    cert = data["certificate"]
    if cert != sorted(cert) or (cert and not 0 <= cert[0] <= cert[-1] < 2 * n):
        problems.append("certificate indices not sorted within [0, 2n)")
    elif len(set(cert)) != len(cert):
        problems.append("certificate has repeated indices")
    else:
        vec = EdgeVector.from_support(n, cert)
        if vec.weight != upper:
            problems.append(f"certificate weight {vec.weight} != upper bound {upper}")
        if not css.is_logical_x(code, vec.bits):
            problems.append("certificate is not a logical operator")
    return problems


def verify_catalog(path: str) -> tuple[int, list[str]]:
    """Recheck every record of a written catalog.

    Returns (record count, problems); each problem names its line.  JSON
    catalogs get the full certificate recheck, CSV exports the bound/shape
    subset that the flat columns allow.
    """
    problems = []
    count = 0
    with open(path, "r", encoding="utf-8") as f:
        first = f.readline()
        f.seek(0)
        if first.lstrip().startswith("{"):
            for lineno, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    problems.append(f"line {lineno}: corrupt JSON ({exc.msg})")
                    continue
                if lineno == 1:
                    if record.get("schema") != SCHEMA_NAME:
                        problems.append(f"line 1: unexpected schema {record.get('schema')!r}")
                    continue
                count += 1
                try:
                    problems.extend(f"line {lineno}: {p}" for p in _verify_entry(record))
                except (KeyError, TypeError, ValueError) as exc:
                    problems.append(f"line {lineno}: malformed record ({exc})")
        else:
            reader = csv.DictReader(f)
            if reader.fieldnames != CSV_COLUMNS:
                problems.append(f"line 1: unexpected CSV columns {reader.fieldnames}")
                return 0, problems
            for lineno, row in enumerate(reader, start=2):
                count += 1
                try:
                    n, alpha = int(row["n"]), int(row["alpha"])
                    length, k = int(row["length"]), int(row["k"])
                    lower, upper, d = int(row["lower"]), int(row["upper"]), int(row["d"])
                except (TypeError, ValueError):
                    problems.append(f"line {lineno}: non-integer numeric field")
                    continue
                if length != 2 * n:
                    problems.append(f"line {lineno}: length {length} != 2n")
                if k != gbcode.dimension_formula(gbcode.canonical_spec(alpha, n)):
                    problems.append(f"line {lineno}: k mismatch")
                if not lower <= upper or d != upper:
                    problems.append(f"line {lineno}: bound ordering violated")
                if shortest_norm2(gb_lattice(alpha, n)) < n and alpha * alpha % n == (n - 1) % n:
                    problems.append(f"line {lineno}: lattice minimum below n for a root of -1")
    return count, problems
