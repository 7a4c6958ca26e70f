"""Slow, independent re-implementations used for differential testing.

Nothing here imports from ``bundles``, ``polygons`` or ``atlas``: the oracle
re-derives HN decompositions, interiority and Hom dimensions from the charge
arithmetic alone, with ``Fraction`` comparisons instead of cross products.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from leafatlas.charges import Charge, euler_pairing


def _check_kn(k: int, n: int) -> None:
    if not 1 <= k < n:
        raise ValueError(f"rank/degree out of range: k={k}, n={n}")
    if gcd(k, n) != 1:
        raise ValueError(f"no stable F of charge ({k},{n})")


def _inside(x: int, y: int, k: int, n: int) -> bool:
    # strictly above y = n x / (k+1), strictly below y = n x / k, strictly below y = n
    return Fraction(n * x, k + 1) < y < Fraction(n * x, k) and y < n


def hn_vertices(charges: list[Charge]) -> list[tuple[int, int]]:
    """Cumulative (rank, degree) after each slope group, slopes descending."""
    by_slope: dict[Fraction, Charge] = {}
    for c in charges:
        mu = Fraction(c.degree, c.rank)
        by_slope[mu] = by_slope.get(mu, Charge(0, 0)) + c
    pts = [(0, 0)]
    for mu in sorted(by_slope, reverse=True):
        x, y = pts[-1]
        pts.append((x + by_slope[mu].rank, y + by_slope[mu].degree))
    return pts


def passes(charges: list[Charge], k: int, n: int) -> bool:
    total_r = sum(c.rank for c in charges)
    total_d = sum(c.degree for c in charges)
    if (total_r, total_d) != (k + 1, n):
        return False
    return all(_inside(x, y, k, n) for x, y in hn_vertices(charges)[1:-1])


def _multisets(rank_left: int, deg_left: int, candidates: list[Charge], start: int):
    if rank_left == 0:
        if deg_left == 0:
            yield []
        return
    for i in range(start, len(candidates)):
        c = candidates[i]
        if c.rank > rank_left:
            continue
        for rest in _multisets(rank_left - c.rank, deg_left - c.degree, candidates, i):
            yield [c] + rest


def literal_enumerate(k: int, n: int) -> list[tuple[Charge, ...]]:
    """Every multiset of charges of total (k+1, n), degrees in [-n+1, n-1] or n, filtered.

    Exponential; only usable for small n.
    """
    _check_kn(k, n)
    degrees = list(range(-n + 1, n)) + [n]
    candidates = [Charge(r, d) for r in range(1, k + 2) for d in degrees]
    found = {tuple(sorted(ms)) for ms in _multisets(k + 1, n, candidates, 0) if passes(ms, k, n)}
    return sorted(found)


def _interior_points(k: int, n: int) -> list[tuple[int, int]]:
    return [(x, y) for x in range(0, k + 2) for y in range(-n, n + 1) if _inside(x, y, k, n)]


def _is_concave_chain(pts: list[tuple[int, int]]) -> bool:
    slopes = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x1 <= x0:
            return False
        slopes.append(Fraction(y1 - y0, x1 - x0))
    return all(a > b for a, b in zip(slopes, slopes[1:]))


def _same_slope_splits(rank: int, degree: int) -> list[tuple[Charge, ...]]:
    """Multisets of charges of slope degree/rank summing to (rank, degree)."""
    mu = Fraction(degree, rank)
    parts = [Charge(r, int(mu * r)) for r in range(1, rank + 1) if (mu * r).denominator == 1]
    out = set()

    def go(left: int, start: int, acc: list[Charge]) -> None:
        if left == 0:
            out.add(tuple(sorted(acc)))
            return
        for i in range(start, len(parts)):
            if parts[i].rank <= left:
                go(left - parts[i].rank, i, acc + [parts[i]])

    go(rank, 0, [])
    return sorted(out)


def naive_enumerate(k: int, n: int) -> list[tuple[Charge, ...]]:
    """All admissible bundle types as sorted charge tuples.

    Every admissible polygon has its interior vertices among the lattice
    points strictly inside the triangle, and there are only (n - gcd(k+1, n))/2
    of those, so trying every subset is cheap and misses nothing.
    """
    _check_kn(k, n)
    inner = _interior_points(k, n)
    found = set()
    for size in range(len(inner) + 1):
        for subset in combinations(inner, size):
            chain = [(0, 0), *sorted(subset), (k + 1, n)]
            if not _is_concave_chain(chain):
                continue
            splits = [[()]]
            for (x0, y0), (x1, y1) in zip(chain, chain[1:]):
                splits.append(_same_slope_splits(x1 - x0, y1 - y0))
            combos = [()]
            for options in splits[1:]:
                combos = [c + o for c in combos for o in options]
            for combo in combos:
                if passes(list(combo), k, n):
                    found.add(tuple(sorted(combo)))
    return sorted(found)


def _top_at(vertices: list[tuple[int, int]], x: int) -> Fraction:
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        if x0 <= x <= x1:
            return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
    raise ValueError(f"x={x} outside polygon")


def naive_polygon_leq(a: list[tuple[int, int]], b: list[tuple[int, int]]) -> bool:
    """Pointwise comparison of the top chains at every integer abscissa."""
    a = [tuple(p) for p in a]
    b = [tuple(p) for p in b]
    if a[0] != b[0] or a[-1] != b[-1]:
        raise ValueError("incomparable: different total charge")
    return all(_top_at(a, x) <= _top_at(b, x) for x in range(a[0][0], a[-1][0] + 1))


def naive_hom(x: Charge, y: Charge, same_instance: bool) -> int:
    mx, my = Fraction(x.degree, x.rank), Fraction(y.degree, y.rank)
    if mx < my:
        return euler_pairing(x, y)
    if mx > my:
        return 0
    return gcd(x.rank, abs(x.degree)) if same_instance else 0


def naive_end_dim(charges: list[Charge]) -> int:
    """Sum of Hom dimensions over all ordered pairs of summand instances."""
    return sum(
        naive_hom(x, y, i == j)
        for i, x in enumerate(charges)
        for j, y in enumerate(charges)
    )
