"""Harder-Narasimhan polygons, the triangle of admissible vertices, and SVG output.

Points are (cumulative rank, cumulative degree), rank on the x-axis. All
geometric predicates are integer cross products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from leafatlas.bundles import HNType
from leafatlas.charges import Charge


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """z-component of (a - o) x (b - o); positive when b is left of o->a."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True)
class HNPolygon:
    vertices: tuple[LatticePoint, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(vs) < 2 or vs[0] != (0, 0):
            raise ValueError("polygon must start at (0,0) and have an edge")
        for a, b in zip(vs, vs[1:]):
            if b.x <= a.x:
                raise ValueError(f"x not strictly increasing at {a} -> {b}")
        for a, b, c in zip(vs, vs[1:], vs[2:]):
            if cross(a, b, c) >= 0:
                raise ValueError(f"top chain not strictly concave at {b}")

    @property
    def end(self) -> LatticePoint:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[LatticePoint, ...]:
        return self.vertices[1:-1]

    def edges(self) -> list[Charge]:
        vs = self.vertices
        return [Charge(b.x - a.x, b.y - a.y) for a, b in zip(vs, vs[1:])]

    def to_hn_type(self) -> HNType:
        return HNType(tuple(self.edges()))


@dataclass(frozen=True)
class Triangle:
    """The open region with corners (0,0), (k+1,n), (k,n)."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.n:
            raise ValueError(f"triangle needs 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def corners(self) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
        return LatticePoint(0, 0), LatticePoint(self.k + 1, self.n), LatticePoint(self.k, self.n)

    def y_range(self, x: int) -> range:
        """Integers y with (x, y) strictly inside."""
        k, n = self.k, self.n
        lo = n * x // (k + 1) + 1  # y(k+1) > nx
        hi = -(-n * x // k) - 1  # yk < nx
        return range(lo, min(hi, n - 1) + 1)


def hn_polygon(nu: HNType) -> HNPolygon:
    vertices = [LatticePoint(0, 0)]
    for piece in nu.pieces:
        last = vertices[-1]
        vertices.append(LatticePoint(last.x + piece.rank, last.y + piece.degree))
    return HNPolygon(tuple(vertices))


def strictly_inside(p: tuple[int, int], tri: Triangle) -> bool:
    x, y = p
    k, n = tri.k, tri.n
    return y * (k + 1) > n * x and y * k < n * x and y < n


def on_closed_triangle(p: tuple[int, int], tri: Triangle) -> bool:
    x, y = p
    k, n = tri.k, tri.n
    return y * (k + 1) >= n * x and y * k <= n * x and y <= n


def polygon_leq(a: HNPolygon, b: HNPolygon) -> bool:
    """Shatz order: every vertex of ``a`` lies on or below the top chain of ``b``."""
    if a.vertices[0] != b.vertices[0] or a.end != b.end:
        raise ValueError("incomparable: different total charge")
    bv = b.vertices
    j = 0
    for p in a.vertices:
        while bv[j + 1].x < p.x:
            j += 1
        if cross(bv[j], bv[j + 1], p) > 0:
            return False
    return True


PX = 60
_MARGIN = 40


def polygon_svg(poly: HNPolygon, tri: Triangle | None = None) -> str:
    """Render ``poly`` (and optionally the triangle) at 60 px per lattice unit."""
    points = list(poly.vertices)
    if tri is not None:
        points.extend(tri.corners)
    min_y = min(0, *(p.y for p in points))
    max_x = max(p.x for p in points)
    max_y = max(p.y for p in points)
    width = max_x * PX + 2 * _MARGIN
    height = (max_y - min_y) * PX + 2 * _MARGIN

    def sx(x: int) -> int:
        return _MARGIN + x * PX

    def sy(y: int) -> int:
        return _MARGIN + (max_y - y) * PX

    def path(vs) -> str:
        return " ".join(f"{sx(p.x)},{sy(p.y)}" for p in vs)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if tri is not None:
        lines.append(
            f'<polygon class="triangle" points="{path(tri.corners)}" '
            'fill="#dde8f5" stroke="#4a6fa5" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    base = (poly.vertices[0], poly.end)
    lines.append(f'<polyline class="base" points="{path(base)}" fill="none" stroke="#888" stroke-width="1.5"/>')
    lines.append(f'<polyline class="top" points="{path(poly.vertices)}" fill="none" stroke="#b22" stroke-width="2.5"/>')
    for p in poly.vertices:
        lines.append(f'<circle cx="{sx(p.x)}" cy="{sy(p.y)}" r="4" fill="#b22"/>')
        lines.append(
            f'<text x="{sx(p.x) + 6}" y="{sy(p.y) - 6}" font-family="monospace" font-size="12">{p}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
