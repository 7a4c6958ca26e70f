"""Admissible middle terms for a fixed (k, n) and their leaf dimensions.

A bundle E of charge (k+1, n) is a middle term of a stable extension
0 -> O -> E -> F -> 0 exactly when the interior vertices of its HN polygon lie
strictly inside the triangle (0,0), (k+1,n), (k,n). The determinant condition
det E = det F never constrains the charge type (it is met by a generic choice
of summand moduli), so it is recorded as a flag and not modelled.

Each record describes the generic leaf of one bundle type::

    end_dim     dim End(E)
    leaf_dim    n - end_dim
    moduli_dim  (#summand instances) - 1
    stratum_dim leaf_dim + moduli_dim
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from leafatlas.bundles import BundleType, HNType, end_dim_generic, format_type, hn_decompose
from leafatlas.charges import Charge
from leafatlas.polygons import (
    HNPolygon,
    LatticePoint,
    Triangle,
    cross,
    hn_polygon,
    on_closed_triangle,
    polygon_leq,
    strictly_inside,
)


class InputError(ValueError):
    pass


LOW_N_WARNING = "n < 3 lies outside the Poisson setting (n >= 3); results are combinatorial only"


def validate_input(k: int, n: int) -> str | None:
    """Raise :class:`InputError` for unusable (k, n); return a warning or None."""
    if not 1 <= k < n:
        raise InputError(f"rank/degree out of range: need 1 <= k < n, got k={k}, n={n}")
    if gcd(k, n) != 1:
        raise InputError(f"no stable F of charge ({k},{n}): gcd is {gcd(k, n)}")
    return LOW_N_WARNING if n < 3 else None


@dataclass
class Verdict:
    admissible: bool
    total_charge: Charge
    expected_charge: Charge
    vertices: tuple[LatticePoint, ...]
    vertex_failures: list[tuple[LatticePoint, str]] = field(default_factory=list)
    nonpositive_degrees: list[int] = field(default_factory=list)
    det_satisfiable: bool = True

    @property
    def charge_ok(self) -> bool:
        return self.total_charge == self.expected_charge

    def messages(self) -> list[str]:
        out = []
        if not self.charge_ok:
            out.append(f"total charge {tuple(self.total_charge)} differs from {tuple(self.expected_charge)}")
        for p, reason in self.vertex_failures:
            out.append(f"vertex {p} {reason}")
        for d in self.nonpositive_degrees:
            out.append(f"summand degree {d} violates positivity")
        return out

    def summary(self) -> str:
        head = "admissible" if self.admissible else "not admissible"
        lines = [head, "vertices: " + " ".join(str(p) for p in self.vertices)]
        if self.admissible:
            lines.append("det E = det F: satisfiable by generic choice of moduli")
        else:
            lines.append("; ".join(self.messages()))
        return "\n".join(lines)


def check_middle_term(t: BundleType, k: int, n: int) -> Verdict:
    validate_input(k, n)
    tri = Triangle(k, n)
    expected = Charge(k + 1, n)
    nu = hn_decompose(t)
    poly = hn_polygon(nu) if len(nu) else None
    vertices = poly.vertices if poly else (LatticePoint(0, 0),)
    failures = []
    if poly is not None:
        for p in poly.interior:
            if not strictly_inside(p, tri):
                where = "on triangle boundary" if on_closed_triangle(p, tri) else "outside triangle"
                failures.append((p, where))
    bad_degrees = sorted({x.charge.degree for x, _ in t.summands if x.charge.degree <= 0})
    charge_ok = t.total_charge == expected
    return Verdict(
        admissible=charge_ok and not failures,
        total_charge=t.total_charge,
        expected_charge=expected,
        vertices=vertices,
        vertex_failures=failures,
        nonpositive_degrees=bad_degrees,
    )


def _extend(tri: Triangle, path: tuple[LatticePoint, ...]) -> list[tuple[LatticePoint, ...]]:
    """All strictly concave completions of ``path`` to (k+1, n)."""
    end = LatticePoint(tri.k + 1, tri.n)
    last = path[-1]
    out = []
    prev = path[-2] if len(path) > 1 else None
    if prev is None or cross(prev, last, end) < 0:
        out.append(path + (end,))
    for x in range(last.x + 1, tri.k + 1):
        for y in tri.y_range(x):
            q = LatticePoint(x, y)
            if prev is not None and cross(prev, last, q) >= 0:
                continue
            # q must sit strictly above the chord last -> end, else no concave completion
            if cross(last, end, q) <= 0:
                continue
            out.extend(_extend(tri, path + (q,)))
    return out


def _branch(args: tuple[int, int, LatticePoint]) -> list[tuple[LatticePoint, ...]]:
    k, n, first = args
    return _extend(Triangle(k, n), (LatticePoint(0, 0), first))


def enumerate_hn_types(k: int, n: int, jobs: int = 1) -> list[HNType]:
    """Every HN type of an admissible middle term, ordered by vertex list."""
    validate_input(k, n)
    tri = Triangle(k, n)
    origin = LatticePoint(0, 0)
    firsts = [LatticePoint(x, y) for x in range(1, k + 1) for y in tri.y_range(x)]
    paths = [(origin, LatticePoint(k + 1, n))]
    branches = [(k, n, p) for p in firsts]
    if jobs > 1 and len(branches) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found in pool.map(_branch, branches):
                paths.extend(found)
    else:
        for b in branches:
            paths.extend(_branch(b))
    paths.sort()
    return [HNPolygon(p).to_hn_type() for p in paths]


def _partitions(m: int, largest: int | None = None):
    """Partitions of m as non-increasing tuples, coarsest first."""
    if m == 0:
        yield ()
        return
    top = m if largest is None else min(m, largest)
    for first in range(top, 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def refine_to_indec(nu: HNType) -> list[BundleType]:
    """All bundle types whose HN decomposition is ``nu``."""
    per_piece = []
    for piece in nu.pieces:
        prim = piece.primitive
        per_piece.append([[p * prim for p in parts] for parts in _partitions(piece.multiplicity)])
    return [BundleType.of(c for choice in combo for c in choice) for combo in product(*per_piece)]


def leaf_dimension(t: BundleType, n: int) -> int:
    dim = n - end_dim_generic(t)
    if dim < 0:
        raise ValueError(f"type {t} not admissible at n={n}")
    return dim


def ambient_dims(k: int, n: int) -> tuple[int, int]:
    """(dim of the tangent space to the full moduli of maps O -> E, dim of P^{n-1})."""
    validate_input(k, n)
    return n + 1, n - 1


@dataclass(frozen=True)
class LeafRecord:
    id: str
    bundle_type: BundleType
    hn_type: HNType
    vertices: tuple[LatticePoint, ...]
    end_dim: int
    leaf_dim: int
    moduli_dim: int
    stratum_dim: int
    is_semistable: bool
    is_stable_type: bool
    det_satisfiable: bool = True


def make_record(t: BundleType, n: int) -> LeafRecord:
    nu = hn_decompose(t)
    end = end_dim_generic(t)
    leaf = leaf_dimension(t, n)
    moduli = t.instance_count - 1
    return LeafRecord(
        id=format_type(t),
        bundle_type=t,
        hn_type=nu,
        vertices=hn_polygon(nu).vertices,
        end_dim=end,
        leaf_dim=leaf,
        moduli_dim=moduli,
        stratum_dim=leaf + moduli,
        is_semistable=len(nu) == 1,
        is_stable_type=t.instance_count == 1 and t.summands[0][0].is_stable,
    )


def _validate_record(rec: LeafRecord, n: int) -> None:
    for x, _ in rec.bundle_type.summands:
        if x.charge.degree < 1:
            raise AssertionError(f"{rec.id}: summand {x.charge} has non-positive degree")
    if not 0 <= rec.leaf_dim <= n - 1 or rec.stratum_dim > n - 1:
        raise AssertionError(f"{rec.id}: dimensions out of range")


def covering_relations(polys: list[HNPolygon]) -> list[tuple[int, int]]:
    """Index pairs (i, j) with polys[i] < polys[j] and nothing strictly between."""
    size = len(polys)
    less = [[i != j and polygon_leq(polys[i], polys[j]) for j in range(size)] for i in range(size)]
    edges = []
    for i in range(size):
        for j in range(size):
            if less[i][j] and not any(less[i][m] and less[m][j] for m in range(size)):
                edges.append((i, j))
    return edges


@dataclass
class Atlas:
    k: int
    n: int
    ambient_dim: int
    warning: str | None
    records: list[LeafRecord]
    hn_types: list[HNType]
    poset_edges: list[tuple[str, str]]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "ambient_dim": self.ambient_dim,
            "warning": self.warning,
            "records": [
                {
                    "id": r.id,
                    "hn_type": [list(c) for c in r.hn_type.pieces],
                    "summands": [[*x.charge, m] for x, m in r.bundle_type.summands],
                    "vertices": [list(p) for p in r.vertices],
                    "end_dim": r.end_dim,
                    "leaf_dim": r.leaf_dim,
                    "moduli_dim": r.moduli_dim,
                    "stratum_dim": r.stratum_dim,
                    "is_semistable": r.is_semistable,
                    "is_stable_type": r.is_stable_type,
                    "det_satisfiable": r.det_satisfiable,
                }
                for r in self.records
            ],
            "poset": [list(e) for e in self.poset_edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_tsv(self) -> str:
        rows = ["\t".join(TSV_COLUMNS)]
        for r in self.records:
            flags = [name for name, on in (
                ("semistable", r.is_semistable),
                ("stable_type", r.is_stable_type),
                ("det_satisfiable", r.det_satisfiable),
            ) if on]
            rows.append("\t".join([
                r.id,
                " ".join(f"{p.x},{p.y}" for p in r.vertices),
                str(r.end_dim),
                str(r.leaf_dim),
                str(r.moduli_dim),
                str(r.stratum_dim),
                ",".join(flags) or "-",
            ]))
        return "\n".join(rows) + "\n"

    def to_dot(self) -> str:
        """Covering relations of the specialization order, low -> high."""
        leaf = {r.id: r.leaf_dim for r in self.records}
        lines = [
            f'digraph "shatz_{self.k}_{self.n}" {{',
            '  label="specialization order (upper bound)";',
            "  rankdir=BT;",
            "  node [shape=box, fontname=monospace];",
        ]
        for nu in self.hn_types:
            lines.append(f'  "{nu.id}" [label="{nu.id}\\nleaf_dim={leaf[nu.id]}"];')
        for lo, hi in self.poset_edges:
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


TSV_COLUMNS = ("id", "vertices", "end_dim", "leaf_dim", "moduli_dim", "stratum_dim", "flags")


def build_atlas(k: int, n: int, refine: bool = False, jobs: int = 1) -> Atlas:
    warning = validate_input(k, n)
    hn_types = enumerate_hn_types(k, n, jobs=jobs)
    records = []
    for nu in hn_types:
        types = refine_to_indec(nu) if refine else [BundleType.of(nu.pieces)]
        for t in types:
            rec = make_record(t, n)
            _validate_record(rec, n)
            records.append(rec)
    polys = [hn_polygon(nu) for nu in hn_types]
    edges = [(hn_types[i].id, hn_types[j].id) for i, j in covering_relations(polys)]
    return Atlas(
        k=k,
        n=n,
        ambient_dim=n - 1,
        warning=warning,
        records=records,
        hn_types=hn_types,
        poset_edges=edges,
    )
