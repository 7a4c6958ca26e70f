"""Formal generic bundles on an elliptic curve.

A bundle is recorded by the charges of its indecomposable summands. Every
summand instance is taken at its own generic modulus, so two distinct
instances of equal slope have neither morphisms nor extensions between them,
and an indecomposable of charge (r, d) has an endomorphism algebra of
dimension gcd(r, |d|).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable

from leafatlas.charges import Charge, ChargeError, compare_slopes, euler_pairing, slope


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class IndecClass:
    charge: Charge

    def __post_init__(self) -> None:
        if self.charge.rank < 1:
            raise ChargeError(f"indecomposable of rank {self.charge.rank}")

    @property
    def h(self) -> int:
        return self.charge.multiplicity

    @property
    def is_stable(self) -> bool:
        return self.h == 1


def _canonical_key(c: Charge):
    return (-slope(c), c.rank, c.degree)


@dataclass(frozen=True)
class BundleType:
    """Multiset of indecomposable classes, stored in canonical order.

    Use :meth:`of` to build one from charges; the constructor expects
    already-canonical ``(IndecClass, multiplicity)`` pairs.
    """

    summands: tuple[tuple[IndecClass, int], ...]

    @classmethod
    def of(cls, charges: Iterable[Charge | tuple[int, int]]) -> BundleType:
        counts = Counter(c if isinstance(c, Charge) else Charge(*c) for c in charges)
        ordered = sorted(counts, key=_canonical_key)
        return cls(tuple((IndecClass(c), counts[c]) for c in ordered))

    def instances(self) -> list[Charge]:
        """One charge per summand instance, in canonical order."""
        return [x.charge for x, m in self.summands for _ in range(m)]

    @property
    def total_charge(self) -> Charge:
        total = Charge(0, 0)
        for x, m in self.summands:
            total = total + m * x.charge
        return total

    @property
    def instance_count(self) -> int:
        return sum(m for _, m in self.summands)

    @property
    def id(self) -> str:
        return format_type(self)

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True)
class HNType:
    pieces: tuple[Charge, ...]

    def __post_init__(self) -> None:
        for c in self.pieces:
            if c.rank < 1:
                raise ChargeError(f"HN piece {c} has rank < 1")
        for a, b in zip(self.pieces, self.pieces[1:]):
            if compare_slopes(a, b) <= 0:
                raise ValueError(f"HN slopes not strictly decreasing at {a} -> {b}")

    @property
    def total_charge(self) -> Charge:
        total = Charge(0, 0)
        for c in self.pieces:
            total = total + c
        return total

    @property
    def id(self) -> str:
        """Type string of the coarsest bundle of this type (one summand per piece)."""
        return ";".join(str(c) for c in self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)


_PAIR = re.compile(r"^(-?\d+),(-?\d+)(?:\*(\d+))?$")


def parse_type(text: str) -> BundleType:
    """Parse ``"r,d;r,d*m;..."`` into a canonical :class:`BundleType`."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty type string")
    charges: list[Charge] = []
    for token in compact.split(";"):
        match = _PAIR.match(token)
        if match is None:
            raise ParseError(f"cannot parse summand {token!r}")
        r, d = int(match.group(1)), int(match.group(2))
        m = int(match.group(3)) if match.group(3) is not None else 1
        if r < 1:
            raise ParseError(f"summand {token!r} must have rank >= 1")
        if m < 1:
            raise ParseError(f"summand {token!r} must have multiplicity >= 1")
        charges.extend([Charge(r, d)] * m)
    return BundleType.of(charges)


def format_type(t: BundleType) -> str:
    return ";".join(str(x.charge) if m == 1 else f"{x.charge}*{m}" for x, m in t.summands)


def hn_decompose(t: BundleType) -> HNType:
    pieces = []
    # canonical order already sorts by slope descending
    for _, group in groupby(t.summands, key=lambda s: slope(s[0].charge)):
        piece = Charge(0, 0)
        for x, m in group:
            piece = piece + m * x.charge
        pieces.append(piece)
    return HNType(tuple(pieces))


def h0_h1_generic(t: BundleType) -> tuple[int, int]:
    h0 = h1 = 0
    for x, m in t.summands:
        d = x.charge.degree
        if d > 0:
            h0 += m * d
        elif d < 0:
            h1 += m * -d
    return h0, h1


def hom_ext_generic(x: IndecClass, y: IndecClass, same_instance: bool = False) -> tuple[int, int]:
    """Generic (dim Hom(x, y), dim Ext^1(x, y)) for indecomposables x, y."""
    order = compare_slopes(x.charge, y.charge)
    chi = euler_pairing(x.charge, y.charge)
    if order < 0:
        return chi, 0
    if order > 0:
        return 0, -chi
    if same_instance:
        if x.charge != y.charge:
            raise ValueError("same_instance requires identical charges")
        return x.h, x.h
    return 0, 0


def end_dim_generic(t: BundleType) -> int:
    total = 0
    for i, (x, m) in enumerate(t.summands):
        # m distinct generic copies: only the diagonal pairs see each other
        total += m * x.h
        for j, (y, m2) in enumerate(t.summands):
            if i != j:
                total += m * m2 * hom_ext_generic(x, y)[0]
    return total


def det_degree(t: BundleType) -> int:
    return t.total_charge.degree
