"""Charges (rank, degree) and the arithmetic built on them.

Everything here is exact. Slopes are ``fractions.Fraction`` values, which are
kept in lowest terms with a positive denominator; Python integers do not
overflow, so pairing products need no widening.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class ChargeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Charge:
    rank: int
    degree: int

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ChargeError(f"negative rank in charge {tuple(self)}")

    def __iter__(self):
        yield self.rank
        yield self.degree

    def __add__(self, other: Charge) -> Charge:
        return Charge(self.rank + other.rank, self.degree + other.degree)

    def __mul__(self, m: int) -> Charge:
        return Charge(m * self.rank, m * self.degree)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.rank},{self.degree}"

    @property
    def multiplicity(self) -> int:
        """gcd(rank, |degree|): how many primitive charges this one is made of."""
        return gcd(self.rank, abs(self.degree))

    @property
    def primitive(self) -> Charge:
        h = self.multiplicity
        return Charge(self.rank // h, self.degree // h)


def slope(c: Charge) -> Fraction:
    if c.rank == 0:
        raise ChargeError("slope undefined for torsion charge")
    return Fraction(c.degree, c.rank)


def compare_slopes(a: Charge, b: Charge) -> int:
    """Sign of slope(a) - slope(b), by cross-multiplication."""
    if a.rank == 0 or b.rank == 0:
        raise ChargeError("slope undefined for torsion charge")
    lhs = a.degree * b.rank
    rhs = b.degree * a.rank
    return (lhs > rhs) - (lhs < rhs)


def euler_pairing(a: Charge, b: Charge) -> int:
    """rk(a) deg(b) - deg(a) rk(b); equals dim Hom - dim Ext^1 on the curve."""
    return a.rank * b.degree - a.degree * b.rank


def tensor(a: Charge, b: Charge) -> Charge:
    return Charge(a.rank * b.rank, a.rank * b.degree + a.degree * b.rank)


def dual(a: Charge) -> Charge:
    return Charge(a.rank, -a.degree)


def is_stable_charge(c: Charge) -> bool:
    if c.rank == 0:
        raise ChargeError("stability undefined for torsion charge")
    return c.multiplicity == 1
