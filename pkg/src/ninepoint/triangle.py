"""Triangle domain type and every scalar derived from its side lengths.

Side naming follows the classical convention fixed once for the whole
package: ``a = |BC|``, ``b = |CA|``, ``c = |AB|`` (each side carries the
label of the vertex opposite it).  Exradii are indexed the same way:
``r_a`` belongs to the excircle opposite vertex A, i.e. opposite side a.

All derived quantities that stay rational are kept exact: the squared
area via Heron's formula, squared radii, and the radius products R*r and
R*r_x, which are rational even though R and r individually need not be.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .exact import parse_rational

SIDES = ("a", "b", "c")

SideInput = Union[Fraction, int, str]


class TriangleError(ValueError):
    """Base for triangle validation failures."""


class NonPositiveSideError(TriangleError):
    """A side length is zero or negative."""


class DegenerateTriangleError(TriangleError):
    """The strict triangle inequality fails (zero or impossible area)."""


def _as_scalar(value: SideInput, name: str) -> Fraction:
    if isinstance(value, float):
        # Floats are refused at the door: exact mode must never inherit
        # binary rounding.  Pass a string to exactify a decimal.
        raise TypeError(f"side {name}: floats are not exact, pass a string or Fraction")
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


@dataclass(frozen=True)
class Triangle:
    """Three positive rational side lengths satisfying the strict inequality."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        for name, value in zip(SIDES, (self.a, self.b, self.c)):
            if value <= 0:
                raise NonPositiveSideError(f"side {name} = {value} must be positive")
        if self.a >= self.b + self.c or self.b >= self.a + self.c or self.c >= self.a + self.b:
            raise DegenerateTriangleError(
                f"sides ({self.a}, {self.b}, {self.c}) fail the strict triangle inequality"
            )

    def side(self, label: str) -> Fraction:
        try:
            return {"a": self.a, "b": self.b, "c": self.c}[label]
        except KeyError:
            raise ValueError(f"unknown side label {label!r}") from None

    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)


def make_triangle(a: SideInput, b: SideInput, c: SideInput) -> Triangle:
    """Validated construction from Fractions, ints or rational/decimal text."""
    return Triangle(_as_scalar(a, "a"), _as_scalar(b, "b"), _as_scalar(c, "c"))


@dataclass(frozen=True)
class DerivedScalars:
    """Exact scalars attached to a triangle.

    ``exradius_sq`` and ``exradius_times_circumradius`` are ordered by the
    opposite side's label, (a, b, c).
    """

    s: Fraction
    area_sq: Fraction
    circumradius_sq: Fraction
    inradius_sq: Fraction
    inradius_times_circumradius: Fraction
    exradius_sq: tuple[Fraction, Fraction, Fraction]
    exradius_times_circumradius: tuple[Fraction, Fraction, Fraction]

    def exradius_sq_for(self, side: str) -> Fraction:
        return self.exradius_sq[SIDES.index(side)]

    def exradius_times_circumradius_for(self, side: str) -> Fraction:
        return self.exradius_times_circumradius[SIDES.index(side)]


def derive(t: Triangle) -> DerivedScalars:
    """Compute semiperimeter, squared area, squared radii and radius products.

    The squared area is computed by both classical forms of Heron's formula,

        s(s-a)(s-b)(s-c)   and   (2a^2b^2 + 2a^2c^2 + 2b^2c^2 - a^4 - b^4 - c^4)/16,

    which must agree exactly; a mismatch would mean broken rational
    arithmetic, not a bad triangle.
    """
    a, b, c = t.a, t.b, t.c
    s = (a + b + c) / 2
    heron = s * (s - a) * (s - b) * (s - c)
    a2, b2, c2 = a * a, b * b, c * c
    heron_expanded = (
        2 * a2 * b2 + 2 * a2 * c2 + 2 * b2 * c2 - a2 * a2 - b2 * b2 - c2 * c2
    ) / 16
    if heron != heron_expanded:
        raise ArithmeticError("Heron forms disagree; rational arithmetic is broken")
    area_sq = heron
    abc = a * b * c
    return DerivedScalars(
        s=s,
        area_sq=area_sq,
        circumradius_sq=abc * abc / (16 * area_sq),
        inradius_sq=area_sq / (s * s),
        inradius_times_circumradius=abc / (4 * s),
        exradius_sq=tuple(area_sq / ((s - x) * (s - x)) for x in (a, b, c)),
        exradius_times_circumradius=tuple(abc / (4 * (s - x)) for x in (a, b, c)),
    )


class EulerInequality(NamedTuple):
    holds: bool
    equality: bool


def euler_inequality(d: DerivedScalars) -> EulerInequality:
    """Squared form of R >= 2r: checks R^2 >= 4r^2.

    Always holds for a valid triangle; the equality flag (R^2 == 4r^2) is
    equivalent to the triangle being equilateral.
    """
    gap = d.circumradius_sq - 4 * d.inradius_sq
    return EulerInequality(holds=gap >= 0, equality=gap == 0)
