"""Exact rational scalars and the tolerance policy for float comparisons.

The whole kernel computes in arbitrary-precision rationals backed by
``fractions.Fraction``: lowest-terms normalization, a positive denominator
and exact equality come with the stdlib type.  This module pins down the
text format shared by the CLI and the JSON output (canonical ``p/q``,
plain ``p`` when the denominator is 1) and the conversion rules for the
approximate side.  Nothing here ever rounds: decimal input is scaled by
powers of ten, never routed through a float.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction

_FRACTION_RE = re.compile(r"(?P<num>[+-]?\d+)\s*/\s*(?P<den>\d+)")
_DECIMAL_RE = re.compile(r"(?P<sign>[+-]?)(?P<int>\d*)(?:\.(?P<frac>\d*))?")


class RationalParseError(ValueError):
    """Text is neither ``p/q`` nor a finite decimal literal."""


class RationalOverflowError(OverflowError):
    """Rational magnitude exceeds the double-precision range."""


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (optional sign on p, q > 0) or a decimal literal.

    Decimals are exactified by scaling: ``"0.25"`` becomes 1/4, never the
    nearest binary float.  Raises :class:`RationalParseError` on malformed
    input or a zero denominator.
    """
    stripped = text.strip()
    m = _FRACTION_RE.fullmatch(stripped)
    if m:
        den = int(m.group("den"))
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(int(m.group("num")), den)
    m = _DECIMAL_RE.fullmatch(stripped)
    if m and (m.group("int") or m.group("frac")):
        frac_digits = m.group("frac") or ""
        value = Fraction(int(m.group("int") or "0"))
        if frac_digits:
            value += Fraction(int(frac_digits), 10 ** len(frac_digits))
        return -value if m.group("sign") == "-" else value
    raise RationalParseError(f"not a rational or decimal literal: {text!r}")


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``p/q`` in lowest terms, ``p`` when q == 1."""
    return str(x)


def to_float(x: Fraction) -> float:
    """Nearest double (round-to-nearest-even).

    Raises :class:`RationalOverflowError` instead of returning an infinity
    when the value is too large for a double.
    """
    try:
        return float(x)
    except OverflowError as exc:
        raise RationalOverflowError(f"{x.numerator}/{x.denominator} exceeds float range") from exc


def exact_sqrt(x: Fraction) -> Fraction | None:
    """The rational square root of ``x``, or None when no exact root exists.

    Only perfect squares of rationals have one; callers fall back to float
    square roots otherwise.
    """
    if x < 0:
        return None
    num_root = math.isqrt(x.numerator)
    den_root = math.isqrt(x.denominator)
    if num_root * num_root == x.numerator and den_root * den_root == x.denominator:
        return Fraction(num_root, den_root)
    return None


@dataclass(frozen=True)
class Tolerance:
    """Mixed absolute/relative closeness test for the floating-point side.

    ``close(x, y)`` passes iff |x - y| <= absolute + relative * max(|x|, |y|).
    """

    absolute: float = 1e-12
    relative: float = 1e-9

    def close(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.absolute + self.relative * max(abs(x), abs(y))
