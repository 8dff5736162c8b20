"""Exact rational parsing and rendering.

All probabilities, thresholds, weights and utilities in this package are
`fractions.Fraction` values.  Floats are rejected at every entry point:
the quantities the package certifies (posteriors, conditional targets,
thresholds) are exact equalities that float arithmetic cannot witness.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = int | str | Fraction


def as_rational(value: RationalLike, *, name: str = "value") -> Fraction:
    """Convert an int, Fraction, or exact string ("3/4", "0.9", "2") to Fraction.

    Floats are rejected rather than converted: a float argument almost
    always means an unintended precision loss upstream.
    """
    if isinstance(value, bool):
        raise TypeError(f"{name} must be a rational, got bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            f"{name} must be exact (int, Fraction, or string like '3/4'); "
            f"got float {value!r}"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{name}: cannot parse {value!r} as a rational") from exc
    raise TypeError(f"{name} must be int, str, or Fraction, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical exact rendering: "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact_decimal(value: Fraction) -> str | None:
    """Exact terminating decimal string, or None if none exists.

    A rational terminates in base 10 iff its reduced denominator is of
    the form 2^a * 5^b.
    """
    den = value.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    places = max(twos, fives)
    if places == 0:
        return str(value.numerator)
    scaled = value.numerator * 10**places // value.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:]
    return f"{sign}{whole}.{frac}"


def approx_decimal(value: Fraction, places: int = 6) -> str:
    """Display-only decimal: exact when terminating, otherwise rounded.

    Rounded values carry a trailing '…' marker so reports never pass an
    approximation off as exact.
    """
    exact = exact_decimal(value)
    if exact is not None:
        return exact
    scaled = round(value * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}…"
