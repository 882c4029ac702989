"""Exact rational helpers: string forms and certified decimal rendering."""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def parse_rational(text: str) -> Fraction:
    """Parse a rational from a "p/q" or integer string."""
    if not isinstance(text, str):
        raise InputError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Render a rational as "p/q", omitting a denominator of 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def decimal_string(q: Fraction, digits: int, round_up: bool = False) -> str:
    """Fixed-point decimal rendering of a rational with `digits` fractional digits.

    Rounds to nearest by default; with round_up=True rounds away from zero,
    which is what conservative radius fields need.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = q * 10**digits
    units = scaled.numerator // scaled.denominator
    rem = scaled - units
    if round_up:
        if rem > 0:
            units += 1
    elif 2 * rem >= 1:
        units += 1
    text = str(units).rjust(digits + 1, "0")
    whole, frac = text[: len(text) - digits], text[len(text) - digits:]
    if digits == 0:
        return sign + whole
    return f"{sign}{whole}.{frac}"


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal or rational string into an exact Fraction."""
    if not isinstance(text, str):
        raise InputError(f"expected a number string, got {text!r}")
    t = text.strip().lower()
    try:
        if "/" in t:
            return Fraction(t)
        if "e" in t:
            mant, _, exp = t.partition("e")
            return parse_decimal(mant) * Fraction(10) ** int(exp)
        if "." in t:
            whole, _, frac = t.partition(".")
            if whole in ("", "-", "+"):
                whole += "0"
            base = Fraction(int(whole))
            if whole.startswith("-"):
                return base - Fraction(int(frac or "0"), 10 ** len(frac))
            return base + Fraction(int(frac or "0"), 10 ** len(frac))
        return Fraction(int(t))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a number: {text!r}") from exc
