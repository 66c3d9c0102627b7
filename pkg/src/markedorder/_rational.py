import re
from fractions import Fraction
from numbers import Rational


def to_fraction(value) -> Fraction:
    """Exact conversion; floats are refused so no rounding sneaks in."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"not a rational number: {value!r}") from None
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


EXACT_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_exact(text: str) -> Fraction | None:
    """Parse ``n`` or ``n/d``; None for anything else (decimals included)."""
    text = text.strip()
    if not EXACT_NUMBER.fullmatch(text):
        return None
    return Fraction(text)
