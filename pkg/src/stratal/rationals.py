"""Exact rationals and their "p/q" interchange form.

Every rational that crosses a file or report boundary is a "p/q" string;
floats are never accepted.
"""

from fractions import Fraction

from .errors import SpaceFormatError


def parse_rational(text) -> Fraction:
    """Parse "p/q" (or a bare integer string / int) into a Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise SpaceFormatError(f"floats are not accepted as rationals: {text!r}")
    if not isinstance(text, str):
        raise SpaceFormatError(f"not a rational: {text!r}")
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise SpaceFormatError(f"malformed rational {text!r}") from exc
    raise SpaceFormatError(f"malformed rational {text!r}")


def format_rational(x) -> str:
    """Canonical "p/q" form, denominator always explicit."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"
