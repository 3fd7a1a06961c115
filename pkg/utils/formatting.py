from fractions import Fraction
from typing import Iterable


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q" (q > 0, reduced) or "p" when q == 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_indices(indices: Iterable[int]) -> str:
    """Space separated, descending"""
    return " ".join(str(i) for i in sorted(indices, reverse=True))
