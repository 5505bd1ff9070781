"""Exact toughness values: reduced nonnegative fractions plus infinity.

Toughness of a complete graph is infinite and toughness of a disconnected
graph is zero; everything else is a positive rational. Threshold tests
against 1/2, 1, 2t, 2t+1 stay in integer cross-multiplication so no float
ever enters a decision.
"""

from __future__ import annotations

from fractions import Fraction


class ToughnessInfinity:
    """Toughness of complete graphs; compares strictly above every fraction."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("toughness infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = ToughnessInfinity()

ToughnessValue = Fraction | ToughnessInfinity


def is_finite(value: ToughnessValue) -> bool:
    return isinstance(value, Fraction)


def exceeds_half(value: ToughnessValue) -> bool:
    """value > 1/2, exact."""
    if value is INFINITY:
        return True
    return 2 * value.numerator > value.denominator


def at_most_one(value: ToughnessValue) -> bool:
    """value <= 1, exact; infinity fails."""
    if value is INFINITY:
        return False
    return value.numerator <= value.denominator


def in_half_one_interval(value: ToughnessValue) -> bool:
    """1/2 < value <= 1, exact."""
    return is_finite(value) and exceeds_half(value) and at_most_one(value)


def format_toughness(value: ToughnessValue) -> str:
    """"inf" for complete graphs, "0" for disconnected ones, else "num/den"."""
    if value is INFINITY:
        return "inf"
    if value == 0:
        return "0"
    return f"{value.numerator}/{value.denominator}"


def parse_toughness(text: str) -> ToughnessValue:
    """Inverse of format_toughness."""
    if text == "inf":
        return INFINITY
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))
