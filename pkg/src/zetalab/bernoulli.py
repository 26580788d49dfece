"""Bernoulli numbers from the defining recurrence, as exact rationals."""

from fractions import Fraction
from math import comb

# The recurrence grows factorially ill-conditioned in floating point; exact
# rationals are cheap at this scale, so the count is capped rather than
# switching representations.
MAX_COUNT = 64


def bernoulli_numbers(count: int) -> list[Fraction]:
    """First ``count`` Bernoulli numbers B_0, ..., B_{count-1} (B_1 = -1/2)."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > MAX_COUNT:
        raise ValueError(f"count is capped at {MAX_COUNT}, got {count}")
    values = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            acc += comb(m + 1, j) * values[j]
        values.append(-acc / (m + 1))
    return values
