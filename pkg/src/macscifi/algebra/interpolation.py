"""Sums of the shape sum_i prod_{j != i} w_j^e / (w_j - w_i) * S_i over a common denominator.

With V = prod_{a<b} (w_b - w_a), the weight prod_{j != i} 1 / (w_j - w_i)
equals (-1)^i prod_{a<b, i not in {a,b}} (w_b - w_a) / V (0-based i). Keeping
everything in Laurent polynomials lets large sums be compared by a single
cross-multiplication instead of per-term gcds.
"""

from __future__ import annotations

from collections.abc import Sequence

from .laurent import ONE, LaurentPoly


def vandermonde(points: Sequence[LaurentPoly]) -> LaurentPoly:
    """prod_{a<b} (w_b - w_a)."""
    value = ONE
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            value = value * (points[b] - points[a])
    return value


def lagrange_numerators(points: Sequence[LaurentPoly], scaled: bool = False) -> list[LaurentPoly]:
    """N_i with N_i / vandermonde(points) = prod_{j != i} 1 / (w_j - w_i).

    When ``scaled`` is set the product carries an extra w_j on top of each factor.
    """
    k = len(points)
    out = []
    for i in range(k):
        value = LaurentPoly.constant(-1 if i % 2 else 1)
        for a in range(k):
            if scaled and a != i:
                value = value * points[a]
            for b in range(a + 1, k):
                if i not in (a, b):
                    value = value * (points[b] - points[a])
        out.append(value)
    return out


def lagrange_sum(
    points: Sequence[LaurentPoly], values: Sequence[LaurentPoly], scaled: bool = False
) -> tuple[LaurentPoly, LaurentPoly]:
    """(numerator, denominator) of sum_i prod_{j != i} [w_j] / (w_j - w_i) * values[i]."""
    if len(points) != len(values):
        raise ValueError(f"{len(points)} points but {len(values)} values")
    numerator = LaurentPoly()
    for weight, value in zip(lagrange_numerators(points, scaled), values, strict=True):
        numerator = numerator + weight * value
    return numerator, vandermonde(points)


def divided_difference_check(points: Sequence[LaurentPoly], degree: int) -> bool:
    """sum_i w_i^d / prod_{j != i} (w_i - w_j) is 0 for d < k - 1 and 1 for d = k - 1."""
    k = len(points)
    if not 0 <= degree <= k - 1:
        raise ValueError(f"degree must lie in [0, {k - 1}], got {degree}")
    sign = -1 if (k - 1) % 2 else 1
    numerator, denominator = lagrange_sum(points, [p**degree for p in points])
    expected = denominator * sign if degree == k - 1 else LaurentPoly()
    return numerator == expected
