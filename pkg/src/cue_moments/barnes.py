"""Barnes G at positive integers and the h = 0 moment closed forms."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial


@lru_cache(maxsize=None)
def barnes_g(n: int) -> int:
    """G(n) for a positive integer n: the superfactorial product 1! 2! ... (n-2)!.

    Follows from the functional equation G(1+z) = Gamma(z) G(z) with
    G(1) = G(2) = 1.  Non-integer and non-positive arguments are out of scope.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"barnes_g is defined here for positive integers only, got {n!r}")
    out = 1
    for j in range(1, n - 1):
        out *= factorial(j)
    return out


def moment_h0(N: int, k: int) -> Fraction:
    """The h = 0 joint moment at matrix size N, as a ratio of Barnes G values.

    Always a positive integer; returned as a Fraction for uniformity with the
    rest of the pipeline.
    """
    if N < 0 or k < 1:
        raise ValueError("need N >= 0 and k >= 1")
    value = Fraction(
        barnes_g(N + 2 * k + 1) * barnes_g(N + 1) * barnes_g(k + 1) ** 2,
        barnes_g(N + k + 1) ** 2 * barnes_g(2 * k + 1),
    )
    assert value.denominator == 1 and value > 0
    return value


def moment_h0_limit(k: int) -> Fraction:
    """Large-N limit of moment_h0 / N**(k*k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    return Fraction(barnes_g(k + 1) ** 2, barnes_g(2 * k + 1))
