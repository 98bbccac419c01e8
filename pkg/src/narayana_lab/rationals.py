"""Exact scalar arithmetic: arbitrary-precision rationals and binomial coefficients.

Every division in this package is either rational (via :data:`BigRational`) or
a checked exact integer division; no floating point is used anywhere.
"""

from __future__ import annotations

import threading
from fractions import Fraction

# Arbitrary-precision rational scalar. Python's Fraction already guarantees
# the invariants we rely on: lowest terms, positive denominator, 0 == 0/1.
BigRational = Fraction

_factorials: list[int] = [1]
_factorials_lock = threading.Lock()


def factorial(k: int) -> int:
    """k! from a grow-on-demand memo table (observationally pure)."""
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    if k >= len(_factorials):
        with _factorials_lock:
            while len(_factorials) <= k:
                _factorials.append(_factorials[-1] * len(_factorials))
    return _factorials[k]


def gen_binomial(a: int, k: int) -> int:
    """Binomial coefficient with an arbitrary integer top.

    Returns 0 for k < 0, otherwise the exact integer
    a*(a-1)*...*(a-k+1) / k!.  Negative tops are allowed, e.g.
    gen_binomial(-3, 2) == 6.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= a - i
    return exact_div(num, factorial(k))


def frac_binomial(a: int | BigRational, k: int) -> BigRational:
    """Binomial coefficient whose top may be any exact rational."""
    if k < 0:
        return BigRational(0)
    num = BigRational(1)
    for i in range(k):
        num *= a - i
    return num / factorial(k)


def exact_div(a: int, b: int) -> int:
    """Integer division that must leave no remainder."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact integer division {a} / {b}")
    return q
