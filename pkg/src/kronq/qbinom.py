"""Gaussian (q-binomial) coefficients for arbitrary integer arguments.

``gauss(l, a)`` is the q-analogue of "a choose l".  For 0 <= l <= a it is the
ordinary polynomial counting l-dimensional subspaces of an a-dimensional
space over a field with q elements; for a < 0 it is a signed Laurent
polynomial, obtained from the defining product of (q^i - 1) factors.
"""

from __future__ import annotations

from functools import cache

from .laurent import ONE, ZERO, LaurentPoly

__all__ = ["gauss", "gauss_int"]


def _qpow_minus_one(e: int) -> LaurentPoly:
    # q^e - 1; zero when e == 0
    if e == 0:
        return ZERO
    return LaurentPoly({e: 1, 0: -1})


@cache
def gauss(l: int, a: int) -> LaurentPoly:
    """Gaussian coefficient with lower index l and upper index a.

    Conventions: 0 for l < 0, 1 for l == 0, 0 for 0 <= a < l.  Negative
    upper arguments reduce through the reflection

        gauss(l, a) = (-1)^l * q^(l*a - l*(l-1)/2) * gauss(l, -a + l - 1),

    which the test suite validates against direct expansion of the
    defining product in the Laurent ring.
    """
    if l < 0:
        return ZERO
    if l == 0:
        return ONE
    if a < 0:
        g = gauss(l, -a + l - 1).shift(l * a - l * (l - 1) // 2)
        return -g if l % 2 else g
    if a < l:
        return ZERO
    num = ONE
    for i in range(l):
        num = num * _qpow_minus_one(a - i)
    den = ONE
    for i in range(1, l + 1):
        den = den * _qpow_minus_one(i)
    return num.divexact(den)


@cache
def gauss_int(l: int, a: int, q0: int) -> int:
    """gauss(l, a) evaluated exactly at an integer q0 >= 2."""
    return gauss(l, a).eval_integer(q0)
