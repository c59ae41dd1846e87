"""Recursive computation of submodule counts for arbitrary descriptors.

The dispatcher reduces a count to closed forms and diagonal regular counts:

  1. dimension guards (0 outside the box, 1 at the corners);
  2. a single indecomposable with a closed form is answered directly;
  3. any preprojective summand: reflect away from the projective side,
     which strictly lowers the largest preprojective index;
  4. otherwise any preinjective summand: reflect the other way;
  5. otherwise the module is regular: counts below the diagonal vanish,
     above it the same reflection lowers a, and on the diagonal the Hall
     polynomial factorization over tubes takes over.

Both recursions sum Gaussian-weighted counts of a reflected module.  The
summation bounds come from the dimension guards of the reflected module,
never from vanishing of the Gaussian factor: with a negative upper argument
the Gaussian is a nonzero signed Laurent monomial and dropping such terms
would corrupt the result.  Negative exponents cancel across the sum; every
memoized value is checked to be an honest polynomial with nonnegative
coefficients.
"""

from __future__ import annotations

from .closed_form import (
    count_preinjective,
    count_preprojective,
    count_regular_deg1,
)
from .hall import regular_diagonal_count
from .laurent import ONE, ZERO, LaurentPoly
from .model import (
    KroneckerDescriptor,
    Preinjective,
    Preprojective,
    Regular,
    preinjective,
    preprojective,
)
from .qbinom import gauss

__all__ = ["CountingEngine", "count", "recursion_a", "recursion_b"]


class CountingEngine:
    """Memoized counter; results are pure functions of the inputs.

    ``use_closed_forms=False`` forces indecomposables through the recursion
    (used to cross-check the closed formulas); ``memoize=False`` disables
    the cache, which must not change any value.  The cache is a plain dict
    keyed by the label-normalized descriptor, safe under CPython's
    interpreter lock; concurrent callers see identical values either way.
    """

    def __init__(self, use_closed_forms: bool = True, memoize: bool = True):
        self.use_closed_forms = use_closed_forms
        self._memo: dict | None = {} if memoize else None

    def count(self, module: KroneckerDescriptor, a: int, b: int) -> LaurentPoly:
        m, n = module.dim_vector()
        if a < 0 or b < 0 or a > m or b > n:
            return ZERO
        if (a, b) == (0, 0) or (a, b) == (m, n):
            return ONE
        key = (module.counting_key(), a, b)
        if self._memo is not None:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
        result = self._dispatch(module, a, b)
        if not result.is_polynomial or not result.has_nonnegative_coefficients:
            raise AssertionError(
                f"count({module}, {a}, {b}) produced {result}; "
                "negative terms failed to cancel"
            )
        if self._memo is not None:
            self._memo[key] = result
        return result

    def _dispatch(self, module, a, b):
        if self.use_closed_forms:
            ind = module.single_indecomposable()
            if isinstance(ind, Preprojective):
                return count_preprojective(ind.n, a, b)
            if isinstance(ind, Preinjective):
                return count_preinjective(ind.n, a, b)
            if isinstance(ind, Regular) and ind.degree == 1:
                return count_regular_deg1(ind.length, a, b)
        if module.preprojective:
            return self.recursion_a(module, a, b)
        if module.preinjective:
            return self.recursion_b(module, a, b)
        if a < b:
            return ZERO  # nothing preinjective embeds in a regular module
        if a > b:
            return self.recursion_a(module, a, b)
        return regular_diagonal_count(module, a)

    def recursion_a(self, module, a: int, b: int) -> LaurentPoly:
        """Reduce through the reflection that removes the projective simple.

        With M = s*P0 + M' + t*I0 of dimension (m, n), l = a - b and
        N the plus-reflection of M' + t*I0:

            count(M, a, b) = sum over c of
                q^(c(b-l+c)) * gauss(c, m-2b) * count(N, a-l, b-l+c)

        where c runs over the window allowed by N's vertex-2 dimension.
        """
        s, mp, t = module.split_socle()
        m, n = module.dim_vector()
        refl = (mp + preinjective(0, t) if t else mp).reflect_plus()
        l = a - b
        n_refl = refl.dim_vector().b
        c_lo = max(0, l - b)
        c_hi = n_refl - (b - l)
        total = ZERO
        for c in range(c_lo, c_hi + 1):
            sub = self.count(refl, a - l, b - l + c)
            if sub.is_zero:
                continue
            g = gauss(c, m - 2 * b)
            if g.is_zero:
                continue
            total = total + (g * sub).shift(c * (b - l + c))
        return total

    def recursion_b(self, module, a: int, b: int) -> LaurentPoly:
        """Mirror recursion removing the injective simple.

        With the same splitting and N the minus-reflection of s*P0 + M':

            count(M, a, b) = sum over d of
                q^(d(2m-n-2a+b+d)) * gauss(d, 2a-2m+n)
                    * count(N, a+l-d+t, b+l)

        bounded by N's vertex-1 dimension.  Note the shift by t in the
        first index: the t copies of the injective simple stay inside
        every submodule counted on the reflected side.
        """
        s, mp, t = module.split_socle()
        m, n = module.dim_vector()
        refl = (preprojective(0, s) + mp if s else mp).reflect_minus()
        l = a - b
        m_refl, n_refl = refl.dim_vector()
        y = b + l
        if y < 0 or y > n_refl:
            return ZERO
        d_lo = max(0, a + l + t - m_refl)
        d_hi = a + l + t
        total = ZERO
        for d in range(d_lo, d_hi + 1):
            sub = self.count(refl, a + l - d + t, y)
            if sub.is_zero:
                continue
            g = gauss(d, 2 * a - 2 * m + n)
            if g.is_zero:
                continue
            total = total + (g * sub).shift(d * (2 * m - n - 2 * a + b + d))
        return total


_DEFAULT = CountingEngine()


def count(module: KroneckerDescriptor, a: int, b: int) -> LaurentPoly:
    """Number of submodules with dimension vector (a, b), as a polynomial
    in the field size (shared memoized engine)."""
    return _DEFAULT.count(module, a, b)


def recursion_a(module: KroneckerDescriptor, a: int, b: int) -> LaurentPoly:
    return _DEFAULT.recursion_a(module, a, b)


def recursion_b(module: KroneckerDescriptor, a: int, b: int) -> LaurentPoly:
    return _DEFAULT.recursion_b(module, a, b)
