"""q-expansions of the Eisenstein series G_w and of products G_u * G_v.

Only one normalization exists here: constant term -B_w/(2w) and a_1 = 1.
The unit-constant-term normalization is deliberately absent; mixing the
two is the classic source of wrong coefficients.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import sigma
from .qseries import QSeries

__all__ = ["eisenstein", "eisenstein_product"]


def _check_weight(weight: int) -> None:
    if weight == 2:
        raise ValueError("weight 2 is not available: the weight-2 series is only quasi-modular")
    if weight % 2 != 0 or weight < 4:
        raise ValueError(f"Eisenstein weight must be an even integer >= 4, got {weight}")


@lru_cache(maxsize=None)
def eisenstein(weight: int, precision: int) -> QSeries:
    """The weight-`weight` Eisenstein series, truncated to `precision` terms.

    Coefficient a_m is sigma_{weight-1}(m); at m = 0 this is the constant
    term -B_weight/(2*weight) by the same divisor-sum convention.  Results
    are cached; the returned series is immutable and safe to share.
    """
    _check_weight(weight)
    if precision < 1:
        raise ValueError(f"precision must be positive, got {precision}")
    return QSeries(weight, tuple(sigma(weight - 1, m) for m in range(precision)))


def eisenstein_product(u: int, v: int, precision: int) -> QSeries:
    """The product G_u * G_v as a weight-(u+v) series of the given precision.

    Coefficient n is the convolution sum over l of
    sigma_{u-1}(l) * sigma_{v-1}(n-l), with the m = 0 convention above.
    """
    _check_weight(u)
    _check_weight(v)
    return eisenstein(u, precision) * eisenstein(v, precision)
