"""Closed-form e-expansions of paths and three-leg spiders."""

from __future__ import annotations

from functools import lru_cache

from .compositions import compositions_path_support, weight
from .efun import EFunction


@lru_cache(maxsize=None)
def path_csf_e(n: int) -> EFunction:
    """Chromatic symmetric function of the n-vertex path.

    Sum of ``weight(I) * e_I`` over compositions of n.  Only compositions
    whose parts beyond the first are >= 2 are enumerated; the omitted ones
    have weight zero, which cuts the term count from 2^(n-1) to about Fib(n).
    """
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got n={n}")
    return EFunction.from_terms((comp, weight(comp)) for comp in compositions_path_support(n))


def spider_csf_e(a: int, b: int, c: int) -> EFunction:
    """Chromatic symmetric function of the spider with leg lengths a >= b >= c.

    Path convolution form on n = a+b+c+1 vertices:
    X_path(n) + sum_{i=1..c} (X_path(i) X_path(n-i) - X_path(b+i) X_path(n-b-i)).
    """
    if not (a >= b >= c >= 1):
        raise ValueError(f"leg lengths must satisfy a >= b >= c >= 1, got ({a},{b},{c})")
    n = a + b + c + 1
    out = path_csf_e(n)
    for i in range(1, c + 1):
        out = out + path_csf_e(i) * path_csf_e(n - i) - path_csf_e(b + i) * path_csf_e(n - b - i)
    return out


def spider4m_csf(m: int) -> EFunction:
    """The spider family with legs (4m+2, 2m, 1); degree 6m+4."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return spider_csf_e(4 * m + 2, 2 * m, 1)
