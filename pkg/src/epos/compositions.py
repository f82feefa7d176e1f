"""Integer compositions and partitions: enumeration, weights, order statistics.

Compositions and partitions are plain tuples of positive ints.  Negative
indexing (``I[-j]`` for the j-th last part) comes for free from tuples.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, Optional

Composition = tuple[int, ...]
Partition = tuple[int, ...]

# Result values of alpha_compare.
LESS, EQUAL, GREATER = -1, 0, 1


def validate_composition(parts: Iterable[int]) -> Composition:
    """Coerce to a tuple and require every part to be a positive integer."""
    out = tuple(parts)
    for p in out:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition parts must be positive integers, got {out!r}")
    return out


def underlying_partition(parts: Iterable[int]) -> Partition:
    """The parts sorted non-increasingly."""
    return tuple(sorted(parts, reverse=True))


def format_composition(parts: Iterable[int]) -> str:
    """Comma-separated decimal parts, e.g. ``18,18,3,2,2``."""
    return ",".join(str(p) for p in parts)


def parse_composition(text: str) -> Composition:
    """Inverse of :func:`format_composition`."""
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed composition text {text!r}") from None
    return validate_composition(parts)


@lru_cache(maxsize=16)
def _min2_list(n: int) -> tuple[Composition, ...]:
    # Bottom-up over totals; within each total the first part ascends and the
    # tail recurses, so the result is in ascending lexicographic order.
    lists: list[list[Composition]] = [[] for _ in range(n + 1)]
    lists[0] = [()]
    for total in range(2, n + 1):
        acc: list[Composition] = []
        for first in range(2, total + 1):
            rem = total - first
            if rem == 0:
                acc.append((first,))
            elif rem >= 2:
                acc.extend((first,) + tail for tail in lists[rem])
        lists[total] = acc
    return tuple(lists[n])


def compositions_min2(n: int, first_parts: Optional[Iterable[int]] = None) -> Iterator[Composition]:
    """Compositions of ``n`` with every part >= 2, ascending lexicographic.

    ``first_parts`` restricts the leading part; disjoint choices partition the
    stream into independent sub-ranges for parallel consumption.
    """
    if n < 2:
        raise ValueError(f"no compositions with all parts >= 2 for n={n}")
    if first_parts is None:
        yield from _min2_list(n)
    else:
        allowed = frozenset(first_parts)
        for comp in _min2_list(n):
            if comp[0] in allowed:
                yield comp


@lru_cache(maxsize=16)
def _path_support_list(n: int) -> tuple[Composition, ...]:
    sub: list[list[Composition]] = [[] for _ in range(n + 1)]
    sub[0] = [()]
    for total in range(2, n):
        acc: list[Composition] = []
        for first in range(2, total + 1):
            rem = total - first
            if rem == 0:
                acc.append((first,))
            elif rem >= 2:
                acc.extend((first,) + tail for tail in sub[rem])
        sub[total] = acc
    out: list[Composition] = []
    for first in range(1, n + 1):
        rem = n - first
        if rem == 0:
            out.append((first,))
        elif rem >= 2:
            out.extend((first,) + tail for tail in sub[rem])
    return tuple(out)


def compositions_path_support(n: int) -> Iterator[Composition]:
    """Compositions of ``n`` whose parts beyond the first are all >= 2.

    These are exactly the compositions with nonzero path weight: the weight
    ``i1*(i2-1)*(i3-1)*...`` vanishes whenever a later part equals 1.
    Ascending lexicographic order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    yield from _path_support_list(n)


def surplus(parts: Iterable[int], a: int) -> int:
    """Smallest prefix sum of the composition that is >= ``a``, minus ``a``.

    Prefix sums include the empty prefix 0.  Raises when ``a`` exceeds the
    total (no prefix sum would qualify).
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    acc = 0
    if acc >= a:
        return acc - a
    for p in parts:
        acc += p
        if acc >= a:
            return acc - a
    raise ValueError(f"a={a} exceeds the composition size {acc}")


def weight_prime(parts: Composition) -> int:
    """Product of (part - 1) over all parts after the first (empty product is 1)."""
    if not parts:
        raise ValueError("weight of the empty composition is undefined")
    return math.prod(p - 1 for p in parts[1:])


def weight(parts: Composition) -> int:
    """First part times :func:`weight_prime`."""
    if not parts:
        raise ValueError("weight of the empty composition is undefined")
    return parts[0] * math.prod(p - 1 for p in parts[1:])


def alpha_compare(K: Iterable[int], L: Iterable[int]) -> int:
    """Alphabetic comparison of equal-size compositions.

    Returns GREATER/EQUAL/LESS by the first index where the parts differ.
    Equal sizes guarantee neither operand is a proper prefix of the other,
    so the order is total.
    """
    kt, lt = tuple(K), tuple(L)
    if sum(kt) != sum(lt):
        raise ValueError(f"alpha_compare needs equal sizes, got {sum(kt)} and {sum(lt)}")
    if kt == lt:
        return EQUAL
    return GREATER if kt > lt else LESS


def first_odd(parts: Composition) -> Optional[int]:
    """1-based index of the first odd part, or None when every part is even."""
    for i, p in enumerate(parts):
        if p % 2:
            return i + 1
    return None


def last_odd(parts: Composition) -> Optional[int]:
    """1-based index of the last odd part, or None when every part is even."""
    for i in range(len(parts) - 1, -1, -1):
        if parts[i] % 2:
            return i + 1
    return None


def tail_even_length(parts: Composition) -> int:
    """Number of parts strictly after the last odd part.

    When no part is odd this is the full length, which is the convention the
    structural set predicates rely on.
    """
    lo = last_odd(parts)
    return len(parts) - (lo if lo is not None else 0)


def rotate_longest_odd_suffix(parts: Composition) -> Composition:
    """Move the maximal all-odd suffix to the front, preserving part order.

    When the input contains an even part the result ends with an even part.
    """
    if not parts:
        raise ValueError("cannot rotate the empty composition")
    cut = len(parts)
    while cut > 0 and parts[cut - 1] % 2:
        cut -= 1
    return parts[cut:] + parts[:cut]


def rotate_longest_odd_prefix(parts: Composition) -> Composition:
    """Move the maximal all-odd prefix to the end; inverts the suffix rotation
    on compositions whose first part is even."""
    if not parts:
        raise ValueError("cannot rotate the empty composition")
    cut = 0
    while cut < len(parts) and parts[cut] % 2:
        cut += 1
    return parts[cut:] + parts[:cut]
