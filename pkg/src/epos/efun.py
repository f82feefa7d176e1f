"""Exact-integer symmetric functions in the elementary basis.

An :class:`EFunction` is a finite map from partitions to integer coefficients.
Multiplication of basis elements is multiset union of parts, extended
bilinearly; all arithmetic is exact (Python ints are arbitrary precision).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .compositions import Partition, underlying_partition


def term_sort_key(partition: Partition) -> tuple:
    """Canonical term order: by length, then reverse-lexicographically."""
    return (len(partition), tuple(-p for p in partition))


class EFunction:
    """Finite integer combination of elementary symmetric functions.

    Keys are partitions (non-increasing tuples of positive ints); zero
    coefficients are never stored, so ``==`` is structural equality.
    Instances are immutable: every operation returns a new object, which makes
    values safe to share across threads and to merge from parallel workers
    (addition is associative and commutative).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[dict | Iterable[tuple]] = None):
        pairs = terms.items() if isinstance(terms, dict) else (terms or ())
        acc: dict[Partition, int] = {}
        for parts, coeff in pairs:
            key = underlying_partition(parts)
            if key and min(key) < 1:
                raise ValueError(f"partition parts must be >= 1, got {key}")
            acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, terms: dict[Partition, int]) -> "EFunction":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "EFunction":
        return cls._raw({})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Iterable[int], int]]) -> "EFunction":
        """Sum of ``coeff * e_parts`` over the given pairs.

        The bulk-accumulation entry point: building a big sum this way is
        linear in the number of pairs.
        """
        acc: dict[Partition, int] = {}
        for parts, coeff in pairs:
            if not coeff:
                continue
            key = tuple(sorted(parts, reverse=True))
            acc[key] = acc.get(key, 0) + coeff
        return cls._raw({k: v for k, v in acc.items() if v})

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def coefficient(self, parts: Iterable[int]) -> int:
        return self._terms.get(underlying_partition(parts), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EFunction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "EFunction") -> "EFunction":
        if not isinstance(other, EFunction):
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return EFunction._raw(out)

    def __neg__(self) -> "EFunction":
        return EFunction._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "EFunction") -> "EFunction":
        if not isinstance(other, EFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "EFunction | int") -> "EFunction":
        if isinstance(other, int):
            if other == 0:
                return EFunction.zero()
            return EFunction._raw({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, EFunction):
            return NotImplemented
        out: dict[Partition, int] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                key = tuple(sorted(ka + kb, reverse=True))
                new = out.get(key, 0) + va * vb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return EFunction._raw(out)

    __rmul__ = __mul__

    def is_e_positive(self) -> bool:
        """True iff every stored coefficient is nonnegative."""
        return all(v >= 0 for v in self._terms.values())

    def negative_terms(self) -> list[tuple[Partition, int]]:
        """Negative-coefficient terms in canonical order."""
        return [(k, v) for k, v in self.items() if v < 0]

    def degree(self) -> Optional[int]:
        """Common size of all keys, or None for the zero function or a
        non-homogeneous one."""
        sizes = {sum(k) for k in self._terms}
        return sizes.pop() if len(sizes) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._terms}) <= 1

    def __repr__(self) -> str:
        inner = ", ".join(f"{list(k)}: {v}" for k, v in self.items()[:6])
        more = "" if len(self._terms) <= 6 else f", ... ({len(self._terms)} terms)"
        return f"EFunction({{{inner}{more}}})"


def e_term(parts: Iterable[int], coeff: int) -> EFunction:
    """The single term ``coeff * e_parts`` (on the underlying partition)."""
    key = underlying_partition(parts)
    if key and min(key) < 1:
        raise ValueError(f"parts must be >= 1, got {key}")
    if coeff == 0:
        return EFunction.zero()
    return EFunction._raw({key: coeff})


def add(f: EFunction, g: EFunction) -> EFunction:
    return f + g


def scale(f: EFunction, c: int) -> EFunction:
    return f * c


def mul(f: EFunction, g: EFunction) -> EFunction:
    return f * g


def is_e_positive(f: EFunction) -> bool:
    return f.is_e_positive()


def negative_terms(f: EFunction) -> list[tuple[Partition, int]]:
    return f.negative_terms()


@lru_cache(maxsize=None)
def p_to_e(r: int) -> EFunction:
    """Power sum p_r expanded in the elementary basis.

    Newton's identity: p_r = (-1)^(r-1) r e_r + sum_{k=1}^{r-1} (-1)^(k-1) e_k p_{r-k}.
    """
    if r < 1:
        raise ValueError(f"power sum index must be >= 1, got {r}")
    out = e_term((r,), r if r % 2 else -r)
    for k in range(1, r):
        term = e_term((k,), 1) * p_to_e(r - k)
        out = out + (term if k % 2 else -term)
    return out


def p_partition_to_e(lam: Iterable[int]) -> EFunction:
    """Product of :func:`p_to_e` over the parts of ``lam``."""
    out = e_term((), 1)
    for part in lam:
        out = out * p_to_e(part)
    return out


def to_json_dict(f: EFunction, degree: Optional[int] = None) -> dict:
    """JSON form with coefficients as decimal strings (overflow-safe for consumers)."""
    return {
        "degree": degree if degree is not None else f.degree(),
        "basis": "e",
        "terms": [
            {"partition": list(k), "coeff": str(v)} for k, v in f.items()
        ],
    }


def from_json_dict(data: dict) -> EFunction:
    if data.get("basis") != "e":
        raise ValueError(f"unsupported basis {data.get('basis')!r}")
    return EFunction.from_terms(
        (tuple(t["partition"]), int(t["coeff"])) for t in data["terms"]
    )


def diff_terms(f: EFunction, g: EFunction, limit: int = 5) -> list[str]:
    """Human-readable list of keys where ``f`` and ``g`` disagree."""
    keys = set(f._terms) | set(g._terms)
    out = []
    for key in sorted(keys, key=term_sort_key):
        a, b = f._terms.get(key, 0), g._terms.get(key, 0)
        if a != b:
            out.append(f"e{list(key)}: {a} != {b}")
            if len(out) >= limit:
                out.append("...")
                break
    return out
