"""Layered decomposition of the spider expansion and the structural sets.

The degree-n expansion (n = 6m+4) is split into exact intermediate functions
that will be matched term-by-term: the layers sorted by the number of unit
parts (x2/x1/x0), the pair layer over split points (b2 pairs plus y), and the
triple layer (nonnegative part plus the remainder w).  Membership predicates
for the A/B sets and the five structural S-sets operate directly on
compositions so that disjointness can be scanned over all of C_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .compositions import (
    Composition,
    EQUAL,
    GREATER,
    alpha_compare,
    compositions_min2,
    first_odd,
    last_odd,
    surplus,
    tail_even_length,
    weight,
    weight_prime,
)
from .efun import EFunction, diff_terms, e_term
from .expansions import spider4m_csf

T1, T2, T3, T4, UNMATCHED = "T1", "T2", "T3", "T4", "unmatched"
CLASS_LABELS = (T1, T2, T3, T4)
S_LABELS = ("S1", "S2", "S3", "S41", "S42")
MEMBERSHIP_SETS = ("A", "B1", "B2", "B1p", "B2p")


@dataclass
class VerifyResult:
    """Outcome of one verification pass; truthy iff it succeeded."""

    check: str
    m: int
    ok: bool
    witnesses: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "m": self.m,
            "ok": self.ok,
            "witnesses": list(self.witnesses),
            "details": dict(self.details),
        }


def f_poly(j: int, k: int, l: int) -> int:
    """The sign-deciding polynomial 2jkl - 3jk - 3jl - 2kl + 2j + 2k + 2l."""
    return 2 * j * k * l - 3 * j * k - 3 * j * l - 2 * k * l + 2 * j + 2 * k + 2 * l


def g_coeff(j: int, k: int, l: int, cmp: int) -> int:
    """f for a strictly ordered pair, f/2 on the diagonal (exact by parity)."""
    val = f_poly(j, k, l)
    if cmp == GREATER:
        return val
    if cmp == EQUAL:
        if val % 2:
            raise ArithmeticError(f"f({j},{k},{l})={val} is odd on the diagonal")
        return val // 2
    raise ValueError("comparison must be GREATER or EQUAL")


def b_coeff(J: Composition, K: Composition, L: Composition) -> int:
    """Net coefficient of the triple's three forward arrangements against the
    two split products: w(JKL) + w(KJL) + w(KLJ) - w(JK)w(L) - w(KJ)w(L)."""
    wl = weight(L)
    return (
        weight(J + K + L)
        + weight(K + J + L)
        + weight(K + L + J)
        - weight(J + K) * wl
        - weight(K + J) * wl
    )


def _unit_prefixed_weight(parts: Composition) -> int:
    # Weight of the composition with a unit part prepended.
    return math.prod(p - 1 for p in parts)


def x2_fun(m: int) -> EFunction:
    """Coefficient function of e_1^2 in the unit-part layering of the spider."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 6 * m + 4
    return EFunction.from_terms(
        (comp, _unit_prefixed_weight(comp))
        for comp in compositions_min2(n - 2)
        if surplus(comp, 4 * m + 2) >= 1
    )


def x1_fun(m: int) -> EFunction:
    """Coefficient function of e_1^1 in the unit-part layering of the spider.

    Every coefficient is nonnegative: the pair terms carry
    (k1*j1 - 2*j1 + 1) = j1*(k1 - 2) + 1 >= 1.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 6 * m + 4

    def terms():
        for comp in compositions_min2(n - 1):
            t = surplus(comp, 4 * m + 2)
            if t >= 2:
                yield (comp, weight(comp))
            if t >= 1:
                yield (comp, _unit_prefixed_weight(comp))
        for J in compositions_min2(4 * m + 2):
            j1, wj = J[0], weight_prime(J)
            for K in compositions_min2(2 * m + 1):
                yield (J + K, (K[0] * j1 - 2 * j1 + 1) * wj * weight_prime(K))

    return EFunction.from_terms(terms())


def x0_fun(m: int) -> EFunction:
    """Unit-free layer: all of C_n minus the products over the split at 4m+3."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 6 * m + 4

    def terms():
        for comp in compositions_min2(n):
            yield (comp, weight(comp))
        for P in compositions_min2(4 * m + 3):
            wp = weight(P)
            for Q in compositions_min2(2 * m + 1):
                yield (P + Q, -wp * weight(Q))

    return EFunction.from_terms(terms())


def verify_lemma_x0(m: int) -> VerifyResult:
    """Check e1^2*x2 + e1*x1 + x0 == spider expansion, exactly."""
    e1 = e_term((1,), 1)
    lhs = e1 * e1 * x2_fun(m) + e1 * x1_fun(m) + x0_fun(m)
    rhs = spider4m_csf(m)
    ok = lhs == rhs
    return VerifyResult(
        "x0", m, ok,
        witnesses=[] if ok else diff_terms(lhs, rhs),
        details={"spider_terms": len(rhs)},
    )


def b2_pair_sum(m: int) -> EFunction:
    """Pair layer with a deep split point: (p1*q1 - p1 - q1) w'_P w'_Q e_{PQ}
    over P in C_{4m+3} with surplus(P, 2m+1) >= 2 and Q in C_{2m+1}."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def terms():
        for P in compositions_min2(4 * m + 3):
            if surplus(P, 2 * m + 1) < 2:
                continue
            p1, wp = P[0], weight_prime(P)
            for Q in compositions_min2(2 * m + 1):
                q1 = Q[0]
                yield (P + Q, (p1 * q1 - p1 - q1) * wp * weight_prime(Q))

    return EFunction.from_terms(terms())


def membership(comp: Composition, which: str, m: int) -> bool:
    """Surplus characterization of the A/B partition of C_n.

    A: both surpluses at 2m+1 and 4m+3 are nonzero.
    B1: surplus at 2m+1 <= 1 and surplus at 4m+2 == 1.
    B2: surplus at 2m+1 >= 2 and surplus at 4m+2 == 1.
    B1p: surpluses at 2m+1 and 4m+2 both zero.
    B2p: surplus at 2m+1 == 0 and surplus at 4m+2 >= 2.
    """
    _require_cn(comp, m)
    if which == "A":
        return surplus(comp, 2 * m + 1) != 0 and surplus(comp, 4 * m + 3) != 0
    t1 = surplus(comp, 2 * m + 1)
    t2 = surplus(comp, 4 * m + 2)
    if which == "B1":
        return t1 <= 1 and t2 == 1
    if which == "B2":
        return t1 >= 2 and t2 == 1
    if which == "B1p":
        return t1 == 0 and t2 == 0
    if which == "B2p":
        return t1 == 0 and t2 >= 2
    raise ValueError(f"unknown membership set {which!r}")


def a_members(m: int) -> Iterator[Composition]:
    """Stream of the A-set inside C_n, in enumeration order."""
    n = 6 * m + 4
    for comp in compositions_min2(n):
        if surplus(comp, 2 * m + 1) != 0 and surplus(comp, 4 * m + 3) != 0:
            yield comp


def y_fun(m: int) -> EFunction:
    """Triple-layer remainder: b-coefficients over all triples plus the A-terms."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    def terms():
        for J, K, L in triple_space(m):
            yield (J + K + L, b_coeff(J, K, L))
        for comp in a_members(m):
            yield (comp, weight(comp))

    return EFunction.from_terms(terms())


def verify_lemma_y(m: int) -> VerifyResult:
    """Check x0 == b2 pair sum + y, exactly; also that every pair coefficient
    in the b2 sum is nonnegative."""
    lhs = x0_fun(m)
    rhs = b2_pair_sum(m) + y_fun(m)
    ok = lhs == rhs
    min_pair = None
    for P in compositions_min2(4 * m + 3):
        if surplus(P, 2 * m + 1) < 2:
            continue
        for Q in compositions_min2(2 * m + 1):
            val = P[0] * Q[0] - P[0] - Q[0]
            min_pair = val if min_pair is None else min(min_pair, val)
    coeffs_ok = min_pair is None or min_pair >= 0
    witnesses = [] if ok else diff_terms(lhs, rhs)
    if not coeffs_ok:
        witnesses.append(f"negative pair coefficient {min_pair}")
    return VerifyResult(
        "y", m, ok and coeffs_ok,
        witnesses=witnesses,
        details={"min_pair_coefficient": min_pair},
    )


@dataclass(frozen=True)
class Triple:
    """Element of C_{2m+2} x C_{2m+1} x C_{2m+1} with its class label."""

    J: Composition
    K: Composition
    L: Composition
    label: str


def triple_space(m: int) -> Iterator[tuple[Composition, Composition, Composition]]:
    """All triples (J, K, L) with sizes (2m+2, 2m+1, 2m+1), parts >= 2."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    j_list = tuple(compositions_min2(2 * m + 2))
    k_list = tuple(compositions_min2(2 * m + 1))
    for J in j_list:
        for K in k_list:
            for L in k_list:
                yield (J, K, L)


def classify(J: Composition, K: Composition, L: Composition) -> str:
    """Class label of a triple.

    T1: leading parts (2, 3, 3) with K >= L.
    T2: l1 = 2, f(j1, k1, 2) < 0, k1 even (hence >= 4).
    T3: l1 = 2, f(j1, k1, 2) < 0, k1 odd.
    T4: l1 = k1 = 2 with K >= L.
    Everything else (in particular every K < L triple) is unmatched.
    """
    j1, k1, l1 = J[0], K[0], L[0]
    if l1 == 3 and k1 == 3 and j1 == 2 and alpha_compare(K, L) >= 0:
        return T1
    if l1 == 2:
        if k1 == 2:
            return T4 if alpha_compare(K, L) >= 0 else UNMATCHED
        if f_poly(j1, k1, 2) < 0:
            return T2 if k1 % 2 == 0 else T3
    return UNMATCHED


def classify_triples(m: int) -> Iterator[Triple]:
    for J, K, L in triple_space(m):
        yield Triple(J, K, L, classify(J, K, L))


def g_pos_sum(m: int) -> EFunction:
    """Nonnegative part of the triple layer: g * w'w'w' over K >= L, f >= 0."""
    def terms():
        for J, K, L in triple_space(m):
            cmp = alpha_compare(K, L)
            if cmp < 0 or f_poly(J[0], K[0], L[0]) < 0:
                continue
            g = g_coeff(J[0], K[0], L[0], cmp)
            yield (J + K + L, g * weight_prime(J) * weight_prime(K) * weight_prime(L))

    return EFunction.from_terms(terms())


def w_fun(m: int) -> EFunction:
    """Remainder after extracting the nonnegative triple part: the A-terms
    plus g * w'w'w' over the negative-f triples with K >= L."""
    def terms():
        for comp in a_members(m):
            yield (comp, weight(comp))
        for J, K, L in triple_space(m):
            cmp = alpha_compare(K, L)
            if cmp < 0 or f_poly(J[0], K[0], L[0]) >= 0:
                continue
            g = g_coeff(J[0], K[0], L[0], cmp)
            yield (J + K + L, g * weight_prime(J) * weight_prime(K) * weight_prime(L))

    return EFunction.from_terms(terms())


def verify_lemma_t1234(m: int) -> VerifyResult:
    """Check y == nonnegative triple part + w, exactly, and that the four
    class labels cover exactly the K >= L triples with negative f."""
    lhs = y_fun(m)
    rhs = g_pos_sum(m) + w_fun(m)
    ok = lhs == rhs
    witnesses = [] if ok else diff_terms(lhs, rhs)
    counts = dict.fromkeys(CLASS_LABELS + (UNMATCHED,), 0)
    for J, K, L in triple_space(m):
        label = classify(J, K, L)
        counts[label] += 1
        negative = alpha_compare(K, L) >= 0 and f_poly(J[0], K[0], L[0]) < 0
        if negative != (label in CLASS_LABELS):
            ok = False
            witnesses.append(f"class mismatch at {(J, K, L)}: label {label}")
    return VerifyResult("t1234", m, ok, witnesses=witnesses, details={"class_counts": counts})


def _require_cn(comp: Composition, m: int) -> int:
    n = 6 * m + 4
    if sum(comp) != n:
        raise ValueError(f"composition size {sum(comp)} differs from 6m+4 = {n}")
    if not comp or min(comp) < 2:
        raise ValueError(f"composition {comp} has a part below 2")
    return n


def split_prefix(comp: Composition, size: int) -> Optional[tuple[Composition, Composition]]:
    """Prefix/suffix split when ``size`` is a prefix sum of ``comp``, else None."""
    acc = 0
    idx = 0
    while acc < size and idx < len(comp):
        acc += comp[idx]
        idx += 1
    if acc != size:
        return None
    return comp[:idx], comp[idx:]


def first_odd_boundary(tail: Composition, m: int) -> Optional[int]:
    """Boundary index splitting ``tail`` into Q,R with |Q| == 2m+1 - r, where r
    is the value of R's first odd part.  At most one boundary can satisfy the
    size equation; that uniqueness is asserted rather than assumed."""
    sums = [0]
    for p in tail:
        sums.append(sums[-1] + p)
    found = None
    for idx in range(len(tail) + 1):
        rest = tail[idx:]
        fo = first_odd(rest)
        if fo is None:
            continue
        if sums[idx] == 2 * m + 1 - rest[fo - 1]:
            if found is not None:
                raise ArithmeticError(f"ambiguous Q/R factorization of {tail}")
            found = idx
    return found


def last_odd_boundary(tail: Composition, m: int) -> Optional[int]:
    """Boundary index splitting ``tail`` into Q,R with |Q| == 2m+1 + q, where q
    is the value of Q's last odd part.  Uniqueness asserted as above."""
    sums = [0]
    for p in tail:
        sums.append(sums[-1] + p)
    found = None
    for idx in range(1, len(tail) + 1):
        head = tail[:idx]
        lo = last_odd(head)
        if lo is None:
            continue
        if sums[idx] == 2 * m + 1 + head[lo - 1]:
            if found is not None:
                raise ArithmeticError(f"ambiguous Q/R factorization of {tail}")
            found = idx
    return found


def _s1(comp: Composition, m: int) -> bool:
    return surplus(comp, 2 * m + 3) == 0 and surplus(comp, 4 * m + 4) == 0


def _s2(comp: Composition, m: int, require_min4: bool = True) -> bool:
    split = split_prefix(comp, 2 * m + 2)
    if split is None:
        return False
    mid = split_prefix(split[1], 2 * m + 3)
    if mid is None:
        return False
    q, _ = mid
    if q[0] != 2 or q[-1] % 2:
        return False
    return q[-1] >= 4 or not require_min4


def _s3(comp: Composition, m: int) -> bool:
    split = split_prefix(comp, 2 * m + 2)
    if split is None:
        return False
    idx = first_odd_boundary(split[1], m)
    if idx is None:
        return False
    q, r = split[1][:idx], split[1][idx:]
    if r[0] != 2 or sum(1 for p in r if p % 2) < 2:
        return False
    fo = first_odd(r)
    gap = tail_even_length(q)
    if fo - 1 <= gap:
        return r[fo] % 2 == 1
    return fo - 1 == gap + 1


def _s41(comp: Composition, m: int) -> bool:
    split = split_prefix(comp, 2 * m + 2)
    if split is None:
        return False
    idx = last_odd_boundary(split[1], m)
    if idx is None:
        return False
    q, r = split[1][:idx], split[1][idx:]
    if not r or r[0] != 2:
        return False
    if sum(1 for p in q if p % 2) < 2:
        return False
    fo = first_odd(r)
    return fo is None or fo - 1 >= tail_even_length(q)


def _s42(comp: Composition, m: int) -> bool:
    split = split_prefix(comp, 2 * m + 2)
    if split is None:
        return False
    idx = first_odd_boundary(split[1], m)
    if idx is None:
        return False
    q, r = split[1][:idx], split[1][idx:]
    if r[0] != 2 or sum(1 for p in r if p % 2) < 2:
        return False
    fo = first_odd(r)
    if fo - 1 > tail_even_length(q):
        return False
    return r[fo] % 2 == 0


_S_PREDICATES = {"S1": _s1, "S2": _s2, "S3": _s3, "S41": _s41, "S42": _s42}


def s_membership(comp: Composition, label: str, m: int) -> bool:
    """Whether ``comp`` factors as PQR with the structural profile ``label``.

    S1 pins the factor sizes to (2m+3, 2m+1, 2m).  S2 pins them to
    (2m+2, 2m+3, 2m-1) with q1 = 2 and the last part of Q even and >= 4.
    S3/S41/S42 pin |P| = 2m+2 and determine the Q/R boundary from the size
    equations tying |Q| to the first odd part of R (S3, S42) or the last odd
    part of Q (S41); the boundary, when it exists, is unique.  Conditions on
    first/last odd positions follow the respective set definitions; a factor
    without odd parts satisfies the vacuous inequalities by convention.
    """
    _require_cn(comp, m)
    try:
        pred = _S_PREDICATES[label]
    except KeyError:
        raise ValueError(f"unknown structural set {label!r}") from None
    return pred(comp, m)
