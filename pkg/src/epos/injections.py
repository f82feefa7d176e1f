"""Rearrangement injections from negative triples into the A-set, and the
certificate builder that matches every negative term with nonnegative ones.

Each map phi_i sends a triple (J, K, L) of compositions to a single
composition obtained by rearranging the parts of JKL, so the image indexes the
same elementary basis element.  The coefficient identities c_i quantify the
net coefficient of a matched group; the certifier checks every group nets to
a nonnegative value and that no image composition is consumed twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Optional

from .compositions import (
    Composition,
    alpha_compare,
    compositions_min2,
    first_odd,
    last_odd,
    rotate_longest_odd_prefix,
    rotate_longest_odd_suffix,
    surplus,
    tail_even_length,
    underlying_partition,
    weight,
    weight_prime,
)
from .decomposition import (
    CLASS_LABELS,
    S_LABELS,
    T1,
    T2,
    T3,
    T4,
    VerifyResult,
    _S_PREDICATES,
    a_members,
    b2_pair_sum,
    classify,
    f_poly,
    first_odd_boundary,
    g_coeff,
    g_pos_sum,
    last_odd_boundary,
    membership,
    s_membership,
    split_prefix,
    w_fun,
    x1_fun,
    x2_fun,
)
from .efun import EFunction, diff_terms, e_term
from .expansions import spider4m_csf
from .parallel import resolve_workers, run_chunked, split_ranges

# The suffix rotation doubles as the K-normalization step of phi4.
u_rotation = rotate_longest_odd_suffix


def _triple_shape(J: Composition, K: Composition, L: Composition) -> int:
    """Validate sizes (2m+2, 2m+1, 2m+1) with all parts >= 2; return m."""
    sj, sk, sl = sum(J), sum(K), sum(L)
    if sk != sl or sk % 2 == 0 or sj != sk + 1 or sk < 3:
        raise ValueError(f"triple sizes ({sj},{sk},{sl}) are not (2m+2, 2m+1, 2m+1)")
    if min(min(J), min(K), min(L)) < 2:
        raise ValueError("triple parts must all be >= 2")
    return (sk - 1) // 2


def _exact_ratio(image: Composition, www: int) -> int:
    q, r = divmod(weight(image), www)
    if r:
        raise ArithmeticError(f"weight of {image} is not divisible by {www}")
    return q


def _www(J: Composition, K: Composition, L: Composition) -> int:
    return weight_prime(J) * weight_prime(K) * weight_prime(L)


def phi1(J: Composition, K: Composition, L: Composition) -> Composition:
    """Image of a (2, 3, 3)-headed triple: swap the 3 at the head of L with
    the last part of J when that part is 2, with the head of J otherwise."""
    _triple_shape(J, K, L)
    if not (J[0] == 2 and K[0] == 3 and L[0] == 3 and alpha_compare(K, L) >= 0):
        raise ValueError(f"triple {(J, K, L)} is not in the (2,3,3)-headed class")
    prefix = (min(J[-1], 3),) + J[1:-1] + (max(J[-1], 3),)
    return prefix + K + (J[0],) + L[1:]


def c1(J: Composition, K: Composition, L: Composition) -> int:
    """Net group coefficient for phi1, normalized by w'_J w'_K w'_L.

    Equals 6 when J ends in 2 and 4 otherwise.
    """
    image = phi1(J, K, L)
    return _exact_ratio(image, _www(J, K, L)) + f_poly(J[0], K[0], L[0])


def phi2(J: Composition, K: Composition, L: Composition) -> Composition:
    """Image of an even-k1 triple: exchange k1 with the 2 heading L, cycling
    k1 to the end of the middle factor."""
    _triple_shape(J, K, L)
    if not (L[0] == 2 and K[0] % 2 == 0 and K[0] >= 4 and f_poly(J[0], K[0], 2) < 0):
        raise ValueError(f"triple {(J, K, L)} is not in the even-k1 class")
    return J + (L[0],) + K[1:] + (K[0],) + L[1:]


def c2(J: Composition, K: Composition, L: Composition) -> int:
    """Net group coefficient for phi2; equals (j1-1)(2k1-5) - 1 >= 2."""
    image = phi2(J, K, L)
    return _exact_ratio(image, _www(J, K, L)) + f_poly(J[0], K[0], 2)


def phi3(J: Composition, K: Composition, L: Composition) -> Composition:
    """Image of an odd-k1 triple: move k1 into L, directly before L's first
    odd part but never further right than position len(K) - lastodd(K) + 1."""
    _triple_shape(J, K, L)
    if not (L[0] == 2 and K[0] % 2 == 1 and f_poly(J[0], K[0], 2) < 0):
        raise ValueError(f"triple {(J, K, L)} is not in the odd-k1 class")
    pos = min(first_odd(L) - 1, len(K) - last_odd(K) + 1)
    return J + K[1:] + L[:pos] + (K[0],) + L[pos:]


def c3(J: Composition, K: Composition, L: Composition) -> int:
    """Net group coefficient for phi3; equals (j1-1)(2k1-5) - 1.

    Nonnegative on the whole domain, and zero exactly when (j1, k1) = (2, 3).
    """
    image = phi3(J, K, L)
    return _exact_ratio(image, _www(J, K, L)) + f_poly(J[0], K[0], 2)


def _is_head_variant(K: Composition, L: Composition) -> bool:
    # True for the variant moving L's first odd part into the rotated K.
    return first_odd(L) - 1 <= tail_even_length(rotate_longest_odd_suffix(K))


def _require_t4_shape(J: Composition, K: Composition, L: Composition) -> None:
    _triple_shape(J, K, L)
    if K[0] != 2 or L[0] != 2:
        raise ValueError(f"triple {(J, K, L)} does not have k1 = l1 = 2")


def phi41(J: Composition, K: Composition, L: Composition) -> Composition:
    """Move L's first odd part into the suffix-rotated K so that it becomes
    the last odd part of the middle factor."""
    _require_t4_shape(J, K, L)
    if not _is_head_variant(K, L):
        raise ValueError(f"triple {(J, K, L)} belongs to the other k1=l1=2 variant")
    u = rotate_longest_odd_suffix(K)
    fo = first_odd(L)
    cut = len(u) - fo + 1
    middle = u[:cut] + (L[fo - 1],) + u[cut:]
    return J + middle + L[:fo - 1] + L[fo:]


def phi42(J: Composition, K: Composition, L: Composition) -> Composition:
    """Move the last odd part of the suffix-rotated K into L so that it
    becomes the first odd part of the tail factor."""
    _require_t4_shape(J, K, L)
    if _is_head_variant(K, L):
        raise ValueError(f"triple {(J, K, L)} belongs to the other k1=l1=2 variant")
    u = rotate_longest_odd_suffix(K)
    lo = last_odd(u)
    gap = len(u) - lo
    middle = u[:lo - 1] + u[lo:]
    tail = L[:gap] + (u[lo - 1],) + L[gap:]
    return J + middle + tail


def phi4(J: Composition, K: Composition, L: Composition) -> Composition:
    """Dispatch between the two k1 = l1 = 2 variants."""
    _require_t4_shape(J, K, L)
    if _is_head_variant(K, L):
        return phi41(J, K, L)
    return phi42(J, K, L)


def phi4_variant(K: Composition, L: Composition) -> str:
    """Structural set of the phi4 image for this (K, L): 'S41' or 'S42'."""
    return "S41" if _is_head_variant(K, L) else "S42"


def c4(J: Composition, K: Composition, L: Composition) -> int:
    """Net group coefficient for a k1 = l1 = 2 triple with K >= L.

    Uses both orientations of the pair (one when K = L); always zero.
    """
    _require_t4_shape(J, K, L)
    cmp = alpha_compare(K, L)
    if cmp < 0:
        raise ValueError(f"triple {(J, K, L)} needs K >= L")
    www = _www(J, K, L)
    fval = f_poly(J[0], 2, 2)
    if cmp == 0:
        return _exact_ratio(phi4(J, K, K), www) + g_coeff(J[0], 2, 2, cmp)
    return (
        _exact_ratio(phi4(J, K, L), www)
        + _exact_ratio(phi4(J, L, K), www)
        + fval
    )


def _split_sizes(comp: Composition, sizes: Iterable[int]) -> list[Composition]:
    out = []
    rest = comp
    for size in sizes:
        split = split_prefix(rest, size)
        if split is None:
            raise ValueError(f"{comp} has no factor boundary at size {size}")
        out.append(split[0])
        rest = split[1]
    out.append(rest)
    return out


def invert_phi1(image: Composition, m: int) -> tuple[Composition, Composition, Composition]:
    """Reconstruct the triple from a phi1 image (sizes pin every factor)."""
    prefix, K, tail = _split_sizes(image, (2 * m + 3, 2 * m + 1))
    if not tail or tail[0] != 2:
        raise ValueError(f"{image} is not a phi1 image")
    L = (3,) + tail[1:]
    if prefix[0] == 2:
        J = (2,) + prefix[1:-1] + (2,)
    elif prefix[0] == 3:
        J = (2,) + prefix[1:-1] + (prefix[-1],)
    else:
        raise ValueError(f"{image} is not a phi1 image")
    return J, K, L


def invert_phi2(image: Composition, m: int) -> tuple[Composition, Composition, Composition]:
    """Reconstruct the triple from a phi2 image."""
    J, Q, R = _split_sizes(image, (2 * m + 2, 2 * m + 3))
    if Q[0] != 2:
        raise ValueError(f"{image} is not a phi2 image")
    return J, (Q[-1],) + Q[1:-1], (2,) + R


def invert_phi3(image: Composition, m: int) -> tuple[Composition, Composition, Composition]:
    """Reconstruct the triple from a phi3 image via the unique Q/R boundary."""
    split = split_prefix(image, 2 * m + 2)
    if split is None:
        raise ValueError(f"{image} has no prefix of size {2 * m + 2}")
    J, tail = split
    idx = first_odd_boundary(tail, m)
    if idx is None:
        raise ValueError(f"{image} is not a phi3 image")
    Q, R = tail[:idx], tail[idx:]
    fo = first_odd(R)
    return J, (R[fo - 1],) + Q, R[:fo - 1] + R[fo:]


def invert_phi41(image: Composition, m: int) -> tuple[Composition, Composition, Composition]:
    """Reconstruct the triple from a phi41 image: strip the moved part from
    the middle factor, rotate the odd prefix back, reinsert into the tail."""
    split = split_prefix(image, 2 * m + 2)
    if split is None:
        raise ValueError(f"{image} has no prefix of size {2 * m + 2}")
    J, tail = split
    idx = last_odd_boundary(tail, m)
    if idx is None:
        raise ValueError(f"{image} is not a phi41 image")
    Q, R = tail[:idx], tail[idx:]
    lo = last_odd(Q)
    moved = Q[lo - 1]
    K = rotate_longest_odd_prefix(Q[:lo - 1] + Q[lo:])
    gap = len(Q) - lo
    L = R[:gap] + (moved,) + R[gap:]
    return J, K, L


def invert_phi42(image: Composition, m: int) -> tuple[Composition, Composition, Composition]:
    """Reconstruct the triple from a phi42 image (mirror of invert_phi41)."""
    split = split_prefix(image, 2 * m + 2)
    if split is None:
        raise ValueError(f"{image} has no prefix of size {2 * m + 2}")
    J, tail = split
    idx = first_odd_boundary(tail, m)
    if idx is None:
        raise ValueError(f"{image} is not a phi42 image")
    Q, R = tail[:idx], tail[idx:]
    fo = first_odd(R)
    moved = R[fo - 1]
    L = R[:fo - 1] + R[fo:]
    cut = len(Q) - (fo - 1)
    K = rotate_longest_odd_prefix(Q[:cut] + (moved,) + Q[cut:])
    return J, K, L


def phi41_bar_qlo(image: Composition, m: int) -> Optional[int]:
    """Bar-scan reading of the part a phi41 application moved.

    Put a bar where the running prefix sum first reaches 4m+4, then take the
    value of the nearest odd part at or left of the bar (None if there is no
    odd part there).  Agreement with the moved part is reported by
    verify_injections as a flag, not asserted.
    """
    acc = 0
    bar = None
    for idx, p in enumerate(image):
        acc += p
        if acc >= 4 * m + 4:
            bar = idx + 1
            break
    if bar is None:
        return None
    for i in range(bar, 0, -1):
        if image[i - 1] % 2:
            return image[i - 1]
    return None


def _bucket_by_first(comps: Iterable[Composition]) -> dict[int, list[Composition]]:
    out: dict[int, list[Composition]] = {}
    for comp in comps:
        out.setdefault(comp[0], []).append(comp)
    return out


def _check_image(out: dict, label: str, s_label: str, J, K, L, image, m) -> None:
    if underlying_partition(image) != underlying_partition(J + K + L):
        out["violations"].append(f"{label}{(J, K, L)}: image {image} changes the partition")
    if not membership(image, "A", m):
        out["violations"].append(f"{label}{(J, K, L)}: image {image} outside A")
    if not s_membership(image, s_label, m):
        out["violations"].append(f"{label}{(J, K, L)}: image {image} outside {s_label}")


def _injection_chunk(args: tuple) -> dict:
    m, j_lo, j_hi = args
    j_slice = tuple(compositions_min2(2 * m + 2))[j_lo:j_hi]
    k_all = tuple(compositions_min2(2 * m + 1))
    by_first = _bucket_by_first(k_all)
    head2 = by_first.get(2, [])
    head3 = by_first.get(3, [])
    out = {
        "violations": [],
        "images": {lbl: [] for lbl in ("T1", "T2", "T3", "T4p")},
        "counts": dict.fromkeys(("T1", "T2", "T3", "T4p"), 0),
        "min_c3": None,
        "c1_values": set(),
        "bar_agrees": True,
    }
    for J in j_slice:
        j1 = J[0]
        if j1 == 2:
            for K in head3:
                for L in head3:
                    if alpha_compare(K, L) < 0:
                        continue
                    out["counts"]["T1"] += 1
                    image = phi1(J, K, L)
                    _check_image(out, T1, "S1", J, K, L, image, m)
                    val = c1(J, K, L)
                    out["c1_values"].add(val)
                    if val != (6 if J[-1] == 2 else 4):
                        out["violations"].append(f"T1{(J, K, L)}: c1 = {val}")
                    out["images"]["T1"].append(image)
        if head2:
            for K in k_all:
                k1 = K[0]
                if k1 == 2 or f_poly(j1, k1, 2) >= 0:
                    continue
                if k1 % 2 == 0:
                    expected = (j1 - 1) * (2 * k1 - 5) - 1
                    for L in head2:
                        out["counts"]["T2"] += 1
                        image = phi2(J, K, L)
                        _check_image(out, T2, "S2", J, K, L, image, m)
                        val = c2(J, K, L)
                        if val != expected or val < 2:
                            out["violations"].append(f"T2{(J, K, L)}: c2 = {val}")
                        out["images"]["T2"].append(image)
                else:
                    for L in head2:
                        out["counts"]["T3"] += 1
                        image = phi3(J, K, L)
                        _check_image(out, T3, "S3", J, K, L, image, m)
                        val = c3(J, K, L)
                        if val < 0:
                            out["violations"].append(f"T3{(J, K, L)}: c3 = {val} < 0")
                        if out["min_c3"] is None or val < out["min_c3"]:
                            out["min_c3"] = val
                        out["images"]["T3"].append(image)
            for K in head2:
                for L in head2:
                    out["counts"]["T4p"] += 1
                    s_label = phi4_variant(K, L)
                    image = phi4(J, K, L)
                    _check_image(out, "T4'", s_label, J, K, L, image, m)
                    if s_label == "S41":
                        moved = L[first_odd(L) - 1]
                        if phi41_bar_qlo(image, m) != moved:
                            out["bar_agrees"] = False
                    if alpha_compare(K, L) >= 0 and c4(J, K, L) != 0:
                        out["violations"].append(f"T4{(J, K, L)}: c4 = {c4(J, K, L)}")
                    out["images"]["T4p"].append(image)
    return out


def verify_injections(m: int, workers: int | None = 1) -> VerifyResult:
    """Exhaustively apply every map on its domain and check the claimed
    properties: partition preservation, image membership in A and in the
    matching structural set, the coefficient identities (c1 in {4, 6},
    c2 = (j1-1)(2k1-5)-1 >= 2, c3 >= 0, c4 = 0), injectivity of each map,
    and global distinctness of all images across maps.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    j_count = len(tuple(compositions_min2(2 * m + 2)))
    chunks = [(m, lo, hi) for lo, hi in split_ranges(j_count, resolve_workers(workers))]
    partials = run_chunked(_injection_chunk, chunks, workers)

    violations: list[str] = []
    images: dict[str, list[Composition]] = {lbl: [] for lbl in ("T1", "T2", "T3", "T4p")}
    counts = dict.fromkeys(("T1", "T2", "T3", "T4p"), 0)
    min_c3: Optional[int] = None
    c1_values: set[int] = set()
    bar_agrees = True
    for part in partials:
        violations.extend(part["violations"])
        for lbl in images:
            images[lbl].extend(part["images"][lbl])
            counts[lbl] += part["counts"][lbl]
        if part["min_c3"] is not None:
            min_c3 = part["min_c3"] if min_c3 is None else min(min_c3, part["min_c3"])
        c1_values |= part["c1_values"]
        bar_agrees = bar_agrees and part["bar_agrees"]

    seen_global: set[Composition] = set()
    for lbl in ("T1", "T2", "T3", "T4p"):
        seen_local: set[Composition] = set()
        for image in images[lbl]:
            if image in seen_local:
                violations.append(f"{lbl}: duplicate image {image}")
            seen_local.add(image)
        for image in sorted(seen_local & seen_global):
            violations.append(f"{lbl}: image {image} collides with another map")
        seen_global |= seen_local

    ok = not violations
    if len(violations) > 100:
        violations = violations[:100] + [f"... {len(violations) - 100} more"]
    return VerifyResult(
        "injections", m, ok,
        witnesses=violations,
        details={
            "domain_sizes": counts,
            "image_total": sum(len(v) for v in images.values()),
            "c1_values": sorted(c1_values),
            "min_c3": min_c3,
            "phi41_bar_rule_agrees": bar_agrees,
        },
    )


def _disjoint_chunk(args: tuple) -> tuple[list[str], dict[str, int], int]:
    m, firsts = args
    violations: list[str] = []
    counts = dict.fromkeys(S_LABELS, 0)
    checked = 0
    for comp in compositions_min2(6 * m + 4, first_parts=firsts):
        checked += 1
        flags = [lbl for lbl in S_LABELS if _S_PREDICATES[lbl](comp, m)]
        for lbl in flags:
            counts[lbl] += 1
        if len(flags) > 1:
            violations.append(f"{comp} lies in {flags}")
        if flags:
            expected = 1 if flags[0] == "S1" else 0
            if surplus(comp, 2 * m + 2) != expected:
                violations.append(f"{comp} in {flags[0]} has boundary surplus != {expected}")
    return violations, counts, checked


def verify_disjointness(m: int, workers: int | None = 1) -> VerifyResult:
    """Scan all of C_n: no composition may lie in two structural sets, and the
    surplus at 2m+2 must be 1 on S1 members and 0 on all other members."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = 6 * m + 4
    firsts = list(range(2, n + 1))
    pieces = resolve_workers(workers)
    group_lists = [firsts[i::pieces] for i in range(min(pieces, len(firsts)))]
    chunks = [(m, tuple(group)) for group in group_lists if group]
    partials = run_chunked(_disjoint_chunk, chunks, workers)
    violations: list[str] = []
    counts = dict.fromkeys(("S1", "S2", "S3", "S41", "S42"), 0)
    checked = 0
    for part_violations, part_counts, part_checked in partials:
        violations.extend(part_violations)
        for lbl, c in part_counts.items():
            counts[lbl] += c
        checked += part_checked
    violations.sort()
    ok = not violations
    if len(violations) > 100:
        violations = violations[:100] + [f"... {len(violations) - 100} more"]
    return VerifyResult(
        "disjointness", m, ok,
        witnesses=violations,
        details={"compositions_checked": checked, "set_sizes": counts},
    )


@dataclass(frozen=True)
class CertGroup:
    """One matched group: a classified triple, the images it consumes, and the
    net coefficient of the group on the shared partition."""

    label: str
    J: Composition
    K: Composition
    L: Composition
    images: tuple[Composition, ...]
    net: int


@dataclass
class Certificate:
    """Explicit matching that witnesses e-positivity at a fixed m."""

    m: int
    groups: list[CertGroup]
    group_counts: dict[str, int]
    zero_net_count: int
    leftover_count: int
    leftover_weight: int
    identity_checked: bool
    e_positive: bool
    verdict: bool
    witnesses: list[str]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "group_count": dict(self.group_counts),
            "zero_net_count": self.zero_net_count,
            "leftover_A_count": self.leftover_count,
            "identity_checked": self.identity_checked,
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
        }


def _group_for(J: Composition, K: Composition, L: Composition, label: str) -> CertGroup:
    cmp = alpha_compare(K, L)
    g = g_coeff(J[0], K[0], L[0], cmp)
    if label == T1:
        images: tuple[Composition, ...] = (phi1(J, K, L),)
    elif label == T2:
        images = (phi2(J, K, L),)
    elif label == T3:
        images = (phi3(J, K, L),)
    elif cmp == 0:
        images = (phi4(J, K, L),)
    else:
        images = (phi4(J, K, L), phi4(J, L, K))
    net = sum(weight(image) for image in images) + g * _www(J, K, L)
    return CertGroup(label, J, K, L, images, net)


def _certify_chunk(args: tuple) -> list[CertGroup]:
    m, j_lo, j_hi = args
    j_slice = tuple(compositions_min2(2 * m + 2))[j_lo:j_hi]
    k_all = tuple(compositions_min2(2 * m + 1))
    groups = []
    for J in j_slice:
        for K in k_all:
            for L in k_all:
                label = classify(J, K, L)
                if label in CLASS_LABELS:
                    groups.append(_group_for(J, K, L, label))
    return groups


def certify(m: int, workers: int | None = 1) -> Certificate:
    """Build and check the full matching.

    Groups every negative triple with its image terms, verifies all nets are
    nonnegative (exactly zero for the k1 = l1 = 2 class), that images are
    pairwise distinct members of A, and that the groups plus the leftover
    A-terms recompose the w remainder and, through the whole layer chain, the
    spider expansion itself.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    j_count = len(tuple(compositions_min2(2 * m + 2)))
    chunks = [(m, lo, hi) for lo, hi in split_ranges(j_count, resolve_workers(workers))]
    groups = [g for part in run_chunked(_certify_chunk, chunks, workers) for g in part]

    witnesses: list[str] = []
    a_set = frozenset(a_members(m))
    used: set[Composition] = set()
    group_counts = dict.fromkeys(CLASS_LABELS, 0)
    for grp in groups:
        group_counts[grp.label] += 1
        if grp.net < 0:
            witnesses.append(f"negative net {grp.net} on {grp.label}{(grp.J, grp.K, grp.L)}")
        if grp.label == T4 and grp.net != 0:
            witnesses.append(f"nonzero T4 net {grp.net} on {(grp.J, grp.K, grp.L)}")
        for image in grp.images:
            if image in used:
                witnesses.append(f"image {image} consumed twice")
            used.add(image)
            if image not in a_set:
                witnesses.append(f"image {image} outside A")

    leftover = a_set - used
    leftover_weight = sum(weight(comp) for comp in leftover)
    for comp in sorted(leftover):
        if weight(comp) <= 0:
            witnesses.append(f"leftover term {comp} has nonpositive weight")

    rebuilt = EFunction.from_terms(chain(
        ((comp, weight(comp)) for comp in leftover),
        ((grp.J + grp.K + grp.L, grp.net) for grp in groups),
    ))
    expected = w_fun(m)
    if rebuilt != expected:
        witnesses.append("group recomposition differs from the w remainder")
        witnesses.extend(diff_terms(rebuilt, expected))

    e1 = e_term((1,), 1)
    full = e1 * e1 * x2_fun(m) + e1 * x1_fun(m) + b2_pair_sum(m) + g_pos_sum(m) + rebuilt
    spider = spider4m_csf(m)
    identity_checked = full == spider
    if not identity_checked:
        witnesses.append("full recomposition differs from the spider expansion")
        witnesses.extend(diff_terms(full, spider))
    e_positive = spider.is_e_positive()
    if not e_positive:
        witnesses.append("spider expansion has negative coefficients")

    return Certificate(
        m=m,
        groups=groups,
        group_counts=group_counts,
        zero_net_count=sum(1 for grp in groups if grp.net == 0),
        leftover_count=len(leftover),
        leftover_weight=leftover_weight,
        identity_checked=identity_checked,
        e_positive=e_positive,
        verdict=not witnesses,
        witnesses=witnesses,
    )
