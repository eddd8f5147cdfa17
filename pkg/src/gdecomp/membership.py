"""Membership deciders for the subset-sum polytopes, with certificates.

A symmetric nonnegative A of order m is a member when every index set alpha
satisfies  sum_{i,j in alpha} a_ij <= |alpha|;  the saturated ("upper")
polytope additionally requires the total entry sum to equal m exactly.

Two independent deciders are provided: exhaustive subset enumeration and an
exact max-flow reduction whose min cut exhibits a violating subset.  They are
cross-checked against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CapExceededError
from .flow import build_flow_network, max_flow
from .matrices import EXHAUSTIVE_CAP, IndexSet, SymMatrix, ZERO

TOTAL_SUM_MISMATCH = "total-sum-mismatch"
VIOLATING_SUBSET = "violating-subset"


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of a membership test.

    `certificate`, when present, is a subset whose principal sum strictly
    exceeds its cardinality.  `slack` is min over nonempty alpha of
    (|alpha| - principal_sum); it is None when the decider was asked for the
    sign only (the `member` bit).  `reason` distinguishes the total-sum
    failure mode of the upper test, which has no violating subset.
    """

    member: bool
    certificate: Optional[IndexSet]
    slack: Optional[Fraction]
    total_sum: Fraction
    reason: Optional[str] = None


def _check_cap(m: int, cap: int):
    if m > cap:
        raise CapExceededError(
            "order %d exceeds the exhaustive cap %d; use the min-cut checker "
            "or raise the cap explicitly" % (m, cap)
        )


def principal_sums_by_mask(grid) -> list:
    """Principal sums of a symmetric grid for every bitmask of {1..m}.

    Entry [mask] is sum_{i,j in mask} g_ij (0-based bit k encodes index k+1).
    Works for any symmetric grid of Fractions, signed or not; used by the
    membership, saturation, and perturbation machinery.
    """
    m = len(grid)
    sums = [ZERO] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        k = low.bit_length() - 1
        rest = mask ^ low
        row = grid[k]
        cross = ZERO
        sub = rest
        while sub:
            lb = sub & -sub
            cross += row[lb.bit_length() - 1]
            sub ^= lb
        sums[mask] = sums[rest] + row[k] + 2 * cross
    return sums


def _mask_members(mask: int) -> tuple:
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length())
        mask ^= low
    return tuple(members)


def check_Um_bruteforce(A: SymMatrix, cap: int = EXHAUSTIVE_CAP) -> MembershipVerdict:
    """Decide membership by enumerating all nonempty subsets.

    The certificate, when one exists, is a violating subset of minimum
    cardinality, ties broken lexicographically; slack is always exact.
    """
    m = A.m
    _check_cap(m, cap)
    total = A.total_sum()
    if m == 0:
        return MembershipVerdict(True, None, None, total)
    sums = principal_sums_by_mask(A.entries)
    slack = None
    best_cert = None
    best_key = None
    for mask in range(1, 1 << m):
        size = mask.bit_count()
        margin = size - sums[mask]
        if slack is None or margin < slack:
            slack = margin
        if margin < 0:
            key = (size, _mask_members(mask))
            if best_key is None or key < best_key:
                best_key = key
                best_cert = mask
    if best_cert is None:
        return MembershipVerdict(True, None, slack, total)
    return MembershipVerdict(
        False,
        IndexSet(_mask_members(best_cert), m),
        slack,
        total,
        reason=VIOLATING_SUBSET,
    )


def check_Um_mincut(
    A: SymMatrix, exact_slack: bool = False, cap: int = EXHAUSTIVE_CAP
) -> MembershipVerdict:
    """Decide membership via the max-flow reduction (polynomial time).

    Verdict semantics match the brute-force decider, but the certificate read
    off the min cut need not have minimum cardinality.  By default only the
    sign of the slack is determined (it is the `member` bit) and `slack` is
    None; pass exact_slack=True to also enumerate the exact value (subject to
    the exhaustive cap).
    """
    m = A.m
    total = A.total_sum()
    slack = None
    if exact_slack:
        _check_cap(m, cap)
        sums = principal_sums_by_mask(A.entries)
        slack = min(
            (mask.bit_count() - sums[mask] for mask in range(1, 1 << m)),
            default=None,
        )

    for i in range(1, m + 1):
        if A.entry(i, i) > 1:
            # singleton violation; the network would need a negative capacity
            return MembershipVerdict(
                False, IndexSet({i}, m), slack, total, reason=VIOLATING_SUBSET
            )

    net = build_flow_network(A)
    result = max_flow(net)
    if result.value == net.source_capacity_total:
        return MembershipVerdict(True, None, slack, total)
    cert = IndexSet(result.cut_vertices, m)
    return MembershipVerdict(False, cert, slack, total, reason=VIOLATING_SUBSET)


def check_Um(
    A: SymMatrix, cap: int = EXHAUSTIVE_CAP, method: str = "auto"
) -> MembershipVerdict:
    """Membership in the lower polytope; brute force under the cap, min-cut above."""
    if method == "bruteforce":
        return check_Um_bruteforce(A, cap=cap)
    if method == "mincut":
        return check_Um_mincut(A)
    if method == "auto":
        if A.m <= cap:
            return check_Um_bruteforce(A, cap=cap)
        return check_Um_mincut(A)
    raise ValueError("unknown method %r" % method)


def check_Um_upper(
    A: SymMatrix, cap: int = EXHAUSTIVE_CAP, method: str = "auto"
) -> MembershipVerdict:
    """Membership in the saturated polytope: member below AND total sum == m."""
    base = check_Um(A, cap=cap, method=method)
    if not base.member:
        return base
    if base.total_sum != A.m:
        return MembershipVerdict(
            False,
            None,
            base.slack,
            base.total_sum,
            reason=TOTAL_SUM_MISMATCH,
        )
    return base
