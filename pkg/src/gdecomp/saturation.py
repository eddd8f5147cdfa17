"""The lattice of saturated index sets of a polytope member.

An index set alpha is saturated for A when sum_{i,j in alpha} a_ij = |alpha|
exactly.  The saturated family is closed under union, and under intersection
whenever the intersection is nonempty, so every entry position that lies in
some saturated set has a unique minimal and a unique maximal saturated
neighborhood; the minimal ones drive the extremity criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CapExceededError, InvalidIndexSetError, NotMemberError, NotOnGridError
from .matrices import EXHAUSTIVE_CAP, IndexSet, SymMatrix, is_grid_matrix
from .membership import check_Um_bruteforce, principal_sums_by_mask, _mask_members


@dataclass(frozen=True)
class SaturationReport:
    """All saturated sets of a matrix plus, per entry position (i <= j), its
    minimal and maximal saturated neighborhoods (None when the position lies
    in no saturated set)."""

    saturated_sets: tuple
    by_entry: dict


def _require_member(A: SymMatrix, cap: int, verdict=None):
    if A.m > cap:
        raise CapExceededError("order %d exceeds the exhaustive cap %d" % (A.m, cap))
    if verdict is None:
        verdict = check_Um_bruteforce(A, cap=cap)
    if not verdict.member:
        raise NotMemberError(
            "matrix is not a polytope member; violating subset %s" % verdict.certificate,
            certificate=verdict.certificate,
        )
    return verdict


def enumerate_saturated(A: SymMatrix):
    """Saturated index sets of A sorted by (cardinality, lexicographic).

    No membership check: callers that already hold a verdict use this
    directly; everyone else should go through saturated_sets().
    """
    m = A.m
    sums = principal_sums_by_mask(A.entries)
    found = [
        IndexSet(_mask_members(mask), m)
        for mask in range(1, 1 << m)
        if sums[mask] == mask.bit_count()
    ]
    found.sort(key=IndexSet.sort_key)
    return found


def saturated_sets(A: SymMatrix, cap: int = EXHAUSTIVE_CAP, verdict=None):
    """All nonempty saturated index sets of a member matrix."""
    _require_member(A, cap, verdict)
    return enumerate_saturated(A)


def _normalize_position(A: SymMatrix, i: int, j: int):
    if not (1 <= i <= A.m and 1 <= j <= A.m):
        raise InvalidIndexSetError(
            "position (%d,%d) outside an order-%d matrix" % (i, j, A.m)
        )
    return (i, j) if i <= j else (j, i)


def _min_over_family(family, i, j) -> Optional[IndexSet]:
    hits = [alpha for alpha in family if i in alpha and j in alpha]
    if not hits:
        return None
    smallest = hits[0]
    for alpha in hits[1:]:
        smallest = smallest.intersection(alpha)
    return smallest


def _max_over_family(family, i, j) -> Optional[IndexSet]:
    hits = [alpha for alpha in family if i in alpha and j in alpha]
    if not hits:
        return None
    largest = hits[0]
    for alpha in hits[1:]:
        largest = largest.union(alpha)
    return largest


def min_sat_neighborhood(
    A: SymMatrix, i: int, j: int, cap: int = EXHAUSTIVE_CAP, family=None
) -> Optional[IndexSet]:
    """Unique minimal saturated set containing {i, j}, or None.

    Computed as the intersection of all saturated sets through the position
    (valid by intersection closure).  A diagonal position (i, i) asks for
    saturated sets containing i.
    """
    i, j = _normalize_position(A, i, j)
    if family is None:
        _require_member(A, cap)
        family = enumerate_saturated(A)
    return _min_over_family(family, i, j)


def max_sat_neighborhood(
    A: SymMatrix, i: int, j: int, cap: int = EXHAUSTIVE_CAP, family=None
) -> Optional[IndexSet]:
    """Unique maximal saturated set containing {i, j}, or None (union closure)."""
    i, j = _normalize_position(A, i, j)
    if family is None:
        _require_member(A, cap)
        family = enumerate_saturated(A)
    return _max_over_family(family, i, j)


def saturation_report(A: SymMatrix, cap: int = EXHAUSTIVE_CAP) -> SaturationReport:
    """Saturated family plus min/max neighborhoods for every position i <= j."""
    _require_member(A, cap)
    family = enumerate_saturated(A)
    by_entry = {}
    for i in range(1, A.m + 1):
        for j in range(i, A.m + 1):
            lo = _min_over_family(family, i, j)
            by_entry[(i, j)] = None if lo is None else (lo, _max_over_family(family, i, j))
    return SaturationReport(saturated_sets=tuple(family), by_entry=by_entry)


def is_F_matrix(A: SymMatrix, cap: int = EXHAUSTIVE_CAP) -> bool:
    """True iff A is a saturated grid matrix whose only saturated index set
    is the full set {1..m} (such matrices are never extreme for m >= 3)."""
    if not is_grid_matrix(A):
        raise NotOnGridError("entries must lie on the {0, 1/2, 1} grid")
    _require_member(A, cap)
    family = enumerate_saturated(A)
    return len(family) == 1 and len(family[0]) == A.m
