"""Filters, irreducible filters and the embedding ``beta``.

A filter is stored as an element bitmask. The spectrum of an algebra (its
irreducible filters) is enumerated once per algebra and cached; spectrum
points are referred to by their position in that list.
"""
from __future__ import annotations

from functools import lru_cache

from .order import MeetSemilattice, full_mask, members, set_key


def is_filter(A: MeetSemilattice, F: int) -> bool:
    if not F >> A.top & 1:
        return False
    items = members(F)
    for a in items:
        if A.up[a] & ~F:
            return False
        for b in items:
            if not F >> A.meet[a][b] & 1:
                return False
    return True


@lru_cache(maxsize=4096)
def all_filters(A: MeetSemilattice) -> tuple[int, ...]:
    """Every filter once, ordered by cardinality then index tuple.

    In a finite semilattice a filter contains the meet of its members, so the
    filters are exactly the principal upsets ``[a)``.
    """
    return tuple(sorted(set(A.up), key=set_key))


def generated_filter(A: MeetSemilattice, Y: int) -> int:
    """Least filter containing ``Y``; the empty set generates ``{top}``."""
    return A.up[A.meet_all(members(Y))]


@lru_cache(maxsize=4096)
def irreducible_filters(A: MeetSemilattice) -> tuple[int, ...]:
    """Proper filters that are not the intersection of two filters other than themselves."""
    fis = all_filters(A)
    whole = full_mask(A.size)
    out = []
    for F in fis:
        if F == whole:
            continue
        reducible = any(
            F1 & F2 == F
            for i, F1 in enumerate(fis) if F1 != F
            for F2 in fis[i:] if F2 != F
        )
        if not reducible:
            out.append(F)
    return tuple(out)


@lru_cache(maxsize=4096)
def beta_table(A: MeetSemilattice) -> tuple[int, ...]:
    """``beta_table(A)[a]`` is the set of spectrum indices of filters containing ``a``."""
    spec = irreducible_filters(A)
    return tuple(
        sum(1 << k for k, P in enumerate(spec) if P >> a & 1) for a in A.elements
    )


def beta(A: MeetSemilattice, a: int) -> int:
    return beta_table(A)[a]
