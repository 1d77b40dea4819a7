"""Exhaustive corpora of small meet-semilattices with top."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .order import MeetSemilattice, MissingMeet, MissingTop, members, submasks


def _natural_posets(n: int) -> Iterator[tuple[int, ...]]:
    """Posets on ``0..n-1`` where ``a < b`` implies ``a < b`` as integers.

    Yields the tuple of strict down-sets. Element ``k`` may sit above any
    down-closed subset of the earlier elements.
    """
    down = [0] * n

    def grow(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(down)
            return
        for S in submasks((1 << k) - 1):
            if all(down[x] & ~S == 0 for x in members(S)):
                down[k] = S
                yield from grow(k + 1)

    yield from grow(0)


def _meet_table(n: int, down: tuple[int, ...]) -> MeetSemilattice | None:
    try:
        pairs = [(a, b) for b in range(n) for a in members(down[b])]
        return MeetSemilattice.from_leq(n, pairs)
    except (MissingMeet, MissingTop):
        return None


def _relabel(A: MeetSemilattice, perm: tuple[int, ...]) -> MeetSemilattice:
    n = A.size
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    table = tuple(tuple(perm[A.meet[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    return MeetSemilattice(table, perm[A.top])


def canonical_form(A: MeetSemilattice) -> tuple:
    """Lexicographically least relabelled meet table; equal iff isomorphic."""
    return min(
        (_relabel(A, p).meet, p[A.top]) for p in permutations(range(A.size))
    )


@lru_cache(maxsize=None)
def semilattices(n: int, labeled: bool = True) -> tuple[MeetSemilattice, ...]:
    """Every meet-semilattice with top on ``n`` elements.

    ``labeled=True`` gives each distinct meet table on ``0..n-1`` once;
    otherwise one representative per isomorphism class. Deterministic order.
    """
    reps: dict = {}
    for down in _natural_posets(n):
        A = _meet_table(n, down)
        if A is not None:
            reps.setdefault(canonical_form(A), A)
    if not labeled:
        return tuple(reps[k] for k in sorted(reps))
    seen: dict = {}
    for k in sorted(reps):
        for p in permutations(range(n)):
            B = _relabel(reps[k], p)
            seen.setdefault((B.meet, B.top), B)
    return tuple(seen[k] for k in sorted(seen))


def corpus(max_size: int, min_size: int = 1, labeled: bool = True) -> list[MeetSemilattice]:
    out: list[MeetSemilattice] = []
    for n in range(min_size, max_size + 1):
        out.extend(semilattices(n, labeled))
    return out
