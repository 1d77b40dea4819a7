"""Finite meet-semilattices with a top element.

Elements are the integers ``0..n-1``. Subsets of a carrier are plain ``int``
bitmasks (bit ``k`` set iff element ``k`` is a member), so union, intersection
and complement are the usual bit operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

DEFAULT_SIZE_LIMIT = 16


class SemilatticeError(ValueError):
    """Base class for tables that do not describe a meet-semilattice with top."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class MalformedTable(SemilatticeError):
    pass


class NotIdempotent(SemilatticeError):
    pass


class NotCommutative(SemilatticeError):
    pass


class NotAssociative(SemilatticeError):
    pass


class TopNotNeutral(SemilatticeError):
    pass


class NotAPartialOrder(SemilatticeError):
    pass


class MissingMeet(SemilatticeError):
    pass


class MissingTop(SemilatticeError):
    pass


class SizeLimitExceeded(ValueError):
    pass


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for k in items:
        m |= 1 << k
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key for subsets: cardinality, then the sorted index tuple."""
    return popcount(mask), tuple(members(mask))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Check:
    """Outcome of a decision procedure: a verdict plus a witness on failure."""

    name: str
    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MeetSemilattice:
    """The algebra ``<A, meet, top>`` given by its full meet table."""

    meet: tuple[tuple[int, ...], ...]
    top: int
    labels: tuple[str, ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.meet)

    def __len__(self) -> int:
        return len(self.meet)

    @property
    def elements(self) -> range:
        return range(len(self.meet))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def index(self, label: str) -> int:
        if self.labels:
            return self.labels.index(label)
        return int(label)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[a]`` is the principal upset ``[a)`` as a bitmask."""
        n = self.size
        return tuple(mask_of(b for b in range(n) if self.meet[a][b] == a) for a in range(n))

    @cached_property
    def above(self) -> tuple[tuple[int, ...], ...]:
        """``above[a]``: members of ``[a)`` in ascending order."""
        return tuple(tuple(members(m)) for m in self.up)

    @cached_property
    def down(self) -> tuple[int, ...]:
        n = self.size
        return tuple(mask_of(b for b in range(n) if self.meet[a][b] == b) for a in range(n))

    @cached_property
    def bottom(self) -> int:
        b = self.top
        for a in self.elements:
            b = self.meet[b][a]
        return b

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def meet_all(self, items: Iterable[int]) -> int:
        m = self.top
        for a in items:
            m = self.meet[m][a]
        return m

    def join(self, a: int, b: int) -> int | None:
        """Least upper bound if it exists (in a finite semilattice with top it always does)."""
        ubs = self.up[a] & self.up[b]
        for c in members(ubs):
            if ubs & ~self.up[c] == 0:
                return c
        return None

    @classmethod
    def from_leq(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: Sequence[str] = (),
    ) -> "MeetSemilattice":
        """Build the algebra from an order given by (generating) pairs ``a <= b``.

        The reflexive-transitive closure of ``pairs`` is taken. Raises
        :class:`NotAPartialOrder`, :class:`MissingTop` or :class:`MissingMeet`
        when the closure is not a meet-semilattice with a greatest element.
        """
        le = [[a == b for b in range(n)] for a in range(n)]
        for a, b in pairs:
            le[a][b] = True
        for k in range(n):
            for a in range(n):
                if le[a][k]:
                    row = le[k]
                    for b in range(n):
                        if row[b]:
                            le[a][b] = True
        for a in range(n):
            for b in range(a + 1, n):
                if le[a][b] and le[b][a]:
                    raise NotAPartialOrder(f"cycle between {a} and {b}", (a, b))
        tops = [t for t in range(n) if all(le[a][t] for a in range(n))]
        if not tops:
            raise MissingTop("order has no greatest element")
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                lbs = [c for c in range(n) if le[c][a] and le[c][b]]
                glb = [c for c in lbs if all(le[x][c] for x in lbs)]
                if not glb:
                    raise MissingMeet(f"{a} and {b} have no greatest lower bound", (a, b))
                table[a][b] = table[b][a] = glb[0]
        return validate_semilattice(table, tops[0], labels)


def validate_semilattice(
    meet_table: Sequence[Sequence[int]],
    top: int,
    labels: Sequence[str] = (),
) -> MeetSemilattice:
    """Check the semilattice laws and return the validated algebra.

    Laws are checked in the order idempotence, commutativity, associativity,
    neutrality of ``top``; the first failure is raised with its witness.
    """
    n = len(meet_table)
    if n == 0:
        raise MalformedTable("empty carrier")
    if any(len(row) != n for row in meet_table):
        raise MalformedTable("meet table is not square")
    if any(not (0 <= v < n) for row in meet_table for v in row):
        raise MalformedTable("meet table entry out of range")
    if not 0 <= top < n:
        raise MalformedTable("top out of range")
    if labels and (len(labels) != n or len(set(labels)) != n):
        raise MalformedTable("labels must be unique and one per element")
    m = tuple(tuple(int(v) for v in row) for row in meet_table)
    for a in range(n):
        if m[a][a] != a:
            raise NotIdempotent(f"meet({a},{a}) = {m[a][a]}", (a,))
    for a in range(n):
        for b in range(a + 1, n):
            if m[a][b] != m[b][a]:
                raise NotCommutative(f"meet({a},{b}) != meet({b},{a})", (a, b))
    for a, b, c in product(range(n), repeat=3):
        if m[m[a][b]][c] != m[a][m[b][c]]:
            raise NotAssociative(f"meet is not associative at ({a},{b},{c})", (a, b, c))
    for a in range(n):
        if m[a][top] != a:
            raise TopNotNeutral(f"meet({a}, top) = {m[a][top]}", (a,))
    return MeetSemilattice(m, top, tuple(labels))


def order_from_meet(A: MeetSemilattice) -> frozenset[tuple[int, int]]:
    """The induced order ``{(a, b) : a = a meet b}``."""
    return frozenset((a, b) for a in A.elements for b in A.elements if A.meet[a][b] == a)


def upset(A: MeetSemilattice, Y: int) -> int:
    out = 0
    for y in members(Y):
        out |= A.up[y]
    return out


def downset(A: MeetSemilattice, Y: int) -> int:
    out = 0
    for y in members(Y):
        out |= A.down[y]
    return out


def is_monotone(A: MeetSemilattice, B: MeetSemilattice, table: Sequence[int]) -> Check:
    """Order preservation of ``table: A -> B``; witness ``(a, b)`` with a <= b, f(a) not <= f(b)."""
    up = B.up
    for a, bs in enumerate(A.above):
        fa = up[table[a]]
        for b in bs:
            if not fa >> table[b] & 1:
                return Check("monotone", False, (a, b))
    return Check("monotone", True)


def check_size(A: MeetSemilattice, limit: int | None) -> None:
    if limit is not None and A.size > limit:
        raise SizeLimitExceeded(f"carrier of size {A.size} exceeds limit {limit}")
