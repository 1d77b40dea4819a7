"""Adjoint pairs on finite posets, SLatas and their morphisms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .order import (
    Check,
    DEFAULT_SIZE_LIMIT,
    MeetSemilattice,
    check_size,
    is_monotone,
    members,
)

Map = tuple[int, ...]


class NotAdjoinable(ValueError):
    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


class NotAnAdjunction(ValueError):
    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


def is_adjoint_pair(P: MeetSemilattice, Q: MeetSemilattice, f: Sequence[int], g: Sequence[int]) -> Check:
    """``f(p) <= q  iff  p <= g(q)`` for all p, q; witness is the first mismatching (p, q)."""
    # per p, compare {q : f(p) <= q} with {q : p <= g(q)} as bitmasks
    upP, upQ = P.up, Q.up
    for p in P.elements:
        lhs = upQ[f[p]]
        up_p = upP[p]
        rhs = 0
        for q in Q.elements:
            if up_p >> g[q] & 1:
                rhs |= 1 << q
        if lhs != rhs:
            q = ((lhs ^ rhs) & -(lhs ^ rhs)).bit_length() - 1
            return Check("adjoint", False, (p, q))
    return Check("adjoint", True)


def equational_adjoint_check(A: MeetSemilattice, i: Sequence[int], d: Sequence[int]) -> Check:
    """Monotonicity of both maps plus ``i(d(a)) <= a <= d(i(a))`` for every a.

    Witnesses are ``("monotone-i", (a, b))``, ``("monotone-d", (a, b))``,
    ``("counit", a)`` or ``("unit", a)``.
    """
    up = A.up
    for a in A.elements:
        if not up[i[d[a]]] >> a & 1:
            return Check("equational-adjoint", False, ("counit", a))
        if not up[a] >> d[i[a]] & 1:
            return Check("equational-adjoint", False, ("unit", a))
    for name, f in (("monotone-i", i), ("monotone-d", d)):
        mono = is_monotone(A, A, f)
        if not mono:
            return Check("equational-adjoint", False, (name, mono.witness))
    return Check("equational-adjoint", True)


def _greatest(A: MeetSemilattice, S: int) -> int | None:
    for c in members(S):
        if S & ~A.down[c] == 0:
            return c
    return None


def _least(A: MeetSemilattice, S: int) -> int | None:
    for c in members(S):
        if S & ~A.up[c] == 0:
            return c
    return None


def right_adjoint_of(P: MeetSemilattice, Q: MeetSemilattice, f: Sequence[int]) -> Map:
    """``g(q)`` = greatest p with ``f(p) <= q``; raises :class:`NotAdjoinable` naming q."""
    if not is_monotone(P, Q, f):
        raise NotAdjoinable("map is not monotone", -1)
    g = []
    for q in Q.elements:
        section = sum(1 << p for p in P.elements if Q.leq(f[p], q))
        top = _greatest(P, section)
        if top is None:
            raise NotAdjoinable(f"no greatest element below {q}", q)
        g.append(top)
    return tuple(g)


def left_adjoint_of(P: MeetSemilattice, Q: MeetSemilattice, g: Sequence[int]) -> Map:
    """``f(p)`` = least q with ``p <= g(q)``, for ``g: Q -> P``."""
    if not is_monotone(Q, P, g):
        raise NotAdjoinable("map is not monotone", -1)
    f = []
    for p in P.elements:
        section = sum(1 << q for q in Q.elements if P.leq(p, g[q]))
        bot = _least(Q, section)
        if bot is None:
            raise NotAdjoinable(f"no least element above {p}", p)
        f.append(bot)
    return tuple(f)


def monotone_maps(A: MeetSemilattice, B: MeetSemilattice | None = None) -> Iterator[Map]:
    """All order-preserving maps ``A -> B`` in lexicographic order of their tables."""
    B = A if B is None else B
    n = A.size
    below = [members(A.down[a] & ((1 << a) - 1)) for a in range(n)]
    above = [members(A.up[a] & ((1 << a) - 1)) for a in range(n)]
    table = [0] * n

    def extend(k: int) -> Iterator[Map]:
        if k == n:
            yield tuple(table)
            return
        for v in B.elements:
            if all(B.leq(table[b], v) for b in below[k]) and all(B.leq(v, table[b]) for b in above[k]):
                table[k] = v
                yield from extend(k + 1)

    yield from extend(0)


@dataclass(frozen=True)
class Slata:
    """A semilattice with an adjoint pair ``i -| d`` of endomaps."""

    algebra: MeetSemilattice
    i: Map
    d: Map

    @classmethod
    def make(cls, A: MeetSemilattice, i: Sequence[int], d: Sequence[int]) -> "Slata":
        chk = equational_adjoint_check(A, i, d)
        if not chk:
            raise NotAnAdjunction("i is not left adjoint to d", chk.witness)
        return cls(A, tuple(i), tuple(d))

    @property
    def ops(self) -> tuple[Map, Map]:
        return (self.i, self.d)


def identity_map(A: MeetSemilattice) -> Map:
    return tuple(A.elements)


def enumerate_adjoint_pairs(A: MeetSemilattice, limit: int | None = DEFAULT_SIZE_LIMIT) -> list[tuple[Map, Map]]:
    """All endo adjoint pairs ``(i, d)``, ordered by the table of ``i``."""
    check_size(A, limit)
    pairs = []
    for i in monotone_maps(A):
        try:
            d = right_adjoint_of(A, A, i)
        except NotAdjoinable:
            continue
        pairs.append((i, d))
    return pairs


def is_homomorphism(A: MeetSemilattice, B: MeetSemilattice, h: Sequence[int]) -> Check:
    if h[A.top] != B.top:
        return Check("homomorphism", False, ("top",))
    for a in A.elements:
        for b in A.elements:
            if h[A.meet[a][b]] != B.meet[h[a]][h[b]]:
                return Check("homomorphism", False, ("meet", a, b))
    return Check("homomorphism", True)


def commutes_with(h: Sequence[int], f1: Sequence[int], f2: Sequence[int]) -> int | None:
    """First a with ``h(f1(a)) != f2(h(a))``, or None."""
    for a in range(len(h)):
        if h[f1[a]] != f2[h[a]]:
            return a
    return None


def is_morphism(A1: MeetSemilattice, A2: MeetSemilattice, ops1: Sequence[Sequence[int]],
                ops2: Sequence[Sequence[int]], h: Sequence[int]) -> Check:
    """Semilattice homomorphism commuting with each paired operator."""
    hom = is_homomorphism(A1, A2, h)
    if not hom:
        return hom
    for k, (f1, f2) in enumerate(zip(ops1, ops2)):
        a = commutes_with(h, f1, f2)
        if a is not None:
            return Check("homomorphism", False, ("op", k, a))
    return Check("homomorphism", True)


def is_slata_morphism(S1: Slata, S2: Slata, h: Sequence[int]) -> Check:
    """``h`` preserves meet, top, ``i`` and ``d``. Witness names the failing law."""
    chk = is_morphism(S1.algebra, S2.algebra, S1.ops, S2.ops, h)
    if chk or chk.witness[0] != "op":
        return chk
    _, k, a = chk.witness
    return Check("slata-morphism", False, ("id"[k], a))


def homomorphisms(A: MeetSemilattice, B: MeetSemilattice) -> Iterator[Map]:
    """All semilattice homomorphisms ``A -> B`` (monotone maps filtered by the equations)."""
    for h in monotone_maps(A, B):
        if is_homomorphism(A, B, h):
            yield h
