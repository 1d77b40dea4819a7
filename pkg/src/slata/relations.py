"""Meet-relations between S-spaces and the saturated composition ``*``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .filters import irreducible_filters
from .order import Check, MeetSemilattice, members
from .space import Multirelation, SSpace, box_multirel, dual_space


@dataclass(frozen=True)
class MeetRelation:
    """``T`` from ``source`` to ``target``; ``images[x]`` is ``T(x)`` as a target bitmask."""

    source: SSpace
    target: SSpace
    images: tuple[int, ...]

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for x, img in enumerate(self.images) for y in members(img))

    @classmethod
    def from_pairs(cls, source: SSpace, target: SSpace, pairs) -> "MeetRelation":
        images = [0] * source.n
        for x, y in pairs:
            images[x] |= 1 << y
        return cls(source, target, tuple(images))


def box(T: MeetRelation, U: int) -> int:
    """``{x : T(x) is a subset of U}``."""
    out = 0
    for x, img in enumerate(T.images):
        if img & ~U == 0:
            out |= 1 << x
    return out


def is_meet_relation(T: MeetRelation) -> Check:
    S1 = T.source.closed_index
    for U in T.target.closed:
        if box(T, U) not in S1:
            return Check("meet-relation-1", False, U)
    for x, img in enumerate(T.images):
        hull = T.target.full
        for U in T.target.closed:
            if img & ~U == 0:
                hull &= U
        if hull != img:
            return Check("meet-relation-2", False, x)
    return Check("meet-relation", True)


def relational_composition(T: MeetRelation, R: MeetRelation) -> tuple[int, ...]:
    """Plain ``T o R``: first ``R``, then ``T``."""
    out = []
    for img in R.images:
        acc = 0
        for y in members(img):
            acc |= T.images[y]
        out.append(acc)
    return tuple(out)


def compose_star(T: MeetRelation, R: MeetRelation) -> MeetRelation:
    """``T * R`` for ``R: X1 -> X2`` and ``T: X2 -> X3``.

    ``(x, z)`` is kept when ``z`` lies in every subbasic closed set containing
    ``(T o R)(x)``.
    """
    if R.target != T.source:
        raise ValueError("relations are not composable")
    plain = relational_composition(T, R)
    X3 = T.target
    images = []
    for img in plain:
        hull = X3.full
        for U in X3.closed:
            if img & ~U == 0:
                hull &= U
        images.append(hull)
    return MeetRelation(R.source, X3, tuple(images))


def dual_specialization(X: SSpace) -> MeetRelation:
    """``x`` relates to ``y`` when ``y`` is in the closure of ``x``; the identity for ``*``."""
    return MeetRelation.from_pairs(
        X, X, ((x, y) for x in range(X.n) for y in range(X.n) if X.in_closure(y, x))
    )


def relation_from_hom(A1: MeetSemilattice, A2: MeetSemilattice, h: Sequence[int]) -> MeetRelation:
    """``(P, Q) in R_h  iff  h^{-1}[P]`` is contained in ``Q``; from the dual of A2 to the dual of A1."""
    X1, X2 = dual_space(A1), dual_space(A2)
    spec1 = irreducible_filters(A1)
    images = []
    for P in irreducible_filters(A2):
        pre = sum(1 << a for a in A1.elements if P >> h[a] & 1)
        images.append(sum(1 << k for k, Q in enumerate(spec1) if pre & ~Q == 0))
    return MeetRelation(X2, X1, tuple(images))


def is_slata_relation(
    T: MeetRelation,
    source_ops: Sequence[Multirelation],
    target_ops: Sequence[Multirelation],
) -> Check:
    """``box_T o m_{R2} = m_{R1} o box_T`` on ``S(target)`` for each paired multirelation."""
    X1, X2 = T.source, T.target
    for k, (R1, R2) in enumerate(zip(source_ops, target_ops)):
        for U in X2.closed:
            lhs = box(T, box_multirel(X2, R2, U))
            rhs = box_multirel(X1, R1, box(T, U), strict=False)
            if lhs != rhs:
                return Check("slata-relation", False, (k, U))
    return Check("slata-relation", True)


def is_one_to_one(T: MeetRelation) -> Check:
    """Every ``x`` outside ``U in S(X1)`` is separated from ``U`` by some ``box_T(V)``."""
    X1 = T.source
    boxes = [box(T, V) for V in T.target.closed]
    for U in X1.closed:
        for x in members(X1.full & ~U):
            if not any(U & ~b == 0 and not b >> x & 1 for b in boxes):
                return Check("one-to-one", False, (x, U))
    return Check("one-to-one", True)
