"""Finite S-spaces, multirelations and the SLata-space axioms.

A space has points ``0..n-1``; point-sets are bitmasks. Only the families the
axioms talk about are ever materialised: the subbase ``K``, the subbasic
closed sets ``S(X)``, the closure system ``C_K(X)`` generated by ``S(X)`` and
the family ``Z(X)`` of intersections of subbase members.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .adjunction import Slata
from .filters import beta_table, irreducible_filters
from .order import Check, MeetSemilattice, full_mask, members, set_key, submasks


class AxiomFailed(AssertionError):
    def __init__(self, axiom: str, witness: object = None):
        super().__init__(f"{axiom} failed (witness: {witness!r})")
        self.axiom = axiom
        self.witness = witness


class NotClosedUnderIntersection(ValueError):
    pass


class NotBijective(ValueError):
    pass


class NotSubbasePreserving(ValueError):
    pass


class UNotSubbasicClosed(ValueError):
    pass


class Report(list):
    """An ordered list of :class:`Check` results."""

    @property
    def ok(self) -> bool:
        return all(self)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failures(self) -> list[Check]:
        return [c for c in self if not c]

    def get(self, name: str) -> Check:
        for c in self:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_for_failure(self) -> "Report":
        for c in self:
            if not c:
                raise AxiomFailed(c.name, c.witness)
        return self


def intersection_closure(n: int, generators: Iterable[int]) -> tuple[int, ...]:
    """All intersections of subfamilies of ``generators``; the empty one gives the whole space."""
    fam = {full_mask(n)}
    for g in generators:
        fam |= {z & g for z in fam}
    return tuple(sorted(fam, key=set_key))


@dataclass(frozen=True)
class SSpace:
    """Points ``0..n-1`` with a distinguished subbase of open sets."""

    n: int
    subbase: tuple[int, ...]
    labels: tuple = field(default=(), compare=False)

    @classmethod
    def make(cls, n: int, subbase: Iterable[int], labels: Sequence = ()) -> "SSpace":
        return cls(n, tuple(sorted(set(subbase), key=set_key)), tuple(labels))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def closed(self) -> tuple[int, ...]:
        """``S(X)``: complements of subbase members, canonical order."""
        return tuple(sorted({self.full & ~U for U in self.subbase}, key=set_key))

    @cached_property
    def closed_index(self) -> dict[int, int]:
        return {U: k for k, U in enumerate(self.closed)}

    @cached_property
    def subbase_set(self) -> frozenset[int]:
        return frozenset(self.subbase)

    @cached_property
    def zfamily(self) -> tuple[int, ...]:
        """``Z(X)``: intersections of subbase members (``X`` included as the empty intersection)."""
        return intersection_closure(self.n, self.subbase)

    @cached_property
    def closure_system(self) -> tuple[int, ...]:
        """``C_K(X)``: the closure system generated by ``S(X)``."""
        return intersection_closure(self.n, self.closed)

    def L(self, U: int) -> frozenset[int]:
        """Members of ``Z(X)`` meeting ``U``."""
        return frozenset(Z for Z in self.zfamily if Z & U)

    def in_closure(self, x: int, y: int) -> bool:
        """``x`` lies in the closure of ``{y}``: every subbasic open around ``x`` contains ``y``."""
        return all(U >> y & 1 for U in self.subbase if U >> x & 1)

    def specialization(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (x, y) for x in range(self.n) for y in range(self.n) if self.in_closure(x, y)
        )


def _check_s1(X: SSpace) -> list[Check]:
    union = 0
    for U in X.subbase:
        union |= U
    cover = Check("S1-cover", union == X.full, members(X.full & ~union) or None)
    seen: dict[tuple, int] = {}
    t0 = Check("S1-T0", True)
    for x in range(X.n):
        profile = tuple(U >> x & 1 for U in X.subbase)
        if profile in seen:
            t0 = Check("S1-T0", False, (seen[profile], x))
            break
        seen[profile] = x
    return [t0, cover]


def _check_s2(X: SSpace) -> list[Check]:
    empty = Check("S2-empty", 0 in X.subbase_set)
    unions = Check("S2-unions", True)
    for U in X.subbase:
        for V in X.subbase:
            if U | V not in X.subbase_set:
                unions = Check("S2-unions", False, (U, V))
                break
        if not unions:
            break
    # every finite family of open sets is compact
    return [Check("S2-compact", True), empty, unions]


def _check_s3(X: SSpace) -> Check:
    K = X.subbase
    for U in K:
        for V in K:
            UV = U & V
            for x in members(UV):
                if not any(
                    not W >> x & 1 and D >> x & 1 and D & ~(UV | W) == 0
                    for W in K for D in K
                ):
                    return Check("S3", False, (U, V, x))
    return Check("S3", True)


def is_y_family(X: SSpace, Y: int, J: Sequence[int]) -> bool:
    S = X.closed
    Jset = set(J)
    for A in J:
        for B in J:
            if not any(
                Y & ~H == 0 and C in Jset and A & H & ~C == 0 and B & H & ~C == 0
                for H in S for C in J
            ):
                return False
    return True


def _check_s4(X: SSpace) -> Check:
    # Families J range over nonempty subsets of S(X): with J empty and Y empty the
    # hypothesis is vacuous while the conclusion is false, in every space.
    S = X.closed
    for Y in X.closure_system:
        # only families whose members all miss part of Y can satisfy the hypothesis
        cand = [A for A in S if Y & ~A]
        for sel in submasks(full_mask(len(cand))):
            if sel == 0:
                continue
            J = [cand[k] for k in members(sel)]
            rest = Y
            for A in J:
                rest &= ~A
            if rest:
                continue
            if is_y_family(X, Y, J):
                return Check("S4", False, (Y, tuple(J)))
    return Check("S4", True)


def verify_s_space(X: SSpace) -> Report:
    """Axioms S1-S4, one check per clause."""
    rep = Report(_check_s1(X) + _check_s2(X))
    rep.append(_check_s3(X))
    rep.append(_check_s4(X))
    return rep


@lru_cache(maxsize=4096)
def dual_space(A: MeetSemilattice) -> SSpace:
    """Irreducible filters with subbase ``{beta(a)^c}``."""
    spec = irreducible_filters(A)
    n = len(spec)
    full = full_mask(n)
    return SSpace.make(n, (full & ~b for b in beta_table(A)), spec)


def dual_algebra(X: SSpace) -> MeetSemilattice:
    """``<S(X), intersection, X>`` with carrier in the canonical order of ``X.closed``."""
    S = X.closed
    idx = X.closed_index
    table = []
    for U in S:
        row = []
        for V in S:
            W = U & V
            if W not in idx:
                raise NotClosedUnderIntersection(f"{U:#b} & {V:#b} not subbasic closed")
            row.append(idx[W])
        table.append(tuple(row))
    if X.full not in idx:
        raise NotClosedUnderIntersection("whole space is not subbasic closed")
    labels = tuple("{" + ",".join(map(str, members(U))) + "}" for U in S)
    return MeetSemilattice(tuple(table), idx[X.full], labels)


def beta_index(A: MeetSemilattice) -> tuple[int, ...]:
    """``beta`` as a map from ``A`` to the carrier indices of ``dual_algebra(dual_space(A))``."""
    X = dual_space(A)
    return tuple(X.closed_index[b] for b in beta_table(A))


@dataclass(frozen=True)
class Multirelation:
    """Pairs ``(x, Z)`` with ``x`` a point and ``Z`` a member of ``Z(space)``.

    ``images[x]`` is the set ``R(x)``; there is one entry per source point.
    """

    space: SSpace
    images: tuple[frozenset[int], ...]

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, Z) for x, img in enumerate(self.images) for Z in img)

    def image_of_set(self, Y: int) -> frozenset[int]:
        """``R[Y]``: everything related to some point of ``Y``."""
        out: set[int] = set()
        for y in members(Y):
            out |= self.images[y]
        return frozenset(out)


def relation_from_map(A: MeetSemilattice, B: MeetSemilattice, f: Sequence[int]) -> Multirelation:
    """``(P, Z) in R_f  iff  f^{-1}[P]`` misses ``{a : beta(a) misses Z}``.

    ``P`` ranges over the spectrum of ``B`` and ``Z`` over ``Z`` of the dual of ``A``.
    """
    XA = dual_space(A)
    bA = beta_table(A)
    kill = {Z: sum(1 << a for a in A.elements if not bA[a] & Z) for Z in XA.zfamily}
    images = []
    for P in irreducible_filters(B):
        pre = sum(1 << a for a in A.elements if P >> f[a] & 1)
        images.append(frozenset(Z for Z in XA.zfamily if not pre & kill[Z]))
    return Multirelation(XA, tuple(images))


def box_multirel(X: SSpace, R: Multirelation, U: int, strict: bool = True) -> int:
    """``m_R(U)``: points all of whose related sets meet ``U``."""
    if strict and U not in X.closed_index:
        raise UNotSubbasicClosed(f"{U:#b} is not in S(X)")
    out = 0
    for x, img in enumerate(R.images):
        if all(Z & U for Z in img):
            out |= 1 << x
    return out


def _check_zmembers(X: SSpace, R: Multirelation, tag: str) -> Check:
    zs = set(X.zfamily)
    for x, img in enumerate(R.images):
        for Z in img:
            if Z not in zs:
                return Check(f"{tag}-domain", False, (x, Z))
    if len(R.images) != X.n:
        return Check(f"{tag}-domain", False, ("points", len(R.images)))
    return Check(f"{tag}-domain", True)


def verify_ms_space(X: SSpace, R: Multirelation, tag: str = "mS") -> Report:
    """Both mS-space conditions for ``R`` over ``X``."""
    dom = _check_zmembers(X, R, tag)
    if not dom:
        return Report([dom])
    boxes = {U: box_multirel(X, R, U) for U in X.closed}
    c1 = Check(f"{tag}-1", True)
    for U, m in boxes.items():
        if m not in X.closed_index:
            c1 = Check(f"{tag}-1", False, U)
            break
    c2 = Check(f"{tag}-2", True)
    for x in range(X.n):
        covering = [U for U in X.closed if boxes[U] >> x & 1]
        expect = frozenset(Z for Z in X.zfamily if all(Z & U for U in covering))
        if expect != R.images[x]:
            c2 = Check(f"{tag}-2", False, (x, sorted(expect ^ R.images[x])))
            break
    return Report([dom, c1, c2])


def verify_slata_space(X: SSpace, I: Multirelation, D: Multirelation) -> Report:
    """Conditions (1)-(3) of an SLata-space."""
    rep = verify_ms_space(X, I, "1-I") + verify_ms_space(X, D, "1-D")
    rep = Report(rep)
    if not rep:
        return rep
    c2 = Check("2", True)
    c3 = Check("3", True)
    for U in X.closed:
        mI = box_multirel(X, I, U)
        mD = box_multirel(X, D, U)
        if c2:
            for x in members(U):
                bad = [Z for Z in D.images[x] if not Z & mI]
                if bad:
                    c2 = Check("2", False, (U, x, bad[0]))
                    break
        if c3:
            for x in range(X.n):
                if not U >> x & 1 and all(Z & mD for Z in I.images[x]):
                    c3 = Check("3", False, (U, x))
                    break
    rep += [c2, c3]
    return rep


def operator_of(X: SSpace, R: Multirelation) -> tuple[int, ...]:
    """``m_R`` as an endomap of the carrier of ``dual_algebra(X)``."""
    out = []
    for U in X.closed:
        m = box_multirel(X, R, U)
        if m not in X.closed_index:
            raise AxiomFailed("mS-1", U)
        out.append(X.closed_index[m])
    return tuple(out)


def algebra_of_slata_space(X: SSpace, I: Multirelation, D: Multirelation) -> Slata:
    """``<S(X), m_I, m_D>``; the space must pass :func:`verify_slata_space`."""
    verify_slata_space(X, I, D).raise_for_failure()
    return Slata.make(dual_algebra(X), operator_of(X, I), operator_of(X, D))


def h_map(X: SSpace) -> tuple[int, ...]:
    """``x -> {A in S(X) : x in A}`` as indices into the spectrum of ``dual_algebra(X)``.

    Bijectivity and subbase preservation are verified.
    """
    AS = dual_algebra(X)
    spec = irreducible_filters(AS)
    where = {P: k for k, P in enumerate(spec)}
    image = []
    for x in range(X.n):
        flt = sum(1 << k for k, U in enumerate(X.closed) if U >> x & 1)
        if flt not in where:
            raise NotBijective(f"point {x} is not sent to an irreducible filter")
        image.append(where[flt])
    if len(set(image)) != X.n or X.n != len(spec):
        raise NotBijective("H_X is not a bijection onto the spectrum")
    moved = {sum(1 << image[x] for x in members(V)) for V in X.subbase}
    if moved != set(dual_space(AS).subbase):
        raise NotSubbasePreserving("h[K] differs from the subbase of the double dual")
    return tuple(image)


def transport(h: Sequence[int], Z: int) -> int:
    return sum(1 << h[x] for x in members(Z))


def counit_check(X: SSpace, rels: Sequence[Multirelation]) -> Report:
    """``H_X`` is an isomorphism onto the double dual, carrying each multirelation
    ``R`` to ``R_{m_R}``: ``(x, Z) in R  iff  (h(x), h[Z]) in R_{m_R}``."""
    rep = Report()
    try:
        h = h_map(X)
    except (NotBijective, NotSubbasePreserving) as exc:
        rep.append(Check("counit-homeomorphism", False, str(exc)))
        return rep
    rep.append(Check("counit-homeomorphism", True))
    AS = dual_algebra(X)
    for k, R in enumerate(rels):
        back = relation_from_map(AS, AS, operator_of(X, R))
        bad = None
        for x in range(X.n):
            moved = frozenset(transport(h, Z) for Z in R.images[x])
            if moved != back.images[h[x]]:
                bad = x
                break
        rep.append(Check(f"counit-relation-{k}", bad is None, bad))
    return rep
