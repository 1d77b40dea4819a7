"""Congruences of SLatas and their SLata-Vietoris families.

A congruence is a tuple giving the block number of each element, normalised
as a restricted growth string (element 0 is in block 0, and each new block
gets the next free number). A family is a tuple of point-sets of the dual
space, sorted canonically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Sequence

from .adjunction import Map, Slata
from .filters import beta_table
from .order import Check, MeetSemilattice, SizeLimitExceeded, full_mask, members, set_key, submasks
from .relations import MeetRelation, box, is_one_to_one, relation_from_hom
from .space import (
    Multirelation,
    Report,
    SSpace,
    dual_space,
    relation_from_map,
    verify_s_space,
    verify_slata_space,
)

Congruence = tuple[int, ...]
Family = tuple[int, ...]

DEFAULT_FAMILY_GATE = 12


class NotWellDefined(ValueError):
    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class KernelMismatch(AssertionError):
    pass


def partition_from_keys(keys: Sequence[Hashable]) -> Congruence:
    seen: dict = {}
    return tuple(seen.setdefault(k, len(seen)) for k in keys)


def is_congruence(A: MeetSemilattice, ops: Sequence[Sequence[int]], theta: Congruence) -> Check:
    n = A.size
    for a in range(n):
        for b in range(a + 1, n):
            if theta[a] != theta[b]:
                continue
            for c in range(n):
                if theta[A.meet[a][c]] != theta[A.meet[b][c]]:
                    return Check("congruence", False, ("meet", a, b, c))
            for k, f in enumerate(ops):
                if theta[f[a]] != theta[f[b]]:
                    return Check("congruence", False, ("op", k, a, b))
    return Check("congruence", True)


def enumerate_congruences(
    A: MeetSemilattice, ops: Sequence[Sequence[int]] = (), limit: int | None = 12
) -> list[Congruence]:
    """All congruences compatible with meet and every operator in ``ops``.

    Partitions are grown as restricted growth strings; a prefix is abandoned as
    soon as two related elements among the assigned ones have unrelated meets
    or operator values. Output is sorted by block count, then lexicographically.
    """
    n = A.size
    if limit is not None and n > limit:
        raise SizeLimitExceeded(f"carrier of size {n} exceeds limit {limit}")
    meet = A.meet
    rgs = [0] * n
    found: list[Congruence] = []

    def consistent(k: int) -> bool:
        # pairs (a, k) in the same block, tested against every assigned c
        for a in range(k):
            if rgs[a] != rgs[k]:
                continue
            for c in range(k + 1):
                x, y = meet[a][c], meet[k][c]
                if x <= k and y <= k and rgs[x] != rgs[y]:
                    return False
            for f in ops:
                x, y = f[a], f[k]
                if x <= k and y <= k and rgs[x] != rgs[y]:
                    return False
        # values landing on k may complete older checks
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                if rgs[a] != rgs[b]:
                    continue
                for c in range(k + 1):
                    x, y = meet[a][c], meet[b][c]
                    if (x == k or y == k) and x <= k and y <= k and rgs[x] != rgs[y]:
                        return False
                for f in ops:
                    x, y = f[a], f[b]
                    if (x == k or y == k) and x <= k and y <= k and rgs[x] != rgs[y]:
                        return False
        return True

    def grow(k: int, blocks: int) -> None:
        if k == n:
            found.append(tuple(rgs))
            return
        for b in range(blocks + 1):
            rgs[k] = b
            if consistent(k):
                grow(k + 1, max(blocks, b + 1))

    rgs[0] = 0
    grow(1, 1) if n > 1 else found.append((0,))
    return sorted(found, key=lambda t: (max(t) + 1, t))


def slata_congruences(S: Slata, limit: int | None = 12) -> list[Congruence]:
    return enumerate_congruences(S.algebra, S.ops, limit)


def quotient(
    A: MeetSemilattice, ops: Sequence[Sequence[int]], theta: Congruence
) -> tuple[MeetSemilattice, tuple[Map, ...], Map]:
    """Quotient algebra, quotient operators and the canonical map (which is ``theta`` itself).

    Raises :class:`NotWellDefined` if some operation depends on the chosen
    representatives.
    """
    m = max(theta) + 1
    reps = [theta.index(b) for b in range(m)]
    table = [[theta[A.meet[reps[x]][reps[y]]] for y in range(m)] for x in range(m)]
    for a in A.elements:
        for b in A.elements:
            if theta[A.meet[a][b]] != table[theta[a]][theta[b]]:
                raise NotWellDefined("meet is not compatible", (a, b))
    qops = []
    for k, f in enumerate(ops):
        g = tuple(theta[f[r]] for r in reps)
        for a in A.elements:
            if theta[f[a]] != g[theta[a]]:
                raise NotWellDefined(f"operator {k} is not compatible", (k, a))
        qops.append(g)
    labels = ()
    if A.labels:
        labels = tuple("/".join(A.labels[a] for a in A.elements if theta[a] == b) for b in range(m))
    B = MeetSemilattice(tuple(map(tuple, table)), theta[A.top], labels)
    return B, tuple(qops), tuple(theta)


def slata_quotient(S: Slata, theta: Congruence) -> tuple[Slata, Map]:
    B, (i, d), q = quotient(S.algebra, S.ops, theta)
    return Slata.make(B, i, d), q


def canonical_family(members_: Sequence[int]) -> Family:
    return tuple(sorted(set(members_), key=set_key))


def family_from_congruence(A: MeetSemilattice, ops: Sequence[Sequence[int]], theta: Congruence) -> Family:
    """``{R_q(Q) : Q in the spectrum of A/theta}`` as point-sets of the dual of ``A``."""
    B, _, q = quotient(A, ops, theta)
    return canonical_family(relation_from_hom(A, B, q).images)


def u_minus(F: Family, U: int) -> int:
    """``U^-_F``: indices of members of ``F`` meeting ``U``, as a bitmask over ``F``."""
    return sum(1 << k for k, Y in enumerate(F) if Y & U)


def family_space(X: SSpace, F: Family) -> SSpace:
    """``<F, M_F>`` with ``M_F = {U^-_F : U in K}``."""
    return SSpace.make(len(F), (u_minus(F, U) for U in X.subbase), F)


def is_m_increasing(X: SSpace, F: Family, H: frozenset[int]) -> Check:
    """``[H cap K)_F = H cap K``; witness is a subbase member in the left side only."""
    HK = [U for U in X.subbase if U in H]
    lows = [u_minus(F, U) for U in HK]
    for V in X.subbase:
        if V in H:
            continue
        v = u_minus(F, V)
        if any(u & ~v == 0 for u in lows):
            return Check("M-increasing", False, V)
    return Check("M-increasing", True)


def hat_relation(X: SSpace, F: Family, FX: SSpace, R: Multirelation) -> Multirelation:
    """``(Y, Z)`` related iff ``Z`` meets every ``(U^-_F)^c`` with ``U in K`` outside ``R[Y]``."""
    images = []
    for Y in F:
        RY = R.image_of_set(Y)
        walls = [FX.full & ~u_minus(F, U) for U in X.subbase if U not in RY]
        images.append(frozenset(Z for Z in FX.zfamily if all(Z & W for W in walls)))
    return Multirelation(FX, tuple(images))


def is_vietoris_family(X: SSpace, I: Multirelation, D: Multirelation, F: Family) -> Report:
    """The three SLata-Vietoris conditions, plus the shape preconditions on ``F``."""
    rep = Report()
    ck = set(X.closure_system)
    bad = [Y for Y in F if Y == 0 or Y not in ck]
    rep.append(Check("members", not bad, bad[0] if bad else None))
    if bad:
        return rep
    FX = family_space(X, F)
    s = verify_s_space(FX)
    rep.append(Check("V1", s.ok, [c.name for c in s.failures] or None))
    if not s:
        rep.extend(c for c in s.failures)
        return rep
    v2 = Check("V2", True)
    for Y in F:
        for tag, R in (("I", I), ("D", D)):
            chk = is_m_increasing(X, F, R.image_of_set(Y))
            if not chk:
                v2 = Check("V2", False, (tag, Y, chk.witness))
                break
        if not v2:
            break
    rep.append(v2)
    if not v2:
        return rep
    sl = verify_slata_space(FX, hat_relation(X, F, FX, I), hat_relation(X, F, FX, D))
    rep.append(Check("V3", sl.ok, [c.name for c in sl.failures] or None))
    return rep


def congruence_from_family(A: MeetSemilattice, F: Family) -> Congruence:
    """``a ~ b`` iff ``beta(a)^c`` and ``beta(b)^c`` hit the same members of ``F``.

    Also computed as the kernel of ``box_{T_F} o beta`` with ``T_F(Y) = Y``; the
    two must agree.
    """
    X = dual_space(A)
    bt = beta_table(A)
    theta = partition_from_keys([u_minus(F, X.full & ~b) for b in bt])
    T = MeetRelation(SSpace.make(len(F), ()), X, F)
    kernel = partition_from_keys([box(T, b) for b in bt])
    if kernel != theta:
        raise KernelMismatch(f"{theta} != {kernel}")
    return theta


def enumerate_vietoris_families(
    A: MeetSemilattice, ops: Sequence[Sequence[int]], gate: int | None = DEFAULT_FAMILY_GATE
) -> list[Family]:
    """All SLata-Vietoris families of the dual of ``<A, i, d>`` (``ops = (i, d)``).

    Scans every subset of the nonempty members of ``C_K``; the empty family is
    a candidate too (it is the family of the total congruence).
    """
    X = dual_space(A)
    I, D = (relation_from_map(A, A, f) for f in ops)
    cand = [Y for Y in X.closure_system if Y]
    if gate is not None and len(cand) > gate:
        raise SizeLimitExceeded(f"{len(cand)} candidate members exceed gate {gate}")
    out = []
    for sel in submasks(full_mask(len(cand))):
        F = canonical_family(cand[k] for k in members(sel))
        if is_vietoris_family(X, I, D, F):
            out.append(F)
    return sorted(out, key=lambda F: (len(F), [set_key(Y) for Y in F]))


def slata_dual(S: Slata) -> tuple[SSpace, Multirelation, Multirelation]:
    A = S.algebra
    return dual_space(A), relation_from_map(A, A, S.i), relation_from_map(A, A, S.d)


# ---------------------------------------------------------------------------
# families H_a attached to a one-to-one SLata-relation into a dual space


def ha_families(T: MeetRelation, A: MeetSemilattice) -> list[frozenset[int]]:
    """``H_a = {T(x) : T(x)`` meets ``beta(a)^c}`` for each ``a`` (sets of point-sets)."""
    X = T.target
    out = []
    for b in beta_table(A):
        out.append(frozenset(img for img in T.images if img & ~b & X.full))
    return out


def check_ha_properties(T: MeetRelation, A: MeetSemilattice) -> Report:
    """Membership in ``H_a`` versus ``box_T(beta(a))``, and antitonicity of ``a -> H_a``."""
    bt = beta_table(A)
    H = ha_families(T, A)
    util = Check("H-remark", True)
    for a in A.elements:
        bx = box(T, bt[a])
        for x, img in enumerate(T.images):
            if (img in H[a]) != (not bx >> x & 1):
                util = Check("H-remark", False, (a, x))
                break
        if not util:
            break
    anti = Check("H-antitone", True)
    for a in A.elements:
        for b in members(A.up[a]):
            if not H[b] <= H[a]:
                anti = Check("H-antitone", False, (a, b))
    return Report([util, anti])


@dataclass(frozen=True)
class Transported:
    space: SSpace
    family: Family
    I: Multirelation
    D: Multirelation
    lam: tuple[int, ...]


def transport_along_onto(S1: Slata, S2: Slata, h: Sequence[int]) -> tuple[Transported, Report]:
    """Build ``<F_{R_h}, M, I_h, D_h>`` for an onto SLata morphism ``h`` and check it.

    The report covers: ``lambda`` bijective, the SLata-space axioms, ``lambda``
    carrying subbase and relations of the dual of ``S2`` onto the new space, and
    ``beta(a)^c in R_{i1}[R_h(P)]  iff  H_a in I_h(R_h(P))`` (same for ``d``).
    """
    A1, A2 = S1.algebra, S2.algebra
    X1, X2 = dual_space(A1), dual_space(A2)
    Rh = relation_from_hom(A1, A2, h)
    F = canonical_family(Rh.images)
    pos = {Y: k for k, Y in enumerate(F)}
    lam = tuple(pos[Y] for Y in Rh.images)
    FX = family_space(X1, F)
    rep = Report([Check("lambda-bijective", len(set(lam)) == X2.n == len(F))])
    inv = {k: P for P, k in enumerate(lam)}

    def pullback(Z: int) -> int:
        return sum(1 << inv[k] for k in members(Z))

    zs2 = set(X2.zfamily)
    rels = []
    for f2 in S2.ops:
        R2 = relation_from_map(A2, A2, f2)
        images: list[frozenset[int]] = [frozenset()] * len(F)
        for Q in range(X2.n):
            images[lam[Q]] = frozenset(
                Z for Z in FX.zfamily if pullback(Z) in zs2 and pullback(Z) in R2.images[Q]
            )
        rels.append(Multirelation(FX, tuple(images)))
    Ih, Dh = rels
    moved = {sum(1 << lam[P] for P in members(V)) for V in X2.subbase}
    rep.append(Check("lambda-subbase", moved == set(FX.subbase)))
    sl = verify_slata_space(FX, Ih, Dh)
    rep.append(Check("transported-slata-space", sl.ok, [c.name for c in sl.failures] or None))
    bt1 = beta_table(A1)
    Ha = [u_minus(F, X1.full & ~b) for b in bt1]
    for tag, f1, Rhat in (("i", S1.i, Ih), ("d", S1.d, Dh)):
        R1 = relation_from_map(A1, A1, f1)
        bad = None
        for P in range(X2.n):
            img = R1.image_of_set(Rh.images[P])
            for a in A1.elements:
                if ((X1.full & ~bt1[a]) in img) != (Ha[a] in Rhat.images[lam[P]]):
                    bad = (a, P)
                    break
            if bad:
                break
        rep.append(Check(f"transport-{tag}", bad is None, bad))
    rep.append(Check("R_h-one-to-one", is_one_to_one(Rh).ok))
    return Transported(FX, F, Ih, Dh, lam), rep


def iter_families_with_congruences(S: Slata) -> Iterator[tuple[Congruence, Family]]:
    for theta in slata_congruences(S):
        yield theta, family_from_congruence(S.algebra, S.ops, theta)
