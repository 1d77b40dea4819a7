"""Tense operators: E-SLatas ``<A, P, G, F, H>`` and their dual spaces.

The dual of an E-SLata is the dual space of ``A`` with the four multirelations
``(I1, D1, I2, D2) = (R_P, R_G, R_F, R_H)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .adjunction import Map, enumerate_adjoint_pairs, is_adjoint_pair
from .order import Check, MeetSemilattice, is_monotone
from .space import (
    Multirelation,
    Report,
    SSpace,
    beta_index,
    box_multirel,
    dual_algebra,
    dual_space,
    operator_of,
    relation_from_map,
    verify_slata_space,
)

OP_NAMES = ("P", "G", "F", "H")


@dataclass(frozen=True)
class ESlata:
    algebra: MeetSemilattice
    P: Map
    G: Map
    F: Map
    H: Map

    @property
    def ops(self) -> tuple[Map, Map, Map, Map]:
        return (self.P, self.G, self.F, self.H)


@dataclass(frozen=True)
class ESlataSpace:
    space: SSpace
    I1: Multirelation
    D1: Multirelation
    I2: Multirelation
    D2: Multirelation

    @property
    def relations(self) -> tuple[Multirelation, ...]:
        return (self.I1, self.D1, self.I2, self.D2)


def _mixing(A: MeetSemilattice, G: Sequence[int], F: Sequence[int]) -> tuple[int, int] | None:
    """First (x, y) with ``G(x) meet F(y)`` not below ``F(x meet y)``."""
    m = A.meet
    for x in A.elements:
        for y in A.elements:
            if not A.leq(m[G[x]][F[y]], F[m[x][y]]):
                return (x, y)
    return None


def axioms_t(A: MeetSemilattice, P, G, F, H) -> Report:
    """(T1) P -| G, (T2) F -| H, (T3) the two mixing inequalities."""
    t1 = is_adjoint_pair(A, A, P, G)
    t2 = is_adjoint_pair(A, A, F, H)
    w1, w2 = _mixing(A, G, F), _mixing(A, H, P)
    t3 = Check("T3", w1 is None and w2 is None, ("GF", w1) if w1 else ("HP", w2) if w2 else None)
    return Report([Check("T1", t1.ok, t1.witness), Check("T2", t2.ok, t2.witness), t3])


def axioms_b(A: MeetSemilattice, P, G, F, H) -> Report:
    """Equational form: monotonicity, (b1) mixing, (b2) units, (b3) counits."""
    mono = Check("monotone", True)
    for name, f in zip(OP_NAMES, (P, G, F, H)):
        c = is_monotone(A, A, f)
        if not c:
            mono = Check("monotone", False, (name, c.witness))
            break
    w1, w2 = _mixing(A, G, F), _mixing(A, H, P)
    b1 = Check("b1", w1 is None and w2 is None, ("GF", w1) if w1 else ("HP", w2) if w2 else None)
    b2 = b3 = None
    for x in A.elements:
        if b2 is None and not (A.leq(x, G[P[x]]) and A.leq(x, H[F[x]])):
            b2 = x
        if b3 is None and not (A.leq(P[G[x]], x) and A.leq(F[H[x]], x)):
            b3 = x
    return Report([mono, b1, Check("b2", b2 is None, b2), Check("b3", b3 is None, b3)])


def eslata_report(A: MeetSemilattice, P, G, F, H) -> Report:
    """Both axiom formulations and whether their verdicts agree."""
    t, b = axioms_t(A, P, G, F, H), axioms_b(A, P, G, F, H)
    rep = Report(t + b)
    rep.append(Check("formulations-agree", t.ok == b.ok, (t.ok, b.ok)))
    return rep


def validate_eslata(A: MeetSemilattice, P, G, F, H) -> ESlata:
    """Return the validated E-SLata or raise :class:`AxiomFailed` for the first failing axiom."""
    eslata_report(A, P, G, F, H).raise_for_failure()
    return ESlata(A, tuple(P), tuple(G), tuple(F), tuple(H))


def check_derived_identities(E: ESlata) -> Report:
    """Consequences that hold in every E-SLata; a failure means a bug upstream."""
    A = E.algebra
    m = A.meet
    P, G, F, H = E.ops
    rep = Report()

    def first(pred, pairs=True):
        if pairs:
            for x in A.elements:
                for y in A.elements:
                    if not pred(x, y):
                        return (x, y)
        else:
            for x in A.elements:
                if not pred(x):
                    return x
        return None

    def leq(a, b):
        return A.leq(a, b)

    for name, pred, pairs in (
        ("a-F", lambda x, y: leq(F[m[x][y]], m[F[x]][F[y]]), True),
        ("a-P", lambda x, y: leq(P[m[x][y]], m[P[x]][P[y]]), True),
        ("b-F", lambda x, y: leq(m[x][F[y]], F[m[P[x]][y]]), True),
        ("b-P", lambda x, y: leq(m[x][P[y]], P[m[F[x]][y]]), True),
        ("c-FHF", lambda x: F[H[F[x]]] == F[x], False),
        ("c-PGP", lambda x: P[G[P[x]]] == P[x], False),
        ("c-GPG", lambda x: G[P[G[x]]] == G[x], False),
        ("c-HFH", lambda x: H[F[H[x]]] == H[x], False),
    ):
        w = first(pred, pairs)
        rep.append(Check(name, w is None, w))
    return rep


def _mixed(X: SSpace, first: Multirelation, second: Multirelation, name: str) -> Check:
    """If ``first(x)`` is inside ``L_U`` and ``second(x)`` inside ``L_V``, then
    ``second(x)`` is inside ``L_{U cap V}``."""
    for U in X.closed:
        mU = box_multirel(X, first, U)
        for V in X.closed:
            hyp = mU & box_multirel(X, second, V)
            concl = box_multirel(X, second, U & V, strict=False)
            if hyp & ~concl:
                return Check(name, False, (U, V, (hyp & ~concl).bit_length() - 1))
    return Check(name, True)


def verify_eslata_space(X: SSpace, I1, D1, I2, D2) -> Report:
    rep = Report()
    for tag, (I, D) in (("E1a", (I1, D1)), ("E1b", (I2, D2))):
        sub = verify_slata_space(X, I, D)
        rep.append(Check(tag, sub.ok, [c.name for c in sub.failures] or None))
    if not rep:
        return rep
    rep.append(_mixed(X, D1, I2, "E2"))
    rep.append(_mixed(X, D2, I1, "E3"))
    return rep


def dualize_eslata(E: ESlata) -> ESlataSpace:
    A = E.algebra
    X = dual_space(A)
    return ESlataSpace(X, *(relation_from_map(A, A, f) for f in E.ops))


def algebra_of_eslata_space(sp: ESlataSpace) -> ESlata:
    verify_eslata_space(sp.space, *sp.relations).raise_for_failure()
    A = dual_algebra(sp.space)
    return validate_eslata(A, *(operator_of(sp.space, R) for R in sp.relations))


def round_trip(E: ESlata) -> Check:
    """``beta`` is an isomorphism from ``E`` onto the algebra of its dual space."""
    back = algebra_of_eslata_space(dualize_eslata(E))
    b = beta_index(E.algebra)
    A = E.algebra
    if len(set(b)) != A.size or back.algebra.size != A.size:
        return Check("eslata-round-trip", False, "beta not bijective")
    for x in A.elements:
        for y in A.elements:
            if b[A.meet[x][y]] != back.algebra.meet[b[x]][b[y]]:
                return Check("eslata-round-trip", False, ("meet", x, y))
    for name, f, g in zip(OP_NAMES, E.ops, back.ops):
        for x in A.elements:
            if b[f[x]] != g[b[x]]:
                return Check("eslata-round-trip", False, (name, x))
    return Check("eslata-round-trip", True)


def enumerate_eslatas(A: MeetSemilattice) -> list[ESlata]:
    """All E-SLatas on ``A``: two adjoint pairs filtered by the mixing laws."""
    pairs = enumerate_adjoint_pairs(A)
    out = []
    for P, G in pairs:
        for F, H in pairs:
            if _mixing(A, G, F) is None and _mixing(A, H, P) is None:
                out.append(ESlata(A, P, G, F, H))
    return out


def swapped_variants(E: ESlata) -> list[tuple[str, tuple[Map, Map, Map, Map]]]:
    """Operator tuples with one pair of operators exchanged, skipping no-op swaps."""
    P, G, F, H = E.ops
    out = []
    for name, ops in (
        ("G<->H", (P, H, F, G)),
        ("P<->F", (F, G, P, H)),
        ("P<->G", (G, P, F, H)),
        ("F<->H", (P, G, H, F)),
    ):
        if ops != E.ops:
            out.append((name, ops))
    return out

