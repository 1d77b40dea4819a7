"""Whole-corpus invariant checks shared by the CLI and the acceptance tests.

Every function returns plain tallies so callers can print or assert on them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .adjunction import (
    Slata,
    enumerate_adjoint_pairs,
    equational_adjoint_check,
    homomorphisms,
    is_adjoint_pair,
    monotone_maps,
)
from .corpus import corpus
from .filters import beta_table
from .order import MeetSemilattice, is_monotone
from .relations import (
    box,
    compose_star,
    dual_specialization,
    is_meet_relation,
    is_one_to_one,
    relation_from_hom,
)
from .space import (
    beta_index,
    counit_check,
    dual_algebra,
    dual_space,
    relation_from_map,
    verify_ms_space,
    verify_s_space,
    verify_slata_space,
)
from .tense import (
    ESlata,
    dualize_eslata,
    enumerate_eslatas,
    eslata_report,
    round_trip,
    swapped_variants,
    verify_eslata_space,
)
from .vietoris import (
    congruence_from_family,
    enumerate_vietoris_families,
    family_from_congruence,
    is_vietoris_family,
    slata_congruences,
)


@dataclass
class Tally:
    """Counts of checked cases plus the first few failures."""

    name: str
    checked: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)

    def add(self, ok: bool, detail: object = None) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < 5:
                self.examples.append(detail)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: "Tally") -> None:
        self.checked += other.checked
        self.failed += other.failed
        self.examples.extend(other.examples[: 5 - len(self.examples)])

    def line(self) -> str:
        state = "PASS" if self.ok else "FAIL"
        return f"{state} {self.name}: {self.checked - self.failed}/{self.checked}"


def slatas_of(A: MeetSemilattice) -> list[Slata]:
    return [Slata(A, i, d) for i, d in enumerate_adjoint_pairs(A, limit=None)]


def adjointness_equivalence(A: MeetSemilattice) -> Tally:
    """``is_adjoint_pair`` and the equational check agree on every pair of monotone endomaps."""
    t = Tally("adjoint-equivalence")
    maps = list(monotone_maps(A))
    for i in maps:
        for d in maps:
            a = is_adjoint_pair(A, A, i, d).ok
            b = equational_adjoint_check(A, i, d).ok
            t.add(a == b, (A.meet, i, d))
    return t


def is_beta_isomorphism(A: MeetSemilattice) -> bool:
    """``beta`` is a bijective meet- and top-preserving map onto ``S(X(A))``."""
    b = beta_index(A)
    B = dual_algebra(dual_space(A))
    if B.size != A.size or len(set(b)) != A.size or b[A.top] != B.top:
        return False
    return all(b[A.meet[x][y]] == B.meet[b[x]][b[y]] for x in A.elements for y in A.elements)


def operator_unit(A: MeetSemilattice, f: Sequence[int]) -> bool:
    """``beta(f(a)) = m_{R_f}(beta(a))`` for every a."""
    R = relation_from_map(A, A, f)
    bt = beta_table(A)
    for a in A.elements:
        m = 0
        for x, img in enumerate(R.images):
            if all(Z & bt[a] for Z in img):
                m |= 1 << x
        if m != bt[f[a]]:
            return False
    return True


def unit_duality(S: Slata) -> bool:
    """The unit condition for both ``i`` and ``d``."""
    return all(operator_unit(S.algebra, f) for f in S.ops)


def space_axioms(S: Slata) -> list[tuple[str, bool]]:
    A = S.algebra
    X = dual_space(A)
    I, D = relation_from_map(A, A, S.i), relation_from_map(A, A, S.d)
    return [
        ("s-space", verify_s_space(X).ok),
        ("ms-space-i", verify_ms_space(X, I).ok),
        ("ms-space-d", verify_ms_space(X, D).ok),
        ("slata-space", verify_slata_space(X, I, D).ok),
        ("counit", counit_check(X, [I, D]).ok),
    ]


def slata_space_verdict(A: MeetSemilattice, i: Sequence[int], d: Sequence[int]) -> bool:
    X = dual_space(A)
    return verify_slata_space(X, relation_from_map(A, A, i), relation_from_map(A, A, d)).ok


def mutants(S: Slata) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every operator pair differing from ``(i, d)`` in exactly one table entry."""
    n = S.algebra.size
    for which in (0, 1):
        base = list(S.ops[which])
        for a in range(n):
            for v in range(n):
                if v == base[a]:
                    continue
                m = tuple(base[:a] + [v] + base[a + 1:])
                yield (m, S.d) if which == 0 else (S.i, m)


@dataclass
class MutationStats:
    broken: int = 0
    detected: int = 0
    monotone_broken: int = 0
    monotone_detected: int = 0

    @property
    def rate(self) -> float:
        return self.detected / self.broken if self.broken else 1.0

    @property
    def monotone_rate(self) -> float:
        return self.monotone_detected / self.monotone_broken if self.monotone_broken else 1.0

    def line(self, threshold: float) -> str:
        state = "PASS" if self.rate >= threshold else "FAIL"
        return (
            f"{state} mutation-detection: {self.detected}/{self.broken} = {self.rate:.2%}"
            f" (threshold {threshold:.0%}; monotone mutants {self.monotone_detected}/{self.monotone_broken})"
        )


def mutation_analysis(S: Slata, stats: MutationStats, biconditional: Tally) -> None:
    """Tally how often ``verify_slata_space`` rejects one-entry mutants.

    The biconditional is only meaningful for monotone operator tables, since a
    non-monotone table can have the same dual relation as a monotone one.
    """
    A = S.algebra
    for i, d in mutants(S):
        eq = equational_adjoint_check(A, i, d).ok
        sp = slata_space_verdict(A, i, d)
        if not eq:
            stats.broken += 1
            stats.detected += not sp
        mono = is_monotone(A, A, i).ok and is_monotone(A, A, d).ok
        if mono:
            if not eq:
                stats.monotone_broken += 1
                stats.monotone_detected += not sp
            biconditional.add(eq == sp, (A.meet, i, d))


def bijection(S: Slata, gate: int | None) -> Tally:
    """Congruences versus SLata-Vietoris families, with both round trips."""
    t = Tally("congruence-vietoris")
    A = S.algebra
    X = dual_space(A)
    I, D = relation_from_map(A, A, S.i), relation_from_map(A, A, S.d)
    cons = slata_congruences(S)
    fams = enumerate_vietoris_families(A, S.ops, gate)
    t.add(len(cons) == len(fams), ("count", len(cons), len(fams)))
    for theta in cons:
        F = family_from_congruence(A, S.ops, theta)
        t.add(is_vietoris_family(X, I, D, F).ok, ("not-vietoris", theta))
        t.add(congruence_from_family(A, F) == theta, ("round-trip-1", theta))
    for F in fams:
        theta = congruence_from_family(A, F)
        t.add(family_from_congruence(A, S.ops, theta) == F, ("round-trip-2", F))
    return t


def relation_identities(A1: MeetSemilattice, A2: MeetSemilattice, h: Sequence[int]) -> bool:
    """``R_h * (id) = R_h = (id) * R_h`` and ``R_h`` is a meet-relation."""
    R = relation_from_hom(A1, A2, h)
    left = dual_specialization(R.target)
    right = dual_specialization(R.source)
    return (
        is_meet_relation(R).ok
        and compose_star(left, R).images == R.images
        and compose_star(R, right).images == R.images
    )


def onto_iff_one_to_one(A1: MeetSemilattice, A2: MeetSemilattice, h: Sequence[int]) -> bool:
    onto = set(h) == set(A2.elements)
    return onto == is_one_to_one(relation_from_hom(A1, A2, h)).ok


def functor_box(A1: MeetSemilattice, A2: MeetSemilattice, h: Sequence[int]) -> bool:
    """``box_{R_h}(beta_1(a)) = beta_2(h(a))``."""
    R = relation_from_hom(A1, A2, h)
    b1, b2 = beta_table(A1), beta_table(A2)
    return all(box(R, b1[a]) == b2[h[a]] for a in A1.elements)


def hom_graph(algebras: Sequence[MeetSemilattice]) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    return {
        (s, t): list(homomorphisms(algebras[s], algebras[t]))
        for s in range(len(algebras))
        for t in range(len(algebras))
    }


def sampled_composition(
    algebras: Sequence[MeetSemilattice], samples: int, seed: int
) -> tuple[Tally, Tally]:
    """Associativity of ``*`` and ``R_{g o h} = R_h * R_g`` on random composable homomorphisms."""
    rng = random.Random(seed)
    graph = hom_graph(algebras)
    assoc, functor = Tally("star-associativity"), Tally("star-functoriality")
    n = len(algebras)
    while assoc.checked < samples:
        a, b, c, d = (rng.randrange(n) for _ in range(4))
        hs = graph[(a, b)], graph[(b, c)], graph[(c, d)]
        if not all(hs):
            continue
        h, g, k = (rng.choice(x) for x in hs)
        A, B, C, Dd = algebras[a], algebras[b], algebras[c], algebras[d]
        Rh, Rg, Rk = relation_from_hom(A, B, h), relation_from_hom(B, C, g), relation_from_hom(C, Dd, k)
        # R_k : X(D) -> X(C), R_g : X(C) -> X(B), R_h : X(B) -> X(A)
        lhs = compose_star(compose_star(Rh, Rg), Rk)
        rhs = compose_star(Rh, compose_star(Rg, Rk))
        assoc.add(lhs.images == rhs.images, (a, b, c, d, h, g, k))
        gh = tuple(g[h[x]] for x in A.elements)
        functor.add(relation_from_hom(A, C, gh).images == compose_star(Rh, Rg).images, (a, b, c, h, g))
    return assoc, functor


def eslata_duality(eslatas: Iterable[ESlata]) -> tuple[Tally, Tally, Tally]:
    """Round trip, E2/E3 on each dual, and rejection of swapped-operator variants.

    A swapped variant counts as a negative only when it fails the algebraic
    axioms; its relations are then checked against the unswapped dual space.
    """
    rt, mixed, neg = Tally("eslata-round-trip"), Tally("eslata-E2-E3"), Tally("eslata-swapped-negatives")
    for E in eslatas:
        A = E.algebra
        rt.add(round_trip(E).ok, E.ops)
        sp = dualize_eslata(E)
        rep = verify_eslata_space(sp.space, *sp.relations)
        mixed.add(rep.ok, E.ops)
        for name, ops in swapped_variants(E):
            alg_ok = eslata_report(A, *ops).ok
            Rs = [relation_from_map(A, A, f) for f in ops]
            sp_ok = verify_eslata_space(sp.space, *Rs).ok
            if not alg_ok:
                neg.add(not sp_ok, (E.ops, name))
    return rt, mixed, neg


# ---------------------------------------------------------------------------
# corpus-wide drivers, one per acceptance criterion


def corpus_adjointness(max_size: int, min_size: int = 2) -> Tally:
    total = Tally("adjoint-equivalence")
    for A in corpus(max_size, min_size):
        total.merge(adjointness_equivalence(A))
    return total


def corpus_unit_duality(max_size: int, min_size: int = 2) -> tuple[Tally, Tally]:
    """Double-dual isomorphism per algebra and unit duality per SLata."""
    iso, unit = Tally("beta-isomorphism"), Tally("unit-duality")
    for A in corpus(max_size, min_size):
        iso.add(is_beta_isomorphism(A), A.meet)
        for S in slatas_of(A):
            unit.add(unit_duality(S), (A.meet, S.ops))
    return iso, unit


def corpus_space_axioms(max_size: int, min_size: int = 2) -> Tally:
    t = Tally("space-axioms")
    for A in corpus(max_size, min_size):
        for S in slatas_of(A):
            bad = [name for name, ok in space_axioms(S) if not ok]
            t.add(not bad, (A.meet, S.ops, bad))
    return t


def corpus_mutation(max_size: int, min_size: int = 2) -> tuple[MutationStats, Tally]:
    stats, bic = MutationStats(), Tally("slata-space-biconditional")
    for A in corpus(max_size, min_size):
        for S in slatas_of(A):
            mutation_analysis(S, stats, bic)
    return stats, bic


def corpus_bijection(max_size: int, gate: int | None, min_size: int = 2) -> Tally:
    t = Tally("congruence-vietoris")
    for A in corpus(max_size, min_size):
        for S in slatas_of(A):
            t.merge(bijection(S, gate))
    return t


def corpus_relations(max_size: int, samples: int, seed: int, min_size: int = 2) -> list[Tally]:
    """Identity laws and onto/one-to-one on every homomorphism, plus sampled composition."""
    algebras = corpus(max_size, min_size)
    graph = hom_graph(algebras)
    ident, onto = Tally("star-identity"), Tally("onto-iff-one-to-one")
    for (s, t), hs in graph.items():
        for h in hs:
            ident.add(relation_identities(algebras[s], algebras[t], h), (s, t, h))
            onto.add(onto_iff_one_to_one(algebras[s], algebras[t], h), (s, t, h))
    assoc, functor = sampled_composition(algebras, samples, seed)
    return [ident, onto, assoc, functor]


def corpus_eslata(max_size: int, extra: Iterable[ESlata] = (), min_size: int = 2) -> tuple[Tally, Tally, Tally]:
    eslatas = [E for A in corpus(max_size, min_size) for E in enumerate_eslatas(A)]
    return eslata_duality(eslatas + list(extra))
