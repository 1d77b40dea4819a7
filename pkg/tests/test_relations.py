import pytest
from hypothesis import given, strategies as st

from slata.adjunction import Slata, homomorphisms, is_slata_morphism
from slata.filters import beta_table, irreducible_filters
from slata.fixtures import c2, c2_constants, chain, d4
from slata.order import members
from slata.relations import (
    MeetRelation,
    box,
    compose_star,
    dual_specialization,
    is_meet_relation,
    is_one_to_one,
    is_slata_relation,
    relation_from_hom,
)
from slata.space import SSpace, dual_space, relation_from_map
from slata.suite import functor_box, onto_iff_one_to_one, relation_identities, slatas_of
from slata.vietoris import enumerate_congruences, quotient

from strategies import SMALL, algebras

HOM_PAIRS = [(A, B, h) for A in SMALL[:12] for B in SMALL[:12] for h in homomorphisms(A, B)]


def test_box_examples():
    X = dual_space(d4())
    full = MeetRelation.from_pairs(X, X, [(x, y) for x in range(X.n) for y in range(X.n)])
    assert box(full, X.full) == X.full
    spec = dual_specialization(X)
    bt = beta_table(d4())
    assert box(spec, bt[d4().index("a")]) == bt[d4().index("a")]


def test_box_of_quotient_relation_on_c2():
    A = c2()
    (theta,) = [t for t in enumerate_congruences(A) if max(t) == 0]
    B, _, q = quotient(A, (), theta)
    R = relation_from_hom(A, B, q)
    b1, b2 = beta_table(A), beta_table(B)
    assert all(box(R, b1[a]) == b2[q[a]] for a in A.elements)


def test_specialization_is_meet_relation():
    for A in (c2(), d4(), chain(4)):
        assert is_meet_relation(dual_specialization(dual_space(A)))


def test_empty_relation_fails_condition_two():
    X = dual_space(d4())
    chk = is_meet_relation(MeetRelation(X, X, (0, 0)))
    # the intersection of all of S(X) is empty, so the empty image is its own hull;
    # a space whose closed sets all share a point shows the failure
    assert chk
    Y = SSpace.make(2, [0, 0b01])
    bad = is_meet_relation(MeetRelation(Y, Y, (0, 0)))
    assert not bad and bad.name == "meet-relation-2"


def test_specialization_on_one_point_is_full():
    X = dual_space(c2())
    assert dual_specialization(X).pairs == {(0, 0)}


def test_identity_hom_gives_specialization():
    for A in (c2(), d4(), chain(3)):
        assert relation_from_hom(A, A, tuple(A.elements)).images == dual_specialization(dual_space(A)).images


def test_relation_from_quotient_matches_definition():
    A = d4()
    ops = ()
    for theta in enumerate_congruences(A, ops):
        B, _, q = quotient(A, ops, theta)
        R = relation_from_hom(A, B, q)
        spec1, spec2 = irreducible_filters(A), irreducible_filters(B)
        for k, P in enumerate(spec2):
            pre = {a for a in A.elements if P >> q[a] & 1}
            expect = {j for j, Q in enumerate(spec1) if pre <= set(members(Q))}
            assert set(members(R.images[k])) == expect
        assert is_one_to_one(R)


def test_constant_top_hom():
    A, B = d4(), c2()
    h = (1, 1, 1, 1)
    R = relation_from_hom(A, B, h)
    # h^-1 of any filter is all of A, contained in no proper filter
    assert R.images == (0,)


def test_embedding_c2_into_d4_not_one_to_one():
    h = (0, 3)
    assert not is_one_to_one(relation_from_hom(c2(), d4(), h))


def test_specialization_is_one_to_one():
    assert is_one_to_one(dual_specialization(dual_space(d4())))


def test_composition_requires_matching_spaces():
    X, Y = dual_space(c2()), dual_space(d4())
    with pytest.raises(ValueError):
        compose_star(dual_specialization(X), dual_specialization(Y))


def test_slata_relation_examples():
    S = c2_constants()
    A = S.algebra
    X = dual_space(A)
    rels = [relation_from_map(A, A, f) for f in S.ops]
    assert is_slata_relation(dual_specialization(X), rels, rels)
    # the identity map preserves meet but does not carry (const 0, const 1) to the identity pair
    T = Slata(A, (0, 1), (0, 1))
    h = (0, 1)
    assert not is_slata_morphism(S, T, h)
    chk = is_slata_relation(
        relation_from_hom(A, A, h),
        rels,
        [relation_from_map(A, A, f) for f in T.ops],
    )
    assert not chk and chk.witness is not None


def test_slata_relation_for_every_morphism():
    for A in SMALL:
        if A.size > 3:
            continue
        Ss = slatas_of(A)
        for S1 in Ss:
            for S2 in Ss:
                for h in homomorphisms(A, A):
                    if is_slata_morphism(S1, S2, h):
                        R = relation_from_hom(A, A, h)
                        assert is_slata_relation(
                            R,
                            [relation_from_map(A, A, f) for f in S2.ops],
                            [relation_from_map(A, A, f) for f in S1.ops],
                        )


@given(st.sampled_from(HOM_PAIRS))
def test_hom_relation_laws(args):
    A, B, h = args
    assert relation_identities(A, B, h)
    assert functor_box(A, B, h)
    assert onto_iff_one_to_one(A, B, h)


@given(st.sampled_from(HOM_PAIRS), st.data())
def test_box_of_star_is_composite_box(args, data):
    A, B, h = args
    nexts = [(C, g) for C in SMALL[:12] for g in homomorphisms(B, C)]
    C, g = data.draw(st.sampled_from(nexts))
    Rh, Rg = relation_from_hom(A, B, h), relation_from_hom(B, C, g)
    comp = compose_star(Rh, Rg)
    for U in Rh.target.closed:
        assert box(comp, U) == box(Rg, box(Rh, U))
    gh = tuple(g[h[a]] for a in A.elements)
    assert relation_from_hom(A, C, gh).images == comp.images


@given(algebras())
def test_star_identity_on_specialization(A):
    X = dual_space(A)
    spec = dual_specialization(X)
    assert compose_star(spec, spec).images == spec.images
