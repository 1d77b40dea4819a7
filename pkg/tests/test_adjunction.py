import pytest
from hypothesis import given, strategies as st

from slata.adjunction import (
    NotAdjoinable,
    NotAnAdjunction,
    Slata,
    enumerate_adjoint_pairs,
    equational_adjoint_check,
    homomorphisms,
    identity_map,
    is_adjoint_pair,
    is_slata_morphism,
    left_adjoint_of,
    monotone_maps,
    right_adjoint_of,
)
from slata.fixtures import c2, c2_constants, chain, d4, fig1_eslata, one, powerset
from slata.order import SizeLimitExceeded, is_monotone, mask_of
from slata.vietoris import slata_congruences, slata_quotient

import oracles
from strategies import algebra_with_map, algebras, monotone_endo, slatas

B = 0b10  # the element {b} of the powerset of {a, b}


def test_identity_is_self_adjoint():
    for A in (c2(), d4(), chain(4)):
        ident = identity_map(A)
        assert is_adjoint_pair(A, A, ident, ident)
        assert right_adjoint_of(A, A, ident) == ident
        assert left_adjoint_of(A, A, ident) == ident


def test_powerset_union_with_b_is_not_a_left_adjoint():
    # S | {b} moves the empty set, and a left adjoint must fix the bottom
    A = powerset(2)
    f = tuple(m | B for m in A.elements)
    g = tuple(m & ~B for m in A.elements)
    chk = is_adjoint_pair(A, A, f, g)
    assert not chk and chk.witness == (0, 0)
    assert not oracles.adjoint_by_definition(A, A, f, g)
    with pytest.raises(NotAdjoinable):
        right_adjoint_of(A, A, f)
    with pytest.raises(NotAdjoinable):
        left_adjoint_of(A, A, g)


def test_powerset_difference_and_union():
    A = powerset(2)
    f = tuple(m & ~B for m in A.elements)
    g = tuple(m | B for m in A.elements)
    assert is_adjoint_pair(A, A, f, g)
    assert right_adjoint_of(A, A, f) == g
    assert left_adjoint_of(A, A, g) == f


def test_direct_image_and_preimage():
    # f[X] <= Y iff X <= f^-1[Y] for a self-map of a three-point set
    A = powerset(3)
    fn = (1, 1, 2)

    def image(m):
        return mask_of(fn[j] for j in range(3) if m >> j & 1)

    def preimage(m):
        return mask_of(j for j in range(3) if m >> fn[j] & 1)

    f = tuple(image(m) for m in A.elements)
    g = tuple(preimage(m) for m in A.elements)
    assert is_adjoint_pair(A, A, f, g)
    assert Slata.make(A, f, g)


def test_c2_const_top_not_left_adjoint_to_identity():
    A = c2()
    chk = is_adjoint_pair(A, A, (1, 1), (0, 1))
    assert not chk and chk.witness == (0, 0)


def test_equational_examples():
    A = c2()
    assert equational_adjoint_check(A, (0, 0), (1, 1))
    for d in oracles.all_maps(2):
        chk = equational_adjoint_check(A, (1, 1), d)
        assert not chk
    E = fig1_eslata()
    assert equational_adjoint_check(E.algebra, E.P, E.G)
    assert equational_adjoint_check(E.algebra, E.F, E.H)


def test_equational_reports_monotonicity():
    # pairs satisfying both inequalities pointwise where a map is not monotone
    A = chain(3)
    found = 0
    for i in oracles.all_maps(3):
        for d in oracles.all_maps(3):
            pointwise = all(A.leq(i[d[a]], a) and A.leq(a, d[i[a]]) for a in A.elements)
            if pointwise and not (is_monotone(A, A, i) and is_monotone(A, A, d)):
                chk = equational_adjoint_check(A, i, d)
                assert not chk and chk.witness[0] in ("monotone-i", "monotone-d")
                assert not is_adjoint_pair(A, A, i, d)
                found += 1
    assert found


def test_meet_with_a_on_d4_matches_map_search():
    A = d4()
    a = A.index("a")
    f = tuple(A.meet[x][a] for x in A.elements)
    brute = [g for g in oracles.all_maps(4) if oracles.adjoint_by_definition(A, A, f, g)]
    assert brute == [right_adjoint_of(A, A, f)]


def test_not_adjoinable():
    A = d4()
    # monotone but does not preserve a join b, so {p : f(p) <= 0} = {0, a, b} has no greatest element
    f = (0, 0, 0, 3)
    brute = [g for g in oracles.all_maps(4) if oracles.adjoint_by_definition(A, A, f, g)]
    assert brute == []
    with pytest.raises(NotAdjoinable) as err:
        right_adjoint_of(A, A, f)
    assert err.value.witness == 0


def test_not_monotone_rejected():
    with pytest.raises(NotAdjoinable):
        right_adjoint_of(c2(), c2(), (1, 0))


def test_left_adjoint_of_const_top():
    assert left_adjoint_of(c2(), c2(), (1, 1)) == (0, 0)


def test_enumerate_examples():
    A = c2()
    assert enumerate_adjoint_pairs(A) == [((0, 0), (1, 1)), ((0, 1), (0, 1))]
    assert enumerate_adjoint_pairs(one()) == [((0,), (0,))]
    with pytest.raises(SizeLimitExceeded):
        enumerate_adjoint_pairs(chain(5), limit=4)


@pytest.mark.parametrize("A", [c2(), d4(), chain(3)], ids=["c2", "d4", "c3"])
def test_enumerate_matches_double_loop(A):
    assert sorted(enumerate_adjoint_pairs(A)) == sorted(oracles.adjoint_pairs(A))


def test_slata_make_validates():
    with pytest.raises(NotAnAdjunction):
        Slata.make(c2(), (1, 1), (0, 1))
    assert Slata.make(c2(), (0, 0), (1, 1)).ops == ((0, 0), (1, 1))


def test_slata_morphism_examples():
    S = c2_constants()
    assert is_slata_morphism(S, S, (0, 1))
    chk = is_slata_morphism(S, S, (1, 1))
    assert not chk and chk.witness == ("i", 0)


def test_quotient_maps_are_morphisms():
    for A in (c2(), d4(), chain(3)):
        for i, d in enumerate_adjoint_pairs(A):
            S = Slata(A, i, d)
            for theta in slata_congruences(S):
                Q, q = slata_quotient(S, theta)
                assert is_slata_morphism(S, Q, q)


def test_homomorphisms_match_filter():
    A, Bd = c2(), d4()
    expected = [h for h in oracles.all_maps(2, 4) if h[A.top] == Bd.top
                and all(h[A.meet[x][y]] == Bd.meet[h[x]][h[y]] for x in A.elements for y in A.elements)]
    assert sorted(homomorphisms(A, Bd)) == sorted(expected)


@given(algebras(4))
def test_monotone_maps_complete(A):
    maps = list(monotone_maps(A))
    assert maps == sorted(maps)
    expected = [f for f in oracles.all_maps(A.size) if is_monotone(A, A, f)]
    assert maps == expected


@given(algebra_with_map(4).flatmap(lambda Af: st.tuples(st.just(Af), monotone_endo(Af[0]))))
def test_adjoint_definitions_agree(args):
    (A, i), d = args
    assert is_adjoint_pair(A, A, i, d).ok == equational_adjoint_check(A, i, d).ok


@given(slatas(5, 2))
def test_adjoint_preservation_laws(S):
    A = S.algebra
    i, d = S.ops
    for a in A.elements:
        for b in A.elements:
            assert d[A.meet[a][b]] == A.meet[d[a]][d[b]]
            assert i[A.join(a, b)] == A.join(i[a], i[b])
    assert d[A.top] == A.top and i[A.bottom] == A.bottom


@given(slatas(5))
def test_triangle_identities_and_uniqueness(S):
    A = S.algebra
    i, d = S.ops
    assert all(i[d[i[a]]] == i[a] and d[i[d[a]]] == d[a] for a in A.elements)
    assert right_adjoint_of(A, A, i) == d
    assert left_adjoint_of(A, A, d) == i
