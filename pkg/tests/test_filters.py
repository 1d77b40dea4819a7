from hypothesis import given, strategies as st

from slata.filters import all_filters, beta, beta_table, generated_filter, irreducible_filters, is_filter
from slata.fixtures import c2, d4, fig1_algebra, one
from slata.order import full_mask, mask_of, members

import oracles
from strategies import algebras, element_set


def labels(A, mask):
    return {A.label(a) for a in members(mask)}


def test_filters_c2_and_d4():
    assert [labels(c2(), F) for F in all_filters(c2())] == [{"1"}, {"0", "1"}]
    A = d4()
    assert [labels(A, F) for F in all_filters(A)] == [{"1"}, {"a", "1"}, {"b", "1"}, {"0", "a", "b", "1"}]


def test_fig1_contains_principal_d():
    A = fig1_algebra()
    assert mask_of(A.index(x) for x in "dfg1") in all_filters(A)


def test_generated_filter_examples():
    A = d4()
    assert labels(A, generated_filter(A, mask_of([A.index("a"), A.index("b")]))) == {"0", "a", "b", "1"}
    assert generated_filter(A, 1 << A.top) == 1 << A.top
    assert generated_filter(A, 0) == 1 << A.top
    B = fig1_algebra()
    assert labels(B, generated_filter(B, mask_of([B.index("f"), B.index("g")]))) == set("dfg1")


def test_irreducible_examples():
    assert [labels(c2(), P) for P in irreducible_filters(c2())] == [{"1"}]
    A = d4()
    assert [labels(A, P) for P in irreducible_filters(A)] == [{"a", "1"}, {"b", "1"}]
    assert irreducible_filters(one()) == ()


def test_fig1_spectrum():
    A = fig1_algebra()
    got = {frozenset(labels(A, P)) for P in irreducible_filters(A)}
    assert got == {frozenset(s) for s in ("cf1", "eg1", "acdfg1", "bdefg1")}


def test_beta_examples():
    A = d4()
    assert beta(A, A.index("0")) == 0
    assert beta(A, A.index("a")) == 0b01
    assert beta(A, A.top) == 0b11


@given(algebras(4))
def test_filters_match_subset_oracle(A):
    assert {frozenset(members(F)) for F in all_filters(A)} == set(oracles.filters(A))
    assert all(is_filter(A, F) for F in all_filters(A))


@given(algebras(4))
def test_irreducible_match_pair_oracle(A):
    assert {frozenset(members(P)) for P in irreducible_filters(A)} == set(oracles.irreducible(A))


@given(algebras())
def test_beta_is_embedding(A):
    bt = beta_table(A)
    assert bt[A.top] == full_mask(len(irreducible_filters(A)))
    assert len(set(bt)) == A.size
    for a in A.elements:
        for b in A.elements:
            assert bt[A.meet[a][b]] == bt[a] & bt[b]


@given(algebras())
def test_proper_filters_are_intersections_of_irreducibles(A):
    spec = irreducible_filters(A)
    full = full_mask(A.size)
    for F in all_filters(A):
        if F == full:
            continue
        acc = full
        for P in spec:
            if F & ~P == 0:
                acc &= P
        assert acc == F


@given(algebras().flatmap(lambda A: st.tuples(st.just(A), element_set(A), element_set(A))))
def test_generated_filter_is_closure(args):
    A, Y, Z = args
    g = generated_filter(A, Y)
    assert Y & ~g == 0
    assert generated_filter(A, g) == g
    if Y & ~Z == 0:
        assert g & ~generated_filter(A, Z) == 0
    # least filter containing Y
    containing = [F for F in all_filters(A) if Y & ~F == 0]
    acc = full_mask(A.size)
    for F in containing:
        acc &= F
    assert acc == g
