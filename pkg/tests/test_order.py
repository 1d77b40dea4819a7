import pytest
from hypothesis import given, strategies as st

from slata.fixtures import c2, chain, d4, fig1_algebra, one
from slata.order import (
    MalformedTable,
    MeetSemilattice,
    MissingMeet,
    MissingTop,
    NotAPartialOrder,
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    SizeLimitExceeded,
    TopNotNeutral,
    check_size,
    downset,
    is_monotone,
    members,
    order_from_meet,
    set_key,
    submasks,
    upset,
    validate_semilattice,
)

from strategies import algebras, element, element_set


def test_c2_valid():
    A = validate_semilattice([[0, 0], [0, 1]], 1)
    assert A.size == 2 and A.top == 1 and A.bottom == 0


def test_fig1_meets_from_diagram():
    A = fig1_algebra()
    ix = A.index
    assert A.meet[ix("f")][ix("g")] == ix("d")
    assert A.meet[ix("c")][ix("e")] == ix("0")
    # c and d share the lower cover a
    assert A.meet[ix("c")][ix("d")] == ix("a")
    assert A.top == ix("1") and A.bottom == ix("0")


def test_non_associative_table_reports_triple():
    # x, y, z pairwise incomparable except through inconsistent meets
    table = [
        [0, 2, 0, 0],
        [2, 1, 1, 1],
        [0, 1, 2, 2],
        [0, 1, 2, 3],
    ]
    with pytest.raises(NotAssociative) as err:
        validate_semilattice(table, 3)
    a, b, c = err.value.witness
    m = table
    assert m[m[a][b]][c] != m[a][m[b][c]]


@pytest.mark.parametrize(
    "table, top, exc, witness",
    [
        ([[1, 0], [0, 1]], 1, NotIdempotent, (0,)),
        ([[0, 0], [1, 1]], 1, NotCommutative, (0, 1)),
        ([[0, 0], [0, 1]], 0, TopNotNeutral, (1,)),
    ],
)
def test_law_violations(table, top, exc, witness):
    with pytest.raises(exc) as err:
        validate_semilattice(table, top)
    assert err.value.witness == witness


@pytest.mark.parametrize(
    "table, top",
    [([], 0), ([[0, 0]], 0), ([[0, 5], [5, 1]], 1), ([[0, 0], [0, 1]], 2)],
)
def test_malformed(table, top):
    with pytest.raises(MalformedTable):
        validate_semilattice(table, top)


def test_labels_must_be_unique():
    with pytest.raises(MalformedTable):
        validate_semilattice([[0, 0], [0, 1]], 1, ("x", "x"))


def test_order_from_meet_c2():
    assert order_from_meet(c2()) == {(0, 0), (0, 1), (1, 1)}


def test_from_leq_errors():
    with pytest.raises(NotAPartialOrder):
        MeetSemilattice.from_leq(2, [(0, 1), (1, 0)])
    with pytest.raises(MissingTop):
        MeetSemilattice.from_leq(2, [])
    # two maximal-below-top elements with two incomparable common lower bounds
    with pytest.raises(MissingMeet):
        MeetSemilattice.from_leq(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])


def test_size_limit():
    check_size(chain(3), 3)
    with pytest.raises(SizeLimitExceeded):
        check_size(chain(4), 3)


def test_bitmask_helpers():
    assert members(0b1011) == [0, 1, 3]
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]
    assert sorted([0b11, 0b100, 0b1], key=set_key) == [0b1, 0b100, 0b11]


def test_join_and_bounds():
    A = d4()
    a, b = A.index("a"), A.index("b")
    assert A.join(a, b) == A.index("1")
    assert A.join(A.bottom, a) == a
    assert one().bottom == one().top == 0


@given(algebras())
def test_induced_order_is_partial_order_with_top(A):
    le = order_from_meet(A)
    n = A.size
    assert all((a, a) in le for a in range(n))
    assert all(a == b for a, b in le if (b, a) in le)
    assert all((a, c) in le for a, b in le for b2, c in le if b == b2)
    assert all((a, A.top) in le for a in range(n))


@given(algebras())
def test_round_trip_through_order(A):
    pairs = [(a, b) for a, b in order_from_meet(A)]
    assert MeetSemilattice.from_leq(A.size, pairs) == A


@given(algebras().flatmap(lambda A: st.tuples(st.just(A), element(A), element(A))))
def test_join_is_least_upper_bound(args):
    A, a, b = args
    j = A.join(a, b)
    assert A.leq(a, j) and A.leq(b, j)
    assert all(A.leq(j, c) for c in A.elements if A.leq(a, c) and A.leq(b, c))


@given(algebras().flatmap(lambda A: st.tuples(st.just(A), element_set(A))))
def test_upset_downset(args):
    A, Y = args
    U, D = upset(A, Y), downset(A, Y)
    for x in A.elements:
        assert bool(U >> x & 1) == any(A.leq(y, x) for y in members(Y))
        assert bool(D >> x & 1) == any(A.leq(x, y) for y in members(Y))


@given(algebras(4).flatmap(lambda A: st.tuples(st.just(A), st.lists(element(A), min_size=A.size, max_size=A.size))))
def test_is_monotone_matches_definition(args):
    A, f = args
    expected = all(A.leq(f[a], f[b]) for a in A.elements for b in A.elements if A.leq(a, b))
    chk = is_monotone(A, A, f)
    assert chk.ok == expected
    if not chk.ok:
        a, b = chk.witness
        assert A.leq(a, b) and not A.leq(f[a], f[b])
