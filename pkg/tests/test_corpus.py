import pytest

from slata.corpus import canonical_form, corpus, semilattices
from slata.order import validate_semilattice

import oracles

LABELED = {1: 1, 2: 2, 3: 6, 4: 36, 5: 380}
UNLABELED = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}


@pytest.mark.parametrize("n, count", LABELED.items())
def test_labeled_counts(n, count):
    assert len(semilattices(n)) == count


@pytest.mark.parametrize("n, count", UNLABELED.items())
def test_unlabeled_counts(n, count):
    assert len(semilattices(n, labeled=False)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_labeled_matches_relation_scan(n):
    assert {A.meet for A in semilattices(n)} == oracles.labeled_semilattices(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_members_are_valid_and_classes_cover(n):
    labeled = semilattices(n)
    for A in labeled:
        validate_semilattice(A.meet, A.top)
    classes = {canonical_form(A) for A in labeled}
    assert classes == {canonical_form(A) for A in semilattices(n, labeled=False)}


def test_unlabeled_representatives_are_pairwise_non_isomorphic():
    reps = semilattices(4, labeled=False)
    for k, A in enumerate(reps):
        for B in reps[k + 1:]:
            assert oracles.isomorphism(A, B) is None


def test_corpus_order_is_deterministic():
    first = [(A.meet, A.top) for A in corpus(4)]
    semilattices.cache_clear()
    assert [(A.meet, A.top) for A in corpus(4)] == first
    assert [A.size for A in corpus(4, 2)] == sorted(A.size for A in corpus(4, 2))
    assert min(A.size for A in corpus(4, 2)) == 2
