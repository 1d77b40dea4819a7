"""Hypothesis strategies over the labeled corpus."""
from hypothesis import strategies as st

from slata.adjunction import enumerate_adjoint_pairs, monotone_maps, Slata
from slata.corpus import corpus

SMALL = corpus(4)
MEDIUM = corpus(5)


def algebras(max_size: int = 5, min_size: int = 1):
    pool = [A for A in (MEDIUM if max_size == 5 else corpus(max_size)) if A.size >= min_size]
    return st.sampled_from(pool)


def monotone_endo(A):
    return st.sampled_from(list(monotone_maps(A)))


def algebra_with_map(max_size: int = 4):
    return algebras(max_size).flatmap(lambda A: st.tuples(st.just(A), monotone_endo(A)))


def slatas(max_size: int = 4, min_size: int = 1):
    return algebras(max_size, min_size).flatmap(
        lambda A: st.sampled_from([Slata(A, i, d) for i, d in enumerate_adjoint_pairs(A)])
    )


def element(A):
    return st.integers(0, A.size - 1)


def element_set(A):
    return st.integers(0, (1 << A.size) - 1)
