import pytest
from hypothesis import strategies as st

from dodgson import Election

# Worked examples used across test modules.  Votes are ascending
# (least preferred first); candidates a,b,c,d are 1,2,3,4.


@pytest.fixture(scope="session")
def sixty_forty():
    # 60 votes a<b<c<d, 40 votes c<d<a<b; d is the Condorcet winner
    return Election(4, tuple([(1, 2, 3, 4)] * 60 + [(3, 4, 1, 2)] * 40))


@pytest.fixture(scope="session")
def five_type():
    # 100 votes in five blocks of 20; no Condorcet winner, a's exact score 22
    return Election(
        4,
        tuple(
            [(1, 2, 3, 4)] * 20
            + [(2, 3, 4, 1)] * 20
            + [(3, 4, 1, 2)] * 20
            + [(2, 1, 4, 3)] * 20
            + [(4, 1, 2, 3)] * 20
        ),
    )


@pytest.fixture(scope="session")
def cycle():
    # the classic three-way tie; every candidate has Dodgson score 1
    return Election(3, ((1, 2, 3), (2, 3, 1), (3, 1, 2)))


def elections(max_m=5, max_n=8):
    """Strategy: valid elections with small m, n."""
    return st.integers(1, max_m).flatmap(
        lambda m: st.lists(
            st.permutations(tuple(range(1, m + 1))),
            min_size=1,
            max_size=max_n,
        ).map(lambda votes: Election(m, tuple(tuple(v) for v in votes)))
    )


def triples(max_m=5, max_n=8):
    """Strategy: (election, candidate) pairs as plain tuples."""
    return elections(max_m, max_n).flatmap(
        lambda e: st.integers(1, e.m).map(lambda c: (e, c))
    )
