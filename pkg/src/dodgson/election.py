"""Ranked-ballot elections and the pairwise tallies everything else consumes.

Candidates are the integers 1..m.  A vote stores a strict ranking in
ascending preference order: ``vote[0]`` is the least preferred candidate and
``vote[-1]`` the most preferred.  (Human-facing ballot files list the most
preferred candidate first; see :mod:`dodgson.ballots`.)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

Vote = tuple[int, ...]


@dataclass(frozen=True)
class Election:
    """An ordered profile of n strict rankings over candidates 1..m.

    Immutable after construction; zero candidates or zero voters are not
    valid elections.
    """

    m: int
    votes: tuple[Vote, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"need at least one candidate, got m={self.m}")
        if not isinstance(self.votes, tuple) or not all(
            isinstance(v, tuple) for v in self.votes
        ):
            object.__setattr__(self, "votes", tuple(tuple(v) for v in self.votes))
        if len(self.votes) < 1:
            raise ValueError("need at least one vote")
        full = frozenset(range(1, self.m + 1))
        for i, vote in enumerate(self.votes):
            if len(vote) != self.m or set(vote) != full:
                raise ValueError(
                    f"vote {i} is not a permutation of 1..{self.m}: {vote!r}"
                )

    @property
    def n(self) -> int:
        return len(self.votes)

    @property
    def candidates(self) -> range:
        return range(1, self.m + 1)

    @cached_property
    def ranks(self) -> np.ndarray:
        """(n, m) array view of the votes; row i lists vote i ascending."""
        arr = np.fromiter(
            (c for vote in self.votes for c in vote), dtype=np.int32, count=self.n * self.m
        ).reshape(self.n, self.m)
        arr.setflags(write=False)
        return arr

    @classmethod
    def from_rows(cls, m: int, rows: Iterable[Sequence[int]]) -> "Election":
        return cls(m, tuple(tuple(int(c) for c in row) for row in rows))


@dataclass(frozen=True)
class DodgsonTriple:
    """An election together with the candidate under consideration."""

    election: Election
    candidate: int

    def __post_init__(self) -> None:
        if not 1 <= self.candidate <= self.election.m:
            raise ValueError(
                f"candidate {self.candidate} out of range 1..{self.election.m}"
            )


@dataclass(frozen=True)
class PairwiseStats:
    """Per-adversary tallies for one candidate c.

    deficit[d] = (#votes preferring d to c) - (#votes preferring c to d);
    negative when c already beats d.  swaps[d] counts the votes in which d
    sits immediately above c, i.e. the votes where a single adjacent swap
    moves one pairwise vote from d to c.
    """

    deficit: dict[int, int]
    swaps: dict[int, int]


def pairwise_stats(triple: DodgsonTriple) -> PairwiseStats:
    """Compute deficits and greedy-swap opportunities in one pass over the votes."""
    e, c = triple.election, triple.candidate
    deficit = {d: 0 for d in e.candidates if d != c}
    swaps = dict.fromkeys(deficit, 0)
    m = e.m
    for vote in e.votes:
        i = 0
        while vote[i] != c:
            deficit[vote[i]] -= 1
            i += 1
        if i + 1 < m:
            swaps[vote[i + 1]] += 1
        for j in range(i + 1, m):
            deficit[vote[j]] += 1
    return PairwiseStats(deficit, swaps)


def condorcet_winner(e: Election) -> Optional[int]:
    """The candidate beating every other in a strict pairwise majority, if any.

    At most one such candidate exists; a single-candidate election wins
    vacuously.
    """
    for c in e.candidates:
        stats = pairwise_stats(DodgsonTriple(e, c))
        if all(z < 0 for z in stats.deficit.values()):
            return c
    return None


def _positions(ranks: np.ndarray) -> np.ndarray:
    # pos[i, c-1] = ascending position of candidate c in vote i
    return np.argsort(ranks, axis=1)


def preference_counts(ranks: np.ndarray) -> np.ndarray:
    """(m, m) matrix P with P[x-1, y-1] = #votes preferring x to y.

    Vectorized equivalent of tallying every pairwise race; chunked so the
    intermediate boolean block stays small for large profiles.
    """
    n, m = ranks.shape
    pos = _positions(ranks)
    out = np.zeros((m, m), dtype=np.int64)
    chunk = max(1, 1_000_000 // (m * m))
    for lo in range(0, n, chunk):
        block = pos[lo : lo + chunk]
        out += (block[:, :, None] > block[:, None, :]).sum(axis=0)
    return out


def adjacency_counts(ranks: np.ndarray) -> np.ndarray:
    """(m, m) matrix A with A[x-1, y-1] = #votes where y sits immediately above x."""
    n, m = ranks.shape
    if m == 1:
        return np.zeros((1, 1), dtype=np.int64)
    # stay in the input's small dtype; codes are < m*m
    codes = (ranks[:, :-1] - 1) * ranks.dtype.type(m) + (ranks[:, 1:] - 1)
    return np.bincount(codes.ravel(), minlength=m * m).reshape(m, m)
