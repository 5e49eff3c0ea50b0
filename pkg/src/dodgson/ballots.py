"""Human-readable ballot files.

Format::

    m n
    names: alice,bob,carol      (optional)
    <ballot>                    (n lines, comma separated, most preferred first)

Candidates may be written as 1-based indices or as names.  With a ``names:``
header, index i belongs to the i-th declared name.  Without one, a file whose
first ballot is all integers is read as indices; otherwise every token is a
name and indices are assigned in order of first appearance.  Blank lines and
``#`` comments are ignored.

Internally votes are stored in ascending preference order, so ballot lines
are reversed on ingest and on output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .election import Election


class BallotParseError(ValueError):
    """Malformed ballot text; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class BallotFile:
    """A parsed election plus the display label of each candidate index."""

    election: Election
    labels: tuple[str, ...]

    def label_of(self, candidate: int) -> str:
        return self.labels[candidate - 1]

    def candidate_of(self, token: str) -> int:
        """Resolve a user-supplied candidate (label or 1-based index)."""
        token = token.strip()
        if token in self.labels:
            return self.labels.index(token) + 1
        try:
            c = int(token)
        except ValueError:
            raise ValueError(f"unknown candidate {token!r}") from None
        if not 1 <= c <= self.election.m:
            raise ValueError(f"candidate index {c} out of range 1..{self.election.m}")
        return c


def _numbered_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def parse_ballots(text: str) -> BallotFile:
    """Parse ballot text into an Election plus candidate labels."""
    lines = _numbered_lines(text)
    if not lines:
        raise BallotParseError(1, "empty ballot file")

    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise BallotParseError(no, f"expected header 'm n', got {header!r}")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise BallotParseError(no, f"expected header 'm n', got {header!r}") from None
    if m < 1 or n < 1:
        raise BallotParseError(no, f"need m >= 1 and n >= 1, got m={m}, n={n}")

    body = lines[1:]
    names: Optional[dict[str, int]] = None
    if body and body[0][1].lower().startswith("names:"):
        no, line = body[0]
        tokens = [t.strip() for t in line.split(":", 1)[1].split(",")]
        if len(tokens) != m or any(not t for t in tokens):
            raise BallotParseError(no, f"names header must declare exactly {m} names")
        if len(set(tokens)) != m:
            raise BallotParseError(no, "duplicate candidate name")
        names = {t: i + 1 for i, t in enumerate(tokens)}
        body = body[1:]

    if len(body) != n:
        where = body[n][0] if len(body) > n else lines[-1][0]
        raise BallotParseError(where, f"expected {n} ballot lines, got {len(body)}")

    rows = [(no, [t.strip() for t in line.split(",")]) for no, line in body]
    for no, tokens in rows:
        if len(tokens) != m or any(not t for t in tokens):
            raise BallotParseError(no, f"expected {m} comma-separated entries")

    if names is None and all(_is_int(t) for t in rows[0][1]):
        resolve = None  # integer indices
    elif names is None:
        resolve = {}
        for _, tokens in rows:  # first-appearance order, most preferred first
            for t in tokens:
                if t not in resolve:
                    if len(resolve) == m:
                        break
                    resolve[t] = len(resolve) + 1
    else:
        resolve = names

    votes = []
    labels: tuple[str, ...]
    for no, tokens in rows:
        ranking = []
        for t in tokens:
            if resolve is None:
                if not _is_int(t) or not 1 <= int(t) <= m:
                    raise BallotParseError(no, f"candidate index {t!r} out of range 1..{m}")
                ranking.append(int(t))
            else:
                if t not in resolve:
                    raise BallotParseError(no, f"unknown candidate {t!r}")
                ranking.append(resolve[t])
        if len(set(ranking)) != m:
            raise BallotParseError(no, f"ballot is not a strict ranking of all {m} candidates")
        votes.append(tuple(reversed(ranking)))  # store ascending

    if resolve is None:
        labels = tuple(str(i) for i in range(1, m + 1))
    else:
        by_index = {i: t for t, i in resolve.items()}
        labels = tuple(by_index[i] for i in range(1, m + 1))
    return BallotFile(Election(m, tuple(votes)), labels)


def format_ballots(e: Election, labels: Optional[Sequence[str]] = None) -> str:
    """Canonical text for an election: header, optional names, ballots."""
    out = [f"{e.m} {e.n}"]
    if labels is not None and tuple(labels) != tuple(str(i) for i in range(1, e.m + 1)):
        if len(labels) != e.m:
            raise ValueError(f"need {e.m} labels, got {len(labels)}")
        out.append("names: " + ",".join(labels))
        name = lambda c: labels[c - 1]
    else:
        name = str
    for vote in e.votes:
        out.append(",".join(name(c) for c in reversed(vote)))
    return "\n".join(out) + "\n"


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True
