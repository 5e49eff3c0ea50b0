"""Bit-exact binary encoding of (election, candidate) triples.

Layout, with L = ceil(log2(m + 1)) and all fields big-endian:

    1^L 0 | m (L bits) | c (L bits) | n votes, each m fields of L bits

Vote fields list candidates in ascending preference order.  The candidate
count is delimited by the leading run of ones; the number of votes is not
stored and is inferred from the remaining length, which must be a positive
multiple of m*L.  Candidates are their 1-based index, so a zero field is
always invalid and m must be the unique value whose field width is L, making
the encoding canonical (encode and decode are mutually inverse bijections).

Files: ``.dtb`` holds the bits as ASCII '0'/'1' text; ``.dtbz`` packs them
eight per byte after a big-endian 64-bit bit-length header, final byte
zero-padded.
"""

from __future__ import annotations

import struct
from pathlib import Path

from .election import DodgsonTriple, Election

_DTB_WRAP = 64


class BitDecodeError(ValueError):
    """Bit string does not encode a valid triple."""


def field_width(m: int) -> int:
    """L = ceil(log2(m + 1)): bits per candidate field."""
    return m.bit_length()


def encoded_length(m: int, n: int) -> int:
    """Total bits for an m-candidate, n-vote triple: (L+1) + 2L + n*m*L."""
    w = field_width(m)
    return (w + 1) + 2 * w + n * m * w


def encode(triple: DodgsonTriple) -> str:
    """Encode a triple as a '0'/'1' string."""
    e, c = triple.election, triple.candidate
    w = field_width(e.m)
    parts = ["1" * w, "0", f"{e.m:0{w}b}", f"{c:0{w}b}"]
    for vote in e.votes:
        for cand in vote:
            parts.append(f"{cand:0{w}b}")
    return "".join(parts)


def decode(bits: str) -> DodgsonTriple:
    """Exact inverse of :func:`encode`; rejects anything non-canonical."""
    if not bits:
        raise BitDecodeError("empty bit string")
    bad = set(bits) - {"0", "1"}
    if bad:
        raise BitDecodeError(f"not a bit string: unexpected {sorted(bad)!r}")

    w = bits.find("0")
    if w < 0:
        raise BitDecodeError("malformed prefix: no terminating 0 in the leading 1-run")
    if w == 0:
        raise BitDecodeError("malformed prefix: leading 1-run is empty")

    pos = w + 1

    def take(count: int, what: str) -> str:
        nonlocal pos
        if pos + count > len(bits):
            raise BitDecodeError(f"underflow while reading {what}")
        chunk = bits[pos : pos + count]
        pos += count
        return chunk

    m = int(take(w, "candidate count"), 2)
    if m < 1:
        raise BitDecodeError("candidate count is zero")
    if field_width(m) != w:
        raise BitDecodeError(
            f"candidate count {m} inconsistent with {w}-bit header fields"
        )
    c = int(take(w, "chosen candidate"), 2)
    if not 1 <= c <= m:
        raise BitDecodeError(f"chosen candidate {c} out of range 1..{m}")

    rest = len(bits) - pos
    vote_bits = m * w
    if rest == 0:
        raise BitDecodeError("no votes: at least one vote is required")
    if rest % vote_bits != 0:
        raise BitDecodeError(
            f"trailing bits: {rest} vote bits is not a multiple of {vote_bits}"
        )

    full = frozenset(range(1, m + 1))
    votes = []
    for _ in range(rest // vote_bits):
        vote = tuple(int(take(w, "vote field"), 2) for _ in range(m))
        if any(not 1 <= cand <= m for cand in vote):
            raise BitDecodeError(f"vote field out of range 1..{m}: {vote!r}")
        if set(vote) != full:
            raise BitDecodeError(f"vote is not a permutation of 1..{m}: {vote!r}")
        votes.append(vote)
    return DodgsonTriple(Election(m, tuple(votes)), c)


# -- file formats -----------------------------------------------------------


def write_dtb(bits: str, path) -> None:
    """ASCII bit file, wrapped for inspectability."""
    with open(path, "w") as fh:
        for i in range(0, len(bits), _DTB_WRAP):
            fh.write(bits[i : i + _DTB_WRAP] + "\n")


def read_dtb(path) -> str:
    text = Path(path).read_text()
    bits = "".join(text.split())
    bad = set(bits) - {"0", "1"}
    if bad:
        raise BitDecodeError(f"not a bit file: unexpected {sorted(bad)!r}")
    if not bits:
        raise BitDecodeError("empty bit file")
    return bits


def write_dtbz(bits: str, path) -> None:
    """Packed bit file: u64 big-endian bit count, then zero-padded bytes."""
    payload = bytearray(struct.pack(">Q", len(bits)))
    for i in range(0, len(bits), 8):
        payload.append(int(bits[i : i + 8].ljust(8, "0"), 2))
    Path(path).write_bytes(bytes(payload))


def read_dtbz(path) -> str:
    raw = Path(path).read_bytes()
    if len(raw) < 8:
        raise BitDecodeError("underflow: missing 64-bit length header")
    (nbits,) = struct.unpack(">Q", raw[:8])
    body = raw[8:]
    expected = (nbits + 7) // 8
    if len(body) != expected:
        raise BitDecodeError(
            f"trailing bits: payload holds {len(body)} bytes, header implies {expected}"
        )
    bits = "".join(f"{byte:08b}" for byte in body)
    if any(b == "1" for b in bits[nbits:]):
        raise BitDecodeError("trailing bits: nonzero padding in final byte")
    return bits[:nbits]
