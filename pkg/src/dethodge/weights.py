"""Dominant integral weights for general linear groups, as plain int tuples.

A weight of length N is a weakly decreasing tuple of integers; a partition
is a dominant weight with nonnegative entries. Weights carry their length
explicitly: embedding a partition into more variables is an explicit `pad`,
never implicit. Display strips trailing zeros of partitions; equality is
taken on padded forms (see `weights_equal`).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .matrixspace import MatrixSpace


def is_dominant(entries) -> bool:
    """True iff the entries are weakly decreasing."""
    v = tuple(entries)
    if not v:
        raise ValueError("weights have length at least 1")
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def is_partition(entries) -> bool:
    v = tuple(entries)
    return is_dominant(v) and v[-1] >= 0


def check_weight(entries, length: int | None = None) -> tuple[int, ...]:
    """Validate dominance (and optionally the length), returning a tuple."""
    v = tuple(int(x) for x in entries)
    if length is not None and len(v) != length:
        raise ValueError(f"expected a weight of length {length}, got {v}")
    if not is_dominant(v):
        raise ValueError(f"{v} is not weakly decreasing")
    return v


def dual(lam) -> tuple[int, ...]:
    """Highest weight (-lam_N, ..., -lam_1) of the dual representation."""
    lam = check_weight(lam)
    return tuple(-x for x in reversed(lam))


def leq(mu, lam) -> bool:
    """Componentwise partial order: mu_i <= lam_i for all i."""
    mu, lam = tuple(mu), tuple(lam)
    if len(mu) != len(lam):
        raise ValueError("cannot compare weights of different lengths")
    return all(a <= b for a, b in zip(mu, lam))


def pad(lam, length: int) -> tuple[int, ...]:
    """Extend a partition by trailing zeros to the given length."""
    lam = tuple(lam)
    if length < len(lam):
        raise ValueError("pad cannot shorten a weight")
    if length > len(lam) and lam and lam[-1] < 0:
        raise ValueError(f"cannot pad {lam}: negative last entry")
    return lam + (0,) * (length - len(lam))


def strip_zeros(lam) -> tuple[int, ...]:
    """Display form of a partition: trailing zeros removed."""
    lam = tuple(lam)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def weights_equal(a, b) -> bool:
    """Equality after zero-padding to a common length."""
    a, b = tuple(a), tuple(b)
    length = max(len(a), len(b))
    return pad(a, length) == pad(b, length)


def _wp_member(lam, p: int, space: MatrixSpace) -> bool:
    # Core membership test for the rank-p stratum weight support: the head
    # must satisfy lam_p >= p-n (vacuous for p=0) and the tail
    # lam_{p+1} <= p-m (vacuous for p=n). Assumes lam dominant of length n.
    n = space.n
    if p > 0 and lam[p - 1] < p - n:
        return False
    if p < n and lam[p] > p - space.m:
        return False
    return True


def delta_p(p: int, space: MatrixSpace) -> tuple[int, ...]:
    """The distinguished weight ((p-n)^p, (p-m)^(n-p)) of the rank-p stratum."""
    if not 0 <= p <= space.n:
        raise ValueError(f"stratum index p={p} outside 0..{space.n}")
    return ((p - space.n),) * p + ((p - space.m),) * (space.n - p)


def lambda_of_p(lam, p: int, space: MatrixSpace) -> tuple[int, ...]:
    """Embed a length-n weight of the rank-p support into length m:

        (lam_1, ..., lam_p, (p-n)^(m-n), lam_{p+1}+(m-n), ..., lam_n+(m-n))

    The result is dominant exactly when lam belongs to the rank-p weight
    set, which is required. For square spaces the map is the identity.
    """
    lam = check_weight(lam, space.n)
    if not 0 <= p <= space.n:
        raise ValueError(f"stratum index p={p} outside 0..{space.n}")
    if not _wp_member(lam, p, space):
        raise ValueError(f"{lam} is not in the rank-{p} weight set of {space}")
    shift = space.m - space.n
    return lam[:p] + ((p - space.n),) * shift + tuple(x + shift for x in lam[p:])


@dataclass(frozen=True)
class WeightBox:
    """Finite truncation of the dominant weights: all weakly decreasing
    integer tuples of a given length with entries in [-bound, bound].

    Iteration is lexicographic and duplicate-free; the total count is
    comb(2*bound + length, length).
    """

    length: int
    bound: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("box length must be at least 1")
        if self.bound < 0:
            raise ValueError("box bound must be nonnegative")

    @property
    def count(self) -> int:
        return comb(2 * self.bound + self.length, self.length)

    def __iter__(self):
        return enumerate_box(self)


def dominant_tuples(length: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing integer tuples of the given length with
    entries in [lo, hi], in lexicographic order. Length 0 yields the
    empty tuple."""
    if length == 0:
        yield ()
        return

    def rec(prefix, cap):
        if len(prefix) == length:
            yield prefix
            return
        for v in range(lo, cap + 1):
            yield from rec(prefix + (v,), v)

    if lo <= hi:
        yield from rec((), hi)


def enumerate_box(box: WeightBox) -> Iterator[tuple[int, ...]]:
    """Yield the box members in lexicographic order."""
    return dominant_tuples(box.length, -box.bound, box.bound)


def partitions_of(size: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `size` into at most `parts` parts, as zero-padded
    tuples of length `parts`, in decreasing lexicographic order."""
    if size < 0:
        return
    if parts == 0:
        if size == 0:
            yield ()
        return

    def rec(remaining, slots, cap):
        if slots == 1:
            if remaining <= cap:
                yield (remaining,)
            return
        lo = -(-remaining // slots)
        for a in range(min(cap, remaining), lo - 1, -1):
            for rest in rec(remaining - a, slots - 1, a):
                yield (a,) + rest

    yield from rec(size, parts, size)
