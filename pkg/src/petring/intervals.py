"""Subsets of the type-A vertex set {1, ..., n-1} and their run structure.

An ``IndexSet`` is a subset J of {1, ..., n-1} together with its ambient
rank n.  Everything downstream (permutations, ring classes, diagrams) is
indexed by these sets; the run decomposition into maximal consecutive
blocks and the integer ``m_factor`` attached to it are the two workhorse
invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "MAX_RANK",
    "IndexSet",
    "ComponentDecomposition",
    "decompose",
    "m_factor",
    "hessenberg_function",
    "factor_ranks",
    "intersects_dual",
    "dim_xj",
    "codim_omegaj",
    "all_index_sets",
]

# Exhaustive drivers are hopeless beyond this anyway; a fixed cap keeps the
# bit-mask ordering well defined.
MAX_RANK = 32


@dataclass(frozen=True)
class IndexSet:
    """A subset of {1, ..., n-1} with ambient rank n (n-1 vertices)."""

    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_RANK:
            raise ValueError(f"ambient rank must be an integer in [1, {MAX_RANK}], got {self.n!r}")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        for m in self.members:
            if not isinstance(m, int) or not 1 <= m <= self.n - 1:
                raise ValueError(f"member {m!r} outside {{1, ..., {self.n - 1}}}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "IndexSet":
        return cls(n, frozenset(members))

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls(n, frozenset(range(1, n)))

    @classmethod
    def parse(cls, text: str, n: int) -> "IndexSet":
        """Parse the external syntax: ascending comma-separated integers, "-" for the empty set."""
        text = text.strip()
        if text == "-" or text == "":
            return cls(n, frozenset())
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse subset {text!r}") from None
        if parts != sorted(parts) or len(set(parts)) != len(parts):
            raise ValueError(f"subset {text!r} must list distinct integers in ascending order")
        return cls(n, frozenset(parts))

    def format(self) -> str:
        """Inverse of :meth:`parse`."""
        if not self.members:
            return "-"
        return ",".join(str(m) for m in sorted(self.members))

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def mask(self) -> int:
        """Bit mask with bit i-1 set for each member i; the canonical subset order."""
        mask = 0
        for m in self.members:
            mask |= 1 << (m - 1)
        return mask

    def __contains__(self, item: int) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __str__(self) -> str:
        return self.format()

    def _check_same_rank(self, other: "IndexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched ambient ranks: {self.n} vs {other.n}")

    def union(self, other: "IndexSet") -> "IndexSet":
        self._check_same_rank(other)
        return IndexSet(self.n, self.members | other.members)

    def intersection(self, other: "IndexSet") -> "IndexSet":
        self._check_same_rank(other)
        return IndexSet(self.n, self.members & other.members)

    def issubset(self, other: "IndexSet") -> bool:
        self._check_same_rank(other)
        return self.members <= other.members

    __or__ = union
    __and__ = intersection


@dataclass(frozen=True)
class ComponentDecomposition:
    """Maximal consecutive runs (lo, hi) of an IndexSet, in ascending order,
    and the product of factorials of the run lengths."""

    runs: tuple[tuple[int, int], ...]
    m_factor: int


def decompose(J: IndexSet) -> ComponentDecomposition:
    """Split J into maximal runs of consecutive integers."""
    runs: list[tuple[int, int]] = []
    members = J.as_tuple()
    i = 0
    while i < len(members):
        lo = hi = members[i]
        i += 1
        while i < len(members) and members[i] == hi + 1:
            hi = members[i]
            i += 1
        runs.append((lo, hi))
    m = 1
    for lo, hi in runs:
        m *= math.factorial(hi - lo + 1)
    return ComponentDecomposition(tuple(runs), m)


def m_factor(J: IndexSet) -> int:
    """Product of factorials of the run lengths of J; 1 for the empty set."""
    return decompose(J).m_factor


def hessenberg_function(J: IndexSet) -> list[int]:
    """The function h with h(i) = i+1 for i in J and h(i) = i otherwise,
    returned as the list [h(1), ..., h(n)]."""
    return [i + 1 if i in J else i for i in range(1, J.n + 1)]


def factor_ranks(J: IndexSet) -> list[int]:
    """Run lengths plus one: the ranks of the Peterson factors attached to J."""
    return [hi - lo + 2 for lo, hi in decompose(J).runs]


def intersects_dual(J: IndexSet, Jp: IndexSet) -> bool:
    """Whether the degree variety of J meets the dual variety of Jp: true iff Jp is a subset of J."""
    J._check_same_rank(Jp)
    return Jp.members <= J.members


def dim_xj(J: IndexSet) -> int:
    """Complex dimension of the subvariety attached to J."""
    return len(J)


def codim_omegaj(J: IndexSet) -> int:
    """Complex codimension of the dual subvariety attached to J."""
    return len(J)


def all_index_sets(n: int) -> Iterator[IndexSet]:
    """All subsets of {1, ..., n-1} in canonical (bit-mask) order."""
    for mask in range(1 << (n - 1)):
        yield IndexSet(n, frozenset(i + 1 for i in range(n - 1) if mask >> i & 1))
