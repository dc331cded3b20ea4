"""Permutations of S_n in one-line notation, as plain tuples.

Composition convention: ``compose(u, v)`` is the map p -> u(v(p)).  The
one-line form of a product of simple transpositions depends on this choice,
so it is fixed here once and used everywhere.
"""

from __future__ import annotations

import bisect

from .intervals import IndexSet, decompose

__all__ = [
    "Permutation",
    "identity",
    "simple_transposition",
    "compose",
    "inverse",
    "length",
    "longest_wj",
    "subword_vj",
    "bruhat_leq",
    "peterson_fixed_points",
    "format_one_line",
]

# One-line notation: w[p-1] == w(p), a permutation of {1, ..., n}.
Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple_transposition(n: int, i: int) -> Permutation:
    """The transposition s_i swapping i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} undefined in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(uv)(p) = u(v(p))."""
    if len(u) != len(v):
        raise ValueError("mismatched degrees")
    return tuple(u[v[p] - 1] for p in range(len(u)))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for p, q in enumerate(w, start=1):
        inv[q - 1] = p
    return tuple(inv)


def length(w: Permutation) -> int:
    """Number of inversions of w."""
    return sum(
        1
        for p in range(len(w))
        for q in range(p + 1, len(w))
        if w[p] > w[q]
    )


def longest_wj(J: IndexSet) -> Permutation:
    """Longest element of the Young subgroup generated by {s_i : i in J}:
    each run (lo, hi) of J reverses positions lo..hi+1.  An involution."""
    w = list(range(1, J.n + 1))
    for lo, hi in decompose(J).runs:
        w[lo - 1 : hi + 1] = reversed(w[lo - 1 : hi + 1])
    return tuple(w)


def subword_vj(J: IndexSet) -> Permutation:
    """Product of the simple transpositions s_j over j in J, in increasing
    order; the result has length |J| (the word is reduced)."""
    w = identity(J.n)
    for j in J:
        w = compose(w, simple_transposition(J.n, j))
    return w


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat-order comparison u <= v by the rank criterion: for every k,
    the ascending sort of {u(1), ..., u(k)} is entrywise <= that of
    {v(1), ..., v(k)}."""
    if len(u) != len(v):
        raise ValueError("mismatched degrees")
    n = len(u)
    u_pref: list[int] = []
    v_pref: list[int] = []
    for k in range(n - 1):
        bisect.insort(u_pref, u[k])
        bisect.insort(v_pref, v[k])
        if any(a > b for a, b in zip(u_pref, v_pref)):
            return False
    return True


def peterson_fixed_points(n: int) -> list[Permutation]:
    """The 2^(n-1) block-reversal involutions w_J, one per subset J of
    {1, ..., n-1}, in canonical subset order."""
    from .intervals import all_index_sets

    return [longest_wj(J) for J in all_index_sets(n)]


def format_one_line(w: Permutation) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"
