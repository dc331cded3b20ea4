"""Independent verification engine based on the quadratic relations.

Arbitrary monomials in the degree-two generators are reduced to rational
combinations of square-free monomials by exact Gaussian elimination over the
span of the relations

    g_i * (2*g_i - g_{i-1} - g_{i+1}) = 0,   1 <= i <= n-1,

with the boundary convention g_0 = g_n = 0, multiplied by every monomial of
complementary degree.  No run-rule rewriting is used anywhere in this
module, so its structure constants are an independent cross-check of the
rewrite engine.

Elimination is exact (integer rows with content normalization) and memoized
per (n, degree): the reduced matrix is the expensive object, not the query.
"""

from __future__ import annotations

import functools
import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import PresentationError
from .intervals import IndexSet, m_factor

__all__ = [
    "Monomial",
    "RelationMatrix",
    "relation_rows",
    "normal_form",
    "quotient_dimension",
    "structure_constants_linalg",
]

# A monomial of rank n is its exponent tuple of length n-1 (entry i-1 is the
# multiplicity of generator i).
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    """A monomial in the generators, as an exponent tuple."""

    n: int
    exponents: Exponents

    def __post_init__(self) -> None:
        if len(self.exponents) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} exponents, got {len(self.exponents)}")
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @classmethod
    def from_multiset(cls, n: int, indices: dict[int, int] | list[int]) -> "Monomial":
        exps = [0] * (n - 1)
        if isinstance(indices, dict):
            items = indices.items()
        else:
            items = [(i, 1) for i in indices]
        for i, mult in items:
            if not 1 <= i <= n - 1:
                raise ValueError(f"generator index {i} out of range for rank {n}")
            exps[i - 1] += mult
        return cls(n, tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self.exponents)


def _monomial_exponents(n: int, d: int) -> list[Exponents]:
    """All exponent tuples of length n-1 summing to d, in lexicographic order."""
    if n - 1 == 0:
        return [()] if d == 0 else []
    # stars and bars via combinations of bar positions, emitted in lex order
    out: list[Exponents] = []
    for bars in combinations(range(d + n - 2), n - 2):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev - 1)
        out.append(tuple(exps))
    out.sort()
    return out


def _columns(n: int, d: int) -> tuple[list[Exponents], dict[Exponents, int]]:
    """Degree-d monomials ordered with non-square-free ones first, each block
    in a fixed lexicographic order."""
    monos = _monomial_exponents(n, d)
    non_sf = [m for m in monos if any(e > 1 for e in m)]
    sf = [m for m in monos if all(e <= 1 for e in m)]
    cols = non_sf + sf
    return cols, {m: idx for idx, m in enumerate(cols)}


@dataclass(frozen=True)
class RelationMatrix:
    """Sparse relation rows over the degree-d monomial columns."""

    n: int
    degree: int
    columns: tuple[Exponents, ...]
    rows: tuple[dict[int, int], ...]
    num_non_square_free: int


def relation_rows(n: int, d: int) -> RelationMatrix:
    """One row per (generator i, degree-(d-2) monomial M): the expansion of
    M * g_i * (2*g_i - g_{i-1} - g_{i+1}) with boundary terms dropped."""
    if d < 2:
        raise ValueError("relations exist only in degree >= 2")
    cols, col_index = _columns(n, d)
    rows: list[dict[int, int]] = []
    for i in range(1, n):
        for M in _monomial_exponents(n, d - 2):
            exps = list(M)
            exps[i - 1] += 2
            row = {col_index[tuple(exps)]: 2}
            exps[i - 1] -= 1
            if i - 1 >= 1:
                exps[i - 2] += 1
                row[col_index[tuple(exps)]] = row.get(col_index[tuple(exps)], 0) - 1
                exps[i - 2] -= 1
            if i + 1 <= n - 1:
                exps[i] += 1
                key = col_index[tuple(exps)]
                row[key] = row.get(key, 0) - 1
                exps[i] -= 1
            rows.append({c: v for c, v in row.items() if v})
    num_non_sf = sum(1 for m in cols if any(e > 1 for e in m))
    return RelationMatrix(n, d, tuple(cols), tuple(rows), num_non_sf)


def _normalize(row: dict[int, int], lead: int) -> dict[int, int]:
    """Divide by the content and make the leading entry positive."""
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
    if row[lead] < 0:
        g = -g
    return {c: v // g for c, v in row.items()}


def _reduce_row(
    row: dict[int, int],
    pivots: dict[int, dict[int, int]],
    stop_at_new_lead: bool,
) -> tuple[dict[int, int], int, int]:
    """Eliminate pivot columns from an integer row, smallest column first.

    Returns (row, denominator, lead).  The row is scaled by the pivot leading
    coefficients as eliminations are applied; ``denominator`` tracks the
    accumulated scale so row/denominator is the exact reduced vector.  If
    ``stop_at_new_lead`` is true, reduction stops at the first leading column
    with no pivot (that column is returned as ``lead``); otherwise every
    pivot column is eliminated and ``lead`` is -1.
    """
    denom = 1
    heap = list(row)
    heapq.heapify(heap)
    queued = set(row)
    while heap:
        c = heapq.heappop(heap)
        queued.discard(c)
        v = row.get(c, 0)
        if not v:
            row.pop(c, None)
            continue
        p = pivots.get(c)
        if p is None:
            if stop_at_new_lead:
                return row, denom, c
            continue
        pc = p[c]
        if pc != 1:
            for col in row:
                row[col] *= pc
            denom *= pc
        for col, pv in p.items():
            nv = row.get(col, 0) - v * pv
            if nv:
                row[col] = nv
                if col > c and col not in queued:
                    heapq.heappush(heap, col)
                    queued.add(col)
            else:
                row.pop(col, None)
        # keep entries small: strip the common content
        g = denom
        for val in row.values():
            g = math.gcd(g, val)
            if g == 1:
                break
        if g > 1:
            denom //= g
            for col in list(row):
                row[col] //= g
    return row, denom, -1


@functools.lru_cache(maxsize=None)
def _reduced_pivots(n: int, d: int) -> tuple[tuple[Exponents, ...], dict[int, dict[int, int]]]:
    """Echelon pivot rows of the degree-d relation matrix, one per pivot
    column, in a deterministic order.  Rows are processed in their generation
    order; each settles on its leading column after reduction by the pivots
    found so far, which prefers the lexicographically smallest eligible
    non-square-free column by the column ordering."""
    if d < 2:
        cols, _ = _columns(n, d)
        return tuple(cols), {}
    matrix = relation_rows(n, d)
    pivots: dict[int, dict[int, int]] = {}
    for row in matrix.rows:
        reduced, _, lead = _reduce_row(dict(row), pivots, stop_at_new_lead=True)
        if lead >= 0:
            pivots[lead] = _normalize(reduced, lead)
    return matrix.columns, pivots


def normal_form(m: Monomial) -> dict[IndexSet, Fraction]:
    """The unique expression of a monomial as a rational combination of
    square-free monomials modulo the relation span."""
    if m.is_square_free:
        support = frozenset(i + 1 for i, e in enumerate(m.exponents) if e)
        return {IndexSet(m.n, support): Fraction(1)}
    cols, pivots = _reduced_pivots(m.n, m.degree)
    col_index = {mono: idx for idx, mono in enumerate(cols)}
    vec, denom, _ = _reduce_row({col_index[m.exponents]: 1}, pivots, stop_at_new_lead=False)
    out: dict[IndexSet, Fraction] = {}
    for c, v in vec.items():
        mono = cols[c]
        if any(e > 1 for e in mono):
            raise PresentationError(
                f"monomial {mono} at rank {m.n}, degree {m.degree} is neither "
                "square-free nor eliminated: the relations are incomplete here"
            )
        support = frozenset(i + 1 for i, e in enumerate(mono) if e)
        out[IndexSet(m.n, support)] = Fraction(v, denom)
    return out


def quotient_dimension(n: int, d: int) -> int:
    """Number of non-pivot columns of the reduced degree-d relation matrix."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    cols, pivots = _reduced_pivots(n, d)
    return len(cols) - len(pivots)


def structure_constants_linalg(J: IndexSet, K: IndexSet) -> dict[IndexSet, Fraction]:
    """Expansion of the product of the basis classes on J and K via normal
    forms, with no use of the run rule."""
    J._check_same_rank(K)
    n = J.n
    if len(J) + len(K) > n - 1:
        # the quotient vanishes above the top degree (its graded dimension is
        # the number of square-free supports, checked by quotient_dimension)
        return {}
    exps = [0] * (n - 1)
    for i in J:
        exps[i - 1] += 1
    for i in K:
        exps[i - 1] += 1
    nf = normal_form(Monomial(n, tuple(exps)))
    scale = Fraction(1, m_factor(J) * m_factor(K))
    return {L: coeff * m_factor(L) * scale for L, coeff in nf.items() if coeff}
