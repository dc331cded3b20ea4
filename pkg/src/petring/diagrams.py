"""The left-right shading game and its diagram-counted structure constants.

A game for (J, K, L) starts from the shading J | K on the columns of L and
plays one row per element of J & K in increasing order.  In each row the
maximal run {a, ..., b} of consecutively shaded columns containing the
marked element is extended by one darkly-shaded box, either at a-1 (a LEFT
move, weight (b-i+1)/(b-a+2)) or at b+1 (a RIGHT move, weight
(i-a+1)/(b-a+2)); the move is legal only if the target column is available.
A game is successful when every row has moved, which forces the final
shading to be exactly L.  Structure constants are the weight sums scaled by
m_factor(L) / (m_factor(J) * m_factor(K)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import ConsistencyError
from .intervals import IndexSet, m_factor

__all__ = [
    "Move",
    "GameRow",
    "LeftRightDiagram",
    "enumerate_diagrams",
    "weight",
    "structure_constant",
    "expand_all",
    "render_ascii",
]


class Move(str, Enum):
    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class GameRow:
    """One played row: the marked element, the run of shaded columns around
    it before the move, the move direction, the darkly-shaded column it
    added, and the rational weight of the move."""

    element: int
    run: tuple[int, int]
    move: Move
    added_column: int
    row_weight: Fraction


@dataclass(frozen=True)
class LeftRightDiagram:
    """A successful game record.  The diagram's identity is its move
    sequence; two diagrams with the same final shading but different move
    sequences are distinct."""

    n: int
    J: IndexSet
    K: IndexSet
    L: IndexSet
    rows: tuple[GameRow, ...]
    weight: Fraction


def _run(shading: frozenset[int], element: int) -> tuple[int, int]:
    """Maximal set of consecutive shaded integers containing the element.
    Adjacency is by integer value, not grid position: a column missing from
    the grid breaks the run."""
    a = b = element
    while a - 1 in shading:
        a -= 1
    while b + 1 in shading:
        b += 1
    return a, b


def _row_weight(run: tuple[int, int], element: int, move: Move) -> Fraction:
    a, b = run
    if move is Move.LEFT:
        return Fraction(b - element + 1, b - a + 2)
    return Fraction(element - a + 1, b - a + 2)


def _play(
    n: int,
    elements: list[int],
    shading: frozenset[int],
    allowed: frozenset[int],
    rows: list[GameRow],
    results: list[tuple[frozenset[int], tuple[GameRow, ...]]],
) -> None:
    """Depth-first branch over LEFT/RIGHT moves, LEFT first."""
    if len(rows) == len(elements):
        results.append((shading, tuple(rows)))
        return
    element = elements[len(rows)]
    run = _run(shading, element)
    a, b = run
    for move, target in ((Move.LEFT, a - 1), (Move.RIGHT, b + 1)):
        if target in allowed:
            rows.append(GameRow(element, run, move, target, _row_weight(run, element, move)))
            _play(n, elements, shading | {target}, allowed, rows, results)
            rows.pop()


def enumerate_diagrams(J: IndexSet, K: IndexSet, L: IndexSet) -> list[LeftRightDiagram]:
    """All successful games for (J, K, L), in LEFT-before-RIGHT branch
    order.  Triples violating the support or degree condition yield the
    empty list."""
    J._check_same_rank(K)
    J._check_same_rank(L)
    union = J.union(K)
    if not (union.issubset(L) and len(L) == len(J) + len(K)):
        return []
    elements = sorted(J.intersection(K))
    results: list[tuple[frozenset[int], tuple[GameRow, ...]]] = []
    _play(J.n, elements, union.members, L.members - union.members, [], results)
    diagrams = []
    for shading, rows in results:
        assert shading == L.members  # forced: each row adds one new column
        wt = Fraction(1)
        for row in rows:
            wt *= row.row_weight
        diagrams.append(LeftRightDiagram(J.n, J, K, L, rows, wt))
    return diagrams


def weight(P: LeftRightDiagram) -> Fraction:
    """Product of the per-row weights."""
    wt = Fraction(1)
    for row in P.rows:
        wt *= row.row_weight
    return wt


def structure_constant(J: IndexSet, K: IndexSet, L: IndexSet) -> int:
    """The coefficient of the basis class on L in the product of the basis
    classes on J and K, by counting weighted diagrams."""
    diagrams = enumerate_diagrams(J, K, L)
    total = sum((weight(P) for P in diagrams), Fraction(0))
    value = Fraction(m_factor(L), m_factor(J) * m_factor(K)) * total
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            f"diagram count for J={J}, K={K}, L={L} gave {value}, "
            "expected a non-negative integer"
        )
    return int(value)


def expand_all(J: IndexSet, K: IndexSet) -> dict[IndexSet, int]:
    """The full expansion of the product: play the unrestricted game (any
    column in {1, ..., n-1} may be darkly shaded; branches that hit a
    boundary die), group terminal shadings, and scale each group."""
    J._check_same_rank(K)
    n = J.n
    union = J.union(K)
    elements = sorted(J.intersection(K))
    results: list[tuple[frozenset[int], tuple[GameRow, ...]]] = []
    allowed = frozenset(range(1, n)) - union.members
    _play(n, elements, union.members, allowed, [], results)
    sums: dict[frozenset[int], Fraction] = {}
    for shading, rows in results:
        wt = Fraction(1)
        for row in rows:
            wt *= row.row_weight
        sums[shading] = sums.get(shading, Fraction(0)) + wt
    out: dict[IndexSet, int] = {}
    scale = Fraction(1, m_factor(J) * m_factor(K))
    for shading, total in sums.items():
        L = IndexSet(n, shading)
        value = m_factor(L) * scale * total
        if value.denominator != 1 or value < 0:
            raise ConsistencyError(
                f"diagram expansion for J={J}, K={K}, L={L} gave {value}, "
                "expected a non-negative integer"
            )
        if value:
            out[L] = int(value)
    return out


def render_ascii(P: LeftRightDiagram) -> str:
    """Fixed-width text rendering: a header of the column numbers of L, the
    initial shading row, then one row per game move with the marked box as
    'x', the added dark box as '*', light shading as '#', and the move tag
    and weight on the right."""
    columns = P.L.as_tuple()
    width = max((len(str(c)) for c in columns), default=1) + 2
    label_width = max([3] + [len(str(r.element)) for r in P.rows])

    def cell(text: str) -> str:
        return text.rjust(width)

    lines = []
    lines.append(" " * label_width + " |" + "".join(cell(str(c)) for c in columns) + " |")
    shading = P.J.union(P.K).members
    lines.append(
        " " * label_width
        + " |"
        + "".join(cell("#" if c in shading else "") for c in columns)
        + " |"
    )
    for row in P.rows:
        shading = shading | {row.added_column}
        cells = []
        for c in columns:
            if c == row.added_column:
                cells.append(cell("*"))
            elif c == row.element:
                cells.append(cell("x"))
            elif c in shading:
                cells.append(cell("#"))
            else:
                cells.append(cell(""))
        lines.append(
            str(row.element).rjust(label_width)
            + " |"
            + "".join(cells)
            + f" | ({row.move.value}) {row.row_weight}"
        )
    return "\n".join(lines)
