"""Seifert genus of the knot of a word, by two independent routes.

Route one (``genus_by_reduction``) rewrites the tail of the run sequence,
shortening the word by one or two runs per step while tracking how much the
genus drops, until one of the two base words ``(1, 2, 1)`` or
``(1, 1, 1, 1)`` (both genus 1) remains.

Route two (``genus_by_seifert``) builds the standard alternating two-row
diagram of the word, applies Seifert's algorithm (orientation-compatible
smoothing of every crossing), counts the resulting circles ``s``, and uses
``g = (1 + c - s) / 2``.

The two routes share no code beyond the word model, which makes their
agreement on exhaustive enumerations a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Sequence

from .words import Word

__all__ = [
    "ReductionCase",
    "Row",
    "TooShort",
    "NotAKnot",
    "ParityViolation",
    "NonPositiveGenus",
    "classify_tail",
    "reduce_once",
    "genus_by_reduction",
    "row_sequence",
    "PlanarDiagram",
    "build_diagram",
    "count_seifert_circles",
    "genus_from_seifert",
    "genus_by_seifert",
]


class TooShort(ValueError):
    """Tail classification needs at least five runs."""


class NotAKnot(RuntimeError):
    """Diagram traces more than one component."""


class ParityViolation(ValueError):
    """Crossing/circle counts with 1 + c - s odd."""


class NonPositiveGenus(ValueError):
    """Crossing/circle counts implying genus < 1."""


class ReductionCase(Enum):
    CASE_1 = "tail (1,1): swap the final three runs, same genus"
    CASE_2A = "tail (2,2) after a single run: flatten, same genus"
    CASE_2B = "tail (2,2) after a double run: flatten, genus drops by 1"
    CASE_3 = "tail (1,2): chop two runs, genus drops by 1"
    CASE_4 = "tail (2,1): chop two runs, same genus"


def classify_tail(w: Word) -> ReductionCase:
    """Classify the reducible tail of a word with at least five runs.

    The case is keyed on ``(eps[c-2], eps[c-1])`` in 1-based indexing (the
    two runs before the final single run), with ``eps[c-3]`` breaking the
    tie for the ``(2, 2)`` tail.
    """
    if w.c < 5:
        raise TooShort(f"need c >= 5 to classify, got c={w.c}")
    e = w.eps
    pair = (e[-3], e[-2])
    if pair == (1, 1):
        return ReductionCase.CASE_1
    if pair == (2, 2):
        return ReductionCase.CASE_2A if e[-4] == 1 else ReductionCase.CASE_2B
    if pair == (1, 2):
        return ReductionCase.CASE_3
    return ReductionCase.CASE_4


def reduce_once(w: Word) -> tuple[Word, int]:
    """One tail-reduction step: returns the shorter word and the genus drop."""
    case = classify_tail(w)
    e = w.eps
    if case is ReductionCase.CASE_1:
        return Word(e[:-3] + (2, 1)), 0
    if case is ReductionCase.CASE_2A:
        return Word(e[:-3] + (1, 1)), 0
    if case is ReductionCase.CASE_2B:
        return Word(e[:-3] + (1, 1)), 1
    if case is ReductionCase.CASE_3:
        return Word(e[:-3] + (1,)), 1
    return Word(e[:-3] + (1,)), 0


def genus_by_reduction(w: Word) -> int:
    """Genus via iterated tail reduction.

    Every intermediate word is revalidated by construction, so an exhaustive
    run over an enumeration also checks that the rewrite rules preserve the
    word model.
    """
    drops = 0
    while w.c >= 5:
        w, drop = reduce_once(w)
        drops += drop
    # Both base words, (1,2,1) and (1,1,1,1), have genus 1.
    return 1 + drops


class Row(IntEnum):
    ROW1 = 1
    ROW2 = 2


def row_sequence(w: Word) -> list[Row]:
    """Row of each run in the two-row alternating diagram.

    Single positive runs and double negative runs sit in row one; single
    negative runs and double positive runs sit in row two.  With positional
    signs that reads: run ``i`` is ROW1 iff (``i`` odd and ``eps_i = 1``) or
    (``i`` even and ``eps_i = 2``).
    """
    rows = []
    for i, e in enumerate(w.eps, start=1):
        odd = i % 2 == 1
        rows.append(Row.ROW1 if odd == (e == 1) else Row.ROW2)
    return rows


# Channel indices of the three horizontal strands of the diagram grid.
TOP, MIDDLE, BOTTOM = 0, 1, 2

Node = tuple[int, int]  # (channel, gap); gaps run 0..c around the crossings
Arc = tuple[Node, Node]


@dataclass(frozen=True)
class PlanarDiagram:
    """Shadow of the two-row diagram: crossings on three channels plus closures.

    Position ``i`` (1-based) holds one crossing joining ``crossed[i-1]``;
    the third channel passes straight through.  ``arcs`` lists every strand
    segment; ``strand_ids[i-1]`` are the indices of the two arcs that cross
    at position ``i``.
    """

    c: int
    crossed: tuple[tuple[int, int], ...]
    arcs: tuple[Arc, ...]
    strand_ids: tuple[tuple[int, int], ...]


def build_diagram(rows: Sequence[Row]) -> PlanarDiagram:
    """Assemble the diagram for a row sequence and verify it is a knot.

    A ROW1 crossing joins the top and middle channels, a ROW2 crossing the
    middle and bottom ones.  At each side the closure joins the middle
    channel to the pass-through channel of the adjacent crossing (always
    the bottom one on the left, row-dependent on the right), and the two
    leftover ends run around the outside.  Several of the non-crossing
    pairings of the six loose ends close a word into a single component,
    but only this one reproduces the diagram the crossing sequence encodes:
    any other choice miscounts circles on half the words.
    """
    if not rows:
        raise ValueError("row sequence must be nonempty")
    if rows[0] != Row.ROW1:
        raise ValueError("first run always sits in row one")
    c = len(rows)
    arcs: list[Arc] = []
    strand_ids: list[tuple[int, int]] = []
    crossed: list[tuple[int, int]] = []
    for i, row in enumerate(rows, start=1):
        a, b = (TOP, MIDDLE) if row == Row.ROW1 else (MIDDLE, BOTTOM)
        passthrough = BOTTOM if row == Row.ROW1 else TOP
        crossed.append((a, b))
        strand_ids.append((len(arcs), len(arcs) + 1))
        arcs.append(((a, i - 1), (b, i)))
        arcs.append(((b, i - 1), (a, i)))
        arcs.append(((passthrough, i - 1), (passthrough, i)))
    right_pass = BOTTOM if rows[-1] == Row.ROW1 else TOP
    right_loose = TOP if rows[-1] == Row.ROW1 else BOTTOM
    arcs.append(((MIDDLE, 0), (BOTTOM, 0)))
    arcs.append(((MIDDLE, c), (right_pass, c)))
    arcs.append(((TOP, 0), (right_loose, c)))
    diagram = PlanarDiagram(c, tuple(crossed), tuple(arcs), tuple(strand_ids))
    _trace(diagram)  # raises NotAKnot when the closure splits into cycles
    return diagram


def _adjacency(d: PlanarDiagram) -> dict[Node, list[int]]:
    adj: dict[Node, list[int]] = {}
    for arc_id, (p, q) in enumerate(d.arcs):
        adj.setdefault(p, []).append(arc_id)
        adj.setdefault(q, []).append(arc_id)
    return adj


def _trace(d: PlanarDiagram) -> dict[int, Arc]:
    """Walk the diagram once around, starting along the left closure arc.

    Returns each arc id mapped to its traversal direction ``(from, to)``.
    Raises NotAKnot unless the walk covers every arc, i.e. the diagram is a
    single closed component.
    """
    adj = _adjacency(d)
    start_arc = len(d.arcs) - 3  # left closure, traversed bottom -> middle
    directed: dict[int, Arc] = {}
    node: Node = (BOTTOM, 0)
    arc_id = start_arc
    while True:
        p, q = d.arcs[arc_id]
        nxt = q if p == node else p
        directed[arc_id] = (node, nxt)
        node = nxt
        a, b = adj[node]
        arc_id = b if a == arc_id else a
        if node == (BOTTOM, 0) and arc_id == start_arc:
            break
    if len(directed) != len(d.arcs):
        raise NotAKnot(f"closure traces {len(directed)} of {len(d.arcs)} arcs")
    return directed


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[Node, Node] = {}

    def find(self, x: Node) -> Node:
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: Node, y: Node) -> None:
        self.parent[self.find(x)] = self.find(y)


def count_seifert_circles(d: PlanarDiagram) -> int:
    """Count the circles left by orientation-compatible smoothing.

    Crossings whose two strands run in the same left-right sense smooth
    horizontally (each strand stays in its channel); antiparallel strands
    smooth into side caps.  Pass-through and closure arcs are kept as is.
    """
    directed = _trace(d)
    uf = _UnionFind()
    strand_arcs = {arc_id for pair in d.strand_ids for arc_id in pair}
    for i in range(1, d.c + 1):
        a, b = d.crossed[i - 1]
        id1, id2 = d.strand_ids[i - 1]
        rightward1 = directed[id1][0][1] == i - 1
        rightward2 = directed[id2][0][1] == i - 1
        if rightward1 == rightward2:
            uf.union((a, i - 1), (a, i))
            uf.union((b, i - 1), (b, i))
        else:
            uf.union((a, i - 1), (b, i - 1))
            uf.union((a, i), (b, i))
    for arc_id, (p, q) in enumerate(d.arcs):
        if arc_id not in strand_arcs:
            uf.union(p, q)
    roots = {uf.find((ch, gap)) for ch in (TOP, MIDDLE, BOTTOM) for gap in range(d.c + 1)}
    return len(roots)


def genus_from_seifert(c: int, s: int) -> int:
    """Genus from crossing count and Seifert circle count."""
    if (1 + c - s) % 2 != 0:
        raise ParityViolation(f"1 + c - s = {1 + c - s} must be even")
    g = (1 + c - s) // 2
    if g < 1:
        raise NonPositiveGenus(f"got genus {g} from c={c}, s={s}")
    return g


def genus_by_seifert(w: Word) -> int:
    """Genus via the diagram route; independent of the reduction route."""
    d = build_diagram(row_sequence(w))
    return genus_from_seifert(w.c, count_seifert_circles(d))
