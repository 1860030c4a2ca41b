"""Exact classical invariants by exponential search.

Everything here is meant for desk-scale graphs; none of it is polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .graph import Graph, iter_bits


class NotBipartiteError(ValueError):
    pass


def components(g: Graph) -> int:
    return len(g.component_masks())


def matching_number(g: Graph) -> int:
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        # drop vertices with no neighbour left in mask
        live = 0
        for v in iter_bits(mask):
            if adj[v] & mask:
                live |= 1 << v
        if not live:
            return 0
        v = (live & -live).bit_length() - 1
        rest = live & ~(1 << v)
        ub = live.bit_count() // 2
        top = best(rest)
        if top == ub:
            return top
        for u in iter_bits(adj[v] & rest):
            top = max(top, 1 + best(rest & ~(1 << u)))
            if top == ub:
                break
        return top

    return best(g.all_mask)


def vertex_cover_number(g: Graph) -> int:
    """Size of a minimum vertex cover (branch on a max-degree vertex)."""
    adj = g.adj
    best = g.n

    def go(mask: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        pick, deg = -1, 0
        for v in iter_bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > deg:
                pick, deg = v, d
        if deg == 0:
            best = size
            return
        if size + 1 >= best:
            return
        # either the vertex is in the cover, or all its neighbours are
        go(mask & ~(1 << pick), size + 1)
        nbrs = adj[pick] & mask
        go(mask & ~nbrs & ~(1 << pick), size + deg)

    go(g.all_mask, 0)
    return best


def covers_below(g: Graph, bound: int) -> Iterator[int]:
    """Every vertex cover (as a mask) with fewer than ``bound`` vertices.

    Covers are produced in a fixed order; supersets of minimal covers are
    included.
    """
    adj = g.adj
    n = g.n

    def go(v: int, chosen: int, excluded: int) -> Iterator[int]:
        if chosen.bit_count() >= bound:
            return
        if v == n:
            yield chosen
            return
        bit = 1 << v
        if chosen & bit:
            yield from go(v + 1, chosen, excluded)
            return
        # leave v out: all its neighbours must be in
        nbrs = adj[v]
        if not (nbrs & excluded):
            yield from go(v + 1, chosen | nbrs, excluded | bit)
        yield from go(v + 1, chosen | bit, excluded)

    yield from go(0, 0, 0)


def _component_classes(g: Graph) -> list[tuple[int, int]]:
    """Colour classes ``(X, Y)`` per component; raises if not bipartite."""
    color = g.two_coloring()
    if color is None:
        raise NotBipartiteError("graph is not bipartite")
    out = []
    for comp in g.component_masks():
        x = y = 0
        for v in iter_bits(comp):
            if color[v] == 0:
                x |= 1 << v
            else:
                y |= 1 << v
        out.append((x, y))
    return out


@dataclass(frozen=True)
class Bipartition:
    A: frozenset[int]
    B: frozenset[int]

    def min_degree_in_A(self, g: Graph) -> int | None:
        return min((g.degree(v) for v in self.A), default=None)


def _min_deg(g: Graph, mask: int) -> float:
    return min((g.degree(v) for v in iter_bits(mask)), default=float("inf"))


def bipartition(g: Graph) -> Bipartition:
    """The (A, B) split with |A| minimal, then min degree over A minimal.

    Components whose classes differ in size contribute the smaller class to A.
    A tie component contributes the class holding its smallest vertex, except
    that the first tie component able to lower the minimum degree over A to
    its best achievable value is flipped.
    """
    forced = 0
    ties: list[tuple[int, int]] = []
    for x, y in _component_classes(g):
        if x.bit_count() < y.bit_count():
            forced |= x
        elif y.bit_count() < x.bit_count():
            forced |= y
        else:
            ties.append((x, y) if (x & -x) < (y & -y) or not y else (y, x))
    A = forced
    for x, _ in ties:
        A |= x
    target = min(
        [_min_deg(g, forced)] + [min(_min_deg(g, x), _min_deg(g, y)) for x, y in ties]
    )
    if _min_deg(g, A) > target:
        for x, y in ties:
            if _min_deg(g, y) == target:
                A = A & ~x | y
                break
    B = g.all_mask & ~A
    return Bipartition(frozenset(iter_bits(A)), frozenset(iter_bits(B)))


def independent_covering(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """``gamma(g)`` and every independent covering of that size.

    For a connected bipartite graph with an edge the independent coverings are
    exactly its two colour classes, so minimum ones are products of the
    smaller class per component.
    """
    options: list[list[int]] = []
    for x, y in _component_classes(g):
        if x.bit_count() + y.bit_count() == 1:
            continue  # isolated vertex
        sx, sy = x.bit_count(), y.bit_count()
        if sx < sy:
            options.append([x])
        elif sy < sx:
            options.append([y])
        else:
            options.append(sorted([x, y], key=lambda m: m & -m))
    gamma = sum(min(m.bit_count() for m in opt) for opt in options)
    covers = []
    for choice in product(*options):
        mask = 0
        for m in choice:
            mask |= m
        covers.append(frozenset(iter_bits(mask)))
    covers.sort(key=sorted)
    return gamma, covers


def independent_covering_number(g: Graph) -> int:
    return independent_covering(g)[0]
