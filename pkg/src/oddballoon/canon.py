"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine an ordered partition to an
equitable one, pick the first non-singleton cell, individualise each of its
vertices in turn.  Every leaf gives a labelling; the canonical one is the leaf
whose relabelled adjacency rows are lexicographically largest.  Leaves with
equal rows give automorphisms, which are used to skip children in the same
orbit of the point stabiliser of the current path.  Because of that rule the
automorphisms found generate the whole group, so ``Labelling.orbits`` is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    queue = list(splitters)
    while queue:
        w = queue.pop(0)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for key in sorted(groups, reverse=True):
                part = groups[key]
                out.append(part)
                mask = 0
                for v in part:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return cells


def _rows(adj: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    rows = []
    for v in lab:
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _orbits(n: int, gens: Sequence[tuple[int, ...]], fixed: Sequence[int]) -> _UnionFind:
    uf = _UnionFind(n)
    for g in gens:
        if all(g[v] == v for v in fixed):
            for v in range(n):
                uf.union(v, g[v])
    return uf


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]          # order[i] = vertex placed at position i
    rows: tuple[int, ...]           # canonical adjacency rows
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        """Orbit representative (smallest member) of every vertex."""
        n = len(self.order)
        uf = _orbits(n, self.generators, ())
        return [uf.find(v) for v in range(n)]


def canonical_labelling(g: Graph, colors: Sequence[int] | None = None) -> Labelling:
    """Canonical labelling of ``g``, optionally respecting a vertex colouring.

    Vertices are first split by colour (ascending) and then by degree
    (descending), so the last canonical position always holds a vertex of the
    largest colour and, within it, of minimum degree.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return Labelling((), (), ())
    keyf = (lambda v: (colors[v], -g.degree(v))) if colors is not None else (lambda v: -g.degree(v))
    groups: dict = {}
    for v in range(n):
        groups.setdefault(keyf(v), []).append(v)
    cells = [groups[k] for k in sorted(groups)]
    splitters = []
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        splitters.append(m)
    cells = _refine(adj, cells, splitters)

    best_rows: tuple[int, ...] | None = None
    best_lab: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def leaf(lab: list[int]) -> None:
        nonlocal best_rows, best_lab
        rows = _rows(adj, lab)
        if best_rows is None or rows > best_rows:
            best_rows, best_lab = rows, lab
        elif rows == best_rows:
            perm = [0] * n
            for a, b in zip(best_lab, lab):
                perm[a] = b
            gens.append(tuple(perm))

    def search(cells: list[list[int]], path: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf([c[0] for c in cells])
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried:
                uf = _orbits(n, gens, path)
                root = uf.find(v)
                if any(uf.find(u) == root for u in tried):
                    continue
            tried.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = _refine(adj, child, [1 << v])
            search(child, path + [v])

    search(cells, [])
    assert best_rows is not None and best_lab is not None
    return Labelling(tuple(best_lab), best_rows, tuple(gens))


def canonical_form(g: Graph) -> Graph:
    return Graph._trusted(g.n, canonical_labelling(g).rows)


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    from .formats import encode_graph6

    return encode_graph6(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labelling(g).rows == canonical_labelling(h).rows
