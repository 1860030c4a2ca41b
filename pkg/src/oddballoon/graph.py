"""Small simple graphs stored as bit rows.

A ``Graph`` holds ``n`` and a tuple of ``n`` integers; bit ``j`` of ``adj[i]``
is set iff ``ij`` is an edge.  Graphs are immutable and hashable, so they can
be shared freely between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 128


class CapacityError(ValueError):
    """Raised when a construction would exceed ``MAX_ORDER`` vertices."""


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"negative order {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row >> i & 1:
                raise ValueError(f"row {i} has out-of-range bits or a loop")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at {i},{j}")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a symmetric loop-free row set
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    # -- basic queries ------------------------------------------------------

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if not row]

    # -- derived graphs -----------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("duplicate vertices")
        edges = [
            (pos[u], pos[v])
            for u in vertices
            for v in iter_bits(self.adj[u])
            if v in pos and pos[u] < pos[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def remove_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def without_isolated(self) -> Graph:
        return self.induced([v for v in range(self.n) if self.adj[v]])

    # -- structure ----------------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex masks of connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def two_coloring(self) -> list[int] | None:
        """Proper 2-colouring (smallest vertex of each component gets 0), or None."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in iter_bits(self.adj[v]):
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def is_cover(self, mask: int) -> bool:
        rest = self.all_mask & ~mask
        return all(not (self.adj[v] & rest) for v in iter_bits(rest))


# -- combining graphs -------------------------------------------------------


def disjoint_union(*graphs: Graph) -> Graph:
    """Union of vertex-disjoint copies; ids of earlier graphs come first."""
    n = sum(g.n for g in graphs)
    _check_order(n)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph._trusted(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """``g`` joined to ``h``: the union plus every edge between the two parts."""
    n = g.n + h.n
    _check_order(n)
    low = g.all_mask
    high = h.all_mask << g.n
    rows = [row | high for row in g.adj]
    rows += [(row << g.n) | low for row in h.adj]
    return Graph._trusted(n, tuple(rows))


def copies(g: Graph, k: int) -> Graph:
    return disjoint_union(*([g] * k)) if k else Graph.empty(0)


# -- named graphs -----------------------------------------------------------
#
# Labelling conventions:
#   path(n)        0-1-2-...-(n-1)
#   cycle(n)       path plus edge (n-1, 0)
#   star(a)        centre 0, leaves 1..a
#   complete(n)    K_n on 0..n-1
#   complete_multipartite(i1,...,ip)   parts are consecutive id blocks
#   complete_bipartite(a, b)           = complete_multipartite(a, b)
#   independent(n) I_n
#   turan(p, n)    complete_multipartite with sizes as equal as possible,
#                  larger parts first


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path order must be >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle order must be >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(a: int) -> Graph:
    if a < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(a + 1, [(0, i) for i in range(1, a + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph order must be >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def independent(n: int) -> Graph:
    return Graph.empty(n)


def complete_multipartite(*sizes: int) -> Graph:
    if not sizes or any(s < 0 for s in sizes):
        raise ValueError("part sizes must be non-negative and non-empty")
    n = sum(sizes)
    _check_order(n)
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    return Graph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    )


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def turan_part_sizes(p: int, n: int) -> list[int]:
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan(p: int, n: int) -> Graph:
    if p < 1 or n < 0:
        raise ValueError("turan(p, n) needs p >= 1, n >= 0")
    return complete_multipartite(*turan_part_sizes(p, n))


_NAMED = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "independent": (independent, 1),
    "turan": (turan, 2),
}


def make_named(kind: str, params: Sequence[int]) -> Graph:
    try:
        fn, arity = _NAMED[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}") from None
    if arity is not None and len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if kind == "complete_multipartite" and any(p < 1 for p in params):
        raise ValueError("part sizes must be positive")
    return fn(*params)
