"""Ground truth by exhaustive search.

Graphs are generated by canonical augmentation: a child is a parent plus
one new vertex, kept only if the new vertex lies in the automorphism orbit
of the vertex its canonical labelling puts last; isomorphic siblings are
merged.  Each isomorphism class is then reached from exactly one parent, so
subtrees can be handed to separate processes without any shared state.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Callable, Iterator, Sequence

from .canon import canonical_key, canonical_labelling
from .formats import decode_graph6, encode_graph6
from .graph import Graph, complete
from .search import Embedding, SearchStats, find_subgraph


class OrderTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class Constraints:
    max_degree: int | None = None
    bipartite: bool = False
    connected: bool = False
    no_isolated: bool = False
    min_edges: int | None = None
    max_edges: int | None = None

    def hereditary_ok(self, g: Graph, new: int) -> bool:
        if self.max_degree is not None:
            if g.degree(new) > self.max_degree:
                return False
            if any(g.degree(w) > self.max_degree for w in g.neighbors(new)):
                return False
        if self.bipartite and not g.is_bipartite():
            return False
        return True

    def final_ok(self, g: Graph) -> bool:
        if self.connected and not g.is_connected():
            return False
        if self.no_isolated and g.isolated_vertices():
            return False
        if self.min_edges is not None and g.m < self.min_edges:
            return False
        if self.max_edges is not None and g.m > self.max_edges:
            return False
        return True


def order_limit(c: Constraints) -> int:
    return 12 if c.max_degree is not None and c.max_degree <= 2 else 9


def _children(g: Graph, keep: Callable[[Graph, int], bool]) -> list[Graph]:
    """Canonical-augmentation children of a canonical graph ``g``."""
    k = g.n
    out: dict[tuple[int, ...], Graph] = {}
    rows = list(g.adj)
    for s in range(1 << k):
        d = s.bit_count()
        if k and d > min(row.bit_count() + (s >> i & 1) for i, row in enumerate(rows)):
            continue  # the new vertex must have minimum degree
        child_rows = [row | ((s >> i & 1) << k) for i, row in enumerate(rows)] + [s]
        child = Graph._trusted(k + 1, tuple(child_rows))
        if not keep(child, k):
            continue
        lab = canonical_labelling(child)
        orbit = lab.orbits()
        if orbit[k] != orbit[lab.order[-1]]:
            continue
        if lab.rows not in out:
            out[lab.rows] = Graph._trusted(k + 1, lab.rows)
    return [out[r] for r in sorted(out)]


def _expand(args: tuple[Graph, int, Constraints, tuple[Graph, ...]]) -> list[Graph]:
    root, order, cons, forbidden = args
    keep = _keeper(cons, forbidden)
    out = []
    stack = [root]
    while stack:
        g = stack.pop()
        if g.n == order:
            if cons.final_ok(g):
                out.append(g)
            continue
        stack.extend(reversed(_children(g, keep)))
    return out


def _keeper(cons: Constraints, forbidden: Sequence[Graph]) -> Callable[[Graph, int], bool]:
    def keep(g: Graph, new: int) -> bool:
        if not cons.hereditary_ok(g, new):
            return False
        return all(find_subgraph(g, f) is None for f in forbidden if f.n <= g.n)

    return keep


def _generate(order: int, cons: Constraints, forbidden: Sequence[Graph], jobs: int) -> list[Graph]:
    keep = _keeper(cons, forbidden)
    split = min(order, 5)
    frontier = [Graph.empty(0)]
    for _ in range(split):
        frontier = [c for g in frontier for c in _children(g, keep)]
    work = [(g, order, cons, tuple(forbidden)) for g in frontier]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_expand, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        parts = [_expand(w) for w in work]
    graphs = [g for part in parts for g in part]
    graphs.sort(key=canonical_key)
    return graphs


def enumerate_graphs(
    order: int, constraints: Constraints | None = None, jobs: int = 1
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in canonical-key order."""
    cons = constraints or Constraints()
    if order < 0:
        raise ValueError("negative order")
    if order > order_limit(cons):
        raise OrderTooLargeError(
            f"order {order} is beyond the enumeration limit {order_limit(cons)} for {cons}"
        )
    yield from _generate(order, cons, (), jobs)


def count_graphs(order: int, constraints: Constraints | None = None, jobs: int = 1) -> int:
    return sum(1 for _ in enumerate_graphs(order, constraints, jobs))


# -- exact Turan numbers ------------------------------------------------------


@dataclass(frozen=True)
class TuranResult:
    order: int
    value: int
    extremal: tuple[Graph, ...]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "value": self.value,
            "extremal": [encode_graph6(g) for g in self.extremal],
        }


def _cache_path(cache_dir: str | os.PathLike | None) -> Path | None:
    d = cache_dir or os.environ.get("ODDBALLOON_CACHE")
    return Path(d) / "turan_cache.json" if d else None


def _cache_key(order: int, family: Sequence[Graph]) -> str:
    keys = sorted({canonical_key(f).decode() for f in family})
    return f"{order}|" + ",".join(keys)


def turan_oracle(
    order: int,
    family: Sequence[Graph],
    jobs: int = 1,
    cache_dir: str | os.PathLike | None = None,
) -> TuranResult:
    """Exact ex(order, family) and every extremal graph (canonical forms).

    Members with more than ``order`` vertices can never appear and are
    ignored.  Freeness is inherited by induced subgraphs, so the generator
    only ever extends family-free graphs; on top of that a branch is cut as
    soon as even the densest completion could not reach the best value seen.
    """
    fitting = [f for f in family if f.n <= order]
    if not fitting:
        return TuranResult(order, comb(order, 2), (complete(order),) if order else (Graph.empty(0),))
    if any(f.m == 0 for f in fitting):
        raise ValueError("an edgeless member fits, so no graph of this order is free")
    if order > 9:
        raise OrderTooLargeError("exact Turan numbers are limited to order 9")
    path = _cache_path(cache_dir)
    key = _cache_key(order, fitting)
    cache: dict = {}
    if path and path.exists():
        cache = json.loads(path.read_text())
        if key in cache:
            hit = cache[key]
            return TuranResult(order, hit["value"], tuple(decode_graph6(s) for s in hit["extremal"]))

    smaller: list[int] = []
    for j in range(order):
        fit_j = [f for f in fitting if f.n <= j]
        smaller.append(_branch_and_bound(j, fit_j, smaller, 1).value if fit_j else comb(j, 2))
    result = _branch_and_bound(order, fitting, smaller, jobs)

    if path:
        cache = json.loads(path.read_text()) if path.exists() else {}
        cache[key] = {"value": result.value, "extremal": [encode_graph6(g) for g in result.extremal]}
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(cache, sort_keys=True, indent=1))
    return result


def _bb_worker(args) -> tuple[int, list[Graph]]:
    root, order, forbidden, smaller, best = args
    keep = _keeper(Constraints(), forbidden)
    found: list[Graph] = []
    stack = [root]
    while stack:
        g = stack.pop()
        k = g.n
        if k == order:
            if g.m > best:
                best, found = g.m, [g]
            elif g.m == best:
                found.append(g)
            continue
        rest = order - k
        if g.m + rest * k + smaller[rest] < best:
            continue
        stack.extend(_children(g, keep))
    return best, found


def _branch_and_bound(order: int, forbidden: Sequence[Graph], smaller: list[int], jobs: int) -> TuranResult:
    keep = _keeper(Constraints(), forbidden)
    frontier = [Graph.empty(0)]
    for _ in range(min(order, 4)):
        frontier = [c for g in frontier for c in _children(g, keep)]
    best0 = smaller[order - 1] if order else 0   # add an isolated vertex
    work = [(g, order, tuple(forbidden), smaller, best0) for g in frontier]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_bb_worker, work))
    else:
        parts = [_bb_worker(w) for w in work]
    value = max(b for b, _ in parts)
    ext = {canonical_key(g): g for b, found in parts if b == value for g in found}
    return TuranResult(order, value, tuple(ext[k] for k in sorted(ext)))


# -- freeness certificates ----------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    free: bool
    embedding: Embedding | None
    rule: str
    nodes: int
    classes: int
    rules_applied: tuple[str, ...]
    host_order: int
    pattern_order: int

    def to_dict(self) -> dict:
        return {
            "free": self.free,
            "embedding": list(self.embedding.map) if self.embedding else None,
            "rule": self.rule,
            "search_nodes": self.nodes,
            "host_twin_classes": self.classes,
            "rules_applied": list(self.rules_applied),
            "host_order": self.host_order,
            "pattern_order": self.pattern_order,
        }


def certify_free(g: Graph, pattern: Graph) -> Certificate:
    """Either a copy of ``pattern`` in ``g`` or a record of why none exists."""
    st = SearchStats()
    emb = find_subgraph(g, pattern, st)
    return Certificate(
        emb is None, emb, st.rule, st.nodes, st.classes,
        tuple(st.rules_applied), g.n, pattern.n,
    )
