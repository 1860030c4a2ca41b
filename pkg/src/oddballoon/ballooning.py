"""Odd-ballooning, vertex division and the 2-decomposition family.

Host convention for membership: ``(M + I_m) v I_m`` with ``m = |V(H(t))|``.
Host ids are ``M`` first, then the ``I_m`` that is joined only to the other
side (called ``Y1``), then the side joined to everything else (``Y2``).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping, Sequence

from .canon import canonical_key
from .formats import encode_graph6
from .graph import CapacityError, Graph, MAX_ORDER, complete, disjoint_union, independent, iter_bits, join
from .invariants import (
    covers_below,
    independent_covering,
    vertex_cover_number,
)
from .search import Embedding, find_subgraph


class OutOfScopeError(ValueError):
    """The request is outside the range where the bounds are proved (t < 5)."""


@dataclass(frozen=True)
class BallooningSpec:
    base: Graph
    t: int
    lengths: tuple[int, ...] = ()   # per edge of base.edges(); empty means all t

    def __post_init__(self) -> None:
        if self.t < 3 or self.t % 2 == 0:
            raise ValueError(f"t must be odd and >= 3, got {self.t}")
        if self.base.m == 0:
            raise ValueError("base graph needs at least one edge")
        if not self.lengths:
            object.__setattr__(self, "lengths", (self.t,) * self.base.m)
        if len(self.lengths) != self.base.m:
            raise ValueError(f"{len(self.lengths)} lengths for {self.base.m} edges")
        for L in self.lengths:
            if L % 2 == 0 or L < self.t:
                raise ValueError(f"cycle length {L} must be odd and >= t={self.t}")
        n = self.base.n + sum(L - 2 for L in self.lengths)
        if n > MAX_ORDER:
            raise CapacityError(f"ballooned graph has {n} vertices, capacity {MAX_ORDER}")

    @property
    def order(self) -> int:
        return self.base.n + sum(L - 2 for L in self.lengths)

    def to_dict(self) -> dict:
        return {"base": encode_graph6(self.base), "t": self.t, "lengths": list(self.lengths)}


def balloon_cycles(spec: BallooningSpec) -> list[list[int]]:
    """Vertex sequence ``u, w_1, ..., w_{L-2}, v`` of the cycle for each base edge.

    Base vertices keep their ids; fresh vertices are numbered edge by edge.
    Consecutive entries are adjacent, and so are the two ends.
    """
    nxt = spec.base.n
    out = []
    for (u, v), L in zip(spec.base.edges(), spec.lengths):
        inner = list(range(nxt, nxt + L - 2))
        nxt += L - 2
        out.append([u] + inner + [v])
    return out


def balloon(spec: BallooningSpec) -> Graph:
    edges = []
    for cyc in balloon_cycles(spec):
        edges += list(zip(cyc, cyc[1:]))
        edges.append((cyc[0], cyc[-1]))
    return Graph.from_edges(spec.order, edges)


# -- vertex division --------------------------------------------------------

DivisionPlan = Mapping[int, frozenset]
"""Divided vertex -> neighbours whose edges stay on the main copy.

Each other incident edge moves to its own new pendant copy of the vertex.
"""


def divide(g: Graph, plan: DivisionPlan) -> Graph:
    """Apply all divisions of ``plan`` at once.

    Main copies keep the original ids; new copies are numbered after them in
    order of (divided vertex, neighbour).
    """
    copy_id: dict[tuple[int, int], int] = {}
    nxt = g.n
    for v in sorted(plan):
        main = frozenset(plan[v])
        nbrs = set(g.neighbors(v))
        if not main:
            raise ValueError(f"empty main block at vertex {v}")
        if not main <= nbrs:
            raise ValueError(f"main block at {v} holds non-incident edges")
        for w in sorted(nbrs - main):
            copy_id[v, w] = nxt
            nxt += 1
    edges = [(copy_id.get((u, w), u), copy_id.get((w, u), w)) for u, w in g.edges()]
    return Graph.from_edges(nxt, edges)


def division_plans(g: Graph) -> Iterator[dict[int, frozenset]]:
    """Every simultaneous division plan, the empty plan first."""
    per_vertex = []
    for v in range(g.n):
        nbrs = g.neighbors(v)
        opts: list[frozenset | None] = [None]
        d = len(nbrs)
        if d >= 2:
            for mask in range(1, (1 << d) - 1):
                opts.append(frozenset(nbrs[i] for i in range(d) if mask >> i & 1))
        per_vertex.append(opts)
    for choice in product(*per_vertex):
        yield {v: c for v, c in enumerate(choice) if c is not None}


def division_family(g: Graph) -> list[Graph]:
    """The graphs obtainable by dividing some vertices, one per isomorphism class.

    Sorted by canonical key.
    """
    if g.n > 12:
        raise CapacityError("division family is limited to 12 base vertices")
    seen: dict[bytes, Graph] = {}
    for plan in division_plans(g):
        d = divide(g, plan)
        key = canonical_key(d)
        if key not in seen:
            seen[key] = d
    return [seen[k] for k in sorted(seen)]


# -- membership -------------------------------------------------------------

Y1, Y2 = -1, -2


def membership_host(m: Graph, spec: BallooningSpec) -> Graph:
    m0 = spec.order
    return join(disjoint_union(m, independent(m0)), independent(m0))


def _assignments(m: Graph, h: Graph) -> Iterator[list[int]]:
    """Maps of base vertices into V(M) or one of the two sides.

    A map is produced iff it can be completed to a copy of H(t) using every
    edge of M exactly once on distinct cycles.
    """
    hn = h.n
    order: list[int] = []
    for comp in h.component_masks():
        start = (comp & -comp).bit_length() - 1
        seen, frontier = 1 << start, [start]
        while frontier:
            order += frontier
            nxt = []
            for v in frontier:
                for w in iter_bits(h.adj[v] & ~seen):
                    seen |= 1 << w
                    nxt.append(w)
            frontier = nxt
    must_image = 0
    for x in range(m.n):
        if m.degree(x) >= 2:
            must_image |= 1 << x
    f = [0] * hn
    placed = [False] * hn

    def ok_pair(a: int, b: int, adjacent: bool) -> bool:
        if a >= 0 and b >= 0:
            return m.has_edge(a, b) == adjacent
        if not adjacent:
            return True
        return (a == Y2) != (b == Y2)

    def finish() -> bool:
        image = 0
        for u in range(hn):
            if f[u] >= 0:
                image |= 1 << f[u]
        if must_image & ~image:
            return False
        for u in range(hn):
            x = f[u]
            if x < 0:
                continue
            loose = (m.adj[x] & ~image).bit_count()
            y2_nbrs = sum(1 for w in iter_bits(h.adj[u]) if f[w] == Y2)
            if loose > y2_nbrs:
                return False
        return True

    def go(i: int, used: int) -> Iterator[list[int]]:
        if i == hn:
            if finish():
                yield list(f)
            return
        unplaced = hn - i
        if (must_image & ~used).bit_count() > unplaced:
            return
        u = order[i]
        for x in list(range(m.n)) + [Y1, Y2]:
            if x >= 0 and used >> x & 1:
                continue
            good = True
            for w in range(hn):
                if placed[w] and not ok_pair(x, f[w], h.has_edge(u, w)):
                    good = False
                    break
            if not good:
                continue
            f[u] = x
            placed[u] = True
            yield from go(i + 1, used | (1 << x if x >= 0 else 0))
            placed[u] = False

    yield from go(0, 0)


def _pad(path: list[int], length: int, fresh) -> list[int]:
    """Lengthen an even path between the sides by Y1/Y2 detours."""
    path = list(path)
    while len(path) - 1 < length:
        i = next(j for j, x in enumerate(path) if fresh.is_y2(x))
        if i + 1 < len(path):
            path[i + 1:i + 1] = [fresh.y1(), fresh.y2()]
        else:
            path[i:i] = [fresh.y2(), fresh.y1()]
    return path


class _Fresh:
    def __init__(self, mn: int, m0: int) -> None:
        self.mn, self.m0 = mn, m0
        self.n1 = self.n2 = 0

    def y1(self) -> int:
        self.n1 += 1
        return self.mn + self.n1 - 1

    def y2(self) -> int:
        self.n2 += 1
        return self.mn + self.m0 + self.n2 - 1

    def is_y2(self, x: int) -> bool:
        return x >= self.mn + self.m0


def _witness(m: Graph, spec: BallooningSpec, f: list[int]) -> Embedding:
    h = spec.base
    fresh = _Fresh(m.n, spec.order)
    host_of = []
    for x in f:
        host_of.append(x if x >= 0 else fresh.y1() if x == Y1 else fresh.y2())
    image = {x for x in f if x >= 0}
    loose: dict[int, list[tuple[int, int]]] = {}
    free_edges = []
    for a, b in m.edges():
        if a in image and b in image:
            continue
        if a in image or b in image:
            x, y = (a, b) if a in image else (b, a)
            loose.setdefault(x, []).append((x, y))
        else:
            free_edges.append((a, b))
    phi = [0] * spec.order
    for u in range(h.n):
        phi[u] = host_of[u]
    for cyc, L in zip(balloon_cycles(spec), spec.lengths):
        u, v = cyc[0], cyc[-1]
        a, b = host_of[u], host_of[v]
        if f[u] >= 0 and f[v] >= 0:
            path = [a, fresh.y2(), b]
        else:
            flip = fresh.is_y2(a)
            s, z = (b, a) if flip else (a, b)
            side_vertex = f[v] if flip else f[u]
            if side_vertex >= 0 and loose.get(side_vertex):
                _, y = loose[side_vertex].pop()
                path = [s, y, z]
            else:
                x, y = free_edges.pop(0)
                path = [s, fresh.y2(), x, y, z]
            if flip:
                path.reverse()
        path = _pad(path, L - 1, fresh)
        for w, hv in zip(cyc[1:-1], path[1:-1]):
            phi[w] = hv
    assert not free_edges and not any(loose.values())
    return Embedding(tuple(phi))


def is_decomposition_member(
    m: Graph, spec: BallooningSpec, generic: bool = False
) -> tuple[bool, Embedding | None]:
    """Whether H(t) embeds in ``(M + I_m0) v I_m0`` with ``m0 = |V(H(t))|``.

    The default route searches base-vertex placements only and builds the
    cycles explicitly; ``generic=True`` runs the general subgraph search on
    the materialised host instead.
    """
    if m.isolated_vertices():
        raise ValueError("candidate has isolated vertices")
    if m.m < spec.base.m:
        return False, None
    if generic or m.m > spec.base.m:
        emb = find_subgraph(membership_host(m, spec), balloon(spec))
        return emb is not None, emb
    for f in _assignments(m, spec.base):
        return True, _witness(m, spec, f)
    return False, None


def structural_checks(m: Graph, spec: BallooningSpec, witness: Embedding) -> dict[str, bool]:
    """The four structural properties every minimal member's copy must have."""
    phi = witness.map
    cycles = balloon_cycles(spec)
    mn = m.n

    def is_m_edge(a: int, b: int) -> bool:
        return a < mn and b < mn and m.has_edge(a, b)

    one_edge_each = True
    on_cycles = [0] * mn
    for cyc in cycles:
        imgs = [phi[w] for w in cyc]
        pairs = list(zip(imgs, imgs[1:])) + [(imgs[0], imgs[-1])]
        if sum(is_m_edge(a, b) for a, b in pairs) != 1:
            one_edge_each = False
        for x in set(imgs):
            if x < mn:
                on_cycles[x] += 1
    image = set(phi)
    base_images = {phi[u] for u in range(spec.base.n)}
    return {
        "edge_count": m.m == spec.base.m,
        "one_member_edge_per_cycle": one_edge_each,
        "member_inside_copy": all(x in image for x in range(mn)),
        "shared_vertices_are_base": all(
            x in base_images for x in range(mn) if on_cycles[x] >= 2
        ),
    }


# -- the family and its profile ---------------------------------------------


@dataclass(frozen=True)
class Member:
    graph: Graph
    key: bytes
    witness: Embedding


@dataclass(frozen=True)
class DecompositionFamily:
    spec: BallooningSpec
    members: tuple[Member, ...]


def _check_candidate(args: tuple[Graph, BallooningSpec]) -> tuple[bytes, Graph, Embedding | None]:
    cand, spec = args
    ok, emb = is_decomposition_member(cand, spec)
    if ok:
        # a graph with one edge fewer must fail (minimality safety net)
        u, v = cand.edges()[0]
        smaller = cand.remove_edge(u, v).without_isolated()
        if smaller.n + 2 * spec.order <= MAX_ORDER:
            assert find_subgraph(membership_host(smaller, spec), balloon(spec)) is None
        else:
            assert not is_decomposition_member(smaller, spec)[0]
    return canonical_key(cand), cand, emb


def decomposition_family(spec: BallooningSpec, jobs: int = 1) -> DecompositionFamily:
    if spec.t < 5:
        raise OutOfScopeError("decomposition families are only computed for t >= 5")
    if not spec.base.is_bipartite():
        raise ValueError("base graph must be bipartite")
    cands = [c for c in division_family(spec.base) if not c.isolated_vertices()]
    work = [(c, spec) for c in cands]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_candidate, work))
    else:
        results = [_check_candidate(w) for w in work]
    members = [Member(g, k, e) for k, g, e in results if e is not None]
    members.sort(key=lambda mem: mem.key)
    return DecompositionFamily(spec, tuple(members))


@dataclass(frozen=True)
class ExtremalProfile:
    q: int
    coverings: tuple[tuple[int, frozenset[int]], ...]
    k: int
    small_cover_graphs: tuple[Graph, ...]
    fallback: bool      # True when no member has a cover smaller than q

    def small_cover_keys(self) -> list[bytes]:
        return [canonical_key(g) for g in self.small_cover_graphs]


def profile(family: DecompositionFamily) -> ExtremalProfile:
    members = family.members
    if not members:
        raise ValueError("empty decomposition family")
    gammas = [independent_covering(mem.graph) for mem in members]
    q = min(g for g, _ in gammas)
    cov = []
    for i, (gam, covers) in enumerate(gammas):
        if gam == q:
            cov += [(i, c) for c in covers]
    k = min(min(members[i].graph.degree(x) for x in c) for i, c in cov)
    small: dict[bytes, Graph] = {}
    for mem in members:
        for mask in covers_below(mem.graph, q):
            sub = mem.graph.induced(list(iter_bits(mask)))
            small.setdefault(canonical_key(sub), sub)
    fallback = not small
    if fallback:
        small[canonical_key(complete(q))] = complete(q)
    graphs = tuple(small[key] for key in sorted(small))
    return ExtremalProfile(q, tuple(cov), k, graphs, fallback)


def family_report(family: DecompositionFamily, prof: ExtremalProfile | None = None) -> dict:
    prof = prof or profile(family)
    members = []
    for mem in family.members:
        gam, covers = independent_covering(mem.graph)
        members.append({
            "graph6": encode_graph6(mem.graph),
            "canonical": mem.key.decode(),
            "order": mem.graph.n,
            "edges": mem.graph.m,
            "gamma": gam,
            "beta": vertex_cover_number(mem.graph),
            "min_independent_coverings": [sorted(c) for c in covers],
            "witness": list(mem.witness.map),
        })
    return {
        "spec": family.spec.to_dict(),
        "members": members,
        "profile": profile_dict(prof),
    }


def profile_dict(prof: ExtremalProfile) -> dict:
    return {
        "q": prof.q,
        "k": prof.k,
        "coverings": [{"member": i, "vertices": sorted(c)} for i, c in prof.coverings],
        "small_cover_family": [encode_graph6(g) for g in prof.small_cover_graphs],
        "small_cover_fallback": prof.fallback,
    }
