"""Subgraph containment.

Host vertices with identical open neighbourhoods (or identical closed
neighbourhoods) are interchangeable, so the host is first collapsed into
twin classes.  Between two classes the edges are all-or-nothing, and a class
is either independent or a clique.  A copy of the pattern is then the same
thing as a map from pattern vertices to classes that sends edges to adjacent
classes (or into a clique class) and never overfills a class.  That map is
found by depth-first search with arc-consistent class domains and a
fewest-choices-first variable order.

On the join and Turán hosts that dominate this package the quotient has a
handful of classes, which is what makes exhaustive freeness proofs cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex -> host vertex``."""

    map: tuple[int, ...]

    def is_valid(self, pattern: Graph, host: Graph) -> bool:
        m = self.map
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= x < host.n for x in m):
            return False
        return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges())


@dataclass
class SearchStats:
    rule: str = ""
    nodes: int = 0
    classes: int = 0
    rules_applied: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "nodes": self.nodes,
            "classes": self.classes,
            "rules_applied": list(self.rules_applied),
        }


@dataclass(frozen=True)
class TwinQuotient:
    members: tuple[tuple[int, ...], ...]
    clique: tuple[bool, ...]
    nbrs: tuple[int, ...]       # class adjacency masks, self bit set for cliques
    degree: tuple[int, ...]     # host degree of every member of the class

    @classmethod
    def of(cls, host: Graph) -> TwinQuotient:
        by_open: dict[int, list[int]] = {}
        for v in range(host.n):
            by_open.setdefault(host.adj[v], []).append(v)
        groups: list[list[int]] = []
        single: list[int] = []
        for vs in by_open.values():
            (groups if len(vs) > 1 else single).append(vs if len(vs) > 1 else vs[0])
        by_closed: dict[int, list[int]] = {}
        for v in single:
            by_closed.setdefault(host.adj[v] | 1 << v, []).append(v)
        cliques = [vs for vs in by_closed.values()]
        classes = [(sorted(vs), False) for vs in groups]
        classes += [(sorted(vs), len(vs) > 1) for vs in cliques]
        classes.sort(key=lambda c: c[0][0])
        owner = [0] * host.n
        for i, (vs, _) in enumerate(classes):
            for v in vs:
                owner[v] = i
        nbrs = []
        for i, (vs, is_clique) in enumerate(classes):
            mask = 0
            for w in iter_bits(host.adj[vs[0]]):
                mask |= 1 << owner[w]
            if is_clique:
                mask |= 1 << i
            nbrs.append(mask)
        return cls(
            tuple(tuple(vs) for vs, _ in classes),
            tuple(c for _, c in classes),
            tuple(nbrs),
            tuple(host.degree(vs[0]) for vs, _ in classes),
        )


def _prefilter(host: Graph, pattern: Graph) -> str:
    if pattern.n > host.n:
        return "order"
    if pattern.m > host.m:
        return "size"
    hd = sorted(host.degrees(), reverse=True)
    pd = sorted(pattern.degrees(), reverse=True)
    if any(p > h for p, h in zip(pd, hd)):
        return "degree-sequence"
    if pattern.m and host.is_bipartite() and not pattern.is_bipartite():
        return "parity"
    return ""


def find_subgraph(host: Graph, pattern: Graph, stats: SearchStats | None = None) -> Embedding | None:
    """A copy of ``pattern`` inside ``host`` (not necessarily induced), or None.

    The result is deterministic for fixed inputs.
    """
    st = stats if stats is not None else SearchStats()
    st.rules_applied = ["order", "size", "degree-sequence", "parity"]
    rule = _prefilter(host, pattern)
    if rule:
        st.rule = rule
        return None
    if pattern.n == 0:
        st.rule = "trivial"
        return Embedding(())
    q = TwinQuotient.of(host)
    st.classes = len(q.members)
    st.rules_applied += ["twin-quotient", "arc-consistency", "capacity"]
    classes = _solve(q, pattern, st)
    if classes is None:
        st.rule = "search-exhausted"
        return None
    st.rule = "found"
    taken = [0] * len(q.members)
    out = []
    for u in range(pattern.n):
        x = classes[u]
        out.append(q.members[x][taken[x]])
        taken[x] += 1
    emb = Embedding(tuple(out))
    assert emb.is_valid(pattern, host)
    return emb


def contains(host: Graph, pattern: Graph) -> bool:
    return find_subgraph(host, pattern) is not None


def _solve(q: TwinQuotient, pattern: Graph, st: SearchStats) -> list[int] | None:
    k = len(q.members)
    cap = [len(m) for m in q.members]
    padj = pattern.adj
    pdeg = pattern.degrees()
    n = pattern.n
    nbr_union: dict[int, int] = {}

    def union_nbrs(mask: int) -> int:
        r = nbr_union.get(mask)
        if r is None:
            r = 0
            for x in iter_bits(mask):
                r |= q.nbrs[x]
            nbr_union[mask] = r
        return r

    full = (1 << k) - 1
    dom0 = []
    for u in range(n):
        d = 0
        for x in range(k):
            if q.degree[x] >= pdeg[u]:
                d |= 1 << x
        dom0.append(d)

    assign = [-1] * n
    used = [0] * k

    def propagate(dom: list[int], changed: list[int]) -> bool:
        avail = 0
        for x in range(k):
            if used[x] < cap[x]:
                avail |= 1 << x
        for u in range(n):
            if assign[u] < 0:
                nd = dom[u] & avail
                if nd != dom[u]:
                    if not nd:
                        return False
                    dom[u] = nd
                    changed.append(u)
        queue = list(dict.fromkeys(changed))
        inq = set(queue)
        while queue:
            w = queue.pop()
            inq.discard(w)
            reach = union_nbrs(dom[w])
            for u in iter_bits(padj[w]):
                if assign[u] >= 0:
                    continue
                nd = dom[u] & reach
                if nd != dom[u]:
                    if not nd:
                        return False
                    dom[u] = nd
                    if u not in inq:
                        queue.append(u)
                        inq.add(u)
        # vertices forced into one class must fit in it
        need = [0] * k
        for u in range(n):
            if assign[u] < 0 and dom[u] & (dom[u] - 1) == 0:
                x = dom[u].bit_length() - 1
                need[x] += 1
                if used[x] + need[x] > cap[x]:
                    return False
        return True

    def pick(dom: list[int]) -> int:
        best, key = -1, None
        for u in range(n):
            if assign[u] >= 0:
                continue
            mapped = sum(1 for w in iter_bits(padj[u]) if assign[w] >= 0)
            kk = (dom[u].bit_count(), -mapped, -pdeg[u], u)
            if key is None or kk < key:
                best, key = u, kk
        return best

    def go(dom: list[int], depth: int) -> bool:
        st.nodes += 1
        if depth == n:
            return True
        u = pick(dom)
        for x in iter_bits(dom[u]):
            if used[x] >= cap[x]:
                continue
            assign[u] = x
            used[x] += 1
            child = list(dom)
            child[u] = 1 << x
            if propagate(child, [u]) and go(child, depth + 1):
                return True
            used[x] -= 1
            assign[u] = -1
        return False

    dom = [d & full for d in dom0]
    if any(d == 0 for d in dom):
        return None
    if not propagate(dom, list(range(n))):
        return None
    if go(dom, 0):
        return list(assign)
    return None
