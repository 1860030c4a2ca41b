"""Text formats: graph6, a plain edge list, and DOT."""

from __future__ import annotations

from .graph import CapacityError, Graph, MAX_ORDER


class FormatError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header): size word, then the upper triangle by columns."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError("graph6 characters must lie in '?'..'~'")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise FormatError("8-byte size words are not supported")
        if len(s) < 4:
            raise FormatError("truncated size word")
        n = 0
        for c in s[1:4]:
            n = n << 6 | (ord(c) - 63)
        if n <= 62:
            raise FormatError("non-minimal size word")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise FormatError(f"{kind} bit vector: expected {need} chars, got {len(body)}")
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend(val >> s_ & 1 for s_ in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge list must start with an 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds capacity {MAX_ORDER}")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if g.m != m:
        raise FormatError("duplicate edges in edge list")
    return g


def to_dot(g: Graph, name: str = "G", groups: dict[str, list[int]] | None = None) -> str:
    """Undirected DOT source; ``groups`` become labelled clusters."""
    lines = [f"graph {name} {{"]
    placed = set()
    for gi, (label, verts) in enumerate(sorted((groups or {}).items())):
        lines.append(f"  subgraph cluster_{gi} {{")
        lines.append(f'    label="{label}";')
        for v in sorted(verts):
            lines.append(f"    {v};")
            placed.add(v)
        lines.append("  }")
    for v in range(g.n):
        if v not in placed:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
