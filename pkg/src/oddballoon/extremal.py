"""Extremal constructions and the numeric bounds built from an extremal profile.

A recipe places a graph ``Q`` on ``q - 1`` vertices, joins it to a balanced
complete bipartite graph on the remaining ``n - q + 1`` vertices, and drops a
``K_{k,k}`` into one of the two bipartite classes.

Vertex layout of :func:`build_family`: ids ``0 .. q-2`` carry ``Q``; the next
block is the larger Turán class, then the smaller one.  ``K_{k,k}`` uses the
first ``2k`` ids of the chosen class, ``k`` on each side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .ballooning import (
    BallooningSpec,
    DecompositionFamily,
    ExtremalProfile,
    OutOfScopeError,
    decomposition_family,
    profile,
)
from .formats import encode_graph6
from .graph import Graph, complete, cycle, path, star, turan_part_sizes
from .invariants import bipartition
from .oracle import TuranResult, turan_oracle


def turan_edges(p: int, n: int) -> int:
    if p < 1 or n < 0:
        raise ValueError("turan_edges(p, n) needs p >= 1, n >= 0")
    sizes = turan_part_sizes(p, n)
    return (n * n - sum(s * s for s in sizes)) // 2


def f_value(n: int, q: int) -> int:
    if q < 1 or n < q:
        raise ValueError("f(n, q) needs 1 <= q <= n")
    r = n - q + 1
    return turan_edges(2, r) + (q - 1) * r


def phi(alpha: int, delta: int) -> int:
    """Largest edge count with matching number <= alpha and max degree <= delta."""
    if alpha < 0 or delta < 0:
        raise ValueError("phi needs non-negative arguments")
    if delta == 0 or alpha == 0:
        return 0
    return alpha * delta + (delta // 2) * (alpha // -(-delta // 2))


@dataclass(frozen=True)
class ConstructionRecipe:
    n: int
    q: int
    k: int
    Q: Graph
    side: int = 0

    def __post_init__(self) -> None:
        if self.q < 1 or self.k < 0 or self.side not in (0, 1):
            raise ValueError("recipe needs q >= 1, k >= 0 and side in {0, 1}")
        if self.Q.n != self.q - 1:
            raise ValueError(f"Q must have {self.q - 1} vertices, got {self.Q.n}")
        if self.n < self.q:
            raise ValueError("n must be at least q")
        if self.class_sizes()[self.side] < 2 * self.k:
            raise ValueError(f"class {self.side} is too small for K_{{{self.k},{self.k}}}")

    def class_sizes(self) -> tuple[int, int]:
        a, b = turan_part_sizes(2, self.n - self.q + 1)
        return a, b

    @property
    def edge_count(self) -> int:
        return f_value(self.n, self.q) + self.Q.m + self.k * self.k

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "Q": encode_graph6(self.Q),
            "side": self.side,
            "class_sizes": list(self.class_sizes()),
            "edges": self.edge_count,
        }


def build_family(recipe: ConstructionRecipe) -> Graph:
    r = recipe
    a, b = r.class_sizes()
    base = r.q - 1
    cls = [list(range(base, base + a)), list(range(base + a, base + a + b))]
    edges = list(r.Q.edges())
    edges += [(u, v) for u in range(base) for v in range(base, r.n)]
    edges += [(u, v) for u in cls[0] for v in cls[1]]
    host = cls[r.side]
    edges += [(host[i], host[r.k + j]) for i in range(r.k) for j in range(r.k)]
    g = Graph.from_edges(r.n, edges)
    assert g.m == r.edge_count
    return g


def ex_small(order: int, family, jobs: int = 1, cache_dir=None) -> TuranResult:
    """Exact ex(order, family) with its extremal graphs."""
    return turan_oracle(order, list(family), jobs, cache_dir)


@dataclass(frozen=True)
class BoundsReport:
    spec: BallooningSpec
    n: int
    q: int
    k: int
    small_cover_family: tuple[Graph, ...]
    ex_inner: int
    lower: int
    upper: int
    recipes: tuple[ConstructionRecipe, ...]
    regime: str = "asymptotic regime per theorem; no finite threshold is claimed"
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def tight(self) -> bool:
        return self.k == 1

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "small_cover_family": [encode_graph6(g) for g in self.small_cover_family],
            "ex_inner": self.ex_inner,
            "f": f_value(self.n, self.q),
            "lower": self.lower,
            "upper": self.upper,
            "tight": self.tight,
            "exact": self.lower if self.tight else None,
            "recipes": [r.to_dict() for r in self.recipes],
            "regime": self.regime,
        }


def recipes_for(n: int, q: int, k: int, inner: TuranResult) -> list[ConstructionRecipe]:
    """Every recipe with the given parameters, one per extremal ``Q`` and usable class."""
    out = []
    sizes = turan_part_sizes(2, n - q + 1)
    sides = [0] if sizes[0] == sizes[1] else [0, 1]
    for Q in inner.extremal:
        for side in sides:
            if sizes[side] >= 2 * k:
                out.append(ConstructionRecipe(n, q, k, Q, side))
    return out


def theorem_bounds(
    spec: BallooningSpec,
    n: int,
    jobs: int = 1,
    family: DecompositionFamily | None = None,
    prof: ExtremalProfile | None = None,
    cache_dir=None,
) -> BoundsReport:
    if spec.t < 5:
        raise OutOfScopeError(f"t = {spec.t} is outside the bound theorem (needs t >= 5)")
    family = family or decomposition_family(spec, jobs)
    prof = prof or profile(family)
    q, k = prof.q, prof.k
    if n < q + 1 + 2 * (k - 1):
        raise ValueError(f"n = {n} is too small for the constructions (q = {q}, k = {k})")
    inner = ex_small(q - 1, prof.small_cover_graphs, jobs, cache_dir)
    lower = f_value(n, q) + inner.value
    upper = lower + (k - 1) ** 2
    recipes = tuple(recipes_for(n, q, k - 1, inner))
    return BoundsReport(spec, n, q, k, prof.small_cover_graphs, inner.value, lower, upper, recipes)


# -- closed forms for named bases ---------------------------------------------

COROLLARY_KINDS = ("star", "path", "even_cycle", "good_tree")


def corollary_base(kind: str, param) -> Graph:
    if kind == "star":
        if param < 1:
            raise ValueError("star needs a >= 1")
        return star(param)
    if kind == "path":
        if param < 1:
            raise ValueError("path needs m >= 1 edges")
        return path(param + 1)
    if kind == "even_cycle":
        if param < 4 or param % 2:
            raise ValueError("even cycle needs an even order m >= 4")
        return cycle(param)
    if kind == "good_tree":
        if not isinstance(param, Graph):
            raise ValueError("good_tree takes a tree")
        g = param
        if g.m != g.n - 1 or not g.is_connected() or g.n < 2:
            raise ValueError("good_tree base must be a tree with an edge")
        bp = bipartition(g)
        if not any(g.degree(u) == 1 for u in bp.A):
            raise ValueError("good_tree needs a leaf in the smaller class A")
        return g
    raise ValueError(f"unknown corollary kind {kind!r}")


def corollary_value(
    kind: str, param, n: int, t: int = 5, jobs: int = 1, cache_dir=None
) -> tuple[int, ConstructionRecipe, BoundsReport]:
    """Closed-form extremal number for a named base, checked against the bounds."""
    if t < 5 or t % 2 == 0:
        raise OutOfScopeError("closed forms need odd t >= 5")
    base = corollary_base(kind, param)
    spec = BallooningSpec(base, t)
    report = theorem_bounds(spec, n, jobs, cache_dir=cache_dir)
    if kind == "star":
        a = param
        value = turan_edges(2, n) + (a - 1) ** 2
        recipe = ConstructionRecipe(n, 1, a - 1, Graph.empty(0))
        attained = report.upper
    elif kind in ("path", "even_cycle") and param % 2 == 0:
        d = param // 2
        value = f_value(n, d) + comb(d - 1, 2) + 1
        recipe = ConstructionRecipe(n, d, 1, _clique(d - 1))
        attained = report.upper
    elif kind == "path":
        d = (param + 1) // 2
        value = f_value(n, d) + comb(d - 1, 2)
        recipe = ConstructionRecipe(n, d, 0, _clique(d - 1))
        attained = report.lower
        if not report.tight:
            raise AssertionError("odd-edge path should give matching bounds")
    else:
        a = len(bipartition(base).A)
        inner = ex_small(a - 1, report.small_cover_family, jobs, cache_dir)
        value = f_value(n, a) + inner.value
        recipe = ConstructionRecipe(n, a, 0, inner.extremal[0])
        attained = report.lower
    if value != attained or recipe.edge_count != value:
        raise AssertionError(
            f"closed form {value} disagrees with bound {attained} for {kind} {param}"
        )
    return value, recipe, report


def _clique(r: int) -> Graph:
    return complete(r) if r else Graph.empty(0)
