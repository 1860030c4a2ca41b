import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oddballoon.canon import canonical_key, is_isomorphic
from oddballoon.formats import (
    FormatError,
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    to_dot,
)
from oddballoon.graph import (
    CapacityError,
    Graph,
    complete,
    complete_bipartite,
    complete_multipartite,
    copies,
    cycle,
    disjoint_union,
    independent,
    join,
    make_named,
    path,
    star,
    turan,
)
from oddballoon.oracle import enumerate_graphs
from oddballoon.search import SearchStats, find_subgraph

from brute import has_subgraph, random_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


class TestConstructors:
    def test_star(self):
        g = star(3)
        assert (g.n, g.m, g.max_degree()) == (4, 3, 3)

    def test_turan_2_5(self):
        g = turan(2, 5)
        assert g.m == 6 and is_isomorphic(g, complete_bipartite(2, 3))

    def test_octahedron(self):
        assert complete_multipartite(2, 2, 2).m == 12

    @pytest.mark.parametrize("kind,params", [
        ("cycle", [2]), ("path", [0]), ("star", [0]), ("turan", [2]),
        ("complete_bipartite", [1]), ("nonsense", [1]), ("complete_multipartite", [2, 0]),
    ])
    def test_bad_parameters(self, kind, params):
        with pytest.raises(ValueError):
            make_named(kind, params)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            independent(129)
        with pytest.raises(CapacityError):
            join(complete(64), complete(65))

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))


class TestCombining:
    def test_join_examples(self):
        g = join(independent(1), turan(2, 4))
        assert (g.n, g.m) == (5, 8)
        assert is_isomorphic(join(complete(1), complete(1)), complete(2))
        f = join(independent(1), turan(2, 14))
        assert (f.n, f.m) == (15, 49 + 14)

    def test_join_ids(self):
        g = join(path(2), independent(3))
        assert g.has_edge(0, 1) and all(g.has_edge(u, v) for u in (0, 1) for v in (2, 3, 4))
        assert not g.has_edge(2, 3)

    def test_union_examples(self):
        g = copies(path(2), 3)
        assert (g.n, g.m) == (6, 3)
        assert disjoint_union(star(3), independent(0)) == star(3)
        h = disjoint_union(star(2), path(2))
        assert (h.n, h.m, len(h.component_masks())) == (5, 3, 2)

    @given(graphs(6), graphs(6))
    def test_edge_identities(self, g, h):
        assert join(g, h).m == g.m + h.m + g.n * h.n
        u = disjoint_union(g, h)
        assert u.m == g.m + h.m
        assert all(not (u.adj[v] >> g.n) for v in range(g.n))

    @given(graphs())
    def test_degree_sum(self, g):
        assert sum(g.degrees()) == 2 * g.m


class TestCanonical:
    def test_star_keys(self):
        assert canonical_key(star(3)) == canonical_key(complete_bipartite(1, 3))
        assert canonical_key(path(4)) != canonical_key(star(3))

    def test_random_relabellings(self):
        rng = random.Random(20261017)
        for _ in range(1000):
            n = rng.randint(1, 10)
            g = random_graph(rng, n, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(g.relabel(perm)) == canonical_key(g)

    @settings(max_examples=200, deadline=None)
    @given(graphs(7), st.randoms(use_true_random=False))
    def test_relabel_property(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_key(g.relabel(perm)) == canonical_key(g)

    def test_distinct_classes_have_distinct_keys(self):
        for n in range(7):
            keys = [canonical_key(g) for g in enumerate_graphs(n)]
            assert len(set(keys)) == len(keys)

    def test_key_is_stable_text(self):
        assert canonical_key(path(3)) == canonical_key(Graph.from_edges(3, [(0, 2), (1, 2)]))
        assert canonical_key(complete(2)) == b"A_"


class TestGraph6:
    def test_k2(self):
        # two vertices: 'A' = 63 + 2, one bit set then padding gives '_'
        assert encode_graph6(complete(2)) == "A_"
        assert decode_graph6("A_") == complete(2)

    def test_known_codes(self):
        # codes from the format description: empty on 0 vertices, and a 5-cycle
        assert encode_graph6(Graph.empty(0)) == "?"
        assert is_isomorphic(decode_graph6("Dhc"), cycle(5))

    def test_round_trip_all_small(self):
        for n in range(9):
            for g in enumerate_graphs(n):
                assert decode_graph6(encode_graph6(g)) == g

    def test_long_size_word(self):
        g = path(100)
        s = encode_graph6(g)
        assert s[0] == "~" and decode_graph6(s) == g
        assert decode_graph6(">>graph6<<" + s) == g

    @pytest.mark.parametrize("bad", ["", "A ", "A", "A__", "A`", "~??~", "~~??????", "B\x7f"])
    def test_malformed(self, bad):
        with pytest.raises(FormatError):
            decode_graph6(bad)

    def test_over_capacity(self):
        with pytest.raises(CapacityError):
            decode_graph6("~?B?" + "?" * 10)


class TestEdgeListAndDot:
    def test_round_trip(self):
        g = cycle(6)
        assert decode_edge_list(encode_edge_list(g)) == g
        assert decode_edge_list("# comment\n3 1\n0 2  # tail\n") == Graph.from_edges(3, [(0, 2)])

    @pytest.mark.parametrize("bad", ["", "3\n", "3 2\n0 1\n", "2 1\n0 0\n", "2 2\n0 1\n1 0\n", "x y\n"])
    def test_bad(self, bad):
        with pytest.raises(FormatError):
            decode_edge_list(bad)

    def test_dot(self):
        text = to_dot(turan(2, 4))
        assert text.startswith("graph G {") and "digraph" not in text
        assert text.count(" -- ") == 4 and all(f"  {v};" in text for v in range(4))
        clustered = to_dot(path(3), groups={"A": [1], "B": [0, 2]})
        assert "cluster_0" in clustered and 'label="A"' in clustered


class TestFindSubgraph:
    def test_examples(self):
        emb = find_subgraph(complete(5), cycle(5))
        assert emb is not None and emb.is_valid(cycle(5), complete(5))
        st_ = SearchStats()
        assert find_subgraph(complete_bipartite(3, 3), cycle(5), st_) is None
        assert st_.rule == "parity"

    def test_against_brute_force(self):
        rng = random.Random(7)
        for _ in range(400):
            host = random_graph(rng, rng.randint(1, 9), rng.choice([0.3, 0.5, 0.7]))
            pat = random_graph(rng, rng.randint(1, min(6, host.n)), rng.choice([0.3, 0.5, 0.8]))
            emb = find_subgraph(host, pat)
            assert (emb is not None) == has_subgraph(host, pat)
            if emb is not None:
                assert emb.is_valid(pat, host)

    @settings(max_examples=150, deadline=None)
    @given(graphs(8), graphs(5))
    def test_property_brute_force(self, host, pat):
        assert (find_subgraph(host, pat) is not None) == has_subgraph(host, pat)

    def test_deterministic(self):
        host = turan(3, 9)
        assert find_subgraph(host, cycle(7)) == find_subgraph(host, cycle(7))
