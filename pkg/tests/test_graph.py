import itertools

import pytest
from hypothesis import given

from connsub.canon import canonical_key
from connsub.families import build, parse_family_spec, spec, special_vertex
from connsub.generate import connected_classes
from connsub.graph import (
    DisconnectedGraphError,
    Girth,
    Graph,
    block_cut_tree,
    cut_vertices,
    distance,
    girth,
    is_connected,
    s_pendant_blocks,
)

from strategies import connected_graphs


def G(text):
    return build(parse_family_spec(text))


class TestGraphType:
    def test_from_edges_normalizes(self):
        g = Graph.from_edges(3, [(2, 0), (1, 2)])
        assert g.edges == ((0, 2), (1, 2))
        assert g.adj[2] == 0b011

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_too_many_vertices(self):
        with pytest.raises(ValueError):
            Graph.from_edges(65, [])

    def test_adj_symmetric(self):
        g = G("C:n=5")
        for u in range(5):
            for v in range(5):
                assert g.has_edge(u, v) == g.has_edge(v, u)


class TestConnectivity:
    def test_single_vertex(self):
        assert is_connected(Graph.from_edges(1, []))

    def test_path(self):
        assert is_connected(G("P:n=4"))

    def test_two_disjoint_edges(self):
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


class TestCutVertices:
    def test_cycle_has_none(self):
        assert cut_vertices(G("C:n=6")) == frozenset()

    def test_path_inner_vertices(self):
        assert cut_vertices(G("P:n=5")) == {1, 2, 3}

    def test_lollipop_single_cut_of_degree_three(self):
        g = G("L:n=6,g=5")
        cuts = cut_vertices(g)
        assert len(cuts) == 1
        (w,) = cuts
        assert g.degree(w) == 3

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            cut_vertices(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_path_is_unique_maximizer(self):
        # k <= n-2 always, equality only on the path
        for n in range(2, 9):
            path_key = canonical_key(G(f"P:n={n}"))
            for g in connected_classes(n):
                k = len(cut_vertices(g))
                assert k <= n - 2
                if k == n - 2:
                    assert canonical_key(g) == path_key

    def test_matches_naive_removal_definition(self):
        for g in connected_classes(6):
            naive = {
                v
                for v in range(g.n)
                if g.n > 1 and not _connected_without(g, v)
            }
            assert cut_vertices(g) == naive


def _connected_without(g, v):
    keep = [u for u in range(g.n) if u != v]
    sub, _ = g.subgraph_on(keep)
    return is_connected(sub)


class TestBlockCutTree:
    def test_cycle_single_block(self):
        bct = block_cut_tree(G("C:n=5"))
        assert len(bct.blocks) == 1
        assert bct.blocks[0].vertices == frozenset(range(5))
        assert bct.cut_vertices == frozenset()

    def test_lollipop_two_blocks(self):
        g = G("L:n=6,g=5")
        bct = block_cut_tree(g)
        sizes = sorted(len(b.vertices) for b in bct.blocks)
        assert sizes == [2, 5]
        (w,) = bct.cut_vertices
        assert all(w in b.vertices for b in bct.blocks)

    def test_path_blocks_are_edges(self):
        bct = block_cut_tree(G("P:n=4"))
        assert len(bct.blocks) == 3
        assert all(len(b.vertices) == 2 for b in bct.blocks)
        assert bct.cut_vertices == {1, 2}

    def test_single_vertex(self):
        bct = block_cut_tree(Graph.from_edges(1, []))
        assert len(bct.blocks) == 1 and bct.cut_vertices == frozenset()

    @given(connected_graphs(min_n=2, max_n=8))
    def test_invariants(self, g):
        bct = block_cut_tree(g)
        # every edge in exactly one block
        all_edges = [e for b in bct.blocks for e in b.edges]
        assert sorted(all_edges) == list(g.edges)
        # vertex in >= 2 blocks iff cut vertex
        counts = {v: 0 for v in range(g.n)}
        for b in bct.blocks:
            for v in b.vertices:
                counts[v] += 1
        assert {v for v, c in counts.items() if c >= 2} == set(bct.cut_vertices)
        assert bct.cut_vertices == cut_vertices(g)
        # block/cut incidence forms a tree
        nodes = len(bct.blocks) + len(bct.cut_vertices)
        links = sum(len(idxs) for _, idxs in bct.incidence)
        assert links == nodes - 1

    def test_pendant_blocks(self):
        bct = block_cut_tree(G("L:n=6,g=5"))
        assert set(bct.pendant_block_indices()) == {0, 1}


class TestGirth:
    def test_cycle(self):
        assert girth(G("C:n=7")) == Girth(7)

    def test_tree_infinite(self):
        assert girth(G("T:l=2,m=3,d=4")).is_infinite

    def test_q_family(self):
        assert girth(G("Q:n=9,k=4")) == Girth(4)

    def test_at_least(self):
        assert Girth(None).at_least(100)
        assert Girth(5).at_least(5)
        assert not Girth(4).at_least(5)

    def test_constructors(self):
        assert Girth.infinite().is_infinite
        assert Girth.finite(3).value == 3
        with pytest.raises(ValueError):
            Girth.finite(2)

    def test_matches_brute_force(self):
        for n in range(3, 8):
            for g in connected_classes(n):
                assert girth(g).value == _girth_oracle(g)


def _girth_oracle(g):
    best = None
    for length in range(3, g.n + 1):
        for verts in itertools.combinations(range(g.n), length):
            for perm in itertools.permutations(verts[1:]):
                cyc = (verts[0],) + perm
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)
                ):
                    best = length
                    break
            if best:
                break
        if best:
            break
    return best


class TestDistance:
    def test_antipodal_cycle(self):
        assert distance(G("C:n=6"), 0, 3) == 3

    def test_path_ends(self):
        assert distance(G("P:n=5"), 0, 4) == 4

    def test_identity(self):
        assert distance(G("C:n=5"), 2, 2) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            distance(G("P:n=3"), 0, 5)


class TestSPendantBlocks:
    def test_lollipop_has_none(self):
        assert s_pendant_blocks(G("L:n=6,g=5")) == []

    def test_path_end_edges(self):
        blocks = s_pendant_blocks(G("P:n=5"))
        assert sorted(sorted(b.vertices) for b in blocks) == [[0, 1], [3, 4]]

    def test_two_connected_rejected(self):
        with pytest.raises(ValueError):
            s_pendant_blocks(G("C:n=5"))

    def test_two_disjoint_when_two_cuts(self):
        # graphs with >= 2 cut vertices own two vertex-disjoint members
        for n in range(4, 9):
            for g in connected_classes(n):
                if len(cut_vertices(g)) < 2:
                    continue
                blocks = s_pendant_blocks(g)
                assert any(
                    b1.vertices.isdisjoint(b2.vertices)
                    for b1, b2 in itertools.combinations(blocks, 2)
                )


class TestSpecialVertices:
    def test_lollipop_tags(self):
        fs = spec("L", n=6, g=5)
        g = build(fs)
        assert g.degree(special_vertex(fs, "pendant")) == 1
        assert g.degree(special_vertex(fs, "cut")) == 3

    def test_pathstar_tags(self):
        fs = spec("PS", k=4, m=3)
        g = build(fs)
        assert g.degree(special_vertex(fs, "path_end")) == 1
        assert g.degree(special_vertex(fs, "center")) == 4
