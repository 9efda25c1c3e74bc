"""Counting by cut-vertex decomposition.

A cut vertex ``w`` splits a connected graph into edge-disjoint parts that
pairwise meet only in ``w``.  Totals and per-vertex counts then follow from
three rules, applied recursively until only 2-connected blocks remain,
where brute-force census takes over:

* merge:     F(G) = F(G1) + F(G2) - 1 + (f_{G1}(w) - 1)(f_{G2}(w) - 1)
* vertex:    f_G(v) = f_{G1}(v) + f_{G1}(v, w) (f_{G2}(w) - 1)   for v in G1
* product:   f_G(w) = prod over parts of f_part(w)

``block_expansion_count`` evaluates the full expansion of F(G) around one
block with s cut vertices (2^s terms over subsets of its cut vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import census
from .graph import Block, Graph, block_cut_tree, cut_vertices


@dataclass(frozen=True)
class SplitPart:
    """One side of a split: a re-labeled connected subgraph plus the map
    back to the original vertex ids (``vertices[new_id] == old_id``)."""

    graph: Graph
    vertices: tuple[int, ...]
    w_local: int


@dataclass(frozen=True)
class SplitAtCutVertex:
    w: int
    parts: tuple[SplitPart, ...]


def split_at(g: Graph, w: int) -> SplitAtCutVertex:
    """Split at a cut vertex: one part per component of G - w, re-attached to w."""
    cuts = cut_vertices(g)
    if w not in cuts:
        raise ValueError(f"vertex {w} is not a cut vertex")
    full = (1 << g.n) - 1
    remaining = full & ~(1 << w)
    parts = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component(g, start, remaining)
        remaining &= ~comp
        verts = comp | (1 << w)
        sub, old = g.subgraph_on(_bits(verts))
        parts.append(SplitPart(sub, old, old.index(w)))
    return SplitAtCutVertex(w, tuple(parts))


def _component(g: Graph, start: int, allowed: int) -> int:
    reached = 1 << start
    frontier = reached
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~reached
        reached |= frontier
    return reached


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def merge_count(F1: int, F2: int, f1w: int, f2w: int) -> int:
    """Total count of two parts glued at one shared vertex."""
    return F1 + F2 - 1 + (f1w - 1) * (f2w - 1)


# Memo keys: ("F", graph), ("f", graph, v), ("pair", graph, u, v).  One memo
# dict lives per top-level call, so repeated parts inside a single
# evaluation are counted once but nothing is shared across evaluations.


def cut_vertex_subgraph_number(g: Graph, w: int) -> int:
    """f_G(w) for a cut vertex: the product over the parts at w."""
    return _product_at(g, w, {})


def _product_at(g: Graph, w: int, memo: dict) -> int:
    result = 1
    for part in split_at(g, w).parts:
        result *= _f(part.graph, part.w_local, memo)
    return result


def count_via_decomposition(g: Graph) -> int:
    """F(G): split at a cut vertex and fold parts pairwise with the merge
    rule; 2-connected graphs go straight to census."""
    return _F(g, {})


def _F(g: Graph, memo: dict) -> int:
    key = ("F", g)
    if key in memo:
        return memo[key]
    cuts = cut_vertices(g)
    if not cuts:
        val = census.count_connected_subgraphs(g)
    else:
        w = min(cuts)
        total_F = total_fw = None
        for part in split_at(g, w).parts:
            F = _F(part.graph, memo)
            fw = _f(part.graph, part.w_local, memo)
            if total_F is None:
                total_F, total_fw = F, fw
            else:
                total_F = merge_count(total_F, F, total_fw, fw)
                total_fw *= fw
        val = total_F
    memo[key] = val
    return val


def subgraph_number_via_decomposition(g: Graph, v: int) -> int:
    """f_G(v) by splitting at a cut vertex that separates v's part."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return _f(g, v, {})


def _f(g: Graph, v: int, memo: dict) -> int:
    key = ("f", g, v)
    if key in memo:
        return memo[key]
    cuts = cut_vertices(g)
    if not cuts:
        val = census.subgraph_number(g, v)
    elif cuts == {v}:
        val = _product_at(g, v, memo)
    else:
        # split at the cut vertex leaving v in the smallest part
        full = (1 << g.n) - 1
        best_w = min(
            (w for w in cuts if w != v),
            key=lambda w: (_component(g, v, full & ~(1 << w)).bit_count(), w),
        )
        split = split_at(g, best_w)
        mine = next(p for p in split.parts if v in p.vertices)
        v_local = mine.vertices.index(v)
        f1 = _f(mine.graph, v_local, memo)
        f1vw = _pair(mine.graph, v_local, mine.w_local, memo)
        f2 = 1
        for part in split.parts:
            if part is not mine:
                f2 *= _f(part.graph, part.w_local, memo)
        val = f1 + f1vw * (f2 - 1)
    memo[key] = val
    return val


def _pair(g: Graph, u: int, v: int, memo: dict) -> int:
    key = ("pair", g, u, v)
    if key in memo:
        return memo[key]
    val = census.count_containing(g, (u, v))
    memo[key] = val
    return val


def _branch_at(g: Graph, block: Block, w: int) -> SplitPart:
    """The maximal subgraph hanging off block ``block`` at its cut vertex w
    (everything reachable from w without entering the block)."""
    full = (1 << g.n) - 1
    inside = 0
    for u in block.vertices:
        inside |= 1 << u
    allowed = full & ~inside
    reach = 1 << w
    frontier = g.adj[w] & allowed
    reach |= frontier
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~reach
        reach |= frontier
    sub, old = g.subgraph_on(_bits(reach))
    return SplitPart(sub, old, old.index(w))


def block_expansion_count(g: Graph, block: Block | frozenset[int]) -> int:
    """F(G) via the expansion around one block B with cut vertices w1..ws:

        F(B) + sum_i (F(G_i) - 1) + sum_i (f_B(w_i) - 1)(f_i - 1)
             + sum over subsets S with |S| >= 2 of f_B(S) prod_{i in S} (f_i - 1)

    where G_i is the branch at w_i and f_i = f_{G_i}(w_i).
    """
    bct = block_cut_tree(g)
    if isinstance(block, frozenset):
        matches = [b for b in bct.blocks if b.vertices == block]
    else:
        matches = [b for b in bct.blocks if b.vertices == block.vertices]
    if not matches:
        raise ValueError("not a block of the graph")
    b = matches[0]
    ws = sorted(b.vertices & bct.cut_vertices)
    bgraph, old = g.subgraph_on(b.vertices)
    local = {w: old.index(w) for w in ws}
    table = census.connected_set_table(bgraph)
    size = 1 << bgraph.n

    def f_block(req: tuple[int, ...]) -> int:
        mask = 0
        for w in req:
            mask |= 1 << local[w]
        return sum(table[S] for S in range(size) if S & mask == mask)

    branches = {w: _branch_at(g, b, w) for w in ws}
    memo: dict = {}
    fb = {}
    Fb = {}
    for w, part in branches.items():
        fb[w] = _f(part.graph, part.w_local, memo)
        Fb[w] = _F(part.graph, memo)

    total = sum(table) + sum(Fb[w] - 1 for w in ws)
    for w in ws:
        total += (f_block((w,)) - 1) * (fb[w] - 1)
    for r in range(2, len(ws) + 1):
        for subset in combinations(ws, r):
            term = f_block(subset)
            for w in subset:
                term *= fb[w] - 1
            total += term
    return total
