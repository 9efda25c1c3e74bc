"""Immutable bitset-backed simple graphs and their structural queries.

Vertices are dense integers ``0..n-1`` with ``n <= 64`` so every neighbor
set fits in one machine word.  All operations are pure; graphs are safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from typing import Iterable, Iterator

MAX_VERTICES = 64

Edge = tuple[int, int]


class DisconnectedGraphError(ValueError):
    """Raised when an operation that requires a connected graph gets one that is not."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count, sorted edge list, adjacency bitsets."""

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        sorted_edges = tuple(sorted(seen))
        adj = [0] * n
        for u, v in sorted_edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, sorted_edges, tuple(adj))

    @staticmethod
    def from_adj(adj: Iterable[int]) -> "Graph":
        """Build from adjacency bitmasks (must be symmetric and loop-free)."""
        masks = tuple(adj)
        n = len(masks)
        edges = []
        for u in range(n):
            m = masks[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    edges.append((u, v))
                m >>= 1
                v += 1
        return Graph.from_edges(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        m = self.adj[v]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise ValueError(f"no edge {e}")
        return Graph.from_edges(self.n, (x for x in self.edges if x != e))

    def subgraph_on(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``; returns it with the old-id tuple
        (new id ``i`` corresponds to ``old[i]``)."""
        old = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph.from_edges(len(old), edges), old

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabeled copy where old vertex ``v`` becomes ``perm[v]``."""
        p = tuple(perm)
        return Graph.from_edges(self.n, ((p[u], p[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Girth:
    """Length of a shortest cycle; ``value is None`` means the graph is acyclic."""

    value: int | None

    @staticmethod
    def finite(v: int) -> "Girth":
        if v < 3:
            raise ValueError("finite girth is at least 3")
        return Girth(v)

    @staticmethod
    def infinite() -> "Girth":
        return Girth(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def at_least(self, k: int) -> bool:
        return self.value is None or self.value >= k

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)


@dataclass(frozen=True)
class Block:
    """One block of a graph: a maximal 2-connected subgraph or a bridge (K2)."""

    vertices: frozenset[int]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # cut vertex -> sorted indices of blocks containing it
    incidence: tuple[tuple[int, tuple[int, ...]], ...]

    def blocks_at(self, w: int) -> tuple[int, ...]:
        for v, idxs in self.incidence:
            if v == w:
                return idxs
        return tuple(i for i, b in enumerate(self.blocks) if w in b.vertices)

    def pendant_block_indices(self) -> tuple[int, ...]:
        return tuple(
            i
            for i, b in enumerate(self.blocks)
            if len(b.vertices & self.cut_vertices) == 1
        )


def _reach_mask(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` staying inside ``allowed``."""
    reached = (1 << start) & allowed
    frontier = reached
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~reached
        reached |= frontier
    return reached


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return _reach_mask(g.adj, 0, full) == full


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation vertices, by a single DFS with low-link values."""
    _require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    result: set[int] = set()
    # iterative DFS; state = (vertex, neighbor iterator)
    timer = 0
    stack = [(0, iter(list(g.neighbors(0))))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, iter(list(g.neighbors(w)))))
                advanced = True
                break
            elif w != parent[v]:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    result.add(p)
    if root_children >= 2:
        result.add(0)
    return frozenset(result)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks and cut vertices.

    Bridges appear as 2-vertex blocks; a single-vertex graph gets one
    trivial block so that blocks always cover the vertex set.
    """
    _require_connected(g)
    n = g.n
    if n == 1:
        return BlockCutTree((Block(frozenset({0}), ()),), frozenset(), ())

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[Edge] = []
    block_edge_lists: list[list[Edge]] = []
    timer = 0

    disc[0] = low[0] = timer
    timer += 1
    stack = [(0, iter(list(g.neighbors(0))))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, iter(list(g.neighbors(w)))))
                advanced = True
                break
            elif w != parent[v] and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp: list[Edge] = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (p, v):
                            break
                    block_edge_lists.append(comp)
    if edge_stack:
        block_edge_lists.append(edge_stack)

    blocks = []
    for comp in block_edge_lists:
        verts = frozenset(x for e in comp for x in e)
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in comp))
        blocks.append(Block(verts, edges))
    blocks.sort(key=lambda b: (min(b.vertices), sorted(b.vertices)))

    counts: dict[int, list[int]] = {}
    for i, b in enumerate(blocks):
        for v in b.vertices:
            counts.setdefault(v, []).append(i)
    cuts = frozenset(v for v, idxs in counts.items() if len(idxs) >= 2)
    incidence = tuple((v, tuple(counts[v])) for v in sorted(cuts))
    return BlockCutTree(tuple(blocks), cuts, incidence)


def girth(g: Graph) -> Girth:
    """Shortest cycle length via BFS from every vertex; infinite for forests."""
    best: int | None = None
    adj = g.adj
    for root in range(g.n):
        dist = [-1] * g.n
        par = [-1] * g.n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] >= best:
                continue
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    q.append(w)
                elif w != par[u]:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
        if best == 3:
            break
    return Girth(best)


def distance(g: Graph, u: int, v: int) -> int:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if u == v:
        return 0
    dist = [-1] * g.n
    dist[u] = 0
    q = deque([u])
    while q:
        x = q.popleft()
        for w in g.neighbors(x):
            if dist[w] == -1:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                q.append(w)
    raise DisconnectedGraphError(f"no path between {u} and {v}")


def s_pendant_blocks(g: Graph) -> list[Block]:
    """Pendant blocks whose cut vertex lies in exactly one non-pendant block.

    Requires a connected graph with at least one cut vertex (pendant blocks
    only exist alongside cut vertices).
    """
    bct = block_cut_tree(g)
    if not bct.cut_vertices:
        raise ValueError("graph is 2-connected: no pendant blocks")
    pendant = set(bct.pendant_block_indices())
    result = []
    for i in sorted(pendant):
        b = bct.blocks[i]
        (w,) = b.vertices & bct.cut_vertices
        non_pendant_at_w = [j for j in bct.blocks_at(w) if j != i and j not in pendant]
        if len(non_pendant_at_w) == 1:
            result.append(b)
    return result
