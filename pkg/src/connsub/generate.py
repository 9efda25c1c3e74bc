"""Isomorphism-free generation of small connected graphs.

Two complementary strategies feed the extremal searches:

* ``connected_classes(n)`` -- level augmentation: every connected graph on
  ``m+1`` vertices is some connected graph on ``m`` vertices plus one new
  vertex attached to a non-empty subset; duplicates are removed with a
  canonical-form set per level.  Exact for any n, practical through n = 8.

* ``classes_with_cut_vertices(n)`` -- cut-vertex composition: every
  connected graph with a cut vertex is two smaller connected graphs (each
  with >= 2 vertices) glued at one vertex, and every such gluing has a cut
  vertex.  Gluing orbit representatives of all smaller classes therefore
  enumerates exactly the classes with k >= 1, never materializing the far
  larger 2-connected stratum.  This is what makes n = 9 searches cheap.

``naive_connected_classes(n)`` is the independent completeness oracle:
all 2^C(n,2) labeled graphs, deduplicated by canonical form.

Results are cached per process; all returned graphs are canonically
labeled, sorted by canonical key.
"""

from __future__ import annotations

from itertools import combinations

from .canon import canonical_key, canonical_labeling, vertex_orbits
from .graph import Graph, is_connected

_connected_cache: dict[int, tuple[Graph, ...]] = {}
_cut_cache: dict[int, tuple[Graph, ...]] = {}
_rooted_cache: dict[int, list[tuple[Graph, int]]] = {}


def _canonize(g: Graph) -> tuple[bytes, Graph]:
    key, order, _ = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return key, g.relabel(pos)


def connected_classes(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly n vertices, one canonical
    representative per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    if n in _connected_cache:
        return _connected_cache[n]
    if n == 1:
        result = (Graph.from_edges(1, []),)
        _connected_cache[1] = result
        return result
    found: dict[bytes, Graph] = {}
    for parent in connected_classes(n - 1):
        base = list(parent.edges)
        for subset in range(1, 1 << (n - 1)):
            edges = base + [(v, n - 1) for v in _bits(subset)]
            child = Graph.from_edges(n, edges)
            key, canon = _canonize(child)
            if key not in found:
                found[key] = canon
    result = tuple(found[k] for k in sorted(found))
    _connected_cache[n] = result
    return result


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def rooted_classes(n: int) -> list[tuple[Graph, int]]:
    """(graph, root) pairs: each connected class on n vertices with one root
    per vertex orbit."""
    if n in _rooted_cache:
        return _rooted_cache[n]
    out = []
    for g in connected_classes(n):
        for orbit in vertex_orbits(g):
            out.append((g, orbit[0]))
    _rooted_cache[n] = out
    return out


def _glue(g1: Graph, r1: int, g2: Graph, r2: int) -> Graph:
    """Identify root r2 of g2 with root r1 of g1."""
    n = g1.n + g2.n - 1
    mapping = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == r2:
            mapping[v] = r1
        else:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    edges.extend((mapping[u], mapping[v]) for u, v in g2.edges)
    return Graph.from_edges(n, edges)


def classes_with_cut_vertices(n: int) -> tuple[Graph, ...]:
    """All connected classes on n vertices having at least one cut vertex."""
    if n < 3:
        return ()
    if n in _cut_cache:
        return _cut_cache[n]
    found: dict[bytes, Graph] = {}
    for n1 in range(2, (n + 1) // 2 + 1):
        n2 = n + 1 - n1
        left = rooted_classes(n1)
        right = left if n2 == n1 else rooted_classes(n2)
        for i, (g1, r1) in enumerate(left):
            start = i if n2 == n1 else 0
            for g2, r2 in right[start:]:
                key, canon = _canonize(_glue(g1, r1, g2, r2))
                if key not in found:
                    found[key] = canon
    result = tuple(found[k] for k in sorted(found))
    _cut_cache[n] = result
    return result


def naive_connected_classes(n: int) -> tuple[Graph, ...]:
    """Completeness oracle: scan all labeled graphs on n vertices."""
    if n > 6:
        raise ValueError("naive generation is for n <= 6")
    if n == 1:
        return (Graph.from_edges(1, []),)
    pairs = list(combinations(range(n), 2))
    found: dict[bytes, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if not is_connected(g):
            continue
        key = canonical_key(g)
        if key not in found:
            _, canon = _canonize(g)
            found[key] = canon
    return tuple(found[k] for k in sorted(found))
