"""Canonical forms, automorphisms, and vertex orbits for small graphs.

Self-contained refinement-plus-backtracking canonical labeling: partitions
are refined to equitability, the first non-singleton cell is branched on,
and the lexicographically smallest relabeled adjacency key over all leaves
is the canonical form.  Discovered automorphisms prune sibling branches, so
highly symmetric graphs stay cheap.  Intended for n <= ~12.
"""

from __future__ import annotations

from .graph import Graph


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Refine an ordered partition to equitability.

    Each cell is split by the vector of neighbor counts into every cell;
    fragments are ordered by that invariant, which keeps the cell order
    isomorphism-invariant.
    """
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & mk).bit_count() for mk in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(sig):
                    new_cells.append(tuple(sig[key]))
        cells = new_cells
        if not changed:
            return cells


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> bytes:
    """Upper-triangle adjacency bits of the relabeled graph, packed into bytes."""
    n = len(order)
    out = bytearray()
    acc = 0
    nbits = 0
    for j in range(1, n):
        aj = adj[order[j]]
        for i in range(j):
            acc = (acc << 1) | (aj >> order[i] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


class _Canonizer:
    def __init__(self, adj: tuple[int, ...], n: int, colors: tuple[int, ...] | None):
        self.adj = adj
        self.n = n
        if colors is None:
            cells = [tuple(range(n))]
        else:
            groups: dict[int, list[int]] = {}
            for v, c in enumerate(colors):
                groups.setdefault(c, []).append(v)
            cells = [tuple(groups[c]) for c in sorted(groups)]
        self.initial = cells
        self.best_key: bytes | None = None
        self.best_order: list[int] | None = None
        self.first_key: bytes | None = None
        self.first_order: list[int] | None = None
        self.automorphisms: list[tuple[int, ...]] = []

    def run(self) -> None:
        self._search(_refine(self.adj, self.initial), [])

    def _search(self, cells: list[tuple[int, ...]], fixed: list[int]) -> None:
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            key = _leaf_key(self.adj, order)
            if self.first_key is None:
                self.first_key, self.first_order = key, order
            elif key == self.first_key and order != self.first_order:
                self._record(self.first_order, order)
            if self.best_key is None or key < self.best_key:
                self.best_key = key
                self.best_order = order
            elif key == self.best_key and order != self.best_order:
                self._record(self.best_order, order)
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if self._pruned(v, explored, fixed):
                continue
            rest = tuple(u for u in cell if u != v)
            child = cells[:target] + [(v,), rest] + cells[target + 1 :]
            self._search(_refine(self.adj, child), fixed + [v])
            explored.append(v)

    def _record(self, ref: list[int], order: list[int]) -> None:
        # two equal-key leaves give an automorphism (ref[i] -> order[i])
        perm = [0] * self.n
        for i, v in enumerate(order):
            perm[ref[i]] = v
        self.automorphisms.append(tuple(perm))

    def _pruned(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        # skip v if a known automorphism fixing the branch prefix maps an
        # already-explored sibling onto it
        for a in self.automorphisms:
            if all(a[b] == b for b in fixed):
                for u in explored:
                    if a[u] == v:
                        return True
        return False


def canonical_labeling(
    g: Graph, colors: tuple[int, ...] | None = None
) -> tuple[bytes, tuple[int, ...], list[tuple[int, ...]]]:
    """Canonical key, the order achieving it (new index -> old vertex),
    and a generating list of automorphisms found along the way.

    With ``colors``, only color-preserving relabelings compete and the
    color sequence is folded into the key.
    """
    c = _Canonizer(g.adj, g.n, colors)
    c.run()
    assert c.best_order is not None
    key = bytes([g.n]) + c.best_key
    if colors is not None:
        key += bytes(colors[v] & 0xFF for v in c.best_order)
    return key, tuple(c.best_order), c.automorphisms


def canonical_key(g: Graph, colors: tuple[int, ...] | None = None) -> bytes:
    return canonical_labeling(g, colors)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of ``g``."""
    _, order, _ = canonical_labeling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def vertex_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Orbits of the automorphism group, from the generators discovered
    during canonical labeling (sufficient to generate the group)."""
    _, _, gens = canonical_labeling(g)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in gens:
        for v in range(g.n):
            ra, rv = find(a[v]), find(v)
            if ra != rv:
                parent[ra] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(vs)) for vs in groups.values())
