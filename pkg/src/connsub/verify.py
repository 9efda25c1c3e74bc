"""Machine verification of the extremal claims and of the reference table.

Each named check exhaustively tests an inequality together with its exact
equality cases over every isomorphism class in range, reporting any
counterexample as a graph6 string.  ``verify_table1`` replays the published
table of minimum connected-subgraph counts: tier (a) recomputes the count
of every named graph, tier (b) re-runs the full search where the
generation cap allows and compares the minimizer set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import census, decompose, families
from .canon import canonical_graph, canonical_key, canonical_labeling
from .extremal import (
    ClassSpec,
    catalog,
    search_min_F,
    search_min_vertex_subgraph_number,
    subset_tables,
)
from .generate import connected_classes, rooted_classes
from .graph import Graph, block_cut_tree
from .graphio import parse_graph6, serialize_graph6


@dataclass
class CheckItem:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class VerdictReport:
    name: str
    items: list[CheckItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.items.append(CheckItem(label, passed, detail))

    def lines(self) -> list[str]:
        out = []
        for item in self.items:
            status = "PASS" if item.passed else "FAIL"
            suffix = f"  [{item.detail}]" if item.detail else ""
            out.append(f"{status}  {self.name}: {item.label}{suffix}")
        return out


def _g6(g: Graph) -> str:
    return serialize_graph6(g)


def _canon_g6(g: Graph) -> str:
    return serialize_graph6(canonical_graph(g))


@lru_cache(maxsize=None)
def _family_key(text: str) -> bytes:
    return canonical_key(families.build(families.parse_family_spec(text)))


@lru_cache(maxsize=None)
def _superset_indices(n: int, mask: int):
    return np.asarray([S for S in range(1 << n) if S & mask == mask])


# ---------------------------------------------------------------------------
# theorem checks


def _check_edge_monotonicity(n_max: int) -> VerdictReport:
    """Deleting any edge strictly decreases the total count and every
    per-vertex count."""
    rep = VerdictReport("edge-monotonicity")
    for n in range(2, n_max + 1):
        bad = None
        for g in connected_classes(n):
            F = census.count_connected_subgraphs(g)
            fs = [census.subgraph_number(g, v) for v in range(n)]
            for u, v in g.edges:
                h = g.remove_edge(u, v)
                if census.count_connected_subgraphs(h) >= F:
                    bad = f"{_g6(g)} edge ({u},{v}) total"
                    break
                if any(census.subgraph_number(h, x) >= fs[x] for x in range(n)):
                    bad = f"{_g6(g)} edge ({u},{v}) vertex count"
                    break
            if bad:
                break
        rep.add(f"strict decrease for every edge, n={n}", bad is None, bad or "")
    return rep


def _check_two_connected_vertex_floor(n_max: int) -> VerdictReport:
    """Over 2-connected graphs on n >= 3 vertices, every vertex count is at
    least (n^2+n+2)/2, with equality exactly on the cycle."""
    rep = VerdictReport("two-connected-vertex-floor")
    for n in range(3, n_max + 1):
        bound = (n * n + n + 2) // 2
        cycle = _family_key(f"C:n={n}")
        cycle_attains = False
        bad = None
        for rec in catalog(n, "all"):
            if rec.k != 0:
                continue
            if rec.f_min < bound:
                bad = f"{rec.g6} has vertex count {rec.f_min} < {bound}"
                break
            if rec.f_min == bound:
                if canonical_key(rec.graph) == cycle:
                    cycle_attains = True
                else:
                    bad = f"{rec.g6} ties the cycle floor"
                    break
        if bad is None and not cycle_attains:
            bad = "cycle does not attain its own floor"
        rep.add(f"floor (n^2+n+2)/2 with cycle equality, n={n}", bad is None, bad or "")
    return rep


def _check_cycle_pair_count(n_max: int) -> VerdictReport:
    """On a cycle, the count of subgraphs containing two vertices at
    distance d is (n^2+2d^2-2nd+n+2)/2; maximal exactly at d=1, and the
    floor (n^2+2n+4)/4 is met exactly at d=n/2 (so only for even n)."""
    rep = VerdictReport("cycle-pair-count")
    for n in range(3, n_max + 1):
        g = families.build(families.spec("C", n=n))
        ok = True
        detail = ""
        for d in range(1, n // 2 + 1):
            got = census.count_containing(g, (0, d))
            want = (n * n + 2 * d * d - 2 * n * d + n + 2) // 2
            if got != want:
                ok, detail = False, f"d={d}: {got} != {want}"
                break
            if 4 * got < n * n + 2 * n + 4 or got > (n * n - n + 4) // 2:
                ok, detail = False, f"d={d}: bound violated"
                break
            if got == (n * n - n + 4) // 2 and d != 1:
                ok, detail = False, f"d={d}: upper equality away from d=1"
                break
            if 4 * got == n * n + 2 * n + 4 and 2 * d != n:
                ok, detail = False, f"d={d}: lower equality away from d=n/2"
                break
        rep.add(f"pair formula and equality cases, n={n}", ok, detail)
    return rep


def _check_block_pair_floor(n_max: int) -> VerdictReport:
    """For graphs with k <= n-3 cut vertices, except the 4-star: any two
    vertices of any block have pair count at least 2(n-k)-1."""
    rep = VerdictReport("block-pair-floor")
    star4 = _family_key("S:n=4")
    for n in range(3, n_max + 1):
        bad = None
        recs = catalog(n, "all")
        for lo in range(0, len(recs), 512):
            chunk = recs[lo : lo + 512]
            tables = subset_tables([r.graph for r in chunk])
            for row, rec in zip(tables, chunk):
                if rec.k > n - 3:
                    continue
                if n == 4 and canonical_key(rec.graph) == star4:
                    continue
                bound = 2 * (n - rec.k) - 1
                for blk in block_cut_tree(rec.graph).blocks:
                    vs = sorted(blk.vertices)
                    for i in range(len(vs)):
                        for j in range(i + 1, len(vs)):
                            mask = (1 << vs[i]) | (1 << vs[j])
                            got = int(row[_superset_indices(n, mask)].sum())
                            if got < bound:
                                bad = f"{rec.g6} pair ({vs[i]},{vs[j]}): {got} < {bound}"
                                break
                        if bad:
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        rep.add(f"pair floor 2(n-k)-1 within blocks, n={n}", bad is None, bad or "")
    return rep


def _lollipop_pendant_floor(n: int, k: int) -> int:
    return ((n - k) * (n - k) + n + k + 2) // 2


def _check_vertex_floor_nontree(n_max: int) -> VerdictReport:
    """Over non-trees with k cut vertices the vertex-count floor is
    ((n-k)^2+n+k+2)/2, attained only by the lollipop at its pendant."""
    rep = VerdictReport("vertex-floor-nontree")
    for n in range(4, n_max + 1):
        for k in range(1, n - 2):
            report = search_min_vertex_subgraph_number(ClassSpec(n, k, subset="nontrees"))
            want = _lollipop_pendant_floor(n, k)
            fs = families.spec("L", n=n, g=n - k)
            lol = families.build(fs)
            want_keys = {canonical_key(lol)}
            got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
            ok = report.minimum == want and got_keys == want_keys
            if ok:
                # the argmin orbit must be exactly the pendant's image
                pendant = families.special_vertex(fs, "pendant")
                canon = _canon_g6(lol)
                idx = report.minimizers.index(canon)
                _, order, _ = canonical_labeling(lol)
                pos = [0] * lol.n
                for i, v in enumerate(order):
                    pos[v] = i
                ok = report.argmin_vertices[idx] == (pos[pendant],)
            rep.add(
                f"n={n} k={k}: floor {want} uniquely lollipop at pendant",
                ok,
                "" if ok else f"got {report.minimum} at {report.minimizers}",
            )
    return rep


def _expected_vertex_floor(n: int, k: int) -> tuple[int, set[bytes]]:
    lollipop = _lollipop_pendant_floor(n, k)
    broom = (1 << (n - k - 1)) + k
    if k <= n - 6:
        return lollipop, {_family_key(f"L:n={n},g={n - k}")}
    if k == n - 5:
        return 16 + k, {
            _family_key(f"PS:k={k + 1},m=4"),
            _family_key(f"L:n={n},g=5"),
        }
    return broom, {_family_key(f"PS:k={k + 1},m={n - k - 1}")}


def _check_vertex_floor_three_regime(n_max: int) -> VerdictReport:
    """Vertex-count minimum over all of C_{n,k}: lollipop regime for
    k <= n-6, the lollipop/broom tie at k = n-5, broom regime above."""
    rep = VerdictReport("vertex-floor-three-regime")
    for n in range(4, n_max + 1):
        for k in range(1, n - 2):
            want, want_keys = _expected_vertex_floor(n, k)
            report = search_min_vertex_subgraph_number(ClassSpec(n, k))
            got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
            ok = report.minimum == want and got_keys == want_keys
            rep.add(
                f"n={n} k={k}: floor {want} with exact minimizer set",
                ok,
                "" if ok else f"got {report.minimum} at {report.minimizers}",
            )
    return rep


def _check_tree_vertex_floor(n_max: int) -> VerdictReport:
    """Over trees the vertex-count floor is 2^{n-k-1}+k, attained only by
    the broom at its path-end pendant."""
    rep = VerdictReport("tree-vertex-floor")
    for n in range(3, n_max + 1):
        for k in range(1, n - 1):
            report = search_min_vertex_subgraph_number(ClassSpec(n, k, subset="trees"))
            if report.class_size == 0:
                continue
            want = (1 << (n - k - 1)) + k
            want_keys = {_family_key(f"PS:k={k + 1},m={n - k - 1}")}
            got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
            ok = report.minimum == want and got_keys == want_keys
            rep.add(
                f"n={n} k={k}: tree floor {want} uniquely broom",
                ok,
                "" if ok else f"got {report.minimum} at {report.minimizers}",
            )
    return rep


def _check_tree_count_floor(n_max: int) -> VerdictReport:
    """Over trees with k >= 2 cut vertices the total-count floor is the
    balanced double broom, uniquely."""
    rep = VerdictReport("tree-count-floor")
    for n in range(4, n_max + 1):
        for k in range(2, n - 1):
            report = search_min_F(ClassSpec(n, k, subset="trees"))
            if report.class_size == 0:
                continue
            want = families.balanced_double_broom_F(n, k)
            r = n - k
            want_keys = {_family_key(f"T:l={r // 2},m={(r + 1) // 2},d={k}")}
            got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
            ok = report.minimum == want and got_keys == want_keys
            rep.add(
                f"n={n} k={k}: balanced double broom floor {want}",
                ok,
                "" if ok else f"got {report.minimum} at {report.minimizers}",
            )
    return rep


def _check_count_floor_girth(n_max: int) -> VerdictReport:
    """Over non-trees with k cut vertices and girth >= k the total-count
    floor is the lollipop; at n = 2k+1 with k >= 3 exactly one more graph
    ties, the cycle-broom."""
    rep = VerdictReport("count-floor-girth")
    for n in range(4, n_max + 1):
        for k in range(1, n - 2):
            report = search_min_F(ClassSpec(n, k, min_girth=k, subset="nontrees"))
            expect_empty = n < k + max(3, k)
            if report.class_size == 0 or expect_empty:
                rep.add(
                    f"n={n} k={k}: class empty iff n < k + max(3,k)",
                    (report.class_size == 0) == expect_empty,
                    f"classes={report.class_size}",
                )
                continue
            want = families.closed_form_F(families.spec("L", n=n, g=n - k))
            want_keys = {_family_key(f"L:n={n},g={n - k}")}
            if n == 2 * k + 1 and k >= 3:
                want_keys.add(_family_key(f"Q:n={n},k={k}"))
            got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
            ok = report.minimum == want and got_keys == want_keys
            rep.add(
                f"n={n} k={k}: girth-floored count minimum {want}",
                ok,
                "" if ok else f"got {report.minimum} at {report.minimizers}",
            )
    return rep


def _check_pendant_share_limit(n_max: int) -> VerdictReport:
    """On every vertex-count minimizer over non-trees, the block holding
    the argmin vertex shares each of its cut vertices with at most four
    other blocks, and with two or more only if all of them are pendant
    edges."""
    rep = VerdictReport("pendant-share-limit")
    for n in range(5, n_max + 1):
        for k in range(1, n - 2):
            report = search_min_vertex_subgraph_number(ClassSpec(n, k, subset="nontrees"))
            if report.class_size == 0:
                continue
            bad = None
            for g6s, argmins in zip(report.minimizers, report.argmin_vertices):
                g = parse_graph6(g6s)
                bct = block_cut_tree(g)
                pend = set(bct.pendant_block_indices())
                for v0 in argmins:
                    holders = [i for i, b in enumerate(bct.blocks) if v0 in b.vertices]
                    for bi in holders:
                        blk = bct.blocks[bi]
                        for w in sorted(blk.vertices & bct.cut_vertices):
                            others = [j for j in bct.blocks_at(w) if j != bi]
                            if len(others) > 4:
                                bad = f"{g6s}: {len(others)} other blocks at {w}"
                            elif len(others) >= 2 and any(
                                j not in pend or len(bct.blocks[j].vertices) != 2
                                for j in others
                            ):
                                bad = f"{g6s}: non-pendant-edge sharer at {w}"
                            if bad:
                                break
                        if bad:
                            break
                    if bad:
                        break
                if bad:
                    break
            rep.add(f"n={n} k={k}: sharer limit on minimizers", bad is None, bad or "")
    return rep


def _glue_with_offset(g1: Graph, r1: int, g2: Graph, r2: int):
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
    return Graph.from_edges(g1.n + g2.n - 1, edges), mapping


def _check_branch_move_decrease(pairs: int = 60, seed: int = 7) -> VerdictReport:
    """Moving a whole branch from a shared cut vertex to a deeper vertex
    strictly decreases every vertex count in the untouched part."""
    rep = VerdictReport("branch-move-decrease")
    rng = random.Random(seed)
    pool = []
    for n in (2, 3, 4):
        pool.extend(rooted_classes(n))
    tested = 0
    bad = None
    while tested < pairs and bad is None:
        g1, r1 = pool[rng.randrange(len(pool))]
        g2, r2 = pool[rng.randrange(len(pool))]
        g3, r3 = pool[rng.randrange(len(pool))]
        base, mapping = _glue_with_offset(g1, r1, g2, r2)
        w = r1
        g2_copy = [mapping[v] for v in range(g2.n) if v != r2]
        wprime = g2_copy[rng.randrange(len(g2_copy))]
        g_orig, _ = _glue_with_offset(base, w, g3, r3)
        g_star, _ = _glue_with_offset(base, wprime, g3, r3)
        for v in range(g1.n):
            fo = decompose.subgraph_number_via_decomposition(g_orig, v)
            fs_ = decompose.subgraph_number_via_decomposition(g_star, v)
            if not fs_ < fo:
                bad = f"{_g6(g_orig)} -> {_g6(g_star)} at v={v}: {fs_} !< {fo}"
                break
        tested += 1
    rep.add(f"strict decrease on {tested} constructed pairs", bad is None, bad or "")
    return rep


_THEOREMS = {
    "edge-monotonicity": (_check_edge_monotonicity, 6),
    "two-connected-vertex-floor": (_check_two_connected_vertex_floor, 8),
    "cycle-pair-count": (_check_cycle_pair_count, 12),
    "block-pair-floor": (_check_block_pair_floor, 8),
    "pendant-share-limit": (_check_pendant_share_limit, 9),
    "vertex-floor-nontree": (_check_vertex_floor_nontree, 9),
    "vertex-floor-three-regime": (_check_vertex_floor_three_regime, 9),
    "tree-vertex-floor": (_check_tree_vertex_floor, 9),
    "tree-count-floor": (_check_tree_count_floor, 9),
    "count-floor-girth": (_check_count_floor_girth, 9),
    "branch-move-decrease": (_check_branch_move_decrease, None),
}


def theorem_names() -> tuple[str, ...]:
    return tuple(_THEOREMS)


def verify_theorem(name: str, n_max: int | None = None) -> VerdictReport:
    if name not in _THEOREMS:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(_THEOREMS)}")
    fn, default_max = _THEOREMS[name]
    if default_max is None:
        return fn()
    return fn(min(n_max, default_max) if n_max is not None else default_max)


# ---------------------------------------------------------------------------
# the reference table

#: printed entries of the published minimum table: (n, k) -> (family spec, value);
#: cells printed as "no graph exists" hold None.
REFERENCE_TABLE: dict[tuple[int, int], tuple[str, int] | None] = {
    (12, 1): ("L:n=12,g=11", 190),
    (12, 2): ("L:n=12,g=10", 216),
    (12, 3): ("L:n=12,g=9", 226),
    (12, 4): ("L:n=12,g=8", 223),
    (12, 5): ("L:n=12,g=7", 210),
    (12, 6): ("T:l=3,m=3,d=6", 160),
    (11, 1): ("L:n=11,g=10", 163),
    (11, 2): ("L:n=11,g=9", 177),
    (11, 3): ("L:n=11,g=8", 179),
    (11, 4): ("L:n=11,g=7", 176),
    (11, 5): ("T:l=3,m=3,d=5", 140),
    (11, 6): ("T:l=2,m=3,d=6", 107),
    (10, 1): ("L:n=10,g=9", 129),
    (10, 2): ("L:n=10,g=8", 142),
    (10, 3): ("L:n=10,g=7", 143),
    (10, 4): ("T:l=3,m=3,d=4", 121),
    (10, 5): ("T:l=2,m=3,d=5", 91),
    (10, 6): ("T:l=2,m=2,d=6", 70),
    (9, 1): ("L:n=9,g=8", 103),
    (9, 2): ("L:n=9,g=7", 111),
    (9, 3): ("T:l=3,m=3,d=3", 103),
    (9, 4): ("T:l=2,m=3,d=4", 76),
    (9, 5): ("T:l=2,m=2,d=5", 58),
    (9, 6): ("T:l=1,m=2,d=6", 51),
    (8, 1): ("L:n=8,g=7", 80),
    (8, 2): ("L:n=8,g=6", 84),
    (8, 3): ("T:l=2,m=3,d=3", 62),
    (8, 4): ("T:l=2,m=2,d=4", 47),
    (8, 5): ("T:l=1,m=2,d=5", 41),
    (8, 6): ("P:n=6", 21),
    (7, 1): ("L:n=7,g=6", 60),
    (7, 2): ("T:l=2,m=3,d=2", 49),
    (7, 3): ("T:l=2,m=2,d=3", 47),
    (7, 4): ("T:l=1,m=2,d=4", 32),
    (7, 5): ("P:n=5", 15),
    (7, 6): None,
    (6, 1): ("S:n=6", 37),
    (6, 2): ("T:l=2,m=2,d=2", 28),
    (6, 3): ("T:l=1,m=2,d=3", 24),
    (6, 4): ("P:n=4", 10),
    (6, 5): None,
    (6, 6): None,
}

#: cells whose printed graph is a path on fewer vertices than the class
#: column; their printed entry is self-consistent, so tier (a) checks it as
#: printed, while tier (b) reports the search outcome without asserting it.
PATH_LABELED_CELLS = {(6, 4), (7, 5), (8, 6)}


@dataclass
class CellResult:
    n: int
    k: int
    spec_text: str | None
    printed: int | None
    computed: int | None
    matches_printed: bool
    remark: str = ""


@dataclass
class TierBResult:
    n: int
    k: int
    minimum: int | None
    minimizers: tuple[str, ...]
    class_size: int
    printed_value: int | None
    printed_in_minimizers: bool
    value_matches_printed: bool
    remark: str = ""


@dataclass
class Table1Report:
    tier_a: list[CellResult]
    tier_b: list[TierBResult]
    notes: list[str]

    @property
    def tier_a_passed(self) -> bool:
        return all(c.matches_printed for c in self.tier_a)

    @property
    def passed(self) -> bool:
        return self.tier_a_passed and all(
            b.printed_in_minimizers and b.value_matches_printed
            for b in self.tier_b
            if (b.n, b.k) not in PATH_LABELED_CELLS
        )

    def lines(self) -> list[str]:
        out = []
        for c in self.tier_a:
            status = "PASS" if c.matches_printed else "FAIL"
            name = c.spec_text or "empty"
            printed = "-" if c.printed is None else str(c.printed)
            computed = "-" if c.computed is None else str(c.computed)
            extra = f"  [{c.remark}]" if c.remark else ""
            out.append(
                f"{status}  table1 tier-a cell (n={c.n}, k={c.k}): {name} "
                f"printed={printed} computed={computed}{extra}"
            )
        for b in self.tier_b:
            flagged = (b.n, b.k) in PATH_LABELED_CELLS
            ok = b.printed_in_minimizers and b.value_matches_printed
            status = "REPORT" if flagged else ("PASS" if ok else "FAIL")
            mins = "-" if b.minimum is None else str(b.minimum)
            out.append(
                f"{status}  table1 tier-b class (n={b.n}, k={b.k}): min={mins} "
                f"minimizers={','.join(b.minimizers)} classes={b.class_size}"
                + (f"  [{b.remark}]" if b.remark else "")
            )
        out.extend(f"NOTE  {note}" for note in self.notes)
        return out


def verify_table1(search_n_max: int = 9) -> Table1Report:
    tier_a: list[CellResult] = []
    for (n, k), cell in sorted(REFERENCE_TABLE.items()):
        if cell is None:
            empty_ok = True
            if n <= search_n_max:
                empty_ok = search_min_F(ClassSpec(n, k, min_girth=k)).class_size == 0
            tier_a.append(
                CellResult(n, k, None, None, None, empty_ok, remark="printed as empty")
            )
            continue
        spec_text, printed = cell
        g = families.build(families.parse_family_spec(spec_text))
        computed = decompose.count_via_decomposition(g)
        remark = ""
        if (n, k) in PATH_LABELED_CELLS:
            remark = f"printed graph has {g.n} vertices in a class of {n}-vertex graphs"
        elif computed != printed:
            remark = "printed value conflicts with the named graph's count"
        tier_a.append(
            CellResult(n, k, spec_text, printed, computed, computed == printed, remark)
        )

    tier_b: list[TierBResult] = []
    for (n, k), cell in sorted(REFERENCE_TABLE.items()):
        if n > search_n_max or n < 6 or cell is None:
            continue
        spec_text, printed = cell
        named_key = canonical_key(families.build(families.parse_family_spec(spec_text)))
        report = search_min_F(ClassSpec(n, k, min_girth=k))
        got_keys = {canonical_key(parse_graph6(s)) for s in report.minimizers}
        remark = ""
        if (n, k) in PATH_LABELED_CELLS:
            remark = "flagged cell: search result reported, not asserted"
        tier_b.append(
            TierBResult(
                n=n,
                k=k,
                minimum=report.minimum,
                minimizers=report.minimizers,
                class_size=report.class_size,
                printed_value=printed,
                printed_in_minimizers=named_key in got_keys,
                value_matches_printed=report.minimum == printed,
                remark=remark,
            )
        )

    notes = [
        "uniqueness for n >= 13 and for the full classes at n in 10..12 is outside "
        f"the generation cap; it is substituted by the named-value checks above and "
        f"by exhaustive search verification at n <= {search_n_max}.",
    ]
    return Table1Report(tier_a, tier_b, notes)


def verify_formulas(n_max: int = 12) -> VerdictReport:
    """Every family closed form equals the decomposition count, and every
    special-vertex closed form equals the census count."""
    rep = VerdictReport("formulas")
    specs: list[families.FamilySpec] = []
    specs.extend(families.spec("P", n=n) for n in range(1, n_max + 1))
    specs.extend(families.spec("C", n=n) for n in range(3, n_max + 1))
    specs.extend(families.spec("S", n=n) for n in range(2, n_max + 1))
    specs.extend(
        families.spec("L", n=n, g=g) for n in range(4, n_max + 1) for g in range(3, n)
    )
    specs.extend(
        families.spec("CC", n=n, m1=m1, m2=m2)
        for n in range(5, n_max + 1)
        for m1 in range(3, n)
        for m2 in range(m1, n)
        if m1 + m2 - 1 <= n
    )
    specs.extend(
        families.spec("PS", k=k, m=m)
        for k in range(1, n_max)
        for m in range(1, n_max + 1 - k)
    )
    specs.extend(
        families.spec("T", l=l, m=m, d=d)
        for d in range(2, n_max - 1)
        for l in range(1, n_max)
        for m in range(l, n_max)
        if l + m + d <= n_max
    )
    specs.extend(
        families.spec("Q", n=n, k=k)
        for n in range(6, n_max + 1)
        for k in range(2, n - 3)
    )
    for fs in specs:
        g = families.build(fs)
        want = families.closed_form_F(fs)
        got = decompose.count_via_decomposition(g)
        ok = want == got
        detail = "" if ok else f"closed form {want} != computed {got}"
        for tag in families.special_tags(fs.name):
            v = families.special_vertex(fs, tag)
            wf = families.closed_form_f(fs, tag)
            gf = census.subgraph_number(g, v)
            if wf != gf:
                ok = False
                detail += f" f[{tag}] {wf} != {gf}"
        rep.add(str(fs), ok, detail)
    return rep
