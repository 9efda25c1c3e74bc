"""Exhaustive minimizer searches over classes of small connected graphs.

A class is fixed by vertex count, exact cut-vertex count, an optional girth
floor, and a tree/non-tree restriction.  Search streams one canonical
representative per isomorphism class, evaluates exact counts for all of
them, and reports the full minimizer set.

Counting in the search loop runs through a batched version of the census
subset table with machine integers: every value involved is bounded by
2^m < 2^63 for the m <= 45 edges possible at the n <= 10 cap, so int64
arithmetic is exact here.  Equality with the census and decomposition
routes is asserted exhaustively in the test suite, and each reported
minimizer is re-checked through the decomposition path.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from . import decompose
from .generate import classes_with_cut_vertices, connected_classes
from .graph import Girth, Graph, cut_vertices, girth
from .graphio import serialize_graph6

GENERATION_CAP = 10

_SUBSETS = ("all", "trees", "nontrees")


@dataclass(frozen=True)
class ClassSpec:
    """Connected graphs on ``n`` vertices with exactly ``k`` cut vertices,
    girth at least ``min_girth`` (``None`` for no bound), optionally
    restricted to trees or non-trees."""

    n: int
    k: int
    min_girth: int | None = None
    subset: str = "all"

    def __post_init__(self):
        if not 1 <= self.n <= GENERATION_CAP:
            raise ValueError(f"n must be in 1..{GENERATION_CAP}")
        if not 0 <= self.k <= self.n:
            raise ValueError("k must be in 0..n")
        if self.subset not in _SUBSETS:
            raise ValueError(f"subset must be one of {_SUBSETS}")
        if self.min_girth is not None and self.min_girth < 1:
            raise ValueError("min_girth must be positive")


@dataclass(frozen=True)
class SearchReport:
    spec: ClassSpec
    objective: str  # "F" or "minf"
    minimum: int | None
    minimizers: tuple[str, ...]  # canonical graph6 strings
    argmin_vertices: tuple[tuple[int, ...], ...]  # per minimizer, minf only
    class_size: int
    wall_time_ms: int


@dataclass
class _Record:
    graph: Graph
    g6: str
    k: int
    total: int
    f_min: int
    f_argmin: tuple[int, ...]
    girth_cached: Girth | None = None

    def girth_value(self) -> Girth:
        if self.girth_cached is None:
            self.girth_cached = girth(self.graph)
        return self.girth_cached

    @property
    def is_tree(self) -> bool:
        return self.graph.m == self.graph.n - 1


# ---------------------------------------------------------------------------
# batched counting kernel

_CHUNK = 2048


@lru_cache(maxsize=None)
def _schedule(n: int):
    """Graph-independent (S, T-indices, rest-indices) recurrence schedule."""
    entries = []
    for S in range(1, 1 << n):
        low = S & -S
        rest = S ^ low
        if not rest:
            continue
        ts, rs = [], []
        sub = (rest - 1) & rest
        while True:
            ts.append(low | sub)
            rs.append(rest ^ sub)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        entries.append((S, np.asarray(ts), np.asarray(rs)))
    return entries


@lru_cache(maxsize=None)
def _vertex_masks(n: int):
    size = 1 << n
    return [np.asarray([S for S in range(size) if S >> v & 1]) for v in range(n)]


def subset_tables(graphs: Sequence[Graph]) -> np.ndarray:
    """Census subset tables for a batch of same-order graphs, int64-exact."""
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("batch must share a vertex count")
    if n > GENERATION_CAP:
        raise ValueError("batched tables support n <= 10 only")
    cnt = len(graphs)
    size = 1 << n
    adj = np.asarray([g.adj for g in graphs], dtype=np.int64)
    ecnt = np.zeros((cnt, size), dtype=np.int64)
    for S in range(1, size):
        low = S & -S
        rest = S ^ low
        if rest:
            v = low.bit_length() - 1
            ecnt[:, S] = ecnt[:, rest] + np.bitwise_count(adj[:, v] & rest)
    npow = np.left_shift(np.int64(1), ecnt)
    table = np.zeros((cnt, size), dtype=np.int64)
    for v in range(n):
        table[:, 1 << v] = 1
    for S, ts, rs in _schedule(n):
        acc = np.einsum("ij,ij->i", table[:, ts], npow[:, rs])
        table[:, S] = npow[:, S] - acc
    return table


def evaluate_counts(graphs: Sequence[Graph]) -> list[tuple[int, int, tuple[int, ...]]]:
    """(F, min_v f, argmin vertices) for each graph, exact."""
    out: list[tuple[int, int, tuple[int, ...]]] = []
    if not graphs:
        return out
    n = graphs[0].n
    masks = _vertex_masks(n)
    for lo in range(0, len(graphs), _CHUNK):
        chunk = graphs[lo : lo + _CHUNK]
        table = subset_tables(chunk)
        totals = table.sum(axis=1)
        fvals = np.stack([table[:, masks[v]].sum(axis=1) for v in range(n)], axis=1)
        fmin = fvals.min(axis=1)
        for i in range(len(chunk)):
            argmin = tuple(int(v) for v in np.nonzero(fvals[i] == fmin[i])[0])
            out.append((int(totals[i]), int(fmin[i]), argmin))
    return out


def _eval_worker(args: tuple[tuple[tuple[int, ...], ...], int]):
    adjs, n = args
    graphs = [Graph.from_adj(a) for a in adjs]
    return evaluate_counts(graphs)


def _evaluate_parallel(graphs: Sequence[Graph], jobs: int):
    if jobs <= 1 or len(graphs) <= _CHUNK:
        return evaluate_counts(graphs)
    n = graphs[0].n
    chunks = [
        (tuple(g.adj for g in graphs[lo : lo + _CHUNK]), n)
        for lo in range(0, len(graphs), _CHUNK)
    ]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(_eval_worker, chunks)
    out = []
    for part in parts:
        out.extend(part)
    return out


# ---------------------------------------------------------------------------
# catalogs

_catalog_cache: dict[tuple[int, str], list[_Record]] = {}


def _build_records(graphs: Iterable[Graph], jobs: int) -> list[_Record]:
    glist = list(graphs)
    evals = _evaluate_parallel(glist, jobs)
    records = []
    for g, (total, f_min, argmin) in zip(glist, evals):
        records.append(
            _Record(
                graph=g,
                g6=serialize_graph6(g),
                k=len(cut_vertices(g)),
                total=total,
                f_min=f_min,
                f_argmin=argmin,
            )
        )
    return records


def catalog(n: int, stratum: str = "cut", jobs: int = 1) -> list[_Record]:
    """Evaluated class records for one vertex count.

    ``stratum="cut"`` holds only classes with >= 1 cut vertex (cheap even at
    n = 9 via composition); ``stratum="all"`` holds every connected class
    and is practical through n = 8 (for larger n the 2-connected stratum
    must be generated by plain augmentation, which takes hours at n >= 9).
    """
    if stratum not in ("cut", "all"):
        raise ValueError("stratum must be 'cut' or 'all'")
    if (n, "all") in _catalog_cache:
        base = _catalog_cache[(n, "all")]
        return base if stratum == "all" else [r for r in base if r.k >= 1]
    if stratum == "cut":
        if (n, "cut") not in _catalog_cache:
            _catalog_cache[(n, "cut")] = _build_records(
                classes_with_cut_vertices(n), jobs
            )
        return _catalog_cache[(n, "cut")]
    _catalog_cache[(n, "all")] = _build_records(connected_classes(n), jobs)
    return _catalog_cache[(n, "all")]


def _matches(rec: _Record, spec: ClassSpec) -> bool:
    if rec.k != spec.k:
        return False
    if spec.subset == "trees" and not rec.is_tree:
        return False
    if spec.subset == "nontrees" and rec.is_tree:
        return False
    if spec.min_girth is not None and spec.min_girth >= 4:
        if not rec.girth_value().at_least(spec.min_girth):
            return False
    return True


def _class_records(spec: ClassSpec, jobs: int = 1) -> list[_Record]:
    if spec.n >= 2 and spec.k >= spec.n - 1:
        return []  # no graph has n or n-1 cut vertices
    stratum = "cut" if spec.k >= 1 else "all"
    return [r for r in catalog(spec.n, stratum, jobs) if _matches(r, spec)]


def generate(spec: ClassSpec, visitor: Callable[[Graph], None]) -> int:
    """Visit one canonical representative per isomorphism class of the
    class; returns the number of classes visited."""
    records = _class_records(spec)
    for rec in records:
        visitor(rec.graph)
    return len(records)


def _finalize(
    spec: ClassSpec,
    objective: str,
    records: list[_Record],
    value: Callable[[_Record], int],
    argmin: Callable[[_Record], tuple[int, ...]] | None,
    t0: float,
) -> SearchReport:
    minimum = None
    winners: list[_Record] = []
    for rec in records:
        v = value(rec)
        if minimum is None or v < minimum:
            minimum = v
            winners = [rec]
        elif v == minimum:
            winners.append(rec)
    winners.sort(key=lambda r: r.g6)
    for rec in winners:
        # integrity: the reported minimum must survive the decomposition route
        check = (
            decompose.count_via_decomposition(rec.graph)
            if objective == "F"
            else min(
                decompose.subgraph_number_via_decomposition(rec.graph, v)
                for v in range(rec.graph.n)
            )
        )
        if check != minimum:
            raise AssertionError(
                f"decomposition disagrees with search on {rec.g6}: {check} != {minimum}"
            )
    return SearchReport(
        spec=spec,
        objective=objective,
        minimum=minimum,
        minimizers=tuple(r.g6 for r in winners),
        argmin_vertices=tuple(argmin(r) for r in winners) if argmin else (),
        class_size=len(records),
        wall_time_ms=int((time.monotonic() - t0) * 1000),
    )


def search_min_F(spec: ClassSpec, jobs: int = 1) -> SearchReport:
    """Minimum total connected-subgraph count over the class, with the
    complete minimizer set."""
    t0 = time.monotonic()
    records = _class_records(spec, jobs)
    return _finalize(spec, "F", records, lambda r: r.total, None, t0)


def search_min_vertex_subgraph_number(spec: ClassSpec, jobs: int = 1) -> SearchReport:
    """Minimum over all (G, v) of the per-vertex count, with minimizing
    graphs and their argmin vertex sets."""
    t0 = time.monotonic()
    records = _class_records(spec, jobs)
    return _finalize(spec, "minf", records, lambda r: r.f_min, lambda r: r.f_argmin, t0)


def report_to_json_dict(report: SearchReport) -> dict:
    doc = {
        "class": {
            "n": report.spec.n,
            "k": report.spec.k,
            "min_girth": report.spec.min_girth,
            "subset": report.spec.subset,
        },
        "objective": report.objective,
        "minimum": None if report.minimum is None else str(report.minimum),
        "minimizers": list(report.minimizers),
        "class_size": report.class_size,
        "wall_time_ms": report.wall_time_ms,
    }
    if report.objective == "minf":
        doc["argmin_vertices"] = [list(t) for t in report.argmin_vertices]
    return doc


def report_summary_line(report: SearchReport) -> str:
    mins = "none" if report.minimum is None else str(report.minimum)
    return f"min={mins} minimizers={','.join(report.minimizers)} classes={report.class_size}"


def report_to_text(report: SearchReport) -> str:
    """Line-oriented rendering of a search report."""
    s = report.spec
    lines = [
        f"class: n={s.n} k={s.k} min_girth={s.min_girth or '-'} subset={s.subset}",
        f"objective: {report.objective}",
        f"minimum: {'none' if report.minimum is None else report.minimum}",
        f"class_size: {report.class_size}",
        f"wall_time_ms: {report.wall_time_ms}",
    ]
    for i, g6 in enumerate(report.minimizers):
        extra = ""
        if report.objective == "minf":
            extra = " argmin=" + ",".join(str(v) for v in report.argmin_vertices[i])
        lines.append(f"minimizer: {g6}{extra}")
    return "\n".join(lines) + "\n"
