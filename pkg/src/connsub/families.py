"""Named graph families: constructors, closed-form counts, special vertices.

Families and their compact spec grammar (``NAME:key=int[,key=int...]``):

==========  =============================  ==========================================
name        parameters                     graph
==========  =============================  ==========================================
``P``       ``n >= 1``                     path on n vertices
``C``       ``n >= 3``                     cycle on n vertices
``S``       ``n >= 2``                     star K_{1,n-1}
``L``       ``3 <= g <= n-1``              cycle C_g with a pendant path, n vertices
``CC``      ``m1, m2 >= 3, n >= m1+m2-1``  two cycles joined by a (possibly empty) path
``PS``      ``k >= 1, m >= 1``             broom: path of k vertices, star K_{1,m}
                                           identified at the path's last vertex
``T``       ``l, m >= 1, d >= 2``          double broom: path of d vertices with l
                                           extra leaves at one end and m at the other
``Q``       ``k >= 2, n-k-1 >= 3``         cycle C_{n-k-1} glued to the path-end of
                                           the broom PS(k, 2)
==========  =============================  ==========================================

Labelings are fixed (cycle vertices first, then path and leaf vertices in
order) so serialized output is byte-stable.  Every closed form here is
cross-checked against brute-force counting in the test suite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

from .graph import Graph

_PARAM_NAMES = {
    "P": ("n",),
    "C": ("n",),
    "S": ("n",),
    "L": ("n", "g"),
    "CC": ("n", "m1", "m2"),
    "PS": ("k", "m"),
    "T": ("l", "m", "d"),
    "Q": ("n", "k"),
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if self.name not in _PARAM_NAMES:
            raise ValueError(f"unknown family {self.name!r}")
        got = tuple(k for k, _ in self.params)
        if got != _PARAM_NAMES[self.name]:
            raise ValueError(
                f"family {self.name} takes parameters {_PARAM_NAMES[self.name]}, got {got}"
            )
        _validate(self.name, dict(self.params))

    def __getitem__(self, key: str) -> int:
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def __str__(self) -> str:
        return f"{self.name}:" + ",".join(f"{k}={v}" for k, v in self.params)


def spec(name: str, **params: int) -> FamilySpec:
    order = _PARAM_NAMES.get(name, ())
    if set(params) != set(order):
        raise ValueError(f"family {name} takes parameters {order}")
    return FamilySpec(name, tuple((k, params[k]) for k in order))


def parse_family_spec(text: str) -> FamilySpec:
    m = re.fullmatch(r"([A-Za-z]+):((?:\w+=-?\d+)(?:,\w+=-?\d+)*)", text.strip())
    if not m:
        raise ValueError(f"bad family spec {text!r} (expected NAME:key=int,...)")
    name = m.group(1)
    params = {}
    for item in m.group(2).split(","):
        k, v = item.split("=")
        params[k] = int(v)
    return spec(name, **params)


def _validate(name: str, p: dict[str, int]) -> None:
    if name == "P" and p["n"] < 1:
        raise ValueError("path needs n >= 1")
    if name == "C" and p["n"] < 3:
        raise ValueError("cycle needs n >= 3")
    if name == "S" and p["n"] < 2:
        raise ValueError("star needs n >= 2")
    if name == "L":
        if not 3 <= p["g"] <= p["n"] - 1:
            raise ValueError("lollipop needs 3 <= g <= n-1 (use C for g = n)")
    if name == "CC":
        if p["m1"] < 3 or p["m2"] < 3:
            raise ValueError("dumbbell cycles need m1, m2 >= 3")
        if p["n"] < p["m1"] + p["m2"] - 1:
            raise ValueError("dumbbell needs n >= m1 + m2 - 1")
    if name == "PS":
        if p["k"] < 1 or p["m"] < 1:
            raise ValueError("broom needs k >= 1 and m >= 1")
    if name == "T":
        if p["l"] < 1 or p["m"] < 1 or p["d"] < 2:
            raise ValueError("double broom needs l, m >= 1 and d >= 2")
    if name == "Q":
        if p["k"] < 2 or p["n"] - p["k"] - 1 < 3:
            raise ValueError("Q needs k >= 2 and a cycle of length n-k-1 >= 3")


def build(fs: FamilySpec) -> Graph:
    """Construct the family graph with its fixed deterministic labeling."""
    p = dict(fs.params)
    name = fs.name
    if name == "P":
        n = p["n"]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "C":
        n = p["n"]
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "S":
        n = p["n"]
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if name == "L":
        n, g = p["n"], p["g"]
        edges = [(i, (i + 1) % g) for i in range(g)]
        prev = 0
        for v in range(g, n):
            edges.append((prev, v))
            prev = v
        return Graph.from_edges(n, edges)
    if name == "CC":
        n, m1, m2 = p["n"], p["m1"], p["m2"]
        t = n + 2 - m1 - m2  # number of path vertices shared with the cycles
        edges = [(i, (i + 1) % m1) for i in range(m1)]
        if t == 1:
            attach2 = 0
            second = [attach2] + list(range(m1, m1 + m2 - 1))
        else:
            prev = 0
            for v in range(m1, m1 + t - 2):
                edges.append((prev, v))
                prev = v
            attach2 = m1 + t - 2
            edges.append((prev, attach2))
            second = [attach2] + list(range(m1 + t - 1, n))
        for i in range(m2):
            edges.append((second[i], second[(i + 1) % m2]))
        return Graph.from_edges(n, edges)
    if name == "PS":
        k, m = p["k"], p["m"]
        n = k + m
        edges = [(i, i + 1) for i in range(k - 1)]
        edges.extend((k - 1, v) for v in range(k, n))
        return Graph.from_edges(n, edges)
    if name == "T":
        l, m, d = p["l"], p["m"], p["d"]
        n = l + m + d
        edges = [(i, i + 1) for i in range(d - 1)]
        edges.extend((0, v) for v in range(d, d + l))
        edges.extend((d - 1, v) for v in range(d + l, n))
        return Graph.from_edges(n, edges)
    if name == "Q":
        n, k = p["n"], p["k"]
        c = n - k - 1
        edges = [(i, (i + 1) % c) for i in range(c)]
        prev = 0
        for v in range(c, c + k - 1):  # remaining path vertices of the broom
            edges.append((prev, v))
            prev = v
        edges.append((prev, n - 2))
        edges.append((prev, n - 1))
        return Graph.from_edges(n, edges)
    raise AssertionError(name)


#: special-vertex tags defined per family
_SPECIAL = {
    "P": ("end",),
    "C": ("any",),
    "S": ("center", "leaf"),
    "L": ("pendant", "cut"),
    "CC": ("cut",),
    "PS": ("path_end", "center"),
    "T": (),
    "Q": ("glue",),
}


def special_tags(name: str) -> tuple[str, ...]:
    if name not in _SPECIAL:
        raise ValueError(f"unknown family {name!r}")
    return _SPECIAL[name]


def special_vertex(fs: FamilySpec, tag: str) -> int:
    """Vertex id of a designated special vertex in the ``build`` labeling."""
    p = dict(fs.params)
    name = fs.name
    if tag not in _SPECIAL.get(name, ()):
        raise ValueError(f"family {name} has no special vertex {tag!r}")
    if name == "P":
        return 0
    if name == "C":
        return 0
    if name == "S":
        return 0 if tag == "center" else 1
    if name == "L":
        return p["n"] - 1 if tag == "pendant" else 0
    if name == "CC":
        return 0
    if name == "PS":
        return 0 if tag == "path_end" else p["k"] - 1
    if name == "Q":
        return 0
    raise AssertionError(name)


def _cycle_F(n: int) -> int:
    return n * n + 1


def _cycle_f(n: int) -> int:
    return (n * n + n + 2) // 2


def _broom_F(k: int, m: int) -> int:
    return k * (k - 1) // 2 + k * (1 << m) + m


def _broom_f_path_end(k: int, m: int) -> int:
    return (1 << m) + k - 1


def closed_form_F(fs: FamilySpec) -> int:
    """Closed-form total count of connected subgraphs for the family."""
    p = dict(fs.params)
    name = fs.name
    if name == "P":
        return comb(p["n"] + 1, 2)
    if name == "C":
        return _cycle_F(p["n"])
    if name == "S":
        return (1 << (p["n"] - 1)) + p["n"] - 1
    if name == "L":
        n, g = p["n"], p["g"]
        k = n - g
        return k * (n * n + k * k - 2 * n * k + n + 3) // 2 + g * g + 1
    if name == "CC":
        n, m1, m2 = p["n"], p["m1"], p["m2"]
        k = n + 2 - m1 - m2
        return (
            m1 * m1 * m2 * m2
            + m1 * m1 * m2
            + 2 * m1 * m1 * k
            + m1 * m2 * m2
            + m1 * m2
            + 2 * m1 * k
            + 2 * m1 * m1
            + 2 * m2 * m2
            + 2 * m2 * m2 * k
            + 2 * m2 * k
            + 2 * k * k
            + 2 * k
            - 2 * m1
            - 2 * m2
        ) // 4
    if name == "PS":
        return _broom_F(p["k"], p["m"])
    if name == "T":
        l, m, d = p["l"], p["m"], p["d"]
        if abs(l - m) <= 1:
            return balanced_double_broom_F(l + m + d, d)
        # unbalanced case: fold the m-leaf star onto the broom holding the
        # l leaves, counts merged at the far path end
        F1 = _broom_F(d, l)
        f1 = _broom_f_path_end(d, l)
        F2 = (1 << m) + m
        f2 = 1 << m
        return F1 + F2 - 1 + (f1 - 1) * (f2 - 1)
    if name == "Q":
        n, k = p["n"], p["k"]
        c = n - k - 1
        F1 = _cycle_F(c)
        f1 = _cycle_f(c)
        F2 = _broom_F(k, 2)
        f2 = _broom_f_path_end(k, 2)
        return F1 + F2 - 1 + (f1 - 1) * (f2 - 1)
    raise AssertionError(name)


def balanced_double_broom_F(n: int, k: int) -> int:
    """Count for the balanced double broom on n vertices with k cut vertices,
    exactly as the parity-split closed form states it."""
    r = n - k
    if r % 2 == 0:
        return (k - 1) * (1 << ((r + 2) // 2)) + (1 << r) + r + comb(k - 1, 2)
    return 3 * (k - 1) * (1 << ((r - 1) // 2)) + (1 << r) + r + comb(k - 1, 2)


def closed_form_f(fs: FamilySpec, tag: str) -> int:
    """Closed-form subgraph number of the tagged special vertex."""
    p = dict(fs.params)
    name = fs.name
    if tag not in _SPECIAL.get(name, ()):
        raise ValueError(f"family {name} has no special vertex {tag!r}")
    if name == "P":
        return p["n"]
    if name == "C":
        return _cycle_f(p["n"])
    if name == "S":
        n = p["n"]
        return (1 << (n - 1)) if tag == "center" else (1 << (n - 2)) + 1
    if name == "L":
        n, g = p["n"], p["g"]
        k = n - g
        if tag == "pendant":
            return (g * g + n + k + 2) // 2
        return _cycle_f(g) * (n - g + 1)
    if name == "CC":
        n, m1, m2 = p["n"], p["m1"], p["m2"]
        if n == m1 + m2 - 1:
            return _cycle_f(m1) * _cycle_f(m2)
        # cut vertex on the first cycle: product of the cycle factor and the
        # pendant-vertex count of the remaining lollipop
        rest_n = n - m1 + 1
        rest_k = rest_n - m2
        return _cycle_f(m1) * ((m2 * m2 + rest_n + rest_k + 2) // 2)
    if name == "PS":
        k, m = p["k"], p["m"]
        return _broom_f_path_end(k, m) if tag == "path_end" else k * (1 << m)
    if name == "Q":
        n, k = p["n"], p["k"]
        return _cycle_f(n - k - 1) * _broom_f_path_end(k, 2)
    raise AssertionError(name)
