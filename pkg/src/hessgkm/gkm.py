"""
The labeled graph of a Hessenberg function and its congruence checks.

Vertices are the permutations of ``[n]`` in lexicographic order. There is an
edge ``w -- w*(i, j)`` for each pair ``j < i <= h(j)``, labeled by the linear
form ``t_{w(i)} - t_{w(j)}`` read off the lexicographically smaller endpoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

from .combinatorics import DEFAULT_CAP_N, HessenbergFunction, Permutation, enumerate_group
from .errors import SizeMismatch
from .symbolic import Polynomial, divisible_by_linear

SCHEMA = "hess-gkm/1"

if TYPE_CHECKING:
    from .classes import EquivariantClass


@dataclass(frozen=True)
class Edge:
    w: Permutation
    v: Permutation
    j: int
    i: int

    @property
    def label(self) -> Polynomial:
        return Polynomial.linear(self.w.n, self.w(self.i), self.w(self.j))

    @property
    def variables(self) -> tuple[int, int]:
        """The pair ``(w(i), w(j))``; the label is their difference."""
        return self.w(self.i), self.w(self.j)


@dataclass(frozen=True)
class LabeledGraph:
    h: HessenbergFunction
    vertices: tuple[Permutation, ...]
    edges: tuple[Edge, ...]
    _index: dict = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.h.n

    def index(self, w: Permutation) -> int:
        return self._index[w]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for e in self.edges:
            a, b = self._index[e.w], self._index[e.v]
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, w: Permutation) -> int:
        return len(self.adjacency[self._index[w]])


def build_graph(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> LabeledGraph:
    vertices = tuple(enumerate_group(h.n, cap))
    index = {w: k for k, w in enumerate(vertices)}
    edges = []
    for w in vertices:
        for j, i in h.pairs:
            v = w.swap_positions(j, i)
            if index[w] < index[v]:
                edges.append(Edge(w, v, j, i))
    return LabeledGraph(h, vertices, tuple(edges), index)


def connected_components(g: LabeledGraph) -> list[frozenset[Permutation]]:
    """Vertex sets of the components, ordered by their first vertex."""
    parent = list(range(len(g.vertices)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in g.edges:
        ra, rb = find(g.index(e.w)), find(g.index(e.v))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[Permutation]] = {}
    for k, w in enumerate(g.vertices):
        groups.setdefault(find(k), []).append(w)
    return [frozenset(groups[r]) for r in sorted(groups)]


def check_gkm(f: EquivariantClass, g: LabeledGraph) -> bool:
    """Whether ``f(v) - f(w)`` is divisible by the label of every edge."""
    if f.n != g.n:
        raise SizeMismatch(f"class on S_{f.n} checked against a graph on S_{g.n}")
    for e in g.edges:
        a, b = e.variables
        if not divisible_by_linear(f(e.v) - f(e.w), a, b):
            return False
    return True


def first_gkm_violation(f: EquivariantClass, g: LabeledGraph) -> Edge | None:
    for e in g.edges:
        a, b = e.variables
        if not divisible_by_linear(f(e.v) - f(e.w), a, b):
            return e
    return None


def export_dot(g: LabeledGraph) -> str:
    lines = [f'graph "Gamma({g.h})" {{']
    for w in g.vertices:
        lines.append(f'  "{w}";')
    for e in g.edges:
        lines.append(f'  "{e.w}" -- "{e.v}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: LabeledGraph) -> dict:
    return {
        "schema": SCHEMA,
        "n": g.n,
        "h": list(g.h.values),
        "vertices": [str(w) for w in g.vertices],
        "edges": [
            {"w": str(e.w), "v": str(e.v), "transposition": [e.j, e.i], "label": str(e.label)}
            for e in g.edges
        ],
    }


def export_json(g: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def parse_json(text: str) -> LabeledGraph:
    data = json.loads(text)
    h = HessenbergFunction(tuple(data["h"]))
    if data["n"] != h.n:
        raise SizeMismatch(f"n = {data['n']} disagrees with h of size {h.n}")
    vertices = tuple(Permutation.parse(s) for s in data["vertices"])
    index = {w: k for k, w in enumerate(vertices)}
    edges = []
    for rec in data["edges"]:
        j, i = rec["transposition"]
        e = Edge(Permutation.parse(rec["w"]), Permutation.parse(rec["v"]), j, i)
        if e.label != Polynomial.parse(h.n, rec["label"]):
            raise ValueError(f"edge label {rec['label']!r} does not match {e.label}")
        edges.append(e)
    return LabeledGraph(h, vertices, tuple(edges), index)
