"""Simple undirected graphs, graph combinators and an exact colouring engine."""

from __future__ import annotations

import json
import math
from collections import deque
from pathlib import Path
from typing import Iterable

from .errors import ColouringError, MissingVertex, NameClash


class Graph:
    """Finite simple undirected graph on string-named vertices.

    Vertex order is the order given at construction and is the canonical
    order used for tie-breaking by the solver and for serialisation.
    """

    __slots__ = ("vertices", "edges", "_adj", "_index")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = ()):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise NameClash("duplicate vertex names")
        adj = {v: set() for v in self.vertices}
        es = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ColouringError(f"loop at {u!r}: graphs are simple")
            for w in (u, v):
                if w not in adj:
                    raise MissingVertex(f"edge endpoint {w!r} is not a vertex")
            adj[u].add(v)
            adj[v].add(u)
            es.add(frozenset((u, v)))
        self.edges = frozenset(es)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def neighbours(self, v) -> frozenset:
        return self._adj[v]

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v) -> int:
        return len(self._adj[v])

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as ordered pairs, sorted by canonical vertex position."""
        idx = self._index
        pairs = [tuple(sorted(e, key=idx.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (idx[p[0]], idx[p[1]]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(p) for p in self.edge_list()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in self.edge_list()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_adjacency_text(self) -> str:
        n = len(self.vertices)
        rows = [str(n)]
        for u in self.vertices:
            rows.append(" ".join("1" if self.has_edge(u, v) else "0" for v in self.vertices))
        return "\n".join(rows) + "\n"

    def relabel(self, mapping) -> Graph:
        return Graph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in self.edge_list()))


def complete_graph(names: Iterable[str]) -> Graph:
    names = list(names)
    return Graph(names, [(u, v) for i, u in enumerate(names) for v in names[i + 1:]])


def graph_from_json(obj) -> Graph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Graph(obj["vertices"], [tuple(e) for e in obj["edges"]])


def graph_from_adjacency_text(text: str) -> Graph:
    """Parse ``n`` followed by ``n`` rows of 0/1; vertices are named 1..n."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = int(lines[0])
    rows = []
    for ln in lines[1:n + 1]:
        cells = ln.split() if " " in ln else list(ln)
        rows.append([int(c) for c in cells])
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ColouringError("adjacency matrix must be n rows of n entries")
    names = [str(i + 1) for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ColouringError("adjacency matrix must be symmetric")
            if rows[i][j]:
                edges.append((names[i], names[j]))
    return Graph(names, edges)


def load_graph(path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return graph_from_adjacency_text(text)


def verify_colouring(G: Graph, colouring: dict) -> bool:
    missing = [v for v in G.vertices if v not in colouring]
    if missing:
        raise MissingVertex(f"colouring misses vertices {missing}")
    return all(colouring[u] != colouring[v] for u, v in G.edge_list())


def is_connected_graph(G: Graph) -> bool:
    """Connectivity; the empty graph counts as connected."""
    if not G.vertices:
        return True
    start = G.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in G.neighbours(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(G.vertices)


def _adjacency_lists(G: Graph) -> list[list[int]]:
    idx = G._index
    return [sorted(idx[w] for w in G.neighbours(v)) for v in G.vertices]


def _greedy_clique(adj: list[list[int]]) -> int:
    """Size of the largest clique found greedily from every start vertex."""
    best = 1 if adj else 0
    nbrs = [set(a) for a in adj]
    for v in range(len(adj)):
        clique = [v]
        cand = set(nbrs[v])
        while cand:
            w = max(cand, key=lambda u: (len(nbrs[u] & cand), -u))
            clique.append(w)
            cand &= nbrs[w]
        best = max(best, len(clique))
    return best


def _dsatur_search(adj: list[list[int]], k: int) -> list[int] | None:
    """Exact backtracking: branch on the most saturated vertex.

    Ties are broken by larger degree, then smaller index.  At most one
    previously unused colour is tried per node (unused colours are
    interchangeable), which keeps the search complete.
    """
    n = len(adj)
    colour = [0] * n
    # seen[v][c]: number of coloured neighbours of v with colour c
    seen = [[0] * (k + 2) for _ in range(n)]
    sat = [0] * n
    deg = [len(a) for a in adj]

    def pick():
        best, key = -1, None
        for v in range(n):
            if colour[v]:
                continue
            kv = (sat[v], deg[v], -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def assign(v, c):
        colour[v] = c
        for w in adj[v]:
            s = seen[w]
            if s[c] == 0:
                sat[w] += 1
            s[c] += 1

    def unassign(v):
        c = colour[v]
        colour[v] = 0
        for w in adj[v]:
            s = seen[w]
            s[c] -= 1
            if s[c] == 0:
                sat[w] -= 1

    # each frame: (vertex, candidate colours, next position, max colour used before)
    stack = []
    used = 0
    v = pick()
    if v < 0:
        return []
    stack.append([v, [c for c in range(1, min(k, used + 1) + 1) if not seen[v][c]], 0, used])
    while stack:
        frame = stack[-1]
        v, cands, pos, used_before = frame
        if colour[v]:
            unassign(v)
        if pos >= len(cands):
            stack.pop()
            continue
        c = cands[pos]
        frame[2] = pos + 1
        assign(v, c)
        used = max(used_before, c)
        w = pick()
        if w < 0:
            return colour
        stack.append([w, [c2 for c2 in range(1, min(k, used + 1) + 1) if not seen[w][c2]], 0, used])
    return None


def is_k_colourable(G: Graph, k: int) -> dict | None:
    """A proper colouring with colours ``1..k``, or ``None`` if none exists.

    Deterministic: the same graph always yields the same witness.
    """
    n = len(G.vertices)
    if n == 0:
        return {}
    if k <= 0:
        return None
    adj = _adjacency_lists(G)
    if not G.edges:
        return {v: 1 for v in G.vertices}
    if _greedy_clique(adj) > k:
        return None
    found = _dsatur_search(adj, k)
    if found is None:
        return None
    return dict(zip(G.vertices, found))


def chromatic_number(G: Graph) -> int:
    n = len(G.vertices)
    if n == 0:
        return 0
    if not G.edges:
        return 1
    k = max(2, _greedy_clique(_adjacency_lists(G)))
    while is_k_colourable(G, k) is None:
        k += 1
    return k


def _require_disjoint(G1: Graph, G2: Graph):
    clash = set(G1.vertices) & set(G2.vertices)
    if clash:
        raise NameClash(f"vertex names shared by both graphs: {sorted(clash)}")


def graph_disjoint_union(G1: Graph, G2: Graph) -> Graph:
    _require_disjoint(G1, G2)
    return Graph(G1.vertices + G2.vertices, G1.edge_list() + G2.edge_list())


def graph_overlay(G1: Graph, G2: Graph) -> Graph:
    """Union merging vertices with equal names."""
    extra = tuple(v for v in G2.vertices if v not in G1._index)
    return Graph(G1.vertices + extra, G1.edge_list() + G2.edge_list())


def graph_sum(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides (the join)."""
    _require_disjoint(G1, G2)
    cross = [(u, v) for u in G1.vertices for v in G2.vertices]
    return Graph(G1.vertices + G2.vertices, G1.edge_list() + G2.edge_list() + cross)


def product_name(u: str, v: str) -> str:
    return f"{u},{v}"


def graph_cartesian(G1: Graph, G2: Graph) -> Graph:
    vertices = [product_name(u, v) for u in G1.vertices for v in G2.vertices]
    edges = []
    for u in G1.vertices:
        for a, b in G2.edge_list():
            edges.append((product_name(u, a), product_name(u, b)))
    for v in G2.vertices:
        for a, b in G1.edge_list():
            edges.append((product_name(a, v), product_name(b, v)))
    return Graph(vertices, edges)


def graph_bits(n: int) -> int:
    """Length of the adjacency-matrix encoding of an ``n``-vertex graph."""
    return (math.ceil(math.log2(n)) if n > 1 else 0) + n * n
