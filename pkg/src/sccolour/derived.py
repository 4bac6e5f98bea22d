"""Graphs derived from a simplicial complex (or from a vertex partition of one).

Vertex names are canonical face names.  Assemblies that need disjoint
copies (sums) prefix each dimension with ``d<r>:``; the total graph uses
``v:`` for vertices of the hypergraph and ``f:`` for simplices.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations

from .complex import SimplicialComplex, face_name, faces_connected
from .errors import BadDimension
from .graph import Graph, graph_cartesian, graph_overlay, graph_sum

KINDS = (
    "two_section",
    "line",
    "total",
    "exchange",
    "descending",
    "inclusion",
    "full",
    "complete_asc",
    "complete_desc",
    "cart_asc",
    "cart_desc",
)


def two_section(X: SimplicialComplex) -> Graph:
    return Graph(X.vertices, [sorted(e) for e in X.faces_of_dim(1)])


def line_graph(X: SimplicialComplex) -> Graph:
    faces = X.faces
    edges = [(face_name(s), face_name(t)) for s, t in combinations(faces, 2) if s & t]
    return Graph([face_name(f) for f in faces], edges)


def total_graph(X: SimplicialComplex, literal: bool = False) -> Graph:
    """Vertices ``v:u`` and simplices ``f:σ``; vertex–simplex edges by incidence.

    With ``literal=True`` every vertex is joined to every simplex instead.
    """
    vs = [f"v:{v}" for v in X.vertices]
    fs = [f"f:{face_name(f)}" for f in X]
    edges = [(f"v:{a}", f"v:{b}") for a, b in (sorted(e) for e in X.faces_of_dim(1))]
    edges += [(f"f:{face_name(s)}", f"f:{face_name(t)}") for s, t in combinations(X.faces, 2) if s & t]
    for u in X.vertices:
        for f in X:
            if literal or u in f:
                edges.append((f"v:{u}", f"f:{face_name(f)}"))
    return Graph(vs + fs, edges)


def _check_dim(X, r, lo, hi, what):
    if r is None or not lo <= r <= hi:
        raise BadDimension(f"{what} needs a dimension in [{lo}, {hi}], got {r!r}")


def exchange_graph(X: SimplicialComplex, r: int) -> Graph:
    """r-faces joined when their union is an (r+1)-face."""
    _check_dim(X, r, 0, X.dim, "exchange graph")
    faces = X.faces_of_dim(r)
    up = set(X.faces_of_dim(r + 1))
    edges = [(face_name(s), face_name(t)) for s, t in combinations(faces, 2) if s | t in up]
    return Graph([face_name(f) for f in faces], edges)


def descending_graph(X: SimplicialComplex, s: int) -> Graph:
    """s-faces joined when they meet in an (s-1)-face."""
    _check_dim(X, s, 0, X.dim, "descending graph")
    faces = X.faces_of_dim(s)
    down = set(X.faces_of_dim(s - 1))
    edges = [(face_name(a), face_name(b)) for a, b in combinations(faces, 2) if a & b in down]
    return Graph([face_name(f) for f in faces], edges)


def inclusion_graph(X: SimplicialComplex) -> Graph:
    edges = [(face_name(s), face_name(t)) for s, t in combinations(X.faces, 2) if s < t or t < s]
    return Graph([face_name(f) for f in X], edges)


def full_graph(X: SimplicialComplex) -> Graph:
    """Strict inclusion graph overlaid with G_0 and G'_1, ..., G'_n."""
    parts = [exchange_graph(X, 0)] + [descending_graph(X, s) for s in range(1, X.dim + 1)]
    return reduce(graph_overlay, parts, inclusion_graph(X))


def _prefixed(G: Graph, r: int) -> Graph:
    return G.relabel({v: f"d{r}:{v}" for v in G.vertices})


def complete_asc_graph(X: SimplicialComplex) -> Graph:
    parts = [_prefixed(exchange_graph(X, r), r) for r in range(X.dim + 1)]
    return reduce(graph_sum, parts)


def complete_desc_graph(X: SimplicialComplex) -> Graph:
    parts = [_prefixed(descending_graph(X, r), r) for r in range(X.dim + 1)]
    return reduce(graph_sum, parts)


def cart_asc_graph(X: SimplicialComplex) -> Graph:
    if X.dim < 1:
        raise BadDimension("the Cartesian ascending graph needs dim X >= 1")
    return reduce(graph_cartesian, [exchange_graph(X, r) for r in range(X.dim)])


def cart_desc_graph(X: SimplicialComplex) -> Graph:
    if X.dim < 1:
        raise BadDimension("the Cartesian descending graph needs dim X >= 1")
    return reduce(graph_cartesian, [descending_graph(X, s) for s in range(1, X.dim + 1)])


def parse_kind(text: str) -> tuple[str, int | None]:
    """``"exchange:1"`` -> ``("exchange", 1)``; dashes and underscores are interchangeable."""
    name, _, idx = text.partition(":")
    name = name.strip().lower().replace("-", "_")
    if name not in KINDS:
        raise BadDimension(f"unknown derived graph kind {text!r}")
    return name, int(idx) if idx else None


def derive(X: SimplicialComplex, kind: str, dim: int | None = None, *, literal_total: bool = False) -> Graph:
    name, idx = parse_kind(kind)
    if idx is not None:
        dim = idx
    if name == "two_section":
        return two_section(X)
    if name == "line":
        return line_graph(X)
    if name == "total":
        return total_graph(X, literal=literal_total)
    if name == "exchange":
        return exchange_graph(X, dim)
    if name == "descending":
        return descending_graph(X, dim)
    if name == "inclusion":
        return inclusion_graph(X)
    if name == "full":
        return full_graph(X)
    if name == "complete_asc":
        return complete_asc_graph(X)
    if name == "complete_desc":
        return complete_desc_graph(X)
    if name == "cart_asc":
        return cart_asc_graph(X)
    return cart_desc_graph(X)


def partition_graph(X: SimplicialComplex, P) -> Graph:
    """Blocks of ``P`` joined when their union induces a connected subcomplex."""
    P.require_partition_of(X)
    blocks = P.blocks
    edges = [
        (P.block_name(a), P.block_name(b))
        for a, b in combinations(blocks, 2)
        if faces_connected(X.induced(a | b))
    ]
    return Graph([P.block_name(b) for b in blocks], edges)
