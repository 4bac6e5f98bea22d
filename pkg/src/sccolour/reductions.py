"""Graph problems reduced to colouring problems on one-dimensional complexes.

A graph G is read as the complex whose faces are its vertices and edges.
Each lemma pairs a source problem on G (vertex, edge or total colouring)
with a target scheme on that complex, possibly with one extra colour, and
comes with explicit translations of colourings in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .colourings import Assignment, ColourScheme, check
from .complex import SimplicialComplex, check_label, face_name
from .errors import ColouringError, EmptyInput, InvalidInput
from .graph import Graph, graph_bits, is_k_colourable, verify_colouring


@dataclass(frozen=True)
class Lemma:
    id: str
    source: str  # "vertex", "edge" or "total"
    targets: tuple  # target schemes; the first one is used for forward output
    shift: int  # target palette = k + shift


LEMMAS = {
    "c1": Lemma("c1", "vertex", (ColourScheme("C1"),), 0),
    "c4": Lemma("c4", "vertex", (ColourScheme("C4"),), 1),
    "c5": Lemma("c5", "edge", (ColourScheme("C5"),), 1),
    "c6": Lemma("c6", "total", (ColourScheme("C6"),), 0),
    "c7": Lemma("c7", "vertex", (ColourScheme("PS", 1),), 0),
    "c8c10": Lemma("c8c10", "vertex", (ColourScheme("C8"), ColourScheme("C10")), 0),
    "c9c11": Lemma("c9c11", "edge", (ColourScheme("C9"), ColourScheme("C11")), 0),
}


def get_lemma(lemma) -> Lemma:
    if isinstance(lemma, Lemma):
        return lemma
    key = str(lemma).lower().replace("l_", "").replace("_", "")
    try:
        return LEMMAS[key]
    except KeyError:
        raise ColouringError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}") from None


def graph_to_complex(G: Graph) -> SimplicialComplex:
    if not G.vertices:
        raise EmptyInput("cannot build a complex from the empty graph")
    for v in G.vertices:
        check_label(v)
    return SimplicialComplex([{v} for v in G.vertices] + [set(e) for e in G.edges])


def _edge_names(G: Graph) -> list[str]:
    return sorted(face_name(e) for e in G.edges)


def edge_line_graph(G: Graph) -> Graph:
    """Edges of G, adjacent when they share an endpoint."""
    edges = sorted(G.edges, key=face_name)
    return Graph(
        [face_name(e) for e in edges],
        [(face_name(d), face_name(e)) for d, e in combinations(edges, 2) if d & e],
    )


def graph_total_graph(G: Graph) -> Graph:
    """Vertices and edges of G; adjacency, edge adjacency and incidence."""
    edges = sorted(G.edges, key=face_name)
    links = [tuple(e) for e in G.edges]
    links += [(face_name(d), face_name(e)) for d, e in combinations(edges, 2) if d & e]
    links += [(v, face_name(e)) for e in edges for v in e]
    return Graph(list(G.vertices) + [face_name(e) for e in edges], links)


def is_edge_k_colourable(G: Graph, k: int) -> bool:
    return is_k_colourable(edge_line_graph(G), k) is not None


def is_total_k_colourable(G: Graph, k: int) -> bool:
    return is_k_colourable(graph_total_graph(G), k) is not None


def _source_graph(lemma: Lemma, G: Graph) -> Graph:
    if lemma.source == "vertex":
        return G
    if lemma.source == "edge":
        return edge_line_graph(G)
    return graph_total_graph(G)


def source_colouring(lemma, G: Graph, k: int) -> dict | None:
    """A colouring solving the lemma's source problem on G, or ``None``."""
    return is_k_colourable(_source_graph(get_lemma(lemma), G), k)


def source_valid(lemma, G: Graph, colouring: dict, k: int) -> bool:
    H = _source_graph(get_lemma(lemma), G)
    if set(colouring) != set(H.vertices):
        return False
    if any(not 1 <= c <= k for c in colouring.values()):
        return False
    return verify_colouring(H, colouring)


def target_valid(lemma, X: SimplicialComplex, a: Assignment) -> bool:
    return any(check(X, s, a) for s in get_lemma(lemma).targets)


def _swap(colours: dict, a: int, b: int) -> dict:
    swap = {a: b, b: a}
    return {e: swap.get(c, c) for e, c in colours.items()}


def _forward(lemma: Lemma, G: Graph, phi: dict, k: int) -> Assignment:
    X = graph_to_complex(G)
    vertices = list(X.vertices)
    edges = _edge_names(G)
    if lemma.id in ("c1", "c7"):
        return Assignment("vertices", k, dict(phi))
    if lemma.id == "c6":
        return Assignment("faces", k, dict(phi))
    if lemma.id == "c4":
        out = {v: phi[v] for v in vertices} | {e: k + 1 for e in edges}
        return Assignment("faces", k + 1, out)
    if lemma.id == "c5":
        out = {v: k + 1 for v in vertices} | {e: phi[e] for e in edges}
        return Assignment("faces", k + 1, out)
    if lemma.id == "c8c10":
        return Assignment("faces", k, {v: phi[v] for v in vertices} | {e: k for e in edges})
    # c9c11
    return Assignment("faces", k, {v: k for v in vertices} | {e: phi[e] for e in edges})


def _backward(lemma: Lemma, G: Graph, a: Assignment, k: int) -> dict:
    X = graph_to_complex(G)
    colours = dict(a.colours)
    vertices = list(X.vertices)
    edges = _edge_names(G)
    if lemma.id in ("c1", "c7", "c6"):
        return colours
    if lemma.id == "c4":
        if not edges:
            # an edgeless graph accepts any vertex colouring
            return {v: min(colours[v], k) for v in vertices}
        colours = _swap(colours, max(colours[e] for e in edges), k + 1)
        return {v: colours[v] for v in vertices}
    if lemma.id == "c5":
        colours = _swap(colours, max(colours[v] for v in vertices), k + 1)
        return {e: colours[e] for e in edges}
    if lemma.id == "c8c10":
        return {v: colours[v] for v in vertices}
    return {e: colours[e] for e in edges}


def translate_colouring(lemma, direction: str, G: Graph, colouring, k: int):
    """Carry a colouring across a reduction.

    ``forward`` takes a source-side colouring of G (a dict) with palette
    ``k`` and returns an :class:`Assignment` on ``graph_to_complex(G)`` with
    palette ``k + shift``.  ``backward`` goes the other way.
    """
    lemma = get_lemma(lemma)
    if direction == "forward":
        if not source_valid(lemma, G, colouring, k):
            raise InvalidInput(f"not a valid {lemma.source} {k}-colouring of the graph")
        out = _forward(lemma, G, colouring, k)
        assert target_valid(lemma, graph_to_complex(G), out)
        return out
    if direction == "backward":
        X = graph_to_complex(G)
        if colouring.k != k + lemma.shift or not target_valid(lemma, X, colouring):
            raise InvalidInput(f"not a valid {lemma.targets[0]} {k + lemma.shift}-colouring of the complex")
        out = _backward(lemma, G, colouring, k)
        assert source_valid(lemma, G, out, k)
        return out
    raise ValueError("direction must be 'forward' or 'backward'")


class SizeReport(NamedTuple):
    graph_bits: int
    complex_faces: int
    ratio: float


def reduction_size_report(lemma, G: Graph) -> SizeReport:
    """Adjacency-matrix bit length of G against the face count of its complex."""
    get_lemma(lemma)
    bits = graph_bits(len(G.vertices))
    faces = len(G.vertices) + len(G.edges)
    return SizeReport(bits, faces, faces / bits if bits else 0.0)
