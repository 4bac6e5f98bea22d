import pytest

from sccolour import Graph, colour, graph_to_complex, is_colourable, reduction_size_report, translate_colouring
from sccolour.colourings import Assignment, ColourScheme
from sccolour.errors import ColouringError, EmptyInput, InvalidInput
from sccolour.graph import chromatic_number, complete_graph
from sccolour.reductions import (
    LEMMAS,
    edge_line_graph,
    get_lemma,
    graph_total_graph,
    is_edge_k_colourable,
    is_total_k_colourable,
    source_colouring,
    source_valid,
    target_valid,
)

from corpus import all_graphs

GRAPHS = all_graphs(5)
ids = lambda G: f"{len(G)}v{len(G.edges)}e"  # noqa: E731


def source_holds(lemma, G, k):
    return {
        "vertex": lambda: chromatic_number(G) <= k,
        "edge": lambda: is_edge_k_colourable(G, k),
        "total": lambda: is_total_k_colourable(G, k),
    }[lemma.source]()


def test_graph_to_complex():
    X = graph_to_complex(Graph("abc", [("a", "b")]))
    assert X.dim == 1 and X.face_counts() == [3, 1]
    with pytest.raises(EmptyInput):
        graph_to_complex(Graph())


def test_graph_side_derived_graphs():
    K3 = complete_graph("abc")
    assert chromatic_number(edge_line_graph(K3)) == 3
    assert chromatic_number(graph_total_graph(K3)) == 3
    assert chromatic_number(graph_total_graph(complete_graph("abcd"))) == 5


@pytest.mark.parametrize("name", ["c1", "L_C4", "c8_c10", "C9C11"])
def test_get_lemma_aliases(name):
    assert get_lemma(name).id in LEMMAS


def test_unknown_lemma():
    with pytest.raises(ColouringError):
        get_lemma("c3")


@pytest.mark.parametrize("lemma_id", sorted(LEMMAS))
@pytest.mark.parametrize("G", GRAPHS, ids=ids)
@pytest.mark.parametrize("k", [2, 3, 4])
def test_lemma_equivalence_and_round_trip(lemma_id, G, k):
    lemma = LEMMAS[lemma_id]
    X = graph_to_complex(G)
    holds = source_holds(lemma, G, k)
    for target in lemma.targets:
        if target.tag in ("C10", "C11") and not G.edges:
            continue  # no admissible dimension on a 0-dimensional complex
        assert is_colourable(X, target, k + lemma.shift) == holds
    phi = source_colouring(lemma, G, k)
    assert (phi is not None) == holds
    if phi is None:
        return
    a = translate_colouring(lemma, "forward", G, phi, k)
    assert a.k == k + lemma.shift
    assert target_valid(lemma, X, a)
    assert translate_colouring(lemma, "backward", G, a, k) == phi
    # backward also works from an independently found target colouring
    b = colour(X, lemma.targets[0], k + lemma.shift)
    psi = translate_colouring(lemma, "backward", G, b, k)
    assert source_valid(lemma, G, psi, k)


def test_invalid_translations():
    G = complete_graph("abc")
    with pytest.raises(InvalidInput):
        translate_colouring("c1", "forward", G, {"a": 1, "b": 1, "c": 2}, 3)
    with pytest.raises(InvalidInput):
        translate_colouring("c1", "backward", G, Assignment("vertices", 3, {"a": 1, "b": 1, "c": 2}), 3)
    with pytest.raises(InvalidInput):
        translate_colouring("c4", "backward", G, Assignment("vertices", 3, {"a": 1, "b": 2, "c": 3}), 3)
    with pytest.raises(ValueError):
        translate_colouring("c1", "sideways", G, {}, 3)


def test_c4_backward_renames_the_spare_colour():
    G = Graph("ab", [("a", "b")])
    X = graph_to_complex(G)
    a = Assignment("faces", 3, {"a": 3, "b": 1, "a+b": 2})
    assert target_valid("c4", X, a)
    out = translate_colouring("c4", "backward", G, a, 2)
    assert out == {"a": 2, "b": 1}


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_size_report_is_linear(n):
    G = complete_graph([str(i) for i in range(n)])
    r = reduction_size_report("c1", G)
    assert r.complex_faces == n + n * (n - 1) // 2
    assert r.complex_faces <= r.graph_bits
    assert r.ratio == r.complex_faces / r.graph_bits


def test_scheme_targets():
    assert LEMMAS["c7"].targets == (ColourScheme("PS", 1),)
    assert [s.tag for s in LEMMAS["c9c11"].targets] == ["C9", "C11"]
