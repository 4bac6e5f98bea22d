import json

import pytest
from hypothesis import given, strategies as st

from sccolour import from_facets, homogeneity, is_connected, is_strongly_connected, skeleton
from sccolour.complex import SimplicialComplex, complex_from_json, face_name, load_complex, parse_cx
from sccolour.derived import derive
from sccolour.errors import BadLabel, EmptyFace, EmptyInput, NotAComplex
from sccolour.graph import is_connected_graph

from oracles import closure

TRI = [["a", "b", "c"]]

facet_lists = st.lists(
    st.sets(st.sampled_from("abcde"), min_size=1, max_size=4), min_size=1, max_size=5
)


def test_full_triangle_closure():
    X = from_facets(TRI)
    assert len(X) == 7
    assert X.face_counts() == [3, 3, 1]
    assert X.dim == 2


def test_two_edges():
    X = from_facets([["a", "b"], ["b", "c"]])
    assert len(X) == 5
    assert X.dim == 1


@pytest.mark.parametrize("facets, exc", [
    ([], EmptyInput),
    ([[]], EmptyFace),
    ([["a+b"]], BadLabel),
    ([["a:1"]], BadLabel),
    ([["#"]], BadLabel),
    ([["a b"]], BadLabel),
])
def test_from_facets_errors(facets, exc):
    with pytest.raises(exc):
        from_facets(facets)


def test_constructor_rejects_non_closed_family():
    with pytest.raises(NotAComplex):
        SimplicialComplex([{"a"}, {"a", "b"}])


def test_faces_of_dim():
    X = from_facets(TRI)
    assert {face_name(f) for f in X.faces_of_dim(1)} == {"a+b", "a+c", "b+c"}
    assert X.faces_of_dim(-1) == ()
    assert X.faces_of_dim(3) == ()
    Y = from_facets([["a", "b"], ["b", "c"]])
    assert {face_name(f) for f in Y.faces_of_dim(0)} == {"a", "b", "c"}


def test_skeleton():
    X = from_facets(TRI)
    assert skeleton(X, 1) == from_facets([["a", "b"], ["a", "c"], ["b", "c"]])
    assert skeleton(X, 0) == from_facets([["a"], ["b"], ["c"]])
    assert skeleton(X, 5) == X


@pytest.mark.parametrize("facets, expected", [
    (TRI, True),
    ([["a", "b"], ["c", "d"]], False),
    ([["a"]], True),
])
def test_is_connected(facets, expected):
    assert is_connected(from_facets(facets)) is expected


@pytest.mark.parametrize("facets, expected", [
    ([["a", "b", "c"], ["b", "c", "d"]], True),
    ([["a", "b", "c"], ["c", "d", "e"]], False),
    (TRI, True),
    ([["a"], ["b"]], False),
])
def test_is_strongly_connected(facets, expected):
    assert is_strongly_connected(from_facets(facets)) is expected


@pytest.mark.parametrize("facets, vh, pure", [
    ([["a", "b", "c"], ["c", "d"]], False, False),
    ([["a", "b", "c"], ["b", "c", "d"]], True, True),
    ([["a", "b", "c"], ["a", "b", "d"], ["c", "d"]], True, False),
])
def test_homogeneity(facets, vh, pure):
    assert homogeneity(from_facets(facets)) == (vh, pure)


def test_facets_and_round_trip_formats(tmp_path):
    X = from_facets([["a", "b", "c"], ["c", "d"]])
    assert [face_name(f) for f in X.facets()] == ["c+d", "a+b+c"]
    assert parse_cx("# comment\n" + X.to_cx()) == X
    assert complex_from_json(json.dumps(X.to_json())) == X
    p = tmp_path / "x.json"
    p.write_text(json.dumps(X.to_json()))
    assert load_complex(p) == X
    q = tmp_path / "x.cx"
    q.write_text(X.to_cx())
    assert load_complex(q) == X


@given(facet_lists)
def test_closure_matches_oracle(facets):
    X = from_facets(facets)
    assert set(X) == set(closure(facets))
    assert set(X.vertices) == set().union(*facets)
    assert X.dim == max(len(f) for f in facets) - 1
    for f in X:
        for v in f:
            if len(f) > 1:
                assert f - {v} in X


@given(facet_lists)
def test_pure_implies_vertex_homogeneous(facets):
    h = homogeneity(from_facets(facets))
    assert not h.pure or h.vertex_homogeneous


@given(facet_lists)
def test_strong_connectivity_is_top_descending_connectivity(facets):
    X = from_facets(facets)
    assert is_strongly_connected(X) == is_connected_graph(derive(X, "descending", X.dim))


@given(facet_lists, st.integers(1, 3))
def test_skeleton_keeps_homogeneity_and_strong_connectivity(facets, s):
    X = from_facets(facets)
    if not (homogeneity(X).pure and is_strongly_connected(X)) or s > X.dim:
        return
    Y = skeleton(X, s)
    assert homogeneity(Y).vertex_homogeneous
    assert is_strongly_connected(Y)
    assert Y.vertices == X.vertices
