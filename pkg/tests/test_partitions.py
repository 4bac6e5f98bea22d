import pytest
from hypothesis import given, strategies as st

from sccolour import Partition, bcp, chr_s_via_bcp, chromatic, from_facets, is_block_connected, is_s_independent
from sccolour.colourings import ColourScheme
from sccolour.errors import HypothesisViolated, NotAPartition, TooLarge

import oracles
from corpus import connected_complexes

TRI = from_facets([["a", "b", "c"]])


def names(parts):
    return [" | ".join("+".join(sorted(b)) for b in P.blocks) for P in parts]


def test_partition_is_canonical():
    assert Partition([["c"], ["b", "a"]]) == Partition([["a", "b"], ["c"]])
    assert Partition.from_json(Partition([["a"], ["b"]]).to_json()) == Partition([["b"], ["a"]])


@pytest.mark.parametrize("blocks", [[[]], [["a"], ["a", "b"]]])
def test_partition_rejects_bad_blocks(blocks):
    with pytest.raises(NotAPartition):
        Partition(blocks)


def test_bcp_of_the_triangle():
    assert names(bcp(TRI, 2)) == ["a+b | c", "a+c | b", "a | b+c", "a | b | c"]
    assert names(bcp(TRI, 1)) == ["a | b | c"]


def test_block_connectivity_and_independence():
    X = from_facets([["a", "b"], ["c", "d"], ["b", "c"]])
    assert is_block_connected(X, [["a", "b"], ["c", "d"]])
    assert not is_block_connected(X, [["a", "c"], ["b", "d"]])
    assert is_s_independent(X, [["a", "c"], ["b", "d"]], 1)
    assert not is_s_independent(X, [["a", "b"], ["c", "d"]], 1)
    with pytest.raises(NotAPartition):
        is_block_connected(X, [["a"]])


def test_cap_and_hypotheses():
    many = from_facets([[f"v{i}", f"v{i + 1}"] for i in range(13)])
    with pytest.raises(TooLarge):
        bcp(many, 1)
    with pytest.raises(HypothesisViolated):
        chr_s_via_bcp(from_facets([["a"], ["b"]]), 1)


def _all_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for P in _all_partitions(rest):
        yield [[head]] + P
        for i in range(len(P)):
            yield P[:i] + [[head] + P[i]] + P[i + 1:]


def _block_connected(faces, block):
    block = set(block)
    seen, stack = {min(block)}, [min(block)]
    while stack:
        u = stack.pop()
        for v in block - seen:
            if frozenset((u, v)) in faces:
                seen.add(v)
                stack.append(v)
    return seen == block


@pytest.mark.parametrize("X", connected_complexes(4))
@pytest.mark.parametrize("s", [1, 2])
def test_bcp_matches_definition(X, s):
    faces = frozenset(X)
    expected = set()
    for P in _all_partitions(list(X.vertices)):
        indep = not any(len(f) == s + 1 and f <= set(b) for f in faces for b in P)
        if indep and all(_block_connected(faces, b) for b in P):
            expected.add(Partition(P))
    assert set(bcp(X, s)) == expected


@pytest.mark.parametrize("X", connected_complexes(4))
@pytest.mark.parametrize("s", [1, 2, 3])
def test_chr_s_equals_ps_chromatic(X, s):
    assert chr_s_via_bcp(X, s) == chromatic(X, ColourScheme("PS", s)) == oracles.chromatic(frozenset(X), "PS", s)


@given(st.sampled_from(connected_complexes(4)), st.integers(1, 3))
def test_bcp_members_are_valid(X, s):
    for P in bcp(X, s):
        assert is_block_connected(X, P)
        assert is_s_independent(X, P, s)
        assert sorted(P.support) == list(X.vertices)
