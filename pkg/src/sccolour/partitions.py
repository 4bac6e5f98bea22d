"""Vertex partitions: s-independence, block connectivity and BCP^s enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .complex import SimplicialComplex, face_name, faces_connected, is_connected
from .derived import partition_graph
from .errors import EmptyBCP, HypothesisViolated, NotAPartition, TooLarge
from .graph import chromatic_number

DEFAULT_CAP = 12


@dataclass(frozen=True)
class Partition:
    blocks: tuple

    def __init__(self, blocks: Iterable[Iterable[str]]):
        bs = [frozenset(b) for b in blocks]
        if any(not b for b in bs):
            raise NotAPartition("blocks must be non-empty")
        seen = set()
        for b in bs:
            if seen & b:
                raise NotAPartition(f"blocks overlap on {sorted(seen & b)}")
            seen |= b
        object.__setattr__(self, "blocks", tuple(sorted(bs, key=lambda b: sorted(b))))

    @staticmethod
    def block_name(block) -> str:
        return face_name(block)

    @property
    def support(self) -> frozenset:
        return frozenset().union(*self.blocks)

    def require_partition_of(self, X: SimplicialComplex):
        if self.support != frozenset(X.vertices):
            raise NotAPartition("partition does not cover exactly the vertex set of the complex")

    def to_json(self) -> dict:
        return {"blocks": [sorted(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj) -> Partition:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["blocks"])

    def __repr__(self):
        return "Partition(" + " | ".join(face_name(b) for b in self.blocks) + ")"


def _as_partition(P) -> Partition:
    return P if isinstance(P, Partition) else Partition(P)


def _check_s(s):
    if s < 1:
        raise ValueError("s must be at least 1")


def is_s_independent(X: SimplicialComplex, P, s: int) -> bool:
    """No block contains an s-face of X."""
    _check_s(s)
    P = _as_partition(P)
    P.require_partition_of(X)
    return not any(f <= b for b in P.blocks for f in X.faces_of_dim(s))


def is_block_connected(X: SimplicialComplex, P) -> bool:
    P = _as_partition(P)
    P.require_partition_of(X)
    return all(faces_connected(X.induced(b)) for b in P.blocks)


def iter_bcp(X: SimplicialComplex, s: int, cap: int = DEFAULT_CAP) -> Iterator[Partition]:
    """Block-connected s-independent partitions in restricted-growth order."""
    _check_s(s)
    verts = X.vertices
    if len(verts) > cap:
        raise TooLarge(f"{len(verts)} vertices exceeds the enumeration cap of {cap}")
    sfaces = X.faces_of_dim(s)
    # s-faces whose largest vertex (in canonical order) is v: checked when v is placed
    pos = {v: i for i, v in enumerate(verts)}
    closing = {v: [] for v in verts}
    for f in sfaces:
        closing[max(f, key=pos.__getitem__)].append(f)
    blocks: list[set] = []

    def grow(i):
        if i == len(verts):
            P = Partition(blocks)
            if all(faces_connected(X.induced(b)) for b in P.blocks):
                yield P
            return
        v = verts[i]
        for j in range(len(blocks) + 1):
            if j == len(blocks):
                blocks.append({v})
            else:
                blocks[j].add(v)
            b = blocks[j]
            if not any(f <= b for f in closing[v]):
                yield from grow(i + 1)
            if len(b) == 1:
                blocks.pop()
            else:
                b.discard(v)

    yield from grow(0)


def bcp(X: SimplicialComplex, s: int, cap: int = DEFAULT_CAP) -> list[Partition]:
    return list(iter_bcp(X, s, cap))


def chr_s_via_bcp(X: SimplicialComplex, s: int, cap: int = DEFAULT_CAP) -> int:
    """The s-chromatic number as a minimum over BCP^s of partition-graph chromatic numbers."""
    if not is_connected(X):
        raise HypothesisViolated("the BCP formula is stated for connected complexes")
    best = None
    for P in iter_bcp(X, s, cap):
        chi = chromatic_number(partition_graph(X, P))
        if best is None or chi < best:
            best = chi
    if best is None:
        raise EmptyBCP("no block-connected s-independent partition found")
    return best
