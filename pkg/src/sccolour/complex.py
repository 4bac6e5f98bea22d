"""Finite abstract simplicial complexes.

A face is a ``frozenset`` of vertex labels.  Complexes are stored fully
materialised (every face, not only the facets) and iterate in canonical
order: by dimension, then by the sorted tuple of labels.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import combinations
from pathlib import Path
from typing import Iterable, NamedTuple

from .errors import BadLabel, EmptyFace, EmptyInput, NotAComplex

Face = frozenset

RESERVED = frozenset("+:#")


def check_label(label) -> str:
    if not isinstance(label, str) or not label:
        raise BadLabel(f"vertex label must be a non-empty string, got {label!r}")
    if any(ch.isspace() or ch in RESERVED for ch in label):
        raise BadLabel(f"vertex label {label!r} contains whitespace or one of '+', ':', '#'")
    return label


def face_name(face: Iterable[str]) -> str:
    """Canonical name: sorted labels joined by ``+``."""
    return "+".join(sorted(face))


def face_from_name(name: str) -> Face:
    return frozenset(name.split("+"))


def face_dim(face) -> int:
    return len(face) - 1


def face_key(face):
    return (len(face), tuple(sorted(face)))


class SimplicialComplex:
    """An immutable, downward-closed family of non-empty faces.

    Construct with :meth:`from_facets` unless you already hold the full face
    set; the plain constructor validates but does not close.
    """

    __slots__ = ("_faces", "_set", "_by_dim", "vertices", "dim")

    def __init__(self, faces: Iterable[Iterable[str]]):
        fs = set()
        for f in faces:
            f = frozenset(f)
            if not f:
                raise EmptyFace("faces must be non-empty")
            for v in f:
                check_label(v)
            fs.add(f)
        if not fs:
            raise EmptyInput("a simplicial complex needs at least one face")
        for f in fs:
            if len(f) > 1:
                for v in f:
                    if f - {v} not in fs:
                        raise NotAComplex(f"face {face_name(f)} is missing the facet {face_name(f - {v})}")
        self._faces = tuple(sorted(fs, key=face_key))
        self._set = frozenset(fs)
        self.dim = max(len(f) for f in fs) - 1
        self._by_dim = tuple(
            tuple(f for f in self._faces if len(f) == r + 1) for r in range(self.dim + 1)
        )
        self.vertices = tuple(sorted(v for (v,) in self._by_dim[0]))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]]) -> SimplicialComplex:
        facets = [frozenset(f) for f in facets]
        if not facets:
            raise EmptyInput("no facets given")
        closure = set()
        for f in facets:
            if not f:
                raise EmptyFace("facets must be non-empty")
            for v in f:
                check_label(v)
            items = sorted(f)
            for size in range(1, len(items) + 1):
                closure.update(frozenset(c) for c in combinations(items, size))
        return cls(closure)

    @property
    def faces(self) -> tuple:
        return self._faces

    def __iter__(self):
        return iter(self._faces)

    def __len__(self):
        return len(self._faces)

    def __contains__(self, face):
        return frozenset(face) in self._set

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        return f"SimplicialComplex.from_facets({[face_name(f) for f in self.facets()]})"

    def faces_of_dim(self, r: int) -> tuple:
        if r < 0 or r > self.dim:
            return ()
        return self._by_dim[r]

    def face_counts(self) -> list[int]:
        return [len(fs) for fs in self._by_dim]

    def facets(self) -> tuple:
        """Maximal faces, in canonical order."""
        # a face is maximal iff no face one dimension up contains it
        return tuple(f for f in self._faces if not any(f < g for g in self.faces_of_dim(len(f))))

    def skeleton(self, s: int) -> SimplicialComplex:
        if s < 0:
            raise ValueError("skeleton dimension must be non-negative")
        return SimplicialComplex(f for f in self._faces if len(f) <= s + 1)

    def induced(self, block: Iterable[str]) -> tuple:
        """Faces of X lying inside ``block`` (the complex X ∩ D[block])."""
        block = frozenset(block)
        return tuple(f for f in self._faces if f <= block)

    def to_json(self) -> dict:
        return {"facets": [sorted(f) for f in self.facets()]}

    def to_cx(self) -> str:
        return "".join(" ".join(sorted(f)) + "\n" for f in self.facets())


def from_facets(facets) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def faces_of_dim(X: SimplicialComplex, r: int) -> tuple:
    return X.faces_of_dim(r)


def skeleton(X: SimplicialComplex, s: int) -> SimplicialComplex:
    return X.skeleton(s)


def _components(vertices, edges) -> int:
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    count = 0
    for start in adj:
        if start in seen:
            continue
        count += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count


def faces_connected(faces) -> bool:
    """Connectivity of the complex formed by ``faces`` through its 1-faces."""
    verts = [v for f in faces if len(f) == 1 for v in f]
    edges = [tuple(f) for f in faces if len(f) == 2]
    return _components(verts, edges) <= 1


def is_connected(X: SimplicialComplex) -> bool:
    return faces_connected(X.faces_of_dim(0) + X.faces_of_dim(1))


def is_strongly_connected(X: SimplicialComplex) -> bool:
    """Top-dimensional faces chained through codimension-one intersections."""
    n = X.dim
    top = X.faces_of_dim(n)
    if len(top) == 1:
        return True
    if n == 0:
        # two distinct vertices never meet in a face
        return False
    edges = [(s, t) for s, t in combinations(top, 2) if len(s & t) == n]
    return _components(top, edges) == 1


class Homogeneity(NamedTuple):
    vertex_homogeneous: bool
    pure: bool


def homogeneity(X: SimplicialComplex) -> Homogeneity:
    top = X.faces_of_dim(X.dim)
    covered = set().union(*top)
    vertex_homogeneous = covered == set(X.vertices)
    pure = all(any(f <= t for t in top) for f in X)
    return Homogeneity(vertex_homogeneous, pure)


def is_pure(X: SimplicialComplex) -> bool:
    return homogeneity(X).pure


def parse_cx(text: str) -> SimplicialComplex:
    """Parse the line format: one facet per line, ``#`` starts a comment."""
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append(line.split())
    return SimplicialComplex.from_facets(facets)


def complex_from_json(obj) -> SimplicialComplex:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        facets = obj["facets"]
    except (KeyError, TypeError):
        raise EmptyInput("complex JSON must be an object with a 'facets' list") from None
    return SimplicialComplex.from_facets(facets)


def load_complex(path) -> SimplicialComplex:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return complex_from_json(json.loads(text))
    return parse_cx(text)
