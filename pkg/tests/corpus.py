"""Instance generators for the exhaustive and randomised suites."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from sccolour import Graph, SimplicialComplex, from_facets, homogeneity, is_connected, is_strongly_connected

LABELS = "abcde"


def _canonical(faces, labels) -> tuple:
    best = None
    for perm in permutations(range(len(labels))):
        rename = dict(zip(labels, perm))
        key = tuple(sorted(tuple(sorted(rename[v] for v in f)) for f in faces))
        if best is None or key < best:
            best = key
    return best


def _complexes_on(n):
    """Every complex whose vertex set is exactly the first n labels."""
    verts = LABELS[:n]
    base = [frozenset(v) for v in verts]

    def extend(faces, size):
        lower = {f for f in faces if len(f) == size - 1}
        cands = [
            frozenset(c) for c in combinations(verts, size)
            if all(frozenset(c) - {v} in lower for v in c)
        ]
        if not cands:
            yield faces
            return
        for mask in range(1 << len(cands)):
            chosen = [c for i, c in enumerate(cands) if mask >> i & 1]
            if not chosen:
                yield faces
            else:
                yield from extend(faces + chosen, size + 1)

    yield from extend(list(base), 2)


@lru_cache(maxsize=None)
def connected_complexes(max_vertices=5, max_dim=None) -> tuple:
    """All connected complexes on at most ``max_vertices`` vertices, up to isomorphism."""
    out = []
    for n in range(1, max_vertices + 1):
        seen = set()
        for faces in _complexes_on(n):
            if max_dim is not None and max(len(f) for f in faces) - 1 > max_dim:
                continue
            X = SimplicialComplex(faces)
            if not is_connected(X):
                continue
            key = _canonical(faces, LABELS[:n])
            if key not in seen:
                seen.add(key)
                out.append(X)
    return tuple(out)


def sc_pure(X) -> bool:
    return is_strongly_connected(X) and homogeneity(X).pure


def random_connected_complex(rng: random.Random, max_vertices=5, max_dim=2) -> SimplicialComplex:
    while True:
        n = rng.randint(1, max_vertices)
        verts = LABELS[:n]
        facets = [rng.sample(verts, rng.randint(1, min(n, max_dim + 1))) for _ in range(rng.randint(1, 6))]
        X = from_facets(facets)
        if len(X.vertices) == n and is_connected(X):
            return X


def random_sc_pure_complex(rng: random.Random, max_vertices=5, max_dim=2) -> SimplicialComplex:
    """Grow facets of one dimension, each sharing a codimension-one face with an earlier one."""
    d = rng.randint(1, max_dim)
    verts = list(LABELS[:max_vertices])
    facets = [frozenset(rng.sample(verts, d + 1))]
    for _ in range(rng.randint(0, 5)):
        f = rng.choice(facets)
        ridge = frozenset(rng.sample(sorted(f), d))
        new = rng.choice([v for v in verts if v not in f])
        facets.append(ridge | {new})
    X = from_facets(facets)
    assert sc_pure(X)
    return X


def random_corpus(count=200, seed=20261015, sc_share=0.4):
    """Distinct random connected complexes, a share of them strongly connected and pure."""
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        X = random_sc_pure_complex(rng) if rng.random() < sc_share else random_connected_complex(rng)
        if X not in seen:
            seen.add(X)
            out.append(X)
    return out


def all_graphs(max_vertices=5, min_vertices=1):
    """Every graph on at most ``max_vertices`` vertices, up to isomorphism."""
    out = []
    for n in range(min_vertices, max_vertices + 1):
        verts = LABELS[:n]
        pairs = list(combinations(verts, 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            key = _canonical([frozenset(e) for e in edges] + [frozenset(v) for v in verts], verts)
            if key not in seen:
                seen.add(key)
                out.append(Graph(verts, edges))
    return out


def random_graph(rng: random.Random, n: int, prefix: str = "") -> Graph:
    verts = [f"{prefix}{i}" for i in range(n)]
    edges = [(u, v) for u, v in combinations(verts, 2) if rng.random() < 0.5]
    return Graph(verts, edges)
