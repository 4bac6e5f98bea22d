"""Build a couple of small complexes and look at the graphs derived from them."""

from __future__ import annotations

from sccolour import derive, from_facets, homogeneity, is_strongly_connected, skeleton

tri = from_facets([["a", "b", "c"]])
bowtie = from_facets([["a", "b", "c"], ["c", "d", "e"]])

for name, X in [("triangle", tri), ("bowtie", bowtie)]:
    h = homogeneity(X)
    print(f"{name}: dim {X.dim}, faces per dimension {X.face_counts()}")
    print(f"  pure={h.pure} strongly connected={is_strongly_connected(X)}")

# the bowtie meets in a single vertex, so its triangles share no edge
print("1-skeleton of the bowtie:", skeleton(bowtie, 1).face_counts())

for kind in ("two_section", "line", "total", "full", "complete_asc", "complete_desc"):
    G = derive(tri, kind)
    print(f"{kind:>14}: {len(G)} vertices, {len(G.edges)} edges")

G1 = derive(tri, "exchange", 1)
print("edges of the triangle, adjacent when they share a vertex:", sorted(map(sorted, G1.edges)))

print(derive(tri, "two_section").to_dot())
