"""Chromatic numbers of the triangle and of two glued triangles under every scheme.

Each value is computed twice: once through the derived graph and once by
searching colourings of the complex directly.
"""

from __future__ import annotations

from sccolour import chromatic, colour, from_facets

tri = from_facets([["a", "b", "c"]])
tt = from_facets([["a", "b", "c"], ["b", "c", "d"]])

schemes = ["c1", "c2", "c3", "c4", "c5", "c6", "c8", "c9", "c10", "c11", "ps:1", "ps:2"]
print(f"{'scheme':>7} {'tri':>4} {'two-tri':>8}")
for s in schemes:
    row = []
    for X in (tri, tt):
        g = chromatic(X, s)
        d = chromatic(X, s, method="direct")
        assert g == d
        row.append(g)
    print(f"{s:>7} {row[0]:>4} {row[1]:>8}")

a = colour(tri, "c4", 7)
print("a complete ascending 7-colouring of the triangle:")
for face, c in sorted(a.colours.items(), key=lambda kv: (len(kv[0]), kv[0])):
    print(f"  {face:>6} -> {c}")
print("with 6 colours:", colour(tri, "c4", 6))
