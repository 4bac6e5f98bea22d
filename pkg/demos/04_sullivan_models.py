"""Pure Sullivan models of graphs and the root-of-unity test for colourings."""

from __future__ import annotations

from itertools import product

from sccolour import CyclotomicElement, build_model, cyclotomic_poly, ellipticity_verdict, from_facets, witness_check
from sccolour.graph import complete_graph

for k in (3, 4, 6, 12):
    print(f"Phi_{k} coefficients (constant first): {cyclotomic_poly(k)}")

z = CyclotomicElement.zeta(3)
print("zeta^3 == 1:", z ** 3 == CyclotomicElement.integer(3, 1))

K3 = complete_graph("abc")
S = build_model(K3, 3)
print(S.render())

hits = [w for w in product((1, 2, 3), repeat=3) if witness_check(S, dict(zip("abc", w)))]
print(f"{len(hits)} of 27 assignments kill every differential; all are proper colourings")

X = from_facets([["a", "b", "c"], ["b", "c", "d"]])
for scheme, k in [("c1", 2), ("c1", 3), ("c9", 3), ("ps:2", 2)]:
    v = ellipticity_verdict(X, scheme, k)
    print(f"{scheme:>5} k={k}: {v.verdict:<12} witness={v.witness}")
