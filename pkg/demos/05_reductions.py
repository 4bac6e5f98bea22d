"""Turning graph colouring questions into complex colouring questions and back."""

from __future__ import annotations

from sccolour import Graph, graph_to_complex, is_colourable, reduction_size_report, translate_colouring
from sccolour.reductions import LEMMAS, source_colouring

C5 = Graph(list("abcde"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
X = graph_to_complex(C5)

for lemma in LEMMAS.values():
    for k in (2, 3):
        phi = source_colouring(lemma, C5, k)
        targets = ", ".join(
            f"{t}:{is_colourable(X, t, k + lemma.shift)}"
            for t in lemma.targets
        )
        line = f"{lemma.id:>6} k={k} source colourable={phi is not None}  targets {targets}"
        if phi is not None:
            a = translate_colouring(lemma, "forward", C5, phi, k)
            back = translate_colouring(lemma, "backward", C5, a, k)
            line += f"  round trip ok={back == phi}"
        print(line)

for n in (3, 6, 10):
    names = [str(i) for i in range(n)]
    K = Graph(names, [(u, v) for i, u in enumerate(names) for v in names[i + 1:]])
    r = reduction_size_report("c1", K)
    print(f"K{n}: graph bits {r.graph_bits}, complex faces {r.complex_faces}, ratio {r.ratio:.2f}")
