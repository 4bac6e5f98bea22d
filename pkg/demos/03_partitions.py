"""Block-connected partitions and the partition-based chromatic number."""

from __future__ import annotations

from sccolour import bcp, chr_s_via_bcp, chromatic, from_facets, partition_graph

X = from_facets([["a", "b", "c"], ["c", "d"]])

for s in (1, 2, 3):
    parts = bcp(X, s)
    print(f"s={s}: {len(parts)} block-connected partitions")
    for P in parts[:4]:
        G = partition_graph(X, P)
        print(f"   {P}  (partition graph: {len(G)} blocks, {len(G.edges)} links)")
    via = chr_s_via_bcp(X, s)
    print(f"   chromatic via partitions = {via}, by direct search = {chromatic(X, f'ps:{s}')}")
