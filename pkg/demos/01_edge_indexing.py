"""Colex edge indexing, coloring files, and Berge-cycle verification."""

from bergeham import (
    BergeCycle,
    Coloring,
    HyperParams,
    pair_supersets,
    rank_edge,
    unrank_edge,
    verify_berge_cycle,
)
from bergeham.hypercore import iter_colex_edges

# The hyperedges of K_n^r are the r-subsets of {0..n-1}, ordered by colex:
# compare the largest differing element.  Rank 0 is always {0..r-1}.
params = HyperParams(n=6, r=3, k=2)
print("first five edges of K_6^3 in colex order:")
for t, edge in zip(range(5), iter_colex_edges(6, 3)):
    print(f"  rank {t}: {edge}")

print("rank of (3,4,5):", rank_edge((3, 4, 5), params))
print("unrank 10:", unrank_edge(10, params))

# All hyperedges through a fixed pair; there are C(n-2, r-2) of them.
through = pair_supersets(0, 1, params)
print("edges through {0,1}:", [unrank_edge(t, params) for t in through])

# A coloring is one color id per edge, in colex order.  The text format is
# bit-exact: "n r k" then the C(n,r) colors.
coloring = Coloring(params, [1 + t % 2 for t in range(params.edge_count)])
print("\ncoloring file:")
print(coloring.to_text(), end="")

# A Hamiltonian Berge-cycle pairs each consecutive core pair with its own
# hyperedge.  The verifier pinpoints the first broken position.
p4 = HyperParams(4, 3, 1)
mono = Coloring(p4, [1, 1, 1, 1])
edges = tuple(
    rank_edge(tuple(sorted({i, (i + 1) % 4, (i + 2) % 4})), p4) for i in range(4)
)
cycle = BergeCycle((0, 1, 2, 3), edges, color=1)
print("\nvalid cycle:", verify_berge_cycle(cycle, mono))

broken = BergeCycle((0, 1, 2, 3), (edges[0], edges[1], edges[0], edges[3]), 1)
print("tampered cycle:", verify_berge_cycle(broken, mono))
