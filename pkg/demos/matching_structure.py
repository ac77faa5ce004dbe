"""
Maximum matchings and the Gallai-Edmonds partition
==================================================

The blossom matcher, the D/A/C partition, and a witness set S whose
removal leaves only factor-critical components.
"""

from regmatch import (
    complete_graph,
    decompose,
    disjoint_union,
    factor_critical_witness,
    matching_number,
    maximum_matching,
    petersen_graph,
    star_graph,
    tutte_berge_oracle,
    verify_witness,
)

# Petersen has a perfect matching; the subset sweep agrees
g = petersen_graph()
print("nu(Petersen) =", matching_number(g), maximum_matching(g).edges)
deficiency, U = tutte_berge_oracle(g)
print("Tutte-Berge deficiency", deficiency, "at U =", sorted(U))

# two triangles: every vertex is missed by some maximum matching
two_k3 = disjoint_union([complete_graph(3)] * 2)
ge = decompose(two_k3)
print("\n2K3: D =", sorted(ge.D), "A =", sorted(ge.A), "C =", sorted(ge.C))
print("witness S =", sorted(ge.S), "component orders", ge.orders)

# a star: the centre is the barrier
star = star_graph(3)
S = factor_critical_witness(star)
rep = verify_witness(star, S)
print("\nK_{1,3}: S =", sorted(S), "orders", rep.orders, "nu =", rep.nu, "ok =", rep.ok)

# a graph with an even part: K3 plus a disjoint edge
g = disjoint_union([complete_graph(3), complete_graph(2)])
rep = verify_witness(g, factor_critical_witness(g))
print("K3 + K2: S =", sorted(rep.S), "orders", rep.orders, "failed clauses", rep.failed_clauses())
