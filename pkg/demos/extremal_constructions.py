"""
Building and certifying extremal graphs
=======================================

Equal odd cliques for rsat; odd-part unions of cliques or cycle powers
for rex. Every construction is checked by an independent certifier.
"""

from regmatch import (
    certify_rex_extremal,
    certify_rsat_extremal,
    odd_partition,
    rex_extremal_clique_form,
    rex_extremal_cycles,
    rsat_extremal,
    to_dot,
    to_graph6,
    walecki_hamilton_decomposition,
)

g = rsat_extremal(10, 4)
cert = certify_rsat_extremal(g, 10, 4)
print("rsat(10,4):", to_graph6(g).decode())
print(cert.to_text())

# rex via the Hamilton decomposition of odd complete graphs
print("\nodd partition for (12,5):", odd_partition(12, 5))
for build in (rex_extremal_cycles, rex_extremal_clique_form):
    g = build(12, 5)
    cert = certify_rex_extremal(g, 12, 5)
    print(f"{build.__name__}: edges={g.num_edges} nu={cert.matching_number} {cert.verdict}")

# the decomposition behind the cycle form
dec = walecki_hamilton_decomposition(3)
for j, cyc in enumerate(dec.cycles):
    print(f"K7 Hamilton cycle {j}:", cyc)

# DOT export of a small case, ready for graphviz
print()
print(to_dot(rex_extremal_cycles(11, 4), name="rex_11_4"))
