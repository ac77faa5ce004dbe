"""
Checking the closed forms by exhaustive search
==============================================

For small n the oracle enumerates every labelled regular graph and
recomputes rsat and rex directly. Subtrees that already contain an
(m+1)-matching are cut, since adding edges never shrinks a matching.
"""

import time

from regmatch import check_structure_claims, count_regular, oracle_rex, oracle_rsat
from regmatch import rex_matching, rsat_matching

print("labelled regular graphs:", {(n, r): count_regular(n, r) for n, r in [(4, 1), (5, 2), (6, 3), (8, 3)]})

start = time.monotonic()
for m in range(1, 4):
    for n in range(2 * m + 2, 10):
        rs, rx = oracle_rsat(n, m), oracle_rex(n, m)
        want = rsat_matching(n, m)
        print(f"(n={n}, m={m}) rsat oracle={rs.edges} formula={want.edges if want.exists else None}"
              f"  rex oracle={rx.edges} formula={rex_matching(n, m).edges}"
              f"  examined={rs.examined + rx.examined}")
print(f"grid done in {time.monotonic() - start:.1f}s")

# every minimum regular saturated graph on 9 vertices for m = 3 is 3K3
rep = check_structure_claims(9, 3)
print(f"\n(9,3): {rep.rsat_minimizers} minimizers, claims hold: {rep.holds}")

# a zero budget gives an honest partial answer
out = oracle_rsat(10, 4, budget=0.0)
print("budget 0 on (10,4):", out.status)
