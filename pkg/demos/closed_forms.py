"""
Closed forms for regular saturation and regular Turan numbers
=============================================================

How many edges can a regular graph on n vertices have without an
(m+1)-edge matching, and how few can a regular graph have when it is
saturated for that matching?
"""

from regmatch import rex_matching, rsat_matching

# rsat exists only when n - 2m divides m and 2m + 2 <= n <= 3m
for n, m in [(6, 2), (9, 3), (10, 4), (12, 4), (7, 2), (8, 3), (5, 2)]:
    ans = rsat_matching(n, m)
    if ans.exists:
        print(f"rsat({n},{m}) = {ans.edges} edges, {ans.degree}-regular")
    else:
        print(f"rsat({n},{m}) does not exist: {ans.reason.value}")

# rex always exists once n >= 2m + 2; the degree is even
print()
for n, m in [(6, 2), (7, 2), (8, 3), (10, 4), (11, 4), (12, 5), (4, 1)]:
    ans = rex_matching(n, m)
    print(f"rex({n},{m}) = {ans.edges} edges, {ans.degree}-regular")

# for fixed m the rex degree drops as n grows
m = 10
print()
print("m = 10, degree by n:", [rex_matching(n, m).degree for n in range(22, 46)])
