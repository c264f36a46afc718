# Splitting fields with explicit roots, and their automorphism groups.
#
# The group order always equals the field degree; the engine enforces that
# identity as a hard runtime assertion every time it enumerates a group.

from galoiskit import galois_group, is_solvable, splitting_field
from galoiskit.parsing import parse_poly
from galoiskit.poly import render_poly

for text in ("x^2 - 2", "x^3 - 2", "x^3 - 3*x - 1", "x^4 + 1", "x^5 - 2"):
    e = splitting_field(parse_poly(text))
    g = galois_group(e)
    solvable, series = is_solvable(g.perm_group())
    print(f"{text}:")
    print(f"  [E:Q] = {e.degree}, {len(e.roots)} roots, #G = {g.order}")
    print(f"  field = Q(a) with a root of {render_poly(e.field.min_poly)}")
    print(f"  generators: {[a.root_permutation.cycle_notation() for a in g.automorphisms[:3]]} ...")
    print(f"  solvable: {solvable}, derived series orders {[h.order for h in series]}")
    print()

# the roots are exact field elements; automorphisms permute them exactly
e = splitting_field(parse_poly("x^3 - 2"))
g = galois_group(e)
r = e.roots[0]
print("one cube root of 2:", r)
for a in g.automorphisms:
    print(f"  {a.root_permutation.cycle_notation():10s} sends it to {a.apply(r)}")
