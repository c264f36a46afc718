# The subgroup <-> subfield correspondence, computed exactly.
#
# For splitting(x^3 - 2): subgroups of S3 pair with intermediate fields;
# orbits give minimal polynomials; restriction to the normal subfield
# Q(zeta3) is a surjection with kernel A3.

from galoiskit import (
    fixed_field,
    galois_group,
    intermediate_field,
    minimal_polynomial,
    orbit,
    orbit_min_poly,
    restriction_homomorphism,
    splitting_field,
    subgroup_fixing,
)
from galoiskit.permgroup import all_subgroups
from galoiskit.parsing import parse_poly
from galoiskit.poly import render_poly

e = splitting_field(parse_poly("x^3 - 2"))
g = galois_group(e)
print(f"#G = {g.order}, [E:Q] = {e.degree}")

# orbit formula vs straight linear algebra: two routes, one answer
elt = e.roots[0] + e.roots[1]
print("element:", elt)
print("  orbit size:", len(orbit(g, elt)))
print("  orbit product:  ", render_poly(orbit_min_poly(g, elt)))
print("  linear algebra: ", render_poly(minimal_polynomial(elt)))

# the full subgroup lattice and its fixed fields
perm_to_idx = {a.root_permutation: i for i, a in enumerate(g.automorphisms)}
print("\nsubgroup lattice:")
for h in all_subgroups(g.perm_group()):
    idx = tuple(sorted(perm_to_idx[p] for p in h.elements))
    b = fixed_field(g, idx)
    back = subgroup_fixing(g, b)
    print(f"  |H| = {h.order}: fixed field degree {b.degree}, "
          f"min poly {render_poly(b.min_poly)}, round trip ok: {set(back) == set(idx)}")

# restriction to the normal quadratic subfield Q(zeta3)
zeta = e.roots[1] / e.roots[0]
b = intermediate_field(g, [zeta])
res = restriction_homomorphism(g, b, parse_poly("x^2 + x + 1"))
print(f"\nrestriction to Q(zeta3): image order {res.image.order}, "
      f"kernel order {len(res.kernel)} (the alternating subgroup)")
