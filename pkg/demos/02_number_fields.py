# Number-field towers, primitive elements, and factoring over extensions.

from galoiskit import FieldTower, factor_over_number_field, minimal_polynomial, roots_in_field
from galoiskit.parsing import parse_poly
from galoiskit.poly import render_poly

# build Q(sqrt2, sqrt3) one adjunction at a time
tower = FieldTower.rationals()
ext = tower.absolute.ext
tower = tower.adjoin(parse_poly("x^2 - 2").map_coefficients(ext.coerce, ext), "s2")
ext = tower.absolute.ext
tower = tower.adjoin(parse_poly("x^2 - 3").map_coefficients(ext.coerce, ext), "s3")

print("tower:", tower)
print("[Q(sqrt2, sqrt3) : Q] =", tower.degree)

a = tower.absolute
print("primitive element min poly:", render_poly(a.min_poly))
print("theta = s2 + %d * s3" % a.theta_combo[1])

s2, s3 = a.gen_images
print("\nsqrt2 * sqrt3 =", s2 * s3, " squared:", (s2 * s3) ** 2)
print("1/(1+sqrt2) =", (1 + s2).inverse())

elt = s2 + s3
print("\nminimal polynomial of sqrt2 + sqrt3:", render_poly(minimal_polynomial(elt)))

# Trager factorization over the tower: x^2 - 2 splits, x^2 - 5 does not
for text in ("x^2 - 2", "x^2 - 5", "x^4 - 10*x^2 + 1"):
    p = parse_poly(text).map_coefficients(a.ext.coerce, a.ext)
    fac = factor_over_number_field(p)
    print(f"{text} over the tower:", [(g.degree, m) for g, m in fac.factors])

print("\nroots of x^2-6 in the tower:", roots_in_field(parse_poly("x^2 - 6"), a.ext))
