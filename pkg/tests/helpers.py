"""Shared test helpers: polynomial constructors and brute-force oracles.

The oracles here are deliberately independent of the library's own
algorithms: trial division over bounded integer candidates, Sylvester
determinants, exhaustive residue searches.  Expected values in the tests
were computed with these and then frozen.
"""

import itertools
from fractions import Fraction

from galoiskit import QQ
from galoiskit.poly import poly_from_int_coeffs


def P(*ints):
    """Rational polynomial from ascending integer coefficients."""
    return poly_from_int_coeffs(QQ, list(ints))


def PF(field, *ints):
    return poly_from_int_coeffs(field, list(ints))


def int_polys(max_degree, bound):
    """All monic integer polynomials of degree 1..max_degree, |coeff| <= bound."""
    for deg in range(1, max_degree + 1):
        for coeffs in itertools.product(range(-bound, bound + 1), repeat=deg):
            yield P(*coeffs, 1)


def divides(d, p):
    return (p % d).is_zero


def brute_force_monic_divisors(p, max_degree, bound):
    """Monic integer-coefficient divisors of p by trial division."""
    return [d for d in int_polys(max_degree, bound) if divides(d, p)]


def sylvester_resultant(p, q):
    """res(p, q) via the Sylvester determinant (row convention matching
    res(p, q) = lc(p)**deg(q) * prod q(roots of p))."""
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = [p.coeff(m - i) for i in range(m + 1)]  # descending
    qc = [q.coeff(n - i) for i in range(n + 1)]
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def _det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det
