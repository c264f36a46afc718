"""Mod-p images of absolute fields for cheap zero prescreening.

Mapping an exact computation into Z_p[x]/(minpoly mod p) is a ring
homomorphism wherever every denominator stays invertible, so an exact zero
always maps to zero.  A prescreen can therefore discard nonzero candidates
cheaply; survivors still get an exact verification, which keeps soundness
independent of the prime chosen here.
"""

from fractions import Fraction

from .qfactor import _trim, _zp_mod, _zp_mul

_SCREEN_PRIMES = (1048583, 1048589, 1048601, 1048609, 1048613, 1048627, 1048633)


class ModImage:
    """Ring image of an ExtensionField over Q at a fixed prime."""

    def __init__(self, ext, prime):
        self.prime = prime
        self.n = ext.degree
        self.modulus = [self._frac(c) for c in ext.modulus.coeffs]
        if len(_trim(list(self.modulus))) != ext.degree + 1:
            raise ZeroDivisionError("leading coefficient vanished mod p")

    def _frac(self, c):
        p = self.prime
        num = c.numerator % p
        den = c.denominator % p
        if den == 0:
            raise ZeroDivisionError("denominator vanished mod p")
        return num * pow(den, -1, p) % p

    def element(self, e):
        return _trim([self._frac(c) for c in e.coeffs])

    def scalar(self, c):
        return _trim([self._frac(Fraction(c))])

    def mul(self, a, b):
        return _zp_mod(_zp_mul(a, b, self.prime), self.modulus, self.prime)

    def add(self, a, b):
        p = self.prime
        out = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] = c
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return _trim(out)

    def neg(self, a):
        return [(-c) % self.prime for c in a]

    def inv(self, a):
        """Ring inverse; raises ZeroDivisionError when a is a zero divisor."""
        p = self.prime
        r0, r1 = list(self.modulus), list(a)
        t0, t1 = [], [1]
        from .qfactor import _zp_divmod, _zp_sub

        while r1:
            q, r = _zp_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _zp_sub(t0, _zp_mul(q, t1, p), p)
        if len(r0) != 1:
            raise ZeroDivisionError("non-invertible residue mod p")
        inv = pow(r0[0], -1, p)
        return _trim([c * inv % p for c in t0])

    def pow(self, a, k):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = [1]
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def eval_poly(self, coeff_images, v):
        """Horner evaluation of a polynomial given by element images."""
        acc = []
        for c in reversed(coeff_images):
            acc = self.add(self.mul(acc, v), c)
        return acc


def make_image(ext):
    """Build a ModImage at the first usable screening prime, or None."""
    for p in _SCREEN_PRIMES:
        try:
            return ModImage(ext, p)
        except ZeroDivisionError:
            continue
    return None
