"""Exact scalar fields: arbitrary-precision rationals and prime fields.

Rationals are ``fractions.Fraction`` values (always reduced, positive
denominator), wrapped by the singleton field object ``QQ``.  Prime fields
carry their own element class so that mod-p values cannot silently mix
with rationals or with a different modulus.
"""

from fractions import Fraction

Rational = Fraction


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3 * 10**24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers; elements are Fraction values."""

    characteristic = 0
    name = "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def sort_key(self, x):
        return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("galoiskit.QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeFieldElement:
    """A residue in Z/p for prime p."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    def _check(self, other):
        if isinstance(other, int):
            return PrimeFieldElement(other, self.field)
        if isinstance(other, PrimeFieldElement):
            if other.field != self.field:
                from .errors import FieldMismatchError

                raise FieldMismatchError(f"mixed moduli {self.field.p} and {other.field.p}")
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return PrimeFieldElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        if isinstance(other, PrimeFieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class PrimeField:
    """The field Z/p; p is verified prime at construction."""

    characteristic_nonzero = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    @property
    def zero(self):
        return PrimeFieldElement(0, self)

    @property
    def one(self):
        return PrimeFieldElement(1, self)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.field != self:
                from .errors import FieldMismatchError

                raise FieldMismatchError(f"mixed moduli {self.p} and {x.field.p}")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(x, self)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return PrimeFieldElement(x.numerator, self) / PrimeFieldElement(x.denominator, self)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def sort_key(self, x):
        return x.value

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("galoiskit.GF", self.p))

    def __repr__(self):
        return self.name
