"""Arithmetic in finite extensions of Q.

Extensions are quotient constructions F[x]/(m) for a monic irreducible m;
iterated construction gives towers, which are flattened to a primitive
element so that every working field is an absolute field Q(theta).  All
downstream modules operate on absolute fields; towers are a construction
device that remembers where each generator went.
"""

from fractions import Fraction

from .checks import record_check
from .errors import DegreeCapError, FieldMismatchError, PrimitiveSearchError
from .linalg import SpanSolver, solve_many_columns
from .poly import (
    Polynomial,
    poly_extended_gcd,
    poly_gcd,
    poly_resultant,
    poly_squarefree_decomposition,
    poly_squarefree_part,
)
from .qfactor import DEFAULT_SEED, Factorization, _sorted_factors, factor_over_Q, is_squarefree_q
from .scalars import QQ

DEFAULT_DEGREE_CAP = 64
PRIMITIVE_SEARCH_RANGE = 20


class ExtElement:
    """An element of an ExtensionField: fixed-length residue coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs  # tuple, length == field.degree, base elements

    def _other(self, x):
        if isinstance(x, ExtElement):
            if x.field is self.field or x.field == self.field:
                return x
            raise FieldMismatchError("elements of different extension fields")
        try:
            return self.field.coerce(x)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        """Extended Euclid against the defining polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        rep = Polynomial(f.base, self.coeffs)
        g, s, _ = poly_extended_gcd(rep, f.modulus)
        if g.degree != 0:
            raise ArithmeticError("modulus is reducible: gcd with element is nonconstant")
        s = s % f.modulus
        return ExtElement(f, f._pad(s.coeffs))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            if other.field is self.field or other.field == self.field:
                return self.coeffs == other.coeffs
            return NotImplemented
        try:
            o = self.field.coerce(other)
        except (TypeError, FieldMismatchError):
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.degree, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def rep_poly(self):
        """Residue representation as a polynomial over the base field."""
        return Polynomial(self.field.base, self.coeffs)

    def q_coords(self):
        return q_coords(self)

    def sort_key(self):
        return q_coords(self)

    def __repr__(self):
        from .poly import render_poly

        return render_poly(self.rep_poly(), self.field.gen_name)


class ExtensionField:
    """F[x]/(m): residues modulo a monic polynomial m over the field below."""

    characteristic = 0

    def __init__(self, base, modulus: Polynomial, gen_name: str = "a"):
        if modulus.field != base:
            raise FieldMismatchError("modulus must live over the base field")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        self.base = base
        self.modulus = modulus.monic()
        self.degree = modulus.degree
        self.gen_name = gen_name
        self.name = f"{base.name}[{gen_name}]"
        n = self.degree
        # reduction rows: x**(n+j) mod modulus as padded coefficient tuples
        rows = []
        if n >= 1:
            row = tuple(-self.modulus.coeff(i) for i in range(n))
            for _ in range(n - 1):
                rows.append(row)
                shifted = (base.zero,) + row[:-1]
                top = row[-1]
                if top:
                    row = tuple(s + top * r for s, r in zip(shifted, rows[0]))
                else:
                    row = shifted
        self._reduction_rows = rows
        self._hash = hash(("galoiskit.Ext", base, self.modulus.coeffs))
        # integer fast path for absolute fields: reduction rows over a
        # single common denominator
        self._int_rows = None
        if base is QQ or isinstance(base, type(QQ)):
            from math import lcm

            d = 1
            for row in rows:
                for c in row:
                    d = lcm(d, c.denominator)
            self._int_rows = (
                [tuple(c.numerator * (d // c.denominator) for c in row) for row in rows],
                d,
            )

    def _pad(self, coeffs):
        return tuple(coeffs) + (self.base.zero,) * (self.degree - len(coeffs))

    def _mul(self, a, b):
        n = self.degree
        if n == 1:
            return (a[0] * b[0],)
        if self._int_rows is not None:
            return self._mul_qq(a, b)
        conv = [self.base.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] = conv[i + j] + ai * bj
        out = conv[:n]
        for j in range(n - 1):
            c = conv[n + j]
            if c:
                row = self._reduction_rows[j]
                out = [o + c * r for o, r in zip(out, row)]
        return tuple(out)

    def _mul_qq(self, a, b):
        """Integer-kernel multiplication: one gcd per output coefficient."""
        from math import lcm

        n = self.degree
        da = 1
        for c in a:
            da = lcm(da, c.denominator)
        db = 1
        for c in b:
            db = lcm(db, c.denominator)
        ai = [c.numerator * (da // c.denominator) for c in a]
        bi = [c.numerator * (db // c.denominator) for c in b]
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(ai):
            if x:
                for j, y in enumerate(bi):
                    if y:
                        conv[i + j] += x * y
        rows, d = self._int_rows
        out = [conv[i] * d for i in range(n)]
        for j in range(n - 1):
            c = conv[n + j]
            if c:
                row = rows[j]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        den = da * db * d
        return tuple(Fraction(num, den) for num in out)

    @property
    def zero(self):
        return ExtElement(self, (self.base.zero,) * self.degree)

    @property
    def one(self):
        return ExtElement(self, self._pad((self.base.one,)))

    @property
    def gen(self):
        if self.degree == 1:
            # x = root of the linear modulus: the residue is a constant
            return ExtElement(self, (-self.modulus.coeff(0),))
        return ExtElement(self, self._pad((self.base.zero, self.base.one)))

    def coerce(self, x):
        if isinstance(x, ExtElement):
            if x.field is self or x.field == self:
                return x
            if x.field == self.base or x.field is self.base:
                return ExtElement(self, self._pad((x,)))
            raise FieldMismatchError("cannot coerce element of an unrelated field")
        if isinstance(x, (int, Fraction)):
            return ExtElement(self, self._pad((self.base.coerce(x),)))
        try:
            return ExtElement(self, self._pad((self.base.coerce(x),)))
        except TypeError:
            raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_rep(self, coeffs):
        """Element from base coefficients (length at most the degree)."""
        if len(coeffs) > self.degree:
            raise ValueError("representation longer than field degree")
        return ExtElement(self, self._pad(tuple(coeffs)))

    def sort_key(self, x):
        return q_coords(x)

    @property
    def degree_over_q(self):
        base = self.base
        return self.degree * (base.degree_over_q if isinstance(base, ExtensionField) else 1)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, ExtensionField)
            and other.degree == self.degree
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.name


def q_coords(x):
    """Rational coordinates of x with respect to the nested power basis."""
    if isinstance(x, Fraction):
        return (x,)
    if isinstance(x, ExtElement):
        out = []
        for c in x.coeffs:
            out.extend(q_coords(c))
        return tuple(out)
    raise TypeError(f"no rational coordinates for {x!r}")


def element_sort_key(x):
    """Canonical ordering key: ascending residue coefficient vector."""
    return q_coords(x)


# ---------------------------------------------------------------------------
# absolute fields and towers


class AbsoluteField:
    """Q(theta) together with images of the tower generators in theta."""

    def __init__(self, ext, gen_names=(), gen_images=(), theta_combo=(), theta_prev_image=None, prev_degree=None):
        self.ext = ext
        self.min_poly = ext.modulus
        self.gen_names = tuple(gen_names)
        self.gen_images = tuple(gen_images)
        self.theta_combo = tuple(theta_combo)  # theta = sum combo_i * gen_i
        self._theta_prev_image = theta_prev_image
        self._prev_degree = prev_degree
        self._prev_powers = None

    @property
    def degree(self):
        return self.ext.degree

    @property
    def theta(self):
        return self.ext.gen

    def lift_from_prev(self, elt):
        """Map an element of the previous absolute field into this one."""
        if self._theta_prev_image is None:
            raise ValueError("this absolute field has no recorded predecessor")
        if isinstance(elt, Fraction):
            return self.ext.coerce(elt)
        if self._prev_powers is None:
            powers = [self.ext.one]
            for _ in range(self._prev_degree - 1):
                powers.append(powers[-1] * self._theta_prev_image)
            self._prev_powers = powers
        acc = self.ext.zero
        for c, p in zip(elt.coeffs, self._prev_powers):
            if c:
                acc = acc + p * c
        return acc

    def element_from_q_coords(self, coords):
        return self.ext.from_rep([Fraction(c) for c in coords])

    def __repr__(self):
        return f"AbsoluteField(degree={self.degree}, generators={list(self.gen_names)})"


class FieldTower:
    """Stages of adjunctions over Q, flattened to an absolute field."""

    def __init__(self, stages, absolute):
        self.stages = tuple(stages)
        self.absolute = absolute

    @classmethod
    def rationals(cls):
        x = Polynomial.x(QQ)
        ext = ExtensionField(QQ, x - Polynomial.one(QQ), "a")
        return cls((), AbsoluteField(ext))

    @property
    def degree(self):
        return self.absolute.degree

    def generator(self, i):
        return self.absolute.gen_images[i]

    def adjoin(self, m: Polynomial, name: str, verify: bool = True,
               degree_cap: int = DEFAULT_DEGREE_CAP, seed: int = DEFAULT_SEED):
        """Adjoin a root of monic irreducible m (over the current absolute field).

        Returns the extended tower; the new absolute field can lift elements
        of the old one via ``lift_from_prev``.
        """
        cur = self.absolute
        if m.field != cur.ext:
            raise FieldMismatchError("stage polynomial must live over the current field")
        m = m.monic()
        if m.degree < 1:
            raise ValueError("stage polynomial must have degree >= 1")
        new_degree = self.degree * m.degree
        if new_degree > degree_cap:
            raise DegreeCapError(
                f"adjunction would reach degree {new_degree} > cap {degree_cap}",
                attempted=new_degree, cap=degree_cap)
        if verify:
            fac = factor_over_number_field(m, seed=seed)
            if len(fac.factors) != 1 or fac.factors[0][1] != 1:
                raise ValueError("stage polynomial is reducible over the base field")
        absolute = _flatten(cur, m, name)
        stage = (name, m.degree, m)
        return FieldTower(self.stages + (stage,), absolute)

    def __repr__(self):
        names = ", ".join(s[0] for s in self.stages) or "-"
        return f"FieldTower(degree={self.degree}, stages=[{names}])"


def _flatten(cur: AbsoluteField, m: Polynomial, name: str) -> AbsoluteField:
    """Flatten (current absolute field) + one stage to a new primitive element.

    theta_new = theta_old + c * (new generator) for the first c in
    1, -1, 2, -2, ... whose minimal polynomial has full degree; the classical
    primitive element theorem guarantees all but finitely many c work.
    """
    base_deg = cur.degree
    d = m.degree
    n = base_deg * d
    if base_deg == 1:
        mq = m.map_coefficients(lambda c: c.coeffs[0], QQ)
        new_ext = ExtensionField(QQ, mq, "a")
        gen_images = tuple(new_ext.coerce(img.coeffs[0]) for img in cur.gen_images)
        theta_prev = new_ext.coerce(cur.theta.coeffs[0])
        return AbsoluteField(
            new_ext,
            cur.gen_names + (name,),
            gen_images + (new_ext.gen,),
            (0,) * len(cur.gen_names) + (1,),
            theta_prev_image=theta_prev,
            prev_degree=1,
        )
    work = ExtensionField(cur.ext, m, name)
    theta_prev_w = work.coerce(cur.theta)
    gen_w = work.gen
    for c in _signed_range(PRIMITIVE_SEARCH_RANGE):
        cand = theta_prev_w + gen_w * c
        span = SpanSolver(QQ)
        cols = []
        power = work.one
        independent = True
        for _ in range(n):
            coords = q_coords(power)
            if span.insert(coords) is not None:
                independent = False
                break
            cols.append(coords)
            power = power * cand
        if not independent:
            continue
        top = span.insert(q_coords(power))
        if top is None:
            raise PrimitiveSearchError("power basis inconsistent (internal)")
        min_poly = Polynomial(QQ, [-t for t in top] + [Fraction(1)])
        new_ext = ExtensionField(QQ, min_poly, "a")
        targets = [work.coerce(img) for img in cur.gen_images] + [gen_w, theta_prev_w]
        solved = solve_many_columns(cols, [q_coords(t) for t in targets], QQ)
        images = []
        for x in solved:
            if x is None:
                raise PrimitiveSearchError("generator image escaped the power basis (internal)")
            images.append(new_ext.from_rep(x))
        return AbsoluteField(
            new_ext,
            cur.gen_names + (name,),
            tuple(images[:-1]),
            cur.theta_combo + (c,),
            theta_prev_image=images[-1],
            prev_degree=base_deg,
        )
    raise PrimitiveSearchError(
        f"no primitive element of the form theta + c*gen with |c| <= {PRIMITIVE_SEARCH_RANGE}")


def _signed_range(limit):
    for k in range(1, limit + 1):
        yield k
        yield -k


def primitive_element(tower: FieldTower) -> AbsoluteField:
    """The flattened form of a tower (maintained at every adjunction)."""
    return tower.absolute


def minimal_polynomial(a) -> Polynomial:
    """Monic minimal polynomial of a over Q by linear algebra on powers.

    Independent of any Galois-group machinery: powers 1, a, a**2, ... are
    accumulated until the first rational linear dependence.
    """
    if isinstance(a, (int, Fraction)):
        return Polynomial(QQ, [-Fraction(a), Fraction(1)])
    if not isinstance(a, ExtElement):
        raise TypeError(f"cannot take a minimal polynomial of {a!r}")
    bound = a.field.degree_over_q
    span = SpanSolver(QQ)
    power = a.field.one
    for _ in range(bound + 1):
        x = span.insert(q_coords(power))
        if x is not None:
            return Polynomial(QQ, [-c for c in x] + [Fraction(1)])
        power = power * a
    raise ArithmeticError("no linear dependence found below the field degree (internal)")


# ---------------------------------------------------------------------------
# Trager factorization over a number field


def norm_polynomial(g: Polynomial) -> Polynomial:
    """Norm of g in F[x] down to Q[x]: the product of all conjugates of g.

    Computed by evaluation at rational points and Newton interpolation; each
    value is a resultant of the field's defining polynomial with the residue
    representation of g evaluated at the point.
    """
    F = g.field
    if not isinstance(F, ExtensionField) or F.base != QQ:
        raise ValueError("norm_polynomial expects a polynomial over an absolute field")
    n = F.degree
    d = g.degree
    total = n * d
    M = F.modulus
    points = []
    values = []
    k = 0
    while len(points) < total + 1:
        x0 = Fraction(_center_sequence(k))
        k += 1
        e = g.evaluate(F.coerce(x0))
        if not e:
            val = Fraction(0)
        else:
            h = Polynomial(QQ, e.coeffs)
            val = poly_resultant(M, h)
        points.append(x0)
        values.append(val)
    return _interpolate(points, values)


def _center_sequence(k):
    # 0, 1, -1, 2, -2, ...
    if k == 0:
        return 0
    half = (k + 1) // 2
    return half if k % 2 == 1 else -half


def _interpolate(points, values):
    n = len(points)
    coef = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    poly = Polynomial.constant(QQ, coef[-1])
    x = Polynomial.x(QQ)
    for i in range(n - 2, -1, -1):
        poly = poly * (x - Polynomial.constant(QQ, points[i])) + Polynomial.constant(QQ, coef[i])
    return poly


def _trager_squarefree(f: Polynomial, seed: int):
    """Irreducible factors of a monic squarefree f over an absolute field."""
    F = f.field
    if f.degree == 1:
        return [f]
    theta = F.gen
    x = Polynomial.x(F)
    shifted = None
    shift = None
    for k in range(0, 4 * F.degree * f.degree + 1):
        s = _center_sequence(k)
        cand = f.compose(x - Polynomial.constant(F, theta * s)) if s else f
        norm = norm_polynomial(cand)
        if is_squarefree_q(norm):
            shifted, shift, squarefree_norm = cand, s, norm
            break
    if shifted is None:
        raise ArithmeticError("no squarefree norm found (internal)")
    nf = factor_over_Q(squarefree_norm, seed=seed)
    if len(nf.factors) == 1:
        return [f]
    out = []
    for h, _ in nf.factors:
        hf = h.map_coefficients(F.coerce, F)
        g = poly_gcd(shifted, hf)
        if g.degree == 0:
            continue
        back = g.compose(x + Polynomial.constant(F, theta * shift)) if shift else g
        out.append(back.monic())
    record_check(
        "trager.reconstruction",
        _product(out, F) == f,
        "product of Trager factors must reproduce the input",
    )
    return out


def _product(polys, field):
    acc = Polynomial.one(field)
    for p in polys:
        acc = acc * p
    return acc


def factor_over_number_field(p: Polynomial, seed: int = DEFAULT_SEED) -> Factorization:
    """Trager's method: squarefree split, shifted norms, factor over Q, pull back."""
    F = p.field
    if not isinstance(F, ExtensionField):
        raise ValueError("factor_over_number_field expects an extension-field polynomial")
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if F.base != QQ:
        raise ValueError("factor_over_number_field expects an absolute field (base Q)")
    unit = p.lc
    if p.degree == 0:
        return Factorization(unit, ())
    if F.degree == 1:
        pq = p.map_coefficients(lambda c: c.coeffs[0], QQ)
        qf = factor_over_Q(pq, seed=seed)
        pairs = [(g.map_coefficients(F.coerce, F), m) for g, m in qf.factors]
        return Factorization(unit, _sorted_factors(pairs))
    pairs = []
    for part, mult in poly_squarefree_decomposition(p):
        for g in _trager_squarefree(part, seed):
            pairs.append((g, mult))
    return Factorization(unit, _sorted_factors(pairs))


def roots_in_field(q: Polynomial, field, seed: int = DEFAULT_SEED):
    """All roots of a rational polynomial q that lie in the given field."""
    if q.field != QQ:
        raise ValueError("roots_in_field expects a rational polynomial")
    if isinstance(field, AbsoluteField):
        field = field.ext
    qf = poly_squarefree_part(q).map_coefficients(field.coerce, field)
    fac = factor_over_number_field(qf, seed=seed)
    roots = [-g.coeff(0) for g, _ in fac.factors if g.degree == 1]
    return sorted(roots, key=element_sort_key)
