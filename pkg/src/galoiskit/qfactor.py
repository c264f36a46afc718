"""Complete factorization of univariate polynomials over Q and over GF(p).

The rational pipeline is classic Zassenhaus: content removal, Yun squarefree
decomposition, reduction mod a good prime, Cantor-Zassenhaus factorization
there, quadratic Hensel lifting to a Mignotte-style coefficient bound, and
exhaustive subset recombination (input degrees are desk scale, so no LLL).

Internally the hot kernels work on plain int lists (ascending coefficients)
mod p or mod p**k; Polynomial objects appear only at the API boundary.
"""

import math
import random
from dataclasses import dataclass

from .poly import (
    Polynomial,
    poly_content_and_primitive,
    poly_from_int_coeffs,
    poly_squarefree_decomposition,
)
from .scalars import QQ, PrimeField, is_prime

DEFAULT_SEED = 1

_PRIME_POOL = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
    233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313,
]


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor**multiplicity) reconstructs the input exactly."""

    unit: object
    factors: tuple  # of (monic irreducible Polynomial, multiplicity)

    def expand(self, field):
        out = Polynomial.constant(field, self.unit)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def __iter__(self):
        return iter(self.factors)


def _sorted_factors(pairs):
    return tuple(sorted(pairs, key=lambda fm: (fm[0].sort_key(), fm[1])))


# ---------------------------------------------------------------------------
# int-list arithmetic mod m (ascending coefficients, no trailing zeros)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_add(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _trim(out)


def _zp_sub(a, b, m):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _trim(out)


def _zp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % m for c in out])


def _zp_divmod(a, b, m):
    """Division mod m; the leading coefficient of b must be invertible."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    db, dlc = len(b) - 1, b[-1]
    inv = pow(dlc, -1, m)
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % m
        if c:
            q = c * inv % m
            quot[i - db] = q
            for j, bc in enumerate(b):
                a[i - db + j] = (a[i - db + j] - q * bc) % m
        else:
            a[i] = 0
    return _trim(quot), _trim([c % m for c in a])


def _zp_mod(a, b, m):
    return _zp_divmod(a, b, m)[1]


def _zp_monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _zp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _zp_mod(a, b, p)
    return _zp_monic(a, p)


def _zp_powmod(a, e, f, p):
    result = [1]
    base = _zp_mod(a, f, p)
    while e:
        if e & 1:
            result = _zp_mod(_zp_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _zp_mod(_zp_mul(base, base, p), f, p)
    return result


def _zp_derivative(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _zp_squarefree_decomposition(f, p):
    """[(g_i, m_i)] with f monic = prod g_i**m_i, each g_i monic squarefree."""
    out = []
    if len(f) - 1 < 1:
        return out
    d = _zp_derivative(f, p)
    if not d:
        # f = h(x**p); a p-th root just reads every p-th coefficient
        h = f[::p]
        for g, m in _zp_squarefree_decomposition(h, p):
            out.append((g, m * p))
        return out
    g = _zp_gcd(f, d, p)
    w = _zp_divmod(f, g, p)[0]
    i = 1
    while len(w) > 1:
        y = _zp_gcd(w, g, p)
        z = _zp_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        g = _zp_divmod(g, y, p)[0]
        i += 1
    if len(g) > 1:
        for gg, m in _zp_squarefree_decomposition(g, p):
            out.append((gg, m * p))
    return out


def _zp_distinct_degree(f, p):
    """Split monic squarefree f into [(product_of_degree_d_factors, d)]."""
    out = []
    h = [0, 1]
    x = [0, 1]
    cur = list(f)
    d = 0
    while len(cur) - 1 >= 2 * (d + 1):
        d += 1
        h = _zp_powmod(h, p, cur, p)
        g = _zp_gcd(_zp_sub(h, x, p), cur, p)
        if len(g) > 1:
            out.append((g, d))
            cur = _zp_divmod(cur, g, p)[0]
            h = _zp_mod(h, cur, p)
    if len(cur) > 1:
        out.append((cur, len(cur) - 1))
    return out


def _zp_equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of a monic product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _trim(a)
        if len(a) <= 1:
            continue
        if p == 2:
            # trace map replaces the (p**d - 1)/2 power in characteristic 2
            b = list(a)
            t = list(a)
            for _ in range(d - 1):
                b = _zp_mod(_zp_mul(b, b, p), f, p)
                t = _zp_add(t, b, p)
            g = _zp_gcd(t, f, p)
        else:
            b = _zp_powmod(a, (p ** d - 1) // 2, f, p)
            g = _zp_gcd(_zp_sub(b, [1], p), f, p)
        if 1 < len(g) < len(f):
            rest = _zp_divmod(f, g, p)[0]
            return _zp_equal_degree(g, d, p, rng) + _zp_equal_degree(rest, d, p, rng)


def _zp_factor_squarefree(f, p, rng):
    """Monic irreducible factors of a monic squarefree f mod p."""
    out = []
    for block, d in _zp_distinct_degree(f, p):
        out.extend(_zp_equal_degree(block, d, p, rng))
    return sorted(out)


def factor_mod_p(p_poly: Polynomial, seed: int = DEFAULT_SEED) -> Factorization:
    """Factor over GF(p): squarefree split, then distinct- and equal-degree."""
    field = p_poly.field
    if not isinstance(field, PrimeField):
        raise ValueError("factor_mod_p expects a polynomial over a prime field")
    if p_poly.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    p = field.p
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    rng = random.Random(seed)
    ints = [c.value for c in p_poly.coeffs]
    unit = field.coerce(ints[-1])
    monic = _zp_monic(ints, p)
    pairs = []
    for part, mult in _zp_squarefree_decomposition(monic, p):
        for irr in _zp_factor_squarefree(part, p, rng):
            pairs.append((poly_from_int_coeffs(field, irr), mult))
    return Factorization(unit, _sorted_factors(pairs))


def factor_degrees_mod_p(p_poly: Polynomial, prime: int, seed: int = DEFAULT_SEED):
    """Sorted degree list of the irreducible factors of p_poly mod prime.

    Only meaningful when the reduction stays squarefree; returns None when
    it does not (the caller should skip that prime).
    """
    field = PrimeField(prime)
    ints = [field.coerce(c).value for c in p_poly.coeffs]
    ints = _trim(list(ints))
    if not ints or len(ints) - 1 != p_poly.degree:
        return None
    monic = _zp_monic(ints, prime)
    if len(_zp_gcd(monic, _zp_derivative(monic, prime), prime)) > 1:
        return None
    rng = random.Random(seed)
    return sorted(len(f) - 1 for f in _zp_factor_squarefree(monic, prime, rng))


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _zx_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _zx_divide_exact(a, b):
    """Exact division in Z[x]; returns quotient or None if it fails."""
    if not b:
        return None
    a = list(a)
    db, blc = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        return None if _trim(a) else []
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c % blc:
            return None
        q = c // blc
        quot[i - db] = q
        if q:
            for j, bc in enumerate(b):
                a[i - db + j] -= q * bc
    return quot if not _trim(a) else None


def _zx_primitive(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g == 0:
        return list(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _mignotte_bound(f):
    """Coefficient bound for any integer factor of f (Mignotte style)."""
    n = len(f) - 1
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return (1 << n) * norm * abs(f[-1])


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, pairwise with a recombination tree)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to mod m**2.

    h must be monic and stays monic; g absorbs the leading coefficient of f.
    """
    mm = m * m
    e = [c % mm for c in _zp_sub(f, _zx_mul(g, h), mm)]
    q, r = _zp_divmod(_zp_mul(s, e, mm), h, mm)
    g1 = _zp_add(_zp_add(g, _zp_mul(t, e, mm), mm), _zp_mul(q, g, mm), mm)
    h1 = _zp_add(h, r, mm)
    b = _zp_sub(_zp_add(_zp_mul(s, g1, mm), _zp_mul(t, h1, mm), mm), [1], mm)
    c, d = _zp_divmod(_zp_mul(s, b, mm), h1, mm)
    s1 = _zp_sub(s, d, mm)
    t1 = _zp_sub(_zp_sub(t, _zp_mul(t, b, mm), mm), _zp_mul(c, g1, mm), mm)
    return g1, h1, s1, t1


def _zp_ext_gcd(a, b, p):
    """(s, t) with s*a + t*b = 1 mod p for coprime a, b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _zp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zp_sub(s0, _zp_mul(q, s1, p), p)
        t0, t1 = t1, _zp_sub(t0, _zp_mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _hensel_lift_tree(f, factors, p, target):
    """Lift f = lc(f) * prod(factors) from mod p to mod p**(2**j) >= target.

    factors are monic mod p and pairwise coprime; returns (lifted monic
    factors, modulus).
    """
    k = 1
    m = p
    while m < target:
        m *= m
        k *= 2

    def build(f_node, leaves, modulus):
        if len(leaves) == 1:
            return [_zp_monic([c % modulus for c in f_node], modulus)]
        half = len(leaves) // 2
        g = [f_node[-1] % p]
        for leaf in leaves[:half]:
            g = _zp_mul(g, leaf, p)
        h = [1]
        for leaf in leaves[half:]:
            h = _zp_mul(h, leaf, p)
        s, t = _zp_ext_gcd(g, h, p)
        m_cur = p
        while m_cur < modulus:
            g, h, s, t = _hensel_step(f_node, g, h, s, t, m_cur)
            m_cur *= m_cur
        return build(g, leaves[:half], modulus) + build(h, leaves[half:], modulus)

    return build([c % m for c in f], factors, m), m


# ---------------------------------------------------------------------------
# Zassenhaus over Z


def _choose_prime(f_int, seed):
    """Pick primes keeping f squarefree; prefer the one with fewest factors."""
    lc = f_int[-1]
    best = None
    tried = 0
    for p in _PRIME_POOL:
        if lc % p == 0:
            continue
        fp = _trim([c % p for c in f_int])
        if len(fp) != len(f_int):
            continue
        if len(_zp_gcd(fp, _zp_derivative(fp, p), p)) > 1:
            continue
        rng = random.Random(seed ^ p)
        factors = _zp_factor_squarefree(_zp_monic(fp, p), p, rng)
        tried += 1
        if best is None or len(factors) < len(best[1]):
            best = (p, factors)
        if len(factors) == 1 or tried >= 5:
            break
    if best is None:
        raise ArithmeticError("no usable prime found for factorization")
    return best


def _factor_squarefree_int(f_int, seed):
    """Irreducible integer factors of a primitive squarefree f in Z[x]."""
    n = len(f_int) - 1
    if n <= 1:
        return [list(f_int)]
    p, mod_factors = _choose_prime(f_int, seed)
    if len(mod_factors) == 1:
        return [list(f_int)]
    bound = 2 * _mignotte_bound(f_int)
    lifted, pk = _hensel_lift_tree(f_int, mod_factors, p, bound)

    result = []
    f = list(f_int)
    pool = list(lifted)
    size = 1
    while 2 * size <= len(pool):
        found = True
        while found:
            found = False
            for subset in _subsets_lex(len(pool), size):
                lc = f[-1]
                cand = [lc]
                for idx in subset:
                    cand = [c % pk for c in _zx_mul(cand, pool[idx])]
                cand = [_symmetric(c, pk) for c in cand]
                cand = _zx_primitive(cand)
                quo = _zx_divide_exact(f, cand)
                if quo is not None:
                    result.append(cand)
                    f = _zx_primitive(quo)
                    pool = [g for i, g in enumerate(pool) if i not in set(subset)]
                    found = True
                    break
            if 2 * size > len(pool):
                break
        size += 1
    if len(f) > 1:
        result.append(f)
    return result


def _subsets_lex(n, k):
    import itertools

    return itertools.combinations(range(n), k)


# ---------------------------------------------------------------------------
# public rational API


def is_squarefree_q(p: Polynomial) -> bool:
    """Squarefreeness over Q, tested mod good primes first.

    Squarefree mod a prime not dividing the leading coefficient implies
    squarefree over Q, which avoids the coefficient blowup of an exact
    Euclidean remainder sequence on large inputs; only when every sampled
    prime divides the discriminant does this fall back to the exact gcd.
    """
    if p.is_zero:
        raise ValueError("squarefreeness of the zero polynomial")
    if p.degree <= 1:
        return True
    _, ints = poly_content_and_primitive(p)
    rejected = 0
    for prime in _PRIME_POOL:
        if ints[-1] % prime == 0:
            continue
        fp = _trim([c % prime for c in ints])
        if len(_zp_gcd(fp, _zp_derivative(fp, prime), prime)) == 1:
            return True
        rejected += 1
        if rejected >= 12:
            break
    from .poly import poly_gcd

    return poly_gcd(p, p.derivative()).degree == 0


def factor_over_Q(p: Polynomial, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete irreducible factorization over Q.

    Returns unit (the leading coefficient times rational content structure)
    and monic irreducible factors with multiplicities; multiplying out
    reproduces the input bit-exactly.
    """
    if p.field != QQ:
        raise ValueError("factor_over_Q expects a rational polynomial")
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    unit = p.lc
    if p.degree == 0:
        return Factorization(unit, ())
    if is_squarefree_q(p):
        # skip Yun: the exact gcd in there is the only expensive step
        parts = [(p.monic(), 1)]
    else:
        parts = poly_squarefree_decomposition(p)
    pairs = []
    for part, mult in parts:
        if part.degree == 0:
            continue
        _, ints = poly_content_and_primitive(part)
        for fac in _factor_squarefree_int(ints, seed):
            fq = poly_from_int_coeffs(QQ, fac).monic()
            pairs.append((fq, mult))
    return Factorization(unit, _sorted_factors(pairs))


def is_irreducible_over_Q(p: Polynomial, seed: int = DEFAULT_SEED) -> bool:
    if p.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    fac = factor_over_Q(p, seed=seed)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
