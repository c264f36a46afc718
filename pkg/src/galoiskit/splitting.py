"""Splitting fields over Q, with the explicit list of all roots.

The construction loop factors over the current field, adjoins a root of the
first nonlinear irreducible factor in canonical order, re-flattens, and
repeats until the polynomial splits.  A cheap monomial "root hunt" finds
roots that are products of powers of known roots (cyclotomic and radical
polynomials split this way) before falling back to Trager factorization.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .checks import record_check
from .errors import DegreeCapError
from .numfield import (
    DEFAULT_DEGREE_CAP,
    ExtElement,
    FieldTower,
    element_sort_key,
    factor_over_number_field,
)
from .poly import Polynomial, poly_squarefree_part
from .qfactor import DEFAULT_SEED, factor_degrees_mod_p, factor_over_Q
from .scalars import QQ
from . import modscreen


@dataclass(frozen=True, eq=False)
class SplittingField:
    """An absolute field containing, and generated by, all roots of a
    rational polynomial."""

    tower: FieldTower
    roots: tuple  # all roots of the squarefree part, canonical order
    source: Polynomial  # full rational polynomial (base source included)
    squarefree_source: Polynomial
    base: Optional["SplittingField"]
    lift_from_base: Optional[Callable]
    notes: tuple
    # cache slot: the Galois group is unique per field, so repeated
    # correspondence work does not re-enumerate automorphisms
    _group_cache: list = None

    def __post_init__(self):
        if self._group_cache is None:
            object.__setattr__(self, "_group_cache", [])

    @property
    def field(self):
        return self.tower.absolute

    @property
    def degree(self):
        return self.tower.degree

    def __repr__(self):
        return f"SplittingField(degree={self.degree}, roots={len(self.roots)})"


def splitting_field(p: Polynomial, base: Optional[SplittingField] = None,
                    degree_cap: int = DEFAULT_DEGREE_CAP, seed: int = DEFAULT_SEED,
                    factor_order: str = "canonical") -> SplittingField:
    """Construct the splitting field of p over Q (or over a prior splitting
    field), returning the field together with all roots in canonical order.
    """
    if p.field != QQ:
        raise ValueError("splitting_field expects a rational polynomial")
    if p.degree < 1:
        raise ValueError("splitting_field expects degree >= 1")
    notes = []
    sq = poly_squarefree_part(p)
    if sq != p.monic():
        notes.append("input replaced by its squarefree part (separability normalization)")
    bound = _splitting_degree_lower_bound(sq, seed)
    already = 1 if base is None else base.degree
    # [E:Q] is divisible both by the bound and by the base degree
    provable = math.lcm(bound, already)
    if provable > degree_cap:
        raise DegreeCapError(
            f"splitting degree is provably >= {provable} (Frobenius element orders), "
            f"beyond the cap {degree_cap}",
            attempted=provable, cap=degree_cap)

    if base is None:
        tower = FieldTower.rationals()
        roots = []
        source = p
        base_lifts = None
    else:
        tower = base.tower
        roots = list(base.roots)
        source = base.source * p
        base_lifts = []  # per-adjunction lift functions, composed at the end

    # entries: (polynomial over the current absolute ext, known_irreducible)
    cur = tower.absolute
    entries = [(sq.map_coefficients(cur.ext.coerce, cur.ext), sq.degree == 1)]
    reverse = factor_order == "reverse"

    def entry_key(e):
        return e[0].sort_key()

    while True:
        # extract linear factors and hunted roots until nothing cheap remains
        progressed = True
        while progressed:
            progressed = False
            nxt = []
            for q, known in entries:
                q = q.monic()
                while q.degree >= 1:
                    if q.degree == 1:
                        _add_root(roots, -q.coeff(0))
                        q = Polynomial.one(q.field)
                        progressed = True
                        break
                    hit = _hunt_root(q, roots)
                    if hit is None:
                        break
                    _add_root(roots, hit)
                    x = Polynomial.x(q.field)
                    q, rem = divmod(q, x - Polynomial.constant(q.field, hit))
                    record_check("splitting.hunted_root_divides", rem.is_zero)
                    known = False
                    progressed = True
                if q.degree >= 1:
                    nxt.append((q, known))
            entries = nxt
        if not entries:
            break
        entries.sort(key=entry_key, reverse=reverse)
        q, known = entries[0]
        if not known:
            fac = factor_over_number_field(q, seed=seed)
            entries = [(g, True) for g, _ in fac.factors] + entries[1:]
            continue
        # adjoin a root of the first nonlinear irreducible factor
        name = f"g{len(tower.stages) + 1}"
        tower = tower.adjoin(q, name, verify=False, degree_cap=degree_cap, seed=seed)
        lift = tower.absolute.lift_from_prev
        if base_lifts is not None:
            base_lifts.append(lift)
        roots = [lift(r) for r in roots]
        new_gen = tower.absolute.gen_images[-1]
        _add_root(roots, new_gen)
        lifted = []
        for g, _ in entries:
            lifted.append((g.map_coefficients(lift, tower.absolute.ext), False))
        q_lifted = lifted[0][0]
        x = Polynomial.x(q_lifted.field)
        cofactor, rem = divmod(q_lifted, x - Polynomial.constant(q_lifted.field, new_gen))
        record_check("splitting.adjoined_root_divides", rem.is_zero)
        entries = [(cofactor, False)] + lifted[1:]

    roots.sort(key=element_sort_key)
    sq_source = poly_squarefree_part(source)
    record_check(
        "splitting.root_count_equals_squarefree_degree",
        len(roots) == sq_source.degree,
        f"{len(roots)} roots vs degree {sq_source.degree}",
    )
    ext = tower.absolute.ext
    for r in roots:
        record_check("splitting.root_evaluates_to_zero", not sq_source.evaluate(r))

    lift_fn = None
    if base is not None:
        chain = list(base_lifts)

        def lift_fn(e, _chain=tuple(chain)):
            for f in _chain:
                e = f(e)
            return e

    return SplittingField(
        tower=tower,
        roots=tuple(roots),
        source=source,
        squarefree_source=sq_source,
        base=base,
        lift_from_base=lift_fn,
        notes=tuple(notes),
    )


def splitting_degree(p: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP,
                     seed: int = DEFAULT_SEED) -> int:
    """[E:Q] for the splitting field E of p over Q."""
    return splitting_field(p, degree_cap=degree_cap, seed=seed).degree


def _add_root(roots, r):
    if r not in roots:
        roots.append(r)


# ---------------------------------------------------------------------------
# provable lower bound for early degree-cap refusal

_BOUND_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_QUINTIC_S5_TYPES = {(2, 3), (1, 1, 1, 2)}  # order-6 element / lone transposition
_QUINTIC_A5_TYPES = {(1, 1, 3)}  # 3-cycle: A5 or S5


def _splitting_degree_lower_bound(sq: Polynomial, seed: int) -> int:
    """A divisor of the splitting-field degree, from Frobenius cycle types.

    Factor degrees mod a good prime are the cycle type of a Frobenius
    element; the order of that element divides the group order, which equals
    the splitting degree.  Each irreducible rational factor's splitting
    field sits normally inside the full one, so its bound divides too.  For
    an irreducible quintic, a 3-cycle or larger odd pattern pins the group
    to A5 or S5 (order >= 60).
    """
    bound = 1
    for h, _ in factor_over_Q(sq, seed=seed).factors:
        if h.degree < 2:
            continue
        orders = 1
        good = 0
        types = []
        for prime in _BOUND_PRIMES:
            try:
                degrees = factor_degrees_mod_p(h, prime, seed=seed)
            except ZeroDivisionError:
                degrees = None
            if degrees is None:
                continue
            types.append(tuple(degrees))
            orders = math.lcm(orders, *degrees)
            good += 1
            if good >= 8:
                break
        h_bound = orders
        if h.degree == 5:
            if any(t in _QUINTIC_S5_TYPES for t in types):
                h_bound = max(h_bound, 120)
            elif any(t in _QUINTIC_A5_TYPES for t in types):
                h_bound = max(h_bound, 60)
        bound = math.lcm(bound, h_bound)
    return bound


# ---------------------------------------------------------------------------
# monomial root hunt


_HUNT_SINGLE_EXPS = (-3, -2, -1, 2, 3)
_HUNT_PAIR_EXPS = (-2, -1, 1, 2)


def _hunt_root(q: Polynomial, roots):
    """Look for a root of q among +-r_i**e * r_j**f for known roots r.

    Purely an optimization: candidates are prescreened mod p and verified
    exactly; a miss simply sends the caller to Trager factorization.
    """
    F = q.field
    nonzero = [r for r in roots if r and isinstance(r, ExtElement) and r.field == F]
    if F.degree == 1 or not nonzero:
        return None
    img = modscreen.make_image(F)
    if img is None:
        return None
    try:
        q_imgs = [img.element(c) for c in q.coeffs]
        root_imgs = [img.element(r) for r in nonzero]
    except ZeroDivisionError:
        return None

    exact_powers = {}

    def exact_power(i, e):
        key = (i, e)
        if key not in exact_powers:
            exact_powers[key] = nonzero[i] ** e
        return exact_powers[key]

    def verify(c):
        return not q.evaluate(c)

    def screen(v):
        return not img.eval_poly(q_imgs, v)

    # singles: r_i**e
    for i, rim in enumerate(root_imgs):
        for e in _HUNT_SINGLE_EXPS:
            try:
                v = img.pow(rim, e)
            except ZeroDivisionError:
                continue
            for sign in (1, -1):
                w = v if sign == 1 else img.neg(v)
                if screen(w):
                    cand = exact_power(i, e) * sign
                    if verify(cand):
                        return cand
    # pairs: r_i**e * r_j**f
    npow = {}
    for i, rim in enumerate(root_imgs):
        for e in _HUNT_PAIR_EXPS:
            try:
                npow[(i, e)] = img.pow(rim, e)
            except ZeroDivisionError:
                pass
    for i in range(len(nonzero)):
        for j in range(len(nonzero)):
            if i == j:
                continue
            for e in _HUNT_PAIR_EXPS:
                if (i, e) not in npow:
                    continue
                for f in _HUNT_PAIR_EXPS:
                    if (j, f) not in npow:
                        continue
                    v = img.mul(npow[(i, e)], npow[(j, f)])
                    for sign in (1, -1):
                        w = v if sign == 1 else img.neg(v)
                        if screen(w):
                            cand = exact_power(i, e) * exact_power(j, f) * sign
                            if verify(cand):
                                return cand
    return None
