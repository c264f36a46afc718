"""Galois groups of splitting fields and the Galois correspondence.

Automorphisms are defined by where they send the primitive element theta:
any root of theta's minimal polynomial lying in the field gives a valid
automorphism by substitution, so every enumerated candidate is correct by
construction and the induced root permutation is derived, never searched.
The enumeration is complete because every automorphism sends each tower
generator to a root of that generator's minimal polynomial, and theta is an
integer combination of the generators.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .checks import record_check
from .errors import SoundnessError
from .linalg import nullspace, solve_columns
from .numfield import ExtElement, element_sort_key, minimal_polynomial, q_coords, roots_in_field
from .permgroup import PermGroup, Permutation, closure, is_normal
from .poly import Polynomial, poly_squarefree_part
from .qfactor import DEFAULT_SEED, factor_over_Q
from .scalars import QQ
from .splitting import SplittingField
from . import modscreen


class Automorphism:
    """A field automorphism, stored as the image of the primitive element."""

    __slots__ = ("field", "theta_image", "root_permutation", "_powers")

    def __init__(self, field, theta_image, root_permutation=None):
        self.field = field  # AbsoluteField
        self.theta_image = theta_image
        self.root_permutation = root_permutation
        self._powers = None

    @property
    def powers(self):
        if self._powers is None:
            n = self.field.degree
            powers = [self.field.ext.one]
            for _ in range(n - 1):
                powers.append(powers[-1] * self.theta_image)
            self._powers = powers
        return self._powers

    def apply(self, a):
        """Image of a field element: substitute theta -> theta_image."""
        if isinstance(a, (int, Fraction)):
            return self.field.ext.coerce(a)
        if a.field != self.field.ext:
            raise ValueError("element does not belong to this automorphism's field")
        acc = self.field.ext.zero
        for c, p in zip(a.coeffs, self.powers):
            if c:
                acc = acc + p * c
        return acc

    def matrix_columns(self):
        """Rational coordinate columns of theta_image**j (the action matrix)."""
        return [q_coords(p) for p in self.powers]

    @property
    def is_identity(self):
        return self.theta_image == self.field.theta

    def __repr__(self):
        perm = self.root_permutation.cycle_notation() if self.root_permutation else "?"
        return f"Automorphism({perm})"


@dataclass(frozen=True)
class GaloisGroup:
    """All automorphisms of a splitting field over Q, in canonical order."""

    splitting: SplittingField
    automorphisms: tuple
    identity_index: int

    @property
    def order(self):
        return len(self.automorphisms)

    @property
    def field(self):
        return self.splitting.field

    def perm(self, i) -> Permutation:
        return self.automorphisms[i].root_permutation

    def perm_group(self) -> PermGroup:
        perms = tuple(a.root_permutation for a in self.automorphisms)
        return PermGroup(len(self.splitting.roots), tuple(sorted(perms)), perms)

    def index_of_perm(self, perm) -> int:
        for i, a in enumerate(self.automorphisms):
            if a.root_permutation == perm:
                return i
        raise KeyError(f"permutation {perm} is not induced by any automorphism")

    def compose(self, i, j) -> int:
        """Index of automorphism i applied after j."""
        return self.index_of_perm(self.perm(i) * self.perm(j))

    def inverse(self, i) -> int:
        return self.index_of_perm(self.perm(i).inverse())

    def apply(self, i, a):
        return self.automorphisms[i].apply(a)

    def subgroup_indices_closure(self, indices):
        """Close a set of automorphism indices under composition and inverse."""
        idx = set(indices)
        idx.add(self.identity_index)
        changed = True
        while changed:
            changed = False
            for i in list(idx):
                j = self.inverse(i)
                if j not in idx:
                    idx.add(j)
                    changed = True
                for k in list(idx):
                    c = self.compose(i, k)
                    if c not in idx:
                        idx.add(c)
                        changed = True
        return tuple(sorted(idx))

    def is_subgroup(self, indices) -> bool:
        idx = set(indices)
        if self.identity_index not in idx:
            return False
        return set(self.subgroup_indices_closure(indices)) == idx

    def __repr__(self):
        return f"GaloisGroup(order={self.order})"


def galois_group(E: SplittingField, seed: int = DEFAULT_SEED) -> GaloisGroup:
    """Enumerate G(E, Q) and verify #G = [E:Q] as a hard runtime assertion."""
    if E._group_cache:
        return E._group_cache[0]
    group = _enumerate_galois_group(E, seed)
    E._group_cache.append(group)
    return group


def _enumerate_galois_group(E: SplittingField, seed: int) -> GaloisGroup:
    field = E.field
    n = field.degree
    roots = E.roots
    if n == 1:
        ident = Automorphism(field, field.theta, Permutation.identity(len(roots)))
        return GaloisGroup(E, (ident,), 0)

    gens = field.gen_images
    combo = field.theta_combo
    active = [(g, c) for g, c in zip(gens, combo) if c]
    gen_minpolys = [minimal_polynomial(g) for g, _ in active]
    allowed = []
    for mp in gen_minpolys:
        allowed.append([r for r in roots if not mp.evaluate(r)])

    min_poly = field.min_poly
    img = modscreen.make_image(field.ext)
    screen_coeffs = None
    if img is not None:
        try:
            screen_coeffs = [img.scalar(c) for c in min_poly.coeffs]
        except ZeroDivisionError:
            img = None

    candidates = {}
    for tup in itertools.product(*allowed):
        if len(set(tup)) != len(tup):
            continue
        value = field.ext.zero
        for (_, c), r in zip(active, tup):
            value = value + r * c
        if value in candidates:
            continue
        candidates[value] = None
    theta_images = []
    for value in candidates:
        if img is not None:
            try:
                if img.eval_poly(screen_coeffs, img.element(value)):
                    continue
            except ZeroDivisionError:
                pass
        if not min_poly.evaluate(value):
            theta_images.append(value)

    record_check(
        "galois.order_equals_degree",
        len(theta_images) == n,
        f"found {len(theta_images)} automorphisms in a degree-{n} field",
    )

    root_index = {r: i for i, r in enumerate(roots)}
    autos = []
    for image in theta_images:
        a = Automorphism(field, image)
        images = []
        for r in roots:
            s = a.apply(r)
            j = root_index.get(s)
            if j is None:
                raise SoundnessError("galois.root_permutation", "automorphism image is not a root")
            images.append(j)
        a.root_permutation = Permutation(images)
        autos.append(a)
    autos.sort(key=lambda a: a.root_permutation.images)

    perms = [a.root_permutation for a in autos]
    record_check("galois.action_faithful", len(set(perms)) == len(perms))
    identity_index = next(i for i, a in enumerate(autos) if a.root_permutation.is_identity)
    record_check("galois.identity_is_identity_map", autos[identity_index].is_identity)
    if n <= 64:
        perm_set = set(perms)
        closed = all((p * q) in perm_set for p in perms for q in perms)
        record_check("galois.multiplication_table_closed", closed)
        record_check("galois.inverses_present", all(p.inverse() in perm_set for p in perms))
    return GaloisGroup(E, tuple(autos), identity_index)


# ---------------------------------------------------------------------------
# orbits and the explicit minimal-polynomial formula


def orbit(G: GaloisGroup, a):
    """The set {g(a) : g in G}, deduplicated, in canonical order."""
    a = G.field.ext.coerce(a) if not isinstance(a, ExtElement) else a
    seen = []
    for g in G.automorphisms:
        v = g.apply(a)
        if v not in seen:
            seen.append(v)
    return tuple(sorted(seen, key=element_sort_key))


def orbit_min_poly(G: GaloisGroup, a) -> Polynomial:
    """prod (x - w) over the orbit of a, with rational coefficients asserted.

    The product is expanded over E; the symmetric functions of the orbit are
    fixed by every automorphism, so each coefficient must be rational.
    """
    orb = orbit(G, a)
    ext = G.field.ext
    x = Polynomial.x(ext)
    acc = Polynomial.one(ext)
    for w in orb:
        acc = acc * (x - Polynomial.constant(ext, w))
    rational_coeffs = []
    for c in acc.coeffs:
        coords = q_coords(c)
        record_check(
            "orbit_min_poly.coefficients_rational",
            not any(coords[1:]),
            "a symmetric function of an orbit escaped Q",
        )
        rational_coeffs.append(coords[0])
    return Polynomial(QQ, rational_coeffs)


# ---------------------------------------------------------------------------
# intermediate fields and the correspondence


@dataclass(frozen=True)
class IntermediateField:
    """A subfield Q <= B <= E, presented inside E."""

    field: object  # the ambient AbsoluteField
    generators: tuple  # elements of E generating B
    primitive: object  # a single element generating B
    min_poly: Polynomial  # minimal polynomial of the primitive element over Q
    degree: int
    basis: tuple  # rational coordinate vectors spanning B as a Q-subspace

    def contains(self, element) -> bool:
        cols = [list(b) for b in self.basis]
        return solve_columns(cols, list(q_coords(element)), QQ) is not None

    def __repr__(self):
        return f"IntermediateField(degree={self.degree})"


def fixed_field(G: GaloisGroup, subgroup_indices) -> IntermediateField:
    """Solve for the subspace fixed pointwise by a subgroup H and present it
    with a primitive element; asserts [B:Q] = #G / #H."""
    idx = tuple(sorted(set(subgroup_indices)))
    if not G.is_subgroup(idx):
        raise ValueError("indices do not form a subgroup (closure or inverses missing)")
    n = G.field.degree
    h_gens = _subgroup_generators(G, idx)
    rows = []
    for i in h_gens:
        cols = G.automorphisms[i].matrix_columns()
        # rows of (M - I): row r is [cols[j][r] - delta(r, j)]
        for r in range(n):
            row = [cols[j][r] for j in range(n)]
            row[r] = row[r] - Fraction(1)
            rows.append(row)
    if rows:
        basis = nullspace(rows, QQ)
    else:
        basis = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    dim = len(basis)
    record_check(
        "fixed_field.degree_equals_index",
        dim * len(idx) == n,
        f"dim {dim} * |H| {len(idx)} != [E:Q] {n}",
    )
    primitive = _primitive_of_subspace(G, basis, dim)
    mp = orbit_min_poly(G, primitive)
    record_check("fixed_field.primitive_degree", mp.degree == dim)
    return IntermediateField(
        field=G.field,
        generators=(primitive,),
        primitive=primitive,
        min_poly=mp,
        degree=dim,
        basis=tuple(tuple(b) for b in basis),
    )


def _subgroup_generators(G: GaloisGroup, idx):
    """A small generating subset of a subgroup given by indices."""
    idx_set = set(idx)
    gens = []
    span = {G.identity_index}
    for i in idx:
        if i in span:
            continue
        gens.append(i)
        span = set(G.subgroup_indices_closure(gens))
        if span == idx_set:
            break
    return gens


def _primitive_of_subspace(G: GaloisGroup, basis, dim):
    """First element of the fixed subspace whose orbit has full size."""
    ext = G.field.ext

    def element_from(vec):
        return ext.from_rep([Fraction(c) for c in vec])

    def orbit_size(e):
        return len(orbit(G, e))

    for vec in basis:
        e = element_from(vec)
        if orbit_size(e) == dim:
            return e
    for k in range(1, 40):
        vec = [Fraction(0)] * len(basis[0])
        w = 1
        for b in basis:
            for i, c in enumerate(b):
                vec[i] += w * c
            w *= k
        e = element_from(vec)
        if orbit_size(e) == dim:
            return e
    raise SoundnessError("fixed_field.primitive_search", "no primitive element found for subfield")


def subgroup_fixing(G: GaloisGroup, B) -> tuple:
    """Indices of all automorphisms fixing B pointwise (a verified subgroup)."""
    if isinstance(B, IntermediateField):
        gens = B.generators
        expected = G.order // B.degree
    else:
        gens = tuple(B)
        expected = None
    gens = tuple(G.field.ext.coerce(g) if not isinstance(g, ExtElement) else g for g in gens)
    idx = tuple(
        i for i, a in enumerate(G.automorphisms) if all(a.apply(g) == g for g in gens)
    )
    record_check("subgroup_fixing.is_subgroup", G.is_subgroup(idx))
    if expected is not None:
        record_check(
            "subgroup_fixing.order_equals_index",
            len(idx) == expected,
            f"|H| {len(idx)} != [E:K]/[B:K] {expected}",
        )
    return idx


def intermediate_field(G: GaloisGroup, elements) -> IntermediateField:
    """The subfield of E generated by the given elements, via its stabilizer."""
    elems = tuple(
        G.field.ext.coerce(e) if not isinstance(e, ExtElement) else e for e in elements
    )
    stab = tuple(
        i for i, a in enumerate(G.automorphisms) if all(a.apply(e) == e for e in elems)
    )
    B = fixed_field(G, stab)
    for e in elems:
        record_check("intermediate_field.contains_generators", B.contains(e))
    return IntermediateField(
        field=B.field,
        generators=elems if elems else B.generators,
        primitive=B.primitive,
        min_poly=B.min_poly,
        degree=B.degree,
        basis=B.basis,
    )


@dataclass(frozen=True)
class RestrictionHomomorphism:
    """The restriction map G(E,K) -> G(B,K) for a normal intermediate B."""

    mapping: tuple  # index in G -> index in image group
    kernel: tuple  # indices in G restricting to the identity on B
    image: PermGroup  # permutations of the roots of B's defining polynomial
    roots: tuple  # roots of the defining polynomial, canonical order


def restriction_homomorphism(G: GaloisGroup, B: IntermediateField,
                             defining_poly: Polynomial,
                             seed: int = DEFAULT_SEED) -> RestrictionHomomorphism:
    """Restrict every automorphism to B, checking normality, surjectivity
    onto a group of order [B:Q], and that the kernel is exactly the
    subgroup fixing B."""
    if defining_poly.field != QQ:
        raise ValueError("the defining polynomial of B must be rational")
    sq = poly_squarefree_part(defining_poly)
    b_roots = []
    for h, _ in factor_over_Q(sq, seed=seed).factors:
        found = roots_in_field(h, G.field, seed=seed)
        if len(found) != h.degree:
            raise ValueError("the supplied polynomial does not split inside E")
        b_roots.extend(found)
    b_roots = tuple(sorted(set(b_roots), key=element_sort_key))
    for r in b_roots:
        if not B.contains(r):
            raise ValueError(
                "B is not normal over Q: a conjugate root escapes B")

    kernel = tuple(
        i for i, a in enumerate(G.automorphisms) if all(a.apply(r) == r for r in b_roots)
    )
    fixing_B = subgroup_fixing(G, B)
    record_check(
        "restriction.kernel_is_subgroup_fixing_B",
        set(kernel) == set(fixing_B),
        "kernel of the restriction differs from the stabilizer of B",
    )

    root_pos = {r: i for i, r in enumerate(b_roots)}
    perms = []
    for a in G.automorphisms:
        images = []
        for r in b_roots:
            s = a.apply(r)
            j = root_pos.get(s)
            if j is None:
                raise SoundnessError("restriction.image_is_root", "restricted image escaped the root set")
            images.append(j)
        perms.append(Permutation(images))
    image_elements = tuple(sorted(set(perms)))
    image = PermGroup(len(b_roots), image_elements, image_elements)
    mapping = tuple(image_elements.index(p) for p in perms)

    record_check(
        "restriction.surjective_onto_GBK",
        image.order == B.degree,
        f"image order {image.order} != [B:Q] {B.degree}",
    )
    record_check(
        "restriction.order_product",
        image.order * len(kernel) == G.order,
        "image order times kernel order must equal #G",
    )
    kernel_group = closure([G.perm(i) for i in kernel], degree=len(G.splitting.roots),
                           max_order=max(64, G.order))
    record_check("restriction.kernel_normal", is_normal(kernel_group, G.perm_group()))
    hom_ok = all(
        mapping[G.compose(i, j)] == image_elements.index(perms[i] * perms[j])
        for i in range(G.order)
        for j in range(G.order)
    )
    record_check("restriction.homomorphism_property", hom_ok)
    return RestrictionHomomorphism(mapping, kernel, image, b_roots)
