"""Finite permutation-group theory at desk scale.

Groups are fully enumerated (no stabilizer chains); the closure bound keeps
everything honest.  Composition convention: (g * h)(i) = g(h(i)), so
permutations act on the left.
"""

import math
from dataclasses import dataclass, field

from .checks import record_check


class Permutation:
    """A bijection of {0..n-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self):
        out = [0] * len(self.images)
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(out)

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        k = 1
        p = self
        while not p.is_identity:
            p = p * self
            k += 1
        return k

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                seen.add(i)
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_notation(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation{self.images}"


MAX_CLOSURE_ORDER = 5040


@dataclass(frozen=True)
class PermGroup:
    """A fully enumerated permutation group, elements in canonical order."""

    degree: int
    elements: tuple
    generators: tuple = ()
    element_set: frozenset = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.element_set is None:
            object.__setattr__(self, "element_set", frozenset(self.elements))

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.element_set

    def is_subgroup_of(self, other):
        return self.element_set <= other.element_set

    @property
    def is_trivial(self):
        return len(self.elements) == 1

    def index(self, p):
        return self.elements.index(p)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def closure(generators, degree=None, max_order=MAX_CLOSURE_ORDER) -> PermGroup:
    """Full element enumeration by breadth-first products of the generators."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("closure of an empty set needs an explicit degree")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generators act on different numbers of points")
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g * p
                if q not in seen:
                    if len(seen) >= max_order:
                        raise ValueError(f"group order exceeds the bound {max_order}")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermGroup(degree, tuple(sorted(seen)), tuple(gens))


def _verify_subgroup(H: PermGroup, G: PermGroup):
    if not H.is_subgroup_of(G):
        raise ValueError("H is not contained in G")


def is_normal(H: PermGroup, G: PermGroup) -> bool:
    """gHg^-1 == H for all g in G (H verified to be a subgroup of G)."""
    _verify_subgroup(H, G)
    hset = H.element_set
    for g in G.elements:
        gi = g.inverse()
        for h in H.elements:
            if g * h * gi not in hset:
                return False
    return True


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Closure of all commutators g h g^-1 h^-1."""
    comms = set()
    for g in G.elements:
        gi = g.inverse()
        for h in G.elements:
            comms.add(g * h * gi * h.inverse())
    return closure(sorted(comms), degree=G.degree, max_order=max(MAX_CLOSURE_ORDER, G.order))


def derived_series(G: PermGroup):
    """G >= G' >= G'' >= ... down to the fixed point of the derived map."""
    series = [G]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            if not nxt.is_trivial:
                series.append(nxt)
            break
        series.append(nxt)
        if nxt.is_trivial:
            break
    return series


def is_solvable(G: PermGroup):
    """(solvable?, derived series); solvable iff the series reaches 1."""
    series = derived_series(G)
    return series[-1].is_trivial, series


def is_abelian(G: PermGroup) -> bool:
    els = G.elements
    for i, g in enumerate(els):
        for h in els[i + 1:]:
            if g * h != h * g:
                return False
    return True


# ---------------------------------------------------------------------------
# abelian-quotient chain certificates


@dataclass(frozen=True)
class ChainStepWitness:
    group_order: int
    subgroup_order: int
    quotient_order: int
    normal: bool
    quotient_abelian: bool


@dataclass(frozen=True)
class ChainCertificate:
    accepted: bool
    steps: tuple
    failure: str = ""

    def to_dict(self):
        return {
            "accepted": self.accepted,
            "steps": [
                {
                    "group_order": s.group_order,
                    "subgroup_order": s.subgroup_order,
                    "quotient_order": s.quotient_order,
                    "normal": s.normal,
                    "quotient_abelian": s.quotient_abelian,
                }
                for s in self.steps
            ],
            "failure": self.failure,
        }


def coset_representatives(G: PermGroup, H: PermGroup):
    """Left coset representatives of H in G, canonical order."""
    reps = []
    covered = set()
    hset = H.element_set
    for g in G.elements:
        if g in covered:
            continue
        reps.append(g)
        covered.update(g * h for h in hset)
    return reps


def _quotient_abelian(G: PermGroup, H: PermGroup) -> bool:
    """Abelianness of G/H checked on coset representatives."""
    reps = coset_representatives(G, H)
    hset = H.element_set

    def same_coset(a, b):
        return a.inverse() * b in hset

    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if not same_coset(a * b, b * a):
                return False
    return True


def solvable_via_abelian_chain(chain) -> ChainCertificate:
    """Certify a descending chain G_0 >= G_1 >= ... >= G_n = 1 as exhibiting
    solvability: each step normal with abelian quotient.

    Shape violations (non-descending, nontrivial tail) raise; mathematical
    failures are reported in the certificate.
    """
    chain = list(chain)
    if not chain:
        raise ValueError("empty chain")
    for a, b in zip(chain, chain[1:]):
        if not b.is_subgroup_of(a):
            raise ValueError("chain is not descending")
    if not chain[-1].is_trivial:
        raise ValueError("chain must end with the trivial group")
    steps = []
    for i, (g, h) in enumerate(zip(chain, chain[1:])):
        normal = is_normal(h, g)
        abelian = _quotient_abelian(g, h) if normal else False
        steps.append(ChainStepWitness(g.order, h.order, g.order // h.order, normal, abelian))
        if not normal:
            return ChainCertificate(False, tuple(steps), f"step {i}: subgroup not normal")
        if not abelian:
            return ChainCertificate(False, tuple(steps), f"step {i}: quotient not abelian")
    return ChainCertificate(True, tuple(steps))


# ---------------------------------------------------------------------------
# subgroup enumeration (for the Galois duality tests)


def all_subgroups(G: PermGroup):
    """Every subgroup, by breadth-first closure over added generators."""
    trivial = closure([], degree=G.degree)
    found = {trivial.element_set: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H.element_set:
                    continue
                K = closure(list(H.generators) + [g], degree=G.degree,
                            max_order=max(MAX_CLOSURE_ORDER, G.order))
                if K.element_set not in found:
                    found[K.element_set] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (H.order, tuple(p.images for p in H.elements)))


def cyclic_subgroups(G: PermGroup):
    out = {}
    for g in G.elements:
        H = closure([g], degree=G.degree, max_order=G.order)
        out.setdefault(H.element_set, H)
    return sorted(out.values(), key=lambda H: (H.order, tuple(p.images for p in H.elements)))


# ---------------------------------------------------------------------------
# cyclic and unit groups; embeddings of Galois layers


@dataclass(frozen=True)
class CyclicGroupZ:
    """The additive group Z_n."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")

    @property
    def order(self):
        return self.modulus

    def elements(self):
        return tuple(range(self.modulus))

    def identity(self):
        return 0

    def op(self, a, b):
        return (a + b) % self.modulus

    def element_order(self, a):
        return self.modulus // math.gcd(self.modulus, a) if a else 1

    def describe(self):
        return f"Z_{self.modulus}"


@dataclass(frozen=True)
class UnitGroup:
    """U(n): residues coprime to n under multiplication."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("unit groups need n >= 2")

    @property
    def order(self):
        return len(self.elements())

    def elements(self):
        n = self.modulus
        return tuple(a for a in range(1, n) if math.gcd(a, n) == 1)

    def identity(self):
        return 1

    def op(self, a, b):
        return a * b % self.modulus

    def element_order(self, a):
        k = 1
        x = a
        while x != 1:
            x = x * a % self.modulus
            k += 1
        return k

    def describe(self):
        return f"U({self.modulus})"


@dataclass(frozen=True)
class DirectSumZ:
    """Direct sum of m copies of Z_n; elements are m-tuples."""

    modulus: int
    copies: int

    def __post_init__(self):
        if self.modulus < 1 or self.copies < 1:
            raise ValueError("need modulus >= 1 and copies >= 1")

    @property
    def order(self):
        return self.modulus ** self.copies

    def elements(self):
        import itertools

        return tuple(itertools.product(range(self.modulus), repeat=self.copies))

    def identity(self):
        return (0,) * self.copies

    def op(self, a, b):
        return tuple((x + y) % self.modulus for x, y in zip(a, b))

    def element_order(self, a):
        n = self.modulus
        return math.lcm(*(n // math.gcd(n, x) if x else 1 for x in a))

    def describe(self):
        return f"Z_{self.modulus}^{self.copies}"


def unit_group(n: int) -> UnitGroup:
    return UnitGroup(n)


def aut_cyclic(n: int):
    """All automorphisms of the additive group Z_n, with the verified
    isomorphism onto U(n) (multiplication maps k -> m*k).

    Returns (UnitGroup, {m: image tuple of the automorphism}).
    """
    if n < 2:
        raise ValueError("aut_cyclic needs n >= 2")
    U = UnitGroup(n)
    witness = {}
    for m in U.elements():
        auto = tuple(m * k % n for k in range(n))
        # verify additivity and bijectivity exhaustively (desk scale)
        record_check("aut_cyclic.bijective", sorted(auto) == list(range(n)))
        ok = all(auto[(i + j) % n] == (auto[i] + auto[j]) % n for i in range(n) for j in range(n))
        record_check("aut_cyclic.additive", ok)
        witness[m] = auto
    # the correspondence is an isomorphism: composition matches multiplication
    for m1 in U.elements():
        for m2 in U.elements():
            composed = tuple(witness[m1][witness[m2][k]] for k in range(n))
            record_check("aut_cyclic.homomorphism", composed == witness[U.op(m1, m2)])
    return U, witness


@dataclass(frozen=True)
class Embedding:
    """A verified injective homomorphism from a PermGroup into a target."""

    target: object
    mapping: tuple  # pairs (Permutation, target element), group order long

    def as_dict(self):
        return dict(self.mapping)


def find_embedding(G: PermGroup, target):
    """Search for an injective homomorphism G -> target; None is definitive
    at desk scale.

    The target is one of CyclicGroupZ, UnitGroup, DirectSumZ.  Since all
    targets are abelian, non-abelian G fails immediately.
    """
    if G.order > target.order:
        return None
    if G.order > 1 and not is_abelian(G):
        return None
    gens = _small_generating_set(G)
    tgt_elements = target.elements()

    def backtrack(mapping, idx):
        if idx == len(gens):
            return mapping
        g = gens[idx]
        need = g.order()
        for t in tgt_elements:
            if target.element_order(t) != need:
                continue
            new_map = _extend_homomorphism(mapping, g, t, target)
            if new_map is None:
                continue
            result = backtrack(new_map, idx + 1)
            if result is not None:
                return result
        return None

    identity = Permutation.identity(G.degree)
    mapping = backtrack({identity: target.identity()}, 0)
    if mapping is None or len(mapping) != G.order:
        return None
    # final verification: homomorphism on all pairs, injective
    record_check("embedding.injective", len(set(mapping.values())) == len(mapping))
    ok = all(
        mapping[a * b] == target.op(mapping[a], mapping[b])
        for a in mapping
        for b in mapping
    )
    record_check("embedding.homomorphism", ok)
    return Embedding(target, tuple(sorted(mapping.items(), key=lambda kv: kv[0].images)))


def _extend_homomorphism(mapping, g, t, target):
    """Extend a partial injective hom by g -> t; None on any conflict."""
    new_map = dict(mapping)
    frontier = list(mapping.items())
    gi, ti = g, t
    # close under multiplication by powers of g
    k = g.order()
    g_pows = [Permutation.identity(g.degree)]
    t_pows = [target.identity()]
    for _ in range(k - 1):
        g_pows.append(g_pows[-1] * g)
        t_pows.append(target.op(t_pows[-1], t))
    for h, s in frontier:
        for j in range(1, k):
            key = h * g_pows[j]
            val = target.op(s, t_pows[j])
            if key in new_map:
                if new_map[key] != val:
                    return None
            else:
                new_map[key] = val
    values = list(new_map.values())
    if len(set(values)) != len(values):
        return None
    return new_map


def _small_generating_set(G: PermGroup):
    gens = []
    span = closure([], degree=G.degree)
    for g in G.elements:
        if g not in span.element_set:
            gens.append(g)
            span = closure(gens, degree=G.degree, max_order=G.order)
            if span.order == G.order:
                break
    return gens
