"""Embeddings of designs into abelian groups Z_m^t and exact verifiers
for additivity (all blocks zero-sum) and strong additivity (the zero-sum
k-subsets of the embedded point set are exactly the blocks).
"""

import math

from . import gf
from .designs import validate_2design
from .errors import (
    BadPrime,
    DegenerateOrder,
    DimensionOutOfRange,
    GroupMismatch,
    NoZeroSigma,
    NotSubspaceBlocks,
    NotSymmetric,
    SizeMismatch,
)
from .geometry import ag_points, bracket, enumerate_subspaces, pg_points

DEFAULT_STRONG_CAP = 10 ** 7


class AbelianGroup:
    """Z_m^t with componentwise addition mod m."""

    def __init__(self, m, t):
        if m < 2 or t < 1:
            raise GroupMismatch("need modulus >= 2 and rank >= 1")
        self.m = m
        self.t = t

    @property
    def order(self):
        return self.m ** self.t

    @property
    def zero(self):
        return (0,) * self.t

    def reduce(self, vec):
        if len(vec) != self.t:
            raise GroupMismatch("expected rank-%d vector" % self.t)
        return tuple(c % self.m for c in vec)

    def add(self, a, b):
        return tuple((x + y) % self.m for x, y in zip(a, b))

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and (self.m, self.t) == (other.m, other.t)

    def __repr__(self):
        return "Z_%d^%d" % (self.m, self.t)


def zero_sum(group, elems):
    """True iff the componentwise sum of elems is the identity."""
    total = [0] * group.t
    for e in elems:
        if len(e) != group.t:
            raise GroupMismatch("element of wrong rank")
        for j, c in enumerate(e):
            total[j] += c
    return all(c % group.m == 0 for c in total)


class Embedding:
    """An injective point -> group-element assignment for a design."""

    def __init__(self, group, image, kind, meta=None):
        self.group = group
        self.image = [group.reduce(vec) for vec in image]
        self.kind = kind
        self.meta = dict(meta or {})

    @property
    def injective(self):
        return len(set(self.image)) == len(self.image)

    def to_dict(self):
        return {
            "group": {"m": self.group.m, "t": self.group.t},
            "kind": self.kind,
            "image": [list(vec) for vec in self.image],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d):
        group = AbelianGroup(d["group"]["m"], d["group"]["t"])
        return cls(group, [tuple(v) for v in d["image"]], d["kind"], d.get("meta"))

    def __repr__(self):
        return "Embedding(%s, %r, v=%d)" % (self.group, self.kind, len(self.image))


class Report:
    """Outcome of an additivity / strong-additivity verification.

    The strong criterion compares the blocks against the zero-sum
    k-subsets of the embedded point set (not of the whole group).
    """

    def __init__(self, injective, additive, strong, zero_sum_subsets, blocks,
                 failures, label=None):
        self.injective = injective
        self.additive = additive
        self.strong = strong  # "pass" | "fail" | "skipped"
        self.zero_sum_subsets = zero_sum_subsets
        self.blocks = blocks
        self.failures = failures
        self.label = label  # "strict" | "almost-strict" | None

    @property
    def passed(self):
        ok = self.injective and self.additive
        if self.strong == "fail":
            ok = False
        return ok

    def to_dict(self):
        return {
            "injective": self.injective,
            "additive": self.additive,
            "strong": self.strong,
            "zero_sum_subsets": self.zero_sum_subsets,
            "blocks": self.blocks,
            "failures": self.failures,
            "label": self.label,
        }

    def __repr__(self):
        return "Report(injective=%s, additive=%s, strong=%s)" % (
            self.injective, self.additive, self.strong)


def _additivity_label(group, v):
    if group.order == v:
        return "strict"
    if group.order == v + 1:
        return "almost-strict"
    return None


def _complement_matrix_embedding(v, blocks, modulus, kind, meta):
    group = AbelianGroup(modulus, v)
    membership = [set(b) for b in blocks]
    image = [
        tuple(0 if i in blk else 1 for blk in membership) for i in range(v)
    ]
    emb = Embedding(group, image, kind, meta)
    assert emb.injective
    return emb


def symmetric_strong_embedding(design):
    """Rows of the complement incidence matrix over Z_{k-lambda}.

    Strong for every symmetric design; the group is Z_{k-lambda}^v.
    """
    if not design.validated:
        design = validate_2design(design)
    if not design.symmetric:
        raise NotSymmetric("design has %d points but %d blocks" % (design.v, len(design.blocks)))
    order = design.k - design.lam
    if order < 2:
        raise DegenerateOrder("k - lambda = %d" % order)
    return _complement_matrix_embedding(
        design.v, design.blocks, order, "symmetric-strong",
        {"k": design.k, "lambda": design.lam},
    )


def pg_strong_embedding(n, q, d):
    """Point-hyperplane complement matrix of PG(n,q) over Z_{q^d}.

    Strong for PG_d(n,q); the group is Z_{q^d}^{[n+1]_q}.
    """
    if not 1 <= d <= n - 1:
        raise DimensionOutOfRange("need 1 <= d <= n-1")
    v = bracket(n + 1, q)
    pts = pg_points(n, q)
    assert len(pts) == v
    hyperplanes = [s.point_indices() for s in enumerate_subspaces(n, q, n - 1)]
    return _complement_matrix_embedding(
        v, hyperplanes, q ** d, "pg-strong", {"n": n, "q": q, "d": d},
    )


def cyclic_embedding(ds, p, poly=None):
    """Embed the development of a difference set in EA(p^t), t = ord_v(p).

    Maps x to the coefficient vector of g^(ix) where g generates the
    order-v subgroup of GF(p^t)* and the sign i in {1,-1} is chosen so
    that sigma_i = sum over D of g^(id) vanishes.  If both sums vanish,
    i = 1 is chosen.
    """
    k, lam, v = ds.k, ds.lam, ds.v
    if not gf.is_prime(p) or (k - lam) % p != 0:
        raise BadPrime("%d is not a prime divisor of k - lambda = %d" % (p, k - lam))
    if v % p == 0:
        raise BadPrime("%d divides v = %d" % (p, v))
    t = gf.mult_order(p, v)
    field = gf.make_field(p, t, poly)
    e = (field.q - 1) // v
    g = field.exp(e)
    sigma = {}
    for sign in (1, -1):
        acc = 0
        for d in ds.elems:
            acc = field.add_code(acc, field._exp[(sign * e * d) % (field.q - 1)])
        sigma[sign] = field.from_code(acc)
    if sigma[1].code == 0:
        sign = 1
    elif sigma[-1].code == 0:
        sign = -1
    else:
        raise NoZeroSigma("neither sigma_1 nor sigma_-1 vanished")  # impossible
    group = AbelianGroup(p, t)
    image = [field.exp((sign * e * x) % (field.q - 1)).coeffs for x in range(v)]
    meta = {
        "p": p,
        "t": t,
        "poly": list(field.prim_poly),
        "g_exponent": e,
        "g": list(g.coeffs),
        "sign": sign,
        "sigma_1": list(sigma[1].coeffs),
        "sigma_-1": list(sigma[-1].coeffs),
    }
    emb = Embedding(group, image, "cyclic-smooth", meta)
    assert emb.injective
    return emb


def sigma_product_is_zero(ds, p):
    """Check sigma_1 * sigma_-1 = 0 in GF(p^t) without building the field.

    The product is computed symbolically in F_p[x]/(x^v - 1), where x
    stands for g.  Since g is a primitive v-th root of unity, every
    polynomial multiple of 1 + x + ... + x^(v-1) evaluates to zero at g,
    so the product vanishes in GF(p^t) iff its reduction mod x^v - 1 has
    all coefficients congruent mod p.
    """
    v = ds.v
    coeffs = [0] * v
    for d in ds.elems:
        for d2 in ds.elems:
            coeffs[(d - d2) % v] += 1
    residues = {c % p for c in coeffs}
    return len(residues) == 1


def subspace_embedding(m, q, design, poly=None):
    """The power map of a subspace design: class of omega^i goes to the
    coefficient vector of omega^(i(q-1)) in GF(q^m), flattened over Z_p.

    The design's points must be the exponent classes of GF(q^m)*/F_q*
    in order, i.e. point i represents the class of omega^i.
    """
    p, alpha = gf.prime_power(q)
    field = gf.make_field(p, alpha * m, poly)
    v = bracket(m, q)
    if design.v != v:
        raise SizeMismatch("design has %d points, GF(%d^%d) classes: %d" % (design.v, q, m, v))
    big = field.q - 1
    group = AbelianGroup(p, alpha * m)
    image = [field.coeffs_of_code(field._exp[(i * (q - 1)) % big]) for i in range(v)]
    emb = Embedding(group, image, "subspace-smooth",
                    {"q": q, "m": m, "poly": list(field.prim_poly)})
    assert emb.injective
    for idx, blk in enumerate(design.blocks):
        if not zero_sum(group, [image[i] for i in blk]):
            raise NotSubspaceBlocks(
                "block %d is not a subspace in this coordinatization" % idx
            )
    return emb


def ag_identity_embedding(n, q):
    """The identity map of AG(n,q): a point vector over F_q flattened to
    its Z_p coefficient string, in ag_points order."""
    p, alpha = gf.prime_power(q)
    field = gf.make_field(p, alpha)
    group = AbelianGroup(p, alpha * n)
    image = []
    for vec in ag_points(n, q):
        flat = []
        for code in vec:
            flat.extend(field.coeffs_of_code(code))
        image.append(tuple(flat))
    emb = Embedding(group, image, "identity", {"n": n, "q": q})
    assert emb.injective
    return emb


def verify_embedding(design, emb):
    """Check injectivity and that every block image is zero-sum."""
    if len(emb.image) != design.v:
        raise SizeMismatch("embedding covers %d points, design has %d" % (len(emb.image), design.v))
    group = emb.group
    failures = []
    for idx, blk in enumerate(design.blocks):
        total = [0] * group.t
        for i in blk:
            for j, c in enumerate(emb.image[i]):
                total[j] += c
        sums = tuple(c % group.m for c in total)
        if any(sums):
            failures.append([idx, list(sums)])
    injective = emb.injective
    return Report(
        injective=injective,
        additive=not failures,
        strong="skipped",
        zero_sum_subsets=None,
        blocks=len(design.blocks),
        failures=failures,
        label=_additivity_label(group, design.v),
    )


def verify_strong(design, emb, cap=DEFAULT_STRONG_CAP):
    """Enumerate all k-subsets of the point set and compare the zero-sum
    ones against the block set.

    Uses lexicographic enumeration with partial sums carried down the
    recursion.  If C(v,k) exceeds cap the strong check is reported as
    skipped, not failed.
    """
    base = verify_embedding(design, emb)
    k = design.k if design.validated else len(design.blocks[0])
    v = design.v
    if math.comb(v, k) > cap:
        return base
    group = emb.group
    m, t = group.m, group.t
    image = emb.image
    zero = (0,) * t
    found = []

    def extend(start, chosen, partial):
        depth = len(chosen)
        if depth == k:
            if partial == zero:
                found.append(tuple(chosen))
            return
        # leave room for the remaining k - depth - 1 picks
        for i in range(start, v - (k - depth) + 1):
            row = image[i]
            chosen.append(i)
            extend(i + 1, chosen, tuple((a + b) % m for a, b in zip(partial, row)))
            chosen.pop()

    extend(0, [], zero)
    zero_sets = {frozenset(s) for s in found}
    strong = "pass" if zero_sets == design.block_sets() else "fail"
    return Report(
        injective=base.injective,
        additive=base.additive,
        strong=strong,
        zero_sum_subsets=len(found),
        blocks=base.blocks,
        failures=base.failures,
        label=base.label,
    )
