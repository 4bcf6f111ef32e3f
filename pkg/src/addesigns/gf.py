"""Exact finite-field arithmetic GF(p^n) with precomputed exp/log tables.

Elements are coefficient vectors over Z_p with respect to the root r of a
primitive polynomial.  Display order is highest-degree coefficient first,
so r^0 in GF(27) prints as (0,0,1).  Internally an element is encoded as
the integer sum(c_j * p^j) with c_j the coefficient of x^j.
"""

import math

from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    LogOfZero,
    NotCoprime,
    NotPrime,
    NotPrimitivePolynomial,
    OrderDoesNotDivide,
)

# Table-backed construction is refused beyond this order.
MAX_FIELD_ORDER = 2 ** 20


def is_prime(m):
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class FieldElement:
    """An element of a FieldSpec, held as its integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def coeffs(self):
        """Coefficient tuple, highest degree first."""
        return self.field.coeffs_of_code(self.code)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add_code(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub_code(self.code, other.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul_code(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.div_code(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_code(self.code))

    def __pow__(self, k):
        f = self.field
        if self.code == 0:
            if k == 0:
                return f.one
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return f.zero
        e = (f.log(self) * k) % (f.q - 1)
        return f.exp(e)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.code == self.code
        )

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __repr__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


class FieldSpec:
    """GF(p^n) defined by a primitive polynomial, with exp/log tables.

    The tables are immutable after construction; all operations are pure.
    """

    def __init__(self, p, n, prim_poly):
        self.p = p
        self.n = n
        self.q = p ** n
        self.prim_poly = tuple(prim_poly)  # high-to-low, length n+1
        self._build_tables()

    # -- construction helpers -------------------------------------------

    def _xmul(self, coeffs_low):
        """Multiply a low-first coefficient list by x and reduce mod prim_poly."""
        p, n = self.p, self.n
        top = coeffs_low[n - 1]
        out = [0] + list(coeffs_low[: n - 1])
        if top:
            # x^n = -(a_{n-1} x^{n-1} + ... + a_0), poly stored high-to-low
            for j in range(n):
                a = self.prim_poly[self.n - j]  # coefficient of x^j
                out[j] = (out[j] - top * a) % p
        return out

    def _build_tables(self):
        p, n, q = self.p, self.n, self.q
        exp = []
        cur = [0] * n
        cur[0] = 1  # the element 1
        for i in range(q - 1):
            exp.append(self._encode_low(cur))
            cur = self._xmul(cur)
        # after q-1 multiplications by the root we must be back at 1
        if self._encode_low(cur) != 1 and q > 2:
            raise NotPrimitivePolynomial(
                "root of %s does not have order %d" % (self.describe(), q - 1)
            )
        if len(set(exp)) != q - 1:
            raise NotPrimitivePolynomial(
                "root powers of %s repeat before order %d" % (self.describe(), q - 1)
            )
        self._exp = exp
        self._log = {c: i for i, c in enumerate(exp)}

    def _encode_low(self, coeffs_low):
        v = 0
        for c in reversed(coeffs_low):
            v = v * self.p + c
        return v

    # -- element access -------------------------------------------------

    def coeffs_of_code(self, code):
        """Coefficient tuple of a code, highest degree first."""
        out = []
        for _ in range(self.n):
            out.append(code % self.p)
            code //= self.p
        return tuple(reversed(out))

    def code_of_coeffs(self, coeffs):
        """Code of a coefficient sequence given highest degree first."""
        if len(coeffs) != self.n:
            raise FieldMismatch("expected %d coefficients" % self.n)
        v = 0
        for c in coeffs:
            v = v * self.p + c % self.p
        return v

    def element(self, coeffs):
        return FieldElement(self, self.code_of_coeffs(coeffs))

    def from_code(self, code):
        return FieldElement(self, code)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.q)]

    # -- code-level arithmetic ------------------------------------------

    def add_code(self, a, b):
        p = self.p
        s = 0
        mult = 1
        while a or b:
            s += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg_code(self, a):
        p = self.p
        s = 0
        mult = 1
        while a:
            s += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return s

    def sub_code(self, a, b):
        return self.add_code(a, self.neg_code(b))

    def mul_code(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv_code(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div_code(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return self.mul_code(a, self.inv_code(b))

    def pow_code(self, a, k):
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    # -- exp / log ------------------------------------------------------

    def exp(self, i):
        """r^i for the root r of prim_poly; i taken mod q-1."""
        return FieldElement(self, self._exp[i % (self.q - 1)])

    def log(self, x):
        code = x.code if isinstance(x, FieldElement) else x
        if code == 0:
            raise LogOfZero("log of the zero element")
        return self._log[code]

    def describe(self):
        return "GF(%d^%d; %s)" % (
            self.p,
            self.n,
            ",".join(str(c) for c in self.prim_poly),
        )

    def __repr__(self):
        return self.describe()


def _poly_candidates(p, n):
    """Monic degree-n polynomials over Z_p, lexicographic low-degree-first."""
    total = p ** n
    for v in range(total):
        low = []
        x = v
        for _ in range(n):
            low.append(x % p)
            x //= p
        yield (1,) + tuple(reversed(low))


def _is_primitive(p, n, poly):
    """Check that x generates the full multiplicative group mod poly.

    If poly is reducible the unit group of Z_p[x]/(poly) is strictly
    smaller than p^n - 1, so this single check also certifies
    irreducibility.
    """
    q = p ** n
    if q == 2:
        # GF(2) is degenerate: the table is just {1} and the root is unused.
        return True
    spec = object.__new__(FieldSpec)
    spec.p, spec.n, spec.q = p, n, q
    spec.prim_poly = tuple(poly)
    cur = [0] * n
    cur[0] = 1
    seen_one_at = None
    for i in range(1, q):
        cur = spec._xmul(cur)
        code = spec._encode_low(cur)
        if code == 0:
            return False
        if code == 1:
            seen_one_at = i
            break
    return seen_one_at == q - 1


def make_field(p, n, poly=None):
    """Build GF(p^n).

    If poly is omitted, the lexicographically smallest primitive polynomial
    (coefficients compared low-degree-first) is found by search.  A supplied
    poly must be monic of degree n and is checked for primitivity.
    """
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if n < 1:
        raise NotPrimitivePolynomial("extension degree must be >= 1")
    if p ** n > MAX_FIELD_ORDER:
        raise FieldTooLarge("refusing table construction for q = %d" % p ** n)
    if poly is not None:
        poly = tuple(c % p for c in poly)
        if len(poly) != n + 1 or poly[0] != 1:
            raise NotPrimitivePolynomial("polynomial must be monic of degree %d" % n)
        if not _is_primitive(p, n, poly):
            raise NotPrimitivePolynomial(
                "x is not a generator modulo the given polynomial"
            )
        return FieldSpec(p, n, poly)
    for cand in _poly_candidates(p, n):
        if _is_primitive(p, n, cand):
            return FieldSpec(p, n, cand)
    raise NotPrimitivePolynomial("no primitive polynomial found")  # unreachable


def prime_power(q):
    """Decompose a prime power q as (p, alpha) with q = p^alpha."""
    if q < 2:
        raise NotPrime("%d is not a prime power" % q)
    p = 2
    while q % p != 0:
        p += 1
        if p * p > q:
            p = q
            break
    alpha = 0
    m = q
    while m % p == 0:
        m //= p
        alpha += 1
    if m != 1:
        raise NotPrime("%d is not a prime power" % q)
    return p, alpha


def exp_log(field):
    """The pair (exp, log) for a field: exp(i) = r^i, log its inverse."""
    return field.exp, field.log


def subgroup_generator(field, v):
    """A generator of the order-v subgroup of the multiplicative group."""
    if v < 1 or (field.q - 1) % v != 0:
        raise OrderDoesNotDivide("%d does not divide %d" % (v, field.q - 1))
    if v == 1:
        return field.one
    return field.exp((field.q - 1) // v)


def mult_order(u, v):
    """Smallest t >= 1 with u^t = 1 (mod v)."""
    if v < 2:
        raise NotCoprime("modulus must be >= 2")
    if math.gcd(u, v) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (u, v))
    t = 1
    cur = u % v
    while cur != 1:
        cur = (cur * u) % v
        t += 1
    return t


def power_sum(field, i):
    """Sum of x^i over all field elements, with 0^0 = 1.

    Equals 0 for 0 <= i <= q-2 and -1 for i = q-1.
    """
    total = 0
    if i == 0:
        # every element contributes 1, including zero
        for _ in range(field.q):
            total = field.add_code(total, 1)
    else:
        for e in range(field.q - 1):
            total = field.add_code(total, field._exp[(e * i) % (field.q - 1)])
    return FieldElement(field, total)
