"""
Exact arithmetic in the cyclotomic fields Q(zeta_M), and q-combinatorics.

An element of Q(zeta_M) is stored as an integer coordinate vector over a
common positive denominator, in the power basis 1, z, ..., z^(phi(M)-1),
always reduced modulo the M-th cyclotomic polynomial.  Equality is
therefore structural.

    >>> K = make_field(3)
    >>> z = primitive_root(K)
    >>> z**3 == 1, 1 + z + z**2 == 0
    (True, True)
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational


class FieldMismatch(ValueError):
    pass


def _poly_divmod_int(a, b):
    # exact division of integer polynomials (lists low->high), b monic
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], a
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    rem = a[:db] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M):
    """Integer coefficients (constant term first) of Phi_M."""
    if M < 1:
        raise ValueError("cyclotomic order must be positive, got %r" % (M,))
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem), "inexact division by Phi_%d" % d
    return tuple(poly)


def _normalize(num, den):
    g = gcd(den, *num)
    if g != 1:
        num = tuple(c // g for c in num)
        den //= g
    return num, den


class CycloField:
    """The field Q(zeta_M).  Use make_field(M) to get the shared instance."""

    __slots__ = ("M", "phi", "degree", "_fold", "zero", "one")

    def __init__(self, M):
        self.M = M
        self.phi = cyclotomic_polynomial(M)
        self.degree = len(self.phi) - 1
        d = self.degree
        # _fold[k] = coords of z^(d+k) reduced mod Phi_M, k = 0..d-2
        fold = []
        cur = [-c for c in self.phi[:d]]
        for _ in range(max(d - 1, 0)):
            fold.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.phi[j]
        self._fold = fold
        self.zero = CycloScalar(self, (0,) * d, 1)
        self.one = CycloScalar(self, (1,) + (0,) * (d - 1), 1)

    def __repr__(self):
        return "Q(zeta_%d)" % self.M

    def __reduce__(self):
        return (make_field, (self.M,))

    def __call__(self, x):
        """Coerce an int, Fraction or CycloScalar into this field."""
        if isinstance(x, CycloScalar):
            if x.field is self:
                return x
            return self.embed(x)
        if isinstance(x, Rational):
            x = Fraction(x)
            return CycloScalar(self, (x.numerator,) + (0,) * (self.degree - 1),
                               x.denominator)
        raise TypeError("cannot coerce %r into %r" % (x, self))

    def from_coords(self, coords):
        """Element with the given rational coordinates in the power basis."""
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.degree:
            raise ValueError("expected %d coordinates, got %d"
                             % (self.degree, len(coords)))
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(c.numerator * (den // c.denominator) for c in coords)
        return CycloScalar(self, *_normalize(num, den))

    def _reduce(self, prod):
        # prod: integer list of length <= 2d-1
        d = self.degree
        out = list(prod[:d]) + [0] * (d - len(prod[:d]))
        for k, c in enumerate(prod[d:]):
            if c:
                row = self._fold[k]
                for j in range(d):
                    out[j] += c * row[j]
        return tuple(out)

    def embed(self, x):
        """Image of x in Q(zeta_d) under z_d -> z_M^(M/d); needs d | M."""
        src = x.field
        if self.M % src.M != 0:
            raise FieldMismatch("cannot embed %r into %r" % (src, self))
        if src.degree == 1:
            return CycloScalar(self, (x.num[0],) + (0,) * (self.degree - 1), x.den)
        w = primitive_root(self) ** (self.M // src.M)
        acc = self.zero
        p = self.one
        for c in x.coords:
            if c:
                acc = acc + p * c
            p = p * w
        return acc


@lru_cache(maxsize=None)
def make_field(M):
    """Q(zeta_M); M = 1 gives Q itself."""
    if not isinstance(M, int) or M < 1:
        raise ValueError("field order must be a positive integer, got %r" % (M,))
    return CycloField(M)



class CycloScalar:
    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @property
    def coords(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other.field is not self.field:
                raise FieldMismatch("%r vs %r" % (self.field, other.field))
            return other
        if isinstance(other, Rational):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        if self.den == other.den:
            num = tuple(x + y for x, y in zip(a, b))
            den = self.den
        else:
            da, db = self.den, other.den
            num = tuple(x * db + y * da for x, y in zip(a, b))
            den = da * db
        return CycloScalar(self.field, *_normalize(num, den))

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.field, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        d = len(a)
        if d == 1:
            num = (a[0] * b[0],)
        else:
            prod = [0] * (2 * d - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            num = self.field._reduce(prod)
        return CycloScalar(self.field, *_normalize(num, self.den * other.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in %r" % (self.field,))
        if len(self.num) == 1:
            n = self.num[0]
            if n < 0:
                return CycloScalar(self.field, (-self.den,), -n)
            return CycloScalar(self.field, (self.den,), n)
        # extended Euclid in Q[x]: s*a + t*Phi = 1
        a = _trim([Fraction(c) for c in self.num])
        b = [Fraction(c) for c in self.field.phi]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b
        while len(r1) > 1 or r1[0] != 0:
            quo, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(quo, s1)))
        lead = r0[0]
        inv = self.field.from_coords(_pad([c / lead for c in s0], self.field))
        return inv * self.den

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.field.one
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return (self.field is other.field and self.den == other.den
                    and self.num == other.num)
        if isinstance(other, Rational):
            x = Fraction(other)
            return (self.den == x.denominator and self.num[0] == x.numerator
                    and not any(self.num[1:]))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.num[1:]):
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.M, self.num, self.den))
        return self._hash

    def is_rational(self):
        return not any(self.num[1:])

    def __repr__(self):
        return "CycloScalar(%s, %s)" % (self.field.M, str(self))

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else "z^%d" % k)
            if k and c == 1:
                s = mono
            elif k and c == -1:
                s = "-" + mono
            else:
                s = str(c) + ("*" + mono if mono else "")
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


QQ = make_field(1)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _pad(p, field):
    p = list(p)[:field.degree]
    return p + [Fraction(0)] * (field.degree - len(p))


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod_frac(a, b):
    a = list(a)
    b = _trim(b)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / lead
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                a[k - db + j] -= c * b[j]
    return quot, _trim(a[:db] if db else [Fraction(0)])


def primitive_root(field):
    """The class of z in Q(zeta_M); it has multiplicative order exactly M."""
    if field.M == 1:
        raise ValueError("Q(zeta_1) = Q has no primitive root of order > 1")
    if field.degree == 1:
        # M = 2: Phi_2 = x + 1
        return field(-1)
    return CycloScalar(field, (0, 1) + (0,) * (field.degree - 2), 1)


def root_of_unity(N):
    """Primitive N-th root of unity living in Q(zeta_N)."""
    return primitive_root(make_field(N))


def multiplicative_order(x, bound=None):
    """Smallest k >= 1 with x^k = 1, or None if none up to bound."""
    bound = bound or 4 * x.field.M * max(x.field.degree, 1) + 4
    p = x
    for k in range(1, bound + 1):
        if p == 1:
            return k
        p = p * x
    return None


# -- q-combinatorics ---------------------------------------------------------

def _as_scalar(q):
    return q if isinstance(q, CycloScalar) else QQ(q)


def q_int(n, q):
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    q = _as_scalar(q)
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    acc = q.field.zero
    p = q.field.one
    for _ in range(n):
        acc = acc + p
        p = p * q
    return acc


def q_factorial(n, q):
    q = _as_scalar(q)
    acc = q.field.one
    for k in range(1, n + 1):
        acc = acc * q_int(k, q)
    return acc


def q_binomial_row(n, q):
    """[n choose k]_q for k = 0..n via the Pascal-type recursion
    [m+1, k] = q^k [m, k] + [m, k-1], which never divides."""
    q = _as_scalar(q)
    one = q.field.one
    row = [one]
    for m in range(n):
        nxt = [one]
        qk = q
        for k in range(1, m + 1):
            nxt.append(row[k] * qk + row[k - 1])
            qk = qk * q
        nxt.append(one)
        row = nxt
    return row


def q_binomial(n, k, q):
    q = _as_scalar(q)
    if k < 0 or k > n:
        return q.field.zero
    return q_binomial_row(n, q)[k]


def eval_poincare(coeff_by_degree, q):
    """Sum of dim * q^i over the finitely many listed degrees."""
    q = _as_scalar(q)
    acc = q.field.zero
    for i, c in coeff_by_degree.items():
        if not c:
            continue
        if i < 0 and q.is_zero():
            raise ZeroDivisionError("negative degree %d needs invertible q" % i)
        acc = acc + c * q ** i
    return acc
