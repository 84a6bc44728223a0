"""Exact scalars: arbitrary-precision rationals and prime fields.

Rational scalars are plain ``fractions.Fraction`` values; prime-field
scalars are ``FpElement`` instances.  Both support ``+ - * /`` and compare
equal to plain ints where meaningful, so matrix, polynomial and geometry
code runs unchanged over either field.

gmpy2, when present, supplies subquadratic gcd and multiplication for the
very large integers produced by orbit iteration; everything falls back to
the stdlib otherwise.
"""

import math
from fractions import Fraction

try:
    import gmpy2

    mpz = gmpy2.mpz
    _gcd = gmpy2.gcd
    HAVE_GMPY2 = True
except ImportError:
    mpz = int
    _gcd = math.gcd
    HAVE_GMPY2 = False


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin; exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpElement:
    """A residue modulo a fixed verified prime."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = int(val) % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return FpElement(self.val * pow(o.val, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return FpElement(1, self.p) / self ** (-e)
        return FpElement(pow(self.val, e, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return "%d (mod %d)" % (self.val, self.p)


class RationalField:
    """The field of rationals; elements are fractions.Fraction."""

    char = 0

    def of(self, x):
        if isinstance(x, FpElement):
            raise TypeError("cannot lift a residue into Q")
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """The field with p elements; p is checked for primality."""

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.char = p

    def of(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("mixed moduli %d and %d" % (self.p, x.p))
            return x
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    "denominator of %s vanishes mod %d" % (x, self.p))
            return FpElement(x.numerator * pow(den, self.p - 2, self.p), self.p)
        return FpElement(x, self.p)

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


def GF(p):
    return PrimeField(p)


def vector_content(ints):
    """gcd of a sequence of integers (0 if all are zero)."""
    g = 0
    for v in ints:
        g = _gcd(g, v)
        if g == 1:
            return 1
    return int(g)


def normalize_int_vector(vec):
    """Scale a rational vector to coprime integers, first nonzero entry > 0.

    Accepts ints (including gmpy2.mpz) and Fractions; raises on the zero
    vector.  Integer inputs keep their integer type, so mpz stays mpz.
    """
    vals = list(vec)
    if any(isinstance(v, Fraction) for v in vals):
        fracs = [Fraction(v) for v in vals]
        den = math.lcm(*(f.denominator for f in fracs))
        vals = [int(f * den) for f in fracs]
    g = vector_content(vals)
    if g == 0:
        raise ValueError("zero vector cannot be normalized")
    vals = [v // g for v in vals]
    for v in vals:
        if v:
            if v < 0:
                vals = [-u for u in vals]
            break
    return tuple(vals)


def fraction_to_decimal_str(x, places=9):
    """Render a Fraction as a fixed-point decimal string, half away from zero."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x * 10 ** places
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
        n += 1
    whole, frac = divmod(n, 10 ** places)
    if places == 0:
        return "%s%d" % (sign, whole)
    return "%s%d.%0*d" % (sign, whole, places, frac)
