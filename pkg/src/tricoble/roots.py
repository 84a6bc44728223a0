"""Integer polynomials and certified real-root isolation via Sturm chains."""

from fractions import Fraction

from .fields import normalize_int_vector


class NoRealRootError(ValueError):
    pass


class IntPolynomial:
    """Univariate integer polynomial, coefficients ascending by degree.

    Trailing (highest-degree) zeros are trimmed; the zero polynomial is
    stored as (0,).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (0,)

    def leading(self):
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        if len(self.coeffs) == 1:
            return IntPolynomial([0])
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPolynomial([0])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        acc = IntPolynomial([1])
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "IntPolynomial(%r)" % (list(self.coeffs),)


def _frac(poly):
    return [Fraction(c) for c in poly]


def _trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _divmod_frac(a, b):
    """Quotient and remainder of ascending Fraction coefficient lists."""
    rem = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(rem) < len(b):
        return [], rem
    db = len(b) - 1
    q = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        c = rem[k + db] / b[-1]
        if c == 0:
            continue
        q[k] = c
        for j, bj in enumerate(b):
            rem[k + j] -= c * bj
    return q, _trim(rem)


def _primitive_int(cs):
    """Clear denominators, remove content, make the leading coefficient > 0."""
    cs = _trim(list(cs))
    if not cs:
        return []
    ints = list(normalize_int_vector(cs))
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def poly_gcd(a, b):
    """gcd of two IntPolynomials, primitive with positive leading coefficient."""
    fa, fb = _frac(a.coeffs), _frac(b.coeffs)
    fa, fb = _trim(fa), _trim(fb)
    while fb:
        _, r = _divmod_frac(fa, fb)
        fa, fb = fb, [Fraction(c) for c in _primitive_int(r)]
    if not fa:
        return IntPolynomial([0])
    return IntPolynomial(_primitive_int(fa))


def square_free_part(p):
    """p divided by gcd(p, p'); primitive, positive leading coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return IntPolynomial(_primitive_int(_frac(p.coeffs)))
    q, r = _divmod_frac(_frac(p.coeffs), _frac(g.coeffs))
    assert not r, "gcd does not divide its argument"
    return IntPolynomial(_primitive_int(q))


def _content_scaled(cs):
    """Positive integer multiple of the input with coprime coefficients.

    Unlike _primitive_int this never flips the sign, which Sturm chains
    depend on."""
    cs = _trim(list(cs))
    if not cs:
        return []
    ints = list(normalize_int_vector(cs))
    first = next(c for c in cs if c != 0)
    ifirst = next(c for c in ints if c != 0)
    if (first < 0) != (ifirst < 0):
        ints = [-c for c in ints]
    return ints


def _sturm_chain(sf):
    """Sturm chain of a square-free IntPolynomial, as int coefficient lists."""
    chain = [list(sf.coeffs), list(sf.derivative().coeffs)]
    while True:
        prev, cur = chain[-2], chain[-1]
        if len(cur) == 1:
            break
        _, r = _divmod_frac(_frac(prev), _frac(cur))
        if not r:
            break
        chain.append([-c for c in _content_scaled(r)])
    return chain


def _eval_ascending(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _variations(chain, x):
    signs = []
    for cs in chain:
        v = _eval_ascending(cs, x)
        if v > 0:
            signs.append(1)
        elif v < 0:
            signs.append(-1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def dominant_real_root(p, eps=Fraction(1, 10 ** 9)):
    """Isolating interval (lo, hi] of width <= eps around the largest real root.

    Returns a pair of Fractions with lo <= root <= hi.  When the root is
    hit exactly during bisection the interval collapses to a point; the
    endpoints otherwise give opposite signs of the square-free part.
    Raises NoRealRootError when p has no real root.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    sf = square_free_part(p)
    chain = _sturm_chain(sf)
    lead = abs(sf.leading())
    bound = 1 + max(abs(c) for c in sf.coeffs) // lead + 1
    lo, hi = Fraction(-bound), Fraction(bound)
    v_lo, v_hi = _variations(chain, lo), _variations(chain, hi)
    if v_lo == v_hi:
        raise NoRealRootError("no real root")
    while hi - lo > eps or v_lo - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = _variations(chain, mid)
        if _eval_ascending(_frac(sf.coeffs), mid) == 0:
            if v_mid == v_hi:
                return mid, mid
            lo, v_lo = mid, v_mid
            continue
        if v_mid > v_hi:
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid
    s_lo = _eval_ascending(_frac(sf.coeffs), lo)
    s_hi = _eval_ascending(_frac(sf.coeffs), hi)
    assert s_lo * s_hi < 0, "isolation failed to produce a sign change"
    return lo, hi


def strip_integer_roots(p):
    """Split off integer roots: returns (sorted (root, multiplicity) list, rest).

    Every integer root of an integer polynomial divides its constant
    coefficient, so trying those divisors finds them all.  The remaining
    factor comes back primitive with positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    cur = _frac(p.coeffs)
    roots = {}
    while cur[0] == 0 and len(cur) > 1:
        cur.pop(0)
        roots[0] = roots.get(0, 0) + 1
    changed = True
    while changed and len(cur) > 1:
        changed = False
        for cand in _divisors_signed(int(cur[0])):
            if _eval_ascending(cur, Fraction(cand)) == 0:
                q, r = _divmod_frac(cur, [Fraction(-cand), Fraction(1)])
                assert not r
                cur = q
                roots[cand] = roots.get(cand, 0) + 1
                changed = True
                break
    rest = IntPolynomial(_primitive_int(cur)) if len(cur) > 1 else IntPolynomial([1])
    return sorted(roots.items()), rest


def _divisors_signed(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out += [d, -d, n // d, -(n // d)]
        d += 1
    return sorted(set(out), key=abs)
