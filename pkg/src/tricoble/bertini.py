"""The Bertini involution as a point map on a cubic surface, composition
dynamics, orbit heights, and the finite-field fixing exponent.

For a base pair (a, b) and a moving point z, everything happens in the
plane through the three points: the restricted plane cubic c(u,v,t) has
a = (1:0:0), b = (0:1:0), z = (0:0:1) as rational points, the unique conic
through z tangent to c at a and b is alpha*uv + beta*ut + delta*vt, and the
image of z is the residual sixth intersection of that conic with c.

The residual point has a division-free closed form.  Parametrizing the
conic by lines through a sends (lam : mu) to

    psi(lam, mu) = (-delta*lam*mu,
                    lam*(alpha*lam + beta*mu),
                    mu*(alpha*lam + beta*mu)),

with b at (1:0), z at (0:1) and a at (beta:-alpha).  The pullback
h = c(psi) is a binary sextic divisible by lam * mu^2 * (alpha*lam +
beta*mu)^2; writing h_j for the coefficient of lam^(6-j) mu^j, the residual
linear factor is proportional to (rho*lam + sigma*mu) with

    rho = alpha*h_2,      sigma = alpha*h_3 - 2*beta*h_2,

subject to the two exactness identities

    alpha^2 h_4 = 2 alpha beta h_3 - 3 beta^2 h_2,
    alpha^3 h_5 = alpha beta^2 h_3 - 2 beta^3 h_2,

which this module verifies on every application.  sigma = 0 is precisely
the fixed-point condition (the conic is tangent to the plane cubic at z as
well).  All formulas are integral, so the same code path serves Q and F_p.
"""

from fractions import Fraction
from math import lcm

from .fields import mpz
from .forms import compose_terms
from .projgeom import ProjPoint, line_in_surface


class BertiniDegeneracyError(ValueError):
    """Base for geometric degeneracies; carries an optional stage tag."""

    stage = None


class CollinearPointError(BertiniDegeneracyError):
    pass


class SingularSectionError(BertiniDegeneracyError):
    pass


class DegenerateConicError(BertiniDegeneracyError):
    pass


class MultiplicityError(BertiniDegeneracyError):
    pass


class DegenerateSectionError(BertiniDegeneracyError):
    pass


class NotOnCubicError(ValueError):
    pass


class FFBoundExceeded(RuntimeError):
    pass


class BertiniContext:
    """A cubic together with a base pair (a, b) on it; the chord ab must
    not lie in the surface."""

    __slots__ = ("cubic", "a", "b", "field", "terms", "zero", "one",
                 "_araw", "_braw")

    def __init__(self, cubic, a, b):
        field = cubic.field
        if cubic.degree != 3 or cubic.nvars != 4:
            raise ValueError("context needs a cubic form in 4 variables")
        if not isinstance(a, ProjPoint):
            a = ProjPoint(a, field)
        if not isinstance(b, ProjPoint):
            b = ProjPoint(b, field)
        if a == b:
            raise BertiniDegeneracyError("base points coincide")
        if cubic.evaluate(a) != field.zero or cubic.evaluate(b) != field.zero:
            raise NotOnCubicError("base points must lie on the cubic")
        if line_in_surface(cubic, a, b):
            raise BertiniDegeneracyError("base chord lies in the surface")
        self.cubic = cubic
        self.a = a
        self.b = b
        self.field = field
        if field.char == 0:
            norm = cubic.normalized()
            self.terms = {e: mpz(int(c)) for e, c in norm.terms.items()}
            self.zero = 0
            self.one = mpz(1)
            self._araw = tuple(mpz(int(c)) for c in a)
            self._braw = tuple(mpz(int(c)) for c in b)
        else:
            self.terms = dict(cubic.terms)
            self.zero = field.zero
            self.one = field.one
            self._araw = tuple(a.coords)
            self._braw = tuple(b.coords)

    def _raw_point(self, z):
        if not isinstance(z, ProjPoint):
            z = ProjPoint(z, self.field)
        if z.field != self.field or len(z) != 4:
            raise ValueError("point has the wrong shape for this context")
        if self.field.char == 0:
            return z, tuple(mpz(int(c)) for c in z)
        return z, tuple(z.coords)


def _minor3(r0, r1, r2, cols):
    i, j, k = cols
    return (r0[i] * (r1[j] * r2[k] - r1[k] * r2[j])
            - r0[j] * (r1[i] * r2[k] - r1[k] * r2[i])
            + r0[k] * (r1[i] * r2[j] - r1[j] * r2[i]))


def _plane_cubic(ctx, zraw):
    maps = []
    for i in range(4):
        m = {}
        if ctx._araw[i] != ctx.zero:
            m[(1, 0, 0)] = ctx._araw[i]
        if ctx._braw[i] != ctx.zero:
            m[(0, 1, 0)] = ctx._braw[i]
        if zraw[i] != ctx.zero:
            m[(0, 0, 1)] = zraw[i]
        maps.append(m)
    return compose_terms(ctx.terms, maps, 3, one=ctx.one)


def _conic_data(ctx, z):
    z, zraw = ctx._raw_point(z)
    for cols in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        if _minor3(ctx._araw, ctx._braw, zraw, cols) != ctx.zero:
            break
    else:
        raise CollinearPointError("point lies on the base chord")
    c = _plane_cubic(ctx, zraw)
    zero = ctx.zero
    if c.get((0, 0, 3), zero) != zero:
        raise NotOnCubicError("point is not on the cubic")
    c210 = c.get((2, 1, 0), zero)
    c201 = c.get((2, 0, 1), zero)
    c120 = c.get((1, 2, 0), zero)
    c021 = c.get((0, 2, 1), zero)
    if c210 == zero and c201 == zero:
        raise SingularSectionError("plane section singular at first base "
                                   "point")
    if c120 == zero and c021 == zero:
        raise SingularSectionError("plane section singular at second base "
                                   "point")
    alpha = c210 * c120
    beta = c201 * c120
    delta = c210 * c021
    if alpha == zero or beta == zero or delta == zero:
        raise DegenerateConicError(
            "tangency conic degenerates (a base tangent line passes "
            "through another frame point)")
    return z, zraw, c, alpha, beta, delta


def _residual(ctx, z):
    z, zraw, c, alpha, beta, delta = _conic_data(ctx, z)
    psi = [
        {(1, 1): -delta},
        {(2, 0): alpha, (1, 1): beta},
        {(1, 1): alpha, (0, 2): beta},
    ]
    h = compose_terms(c, psi, 2, one=ctx.one)
    zero = ctx.zero

    def hj(j):
        return h.get((6 - j, j), zero)

    if hj(0) != zero or hj(1) != zero or hj(6) != zero:
        raise MultiplicityError("unexpected contact order at a base point")
    h2, h3, h4, h5 = hj(2), hj(3), hj(4), hj(5)
    if alpha * alpha * h4 != 2 * alpha * beta * h3 - 3 * beta * beta * h2:
        raise MultiplicityError("sextic fails the first residual identity")
    if (alpha ** 3) * h5 != alpha * beta * beta * h3 - 2 * (beta ** 3) * h2:
        raise MultiplicityError("sextic fails the second residual identity")
    rho = alpha * h2
    sigma = alpha * h3 - 2 * beta * h2
    return z, zraw, alpha, beta, delta, rho, sigma


def bertini_conic(ctx, z):
    """The conic through z tangent to the plane section at both base
    points, in frame coordinates (u, v, t) = (a, b, z)."""
    from .forms import HomogeneousForm
    _, _, _, alpha, beta, delta = _conic_data(ctx, z)
    terms = {(1, 1, 0): alpha, (1, 0, 1): beta, (0, 1, 1): delta}
    return HomogeneousForm(3, 2, terms, ctx.field).normalized()


def bertini_apply(ctx, z):
    """The image of z under the Bertini involution of the pair."""
    z, zraw, alpha, beta, delta, rho, sigma = _residual(ctx, z)
    zero = ctx.zero
    if rho == zero and sigma == zero:
        raise DegenerateSectionError(
            "tangency conic is a component of the plane section")
    if rho == zero:
        raise MultiplicityError("residual intersection lands on the second "
                                "base point")
    if sigma == zero:
        return z
    e = alpha * sigma - beta * rho
    if e == zero:
        raise MultiplicityError("residual intersection lands on the first "
                                "base point")
    drs = delta * rho * sigma
    se = sigma * e
    re = rho * e
    coords = [drs * ai + se * bi - re * zi
              for ai, bi, zi in zip(ctx._araw, ctx._braw, zraw)]
    return ProjPoint(coords, ctx.field)


def is_bertini_fixed(ctx, z):
    """Equivalent to bertini_apply(ctx, z) == z, decided by the residual
    parameter without building the image point."""
    _, _, _, _, _, rho, sigma = _residual(ctx, z)
    if rho == ctx.zero and sigma == ctx.zero:
        raise DegenerateSectionError(
            "tangency conic is a component of the plane section")
    return sigma == ctx.zero


class ComposedBertini:
    """Right-to-left composition of Bertini involutions, with stage tags on
    degeneracy errors."""

    __slots__ = ("stages",)

    def __init__(self, cubic, named_pairs):
        self.stages = tuple((name, BertiniContext(cubic, a, b))
                            for name, (a, b) in named_pairs)

    def __call__(self, z):
        for name, ctx in reversed(self.stages):
            try:
                z = bertini_apply(ctx, z)
            except BertiniDegeneracyError as err:
                err.stage = name
                raise
        return z


def phi_map(cubic, pairs):
    """phi = tau_p o tau_q o tau_r for pairs = {'p': (a,b), 'q': ..., 'r':
    ...}; tau_r acts first."""
    return ComposedBertini(cubic, [(k, pairs[k]) for k in ("p", "q", "r")])


def phi_apply(cubic, pairs, z):
    return phi_map(cubic, pairs)(z)


def point_height(point):
    return max(abs(int(c)) for c in point)


def _digits(n):
    # decimal digit count from bit length; off by at most 1, fine for a
    # budget check
    return n.bit_length() * 30103 // 100000 + 1


class OrbitRecord:
    __slots__ = ("seed", "points", "heights", "log_height_ratios",
                 "truncated")

    def __init__(self, seed, points, heights, ratios, truncated):
        self.seed = seed
        self.points = points
        self.heights = heights
        self.log_height_ratios = ratios
        self.truncated = truncated


# One phi step multiplies the log height by roughly the dynamical degree
# (about 110); refuse a step whose output could overshoot the digit budget.
_GROWTH_MARGIN = 128


def orbit(cubic, pairs, seed, n, height_budget=10 ** 7):
    """Iterate phi from the seed, recording heights and log-height ratios
    (as exact ratios of bit lengths).  Stops early, flagged truncated, when
    another step could exceed the height budget (in decimal digits)."""
    if cubic.field.char != 0:
        raise ValueError("orbit heights are defined over Q only")
    phi = phi_map(cubic, pairs)
    if not isinstance(seed, ProjPoint):
        seed = ProjPoint(seed, cubic.field)
    points = [seed]
    heights = [point_height(seed)]
    truncated = False
    for _ in range(n):
        if _digits(heights[-1]) * _GROWTH_MARGIN > height_budget:
            truncated = True
            break
        points.append(phi(points[-1]))
        heights.append(point_height(points[-1]))
    ratios = [Fraction(heights[k + 1].bit_length(),
                       heights[k].bit_length())
              for k in range(len(heights) - 1)]
    return OrbitRecord(seed, points, heights, ratios, truncated)


def ff_fixing_exponent(mapping, targets, bound=10 ** 6):
    """Smallest m >= 1 with mapping^m fixing every target, as the lcm of
    the forward-orbit cycle lengths.  Finite fields only."""
    cycles = []
    for t in targets:
        x = mapping(t)
        length = 1
        while x != t:
            if length >= bound:
                raise FFBoundExceeded(
                    "no return to the start within %d steps" % bound)
            x = mapping(x)
            length += 1
        cycles.append(length)
    return lcm(*cycles), cycles


def t2_fixed_point_checks(cubic, pairs):
    """The 12 fixed-point assertions: each involution must fix the four
    points of the other two pairs."""
    contexts = {name: BertiniContext(cubic, a, b)
                for name, (a, b) in pairs.items()}
    labels = {name: pair for name, pair in pairs.items()}
    results = {}
    for name, ctx in contexts.items():
        for other, (x1, x2) in labels.items():
            if other == name:
                continue
            for idx, pt in ((1, x1), (2, x2)):
                key = "tau_%s fixes %s%d" % (name, other, idx)
                results[key] = is_bertini_fixed(ctx, pt)
    return results
