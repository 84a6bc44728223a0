"""Projective points, planes, chord arithmetic on cubic surfaces, and the
four-conics-to-quadric gluing.

Points and planes are kept in a canonical representation (primitive integer
coordinates with positive first nonzero entry over Q; first nonzero entry 1
over F_p), so equality of geometric objects is equality of tuples.
"""

from collections import namedtuple

from .fields import QQ, normalize_int_vector
from .forms import HomogeneousForm, restrict_to_line, restrict_to_plane
from .linalg import Matrix, det, int_det_bareiss, rank, rref


class DependentPointsError(ValueError):
    pass


class SingularPointError(ValueError):
    pass


class LineOnSurfaceError(ValueError):
    pass


class GlueError(ValueError):
    pass


def _canonical(coords, field):
    if field.char == 0:
        # feed ints (and gmpy2 mpz) straight through: normalize keeps the
        # integer type, so orbit-sized values stay on the fast path
        vec = list(coords)
        if all(x == 0 for x in vec):
            raise ValueError("all coordinates are zero")
        return normalize_int_vector(vec)
    vec = [field.of(x) for x in coords]
    if all(x == field.zero for x in vec):
        raise ValueError("all coordinates are zero")
    lead = next(x for x in vec if x != field.zero)
    return tuple(x / lead for x in vec)


class ProjPoint:
    __slots__ = ("coords", "field")

    def __init__(self, coords, field=QQ):
        self.coords = _canonical(coords, field)
        self.field = field

    def __eq__(self, other):
        return (isinstance(other, ProjPoint) and self.field == other.field
                and self.coords == other.coords)

    def __hash__(self):
        return hash(("pt", self.field, self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


class ProjPlane:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        self.coeffs = _canonical(coeffs, field)
        self.field = field

    def contains(self, point):
        s = self.field.zero
        for a, b in zip(self.coeffs, point):
            s = s + self.field.of(a) * self.field.of(b)
        return s == self.field.zero

    def __eq__(self, other):
        return (isinstance(other, ProjPlane) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(("pl", self.field, self.coeffs))

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coeffs) + "]"


def plane_through(a, b, c):
    """The unique plane in P^3 through three independent points."""
    field = a.field
    rows = [list(a), list(b), list(c)]
    coeffs = []
    sign = field.one
    for j in range(4):
        minor = Matrix([[r[k] for k in range(4) if k != j] for r in rows],
                       field)
        coeffs.append(sign * det(minor))
        sign = -sign
    if all(x == field.zero for x in coeffs):
        raise DependentPointsError("points are collinear or coincident")
    return ProjPlane(coeffs, field)


CoplanarityWitness = namedtuple("CoplanarityWitness", ["coplanar", "det"])


def coplanar(a, b, c, d):
    """Whether four points of P^3 lie on a common plane, with the 4x4
    coordinate determinant as witness."""
    rows = [list(a), list(b), list(c), list(d)]
    field = a.field
    if field.char == 0:
        value = int_det_bareiss(rows)
        return CoplanarityWitness(value == 0, value)
    value = det(Matrix(rows, field))
    return CoplanarityWitness(value == field.zero, value)


def tangent_plane(f, p):
    if f.evaluate(p) != f.field.zero:
        raise ValueError("point %r is not on the surface" % (p,))
    grad = [g.evaluate(p) for g in f.gradient()]
    if all(x == f.field.zero for x in grad):
        raise SingularPointError("gradient vanishes at %r" % (p,))
    return ProjPlane(grad, f.field)


def line_in_surface(f, a, b):
    return restrict_to_line(f, list(a), list(b)).is_zero


def third_intersection(f, a, b):
    """Residual intersection of the chord through a and b with the cubic
    surface V(f).  Tangent chords fold back onto a base point."""
    if f.degree != 3:
        raise ValueError("chord arithmetic needs a cubic form")
    g = restrict_to_line(f, list(a), list(b))
    zero = f.field.zero
    if g.coefficient((3, 0)) != zero:
        raise ValueError("first point is not on the surface")
    if g.coefficient((0, 3)) != zero:
        raise ValueError("second point is not on the surface")
    c1 = g.coefficient((2, 1))
    c2 = g.coefficient((1, 2))
    if c1 == zero and c2 == zero:
        raise LineOnSurfaceError("chord lies in the surface")
    coords = [c2 * f.field.of(x) - c1 * f.field.of(y)
              for x, y in zip(a, b)]
    return ProjPoint(coords, f.field)


# Conic gluing: the four input conics live in the coordinate planes of a
# frame; conic i uses the three frame variables other than i, in increasing
# order.  Positions of the cross terms for each conic:
_CROSS = ((1, 1, 0), (1, 0, 1), (0, 1, 1))
_SQUARES = ((2, 0, 0), (0, 2, 0), (0, 0, 2))


def _cross_coeffs(conic, idx, field):
    for sq in _SQUARES:
        if conic.coefficient(sq) != field.zero:
            raise GlueError(
                "conic %d has a square term (misses a coordinate point)"
                % idx)
    out = []
    for pos in _CROSS:
        c = conic.coefficient(pos)
        if c == field.zero:
            raise GlueError("conic %d is degenerate (zero cross term)" % idx)
        out.append(c)
    return out  # for conic i in vars (j<k<l): [jk, jl, kl]


def glue_conics(conics, frame=None):
    """Assemble the quadric meeting each frame plane in the given conic.

    Exists iff at every frame vertex the three conic tangent directions are
    coplanar; those four determinant conditions are checked and enforce a
    common rescaling ratio, after which coefficients merge consistently.
    """
    if len(conics) != 4:
        raise GlueError("need exactly four conics")
    field = conics[0].field
    for i, c in enumerate(conics):
        if c.nvars != 3 or c.degree != 2 or c.field != field:
            raise GlueError("conic %d is not a ternary quadratic form" % i)

    a12, a13, a23 = _cross_coeffs(conics[0], 0, field)
    b02, b03, b23 = _cross_coeffs(conics[1], 1, field)
    c01, c03, c13 = _cross_coeffs(conics[2], 2, field)
    d01, d02, d12 = _cross_coeffs(conics[3], 3, field)

    vertex_conditions = [
        ("vertex 0", b02 * c03 * d01 - b03 * c01 * d02),
        ("vertex 1", a12 * c13 * d01 - a13 * c01 * d12),
        ("vertex 2", a12 * b23 * d02 - a23 * b02 * d12),
        ("vertex 3", a13 * b23 * c03 - a23 * b03 * c13),
    ]
    for name, value in vertex_conditions:
        if value != field.zero:
            raise GlueError(
                "tangent directions at %s are not coplanar" % name)

    # Normalize so the X0X1 and X2X3 coefficients already agree pairwise.
    a12, a13 = a12 / a23, a13 / a23
    b02, b03 = b02 / b23, b03 / b23
    c03, c13 = c03 / c01, c13 / c01
    d02, d12 = d02 / d01, d12 / d01

    ratio = a12 / d12
    if b02 / d02 != ratio or a13 / c13 != ratio or b03 / c03 != ratio:
        raise GlueError("rescaling ratios disagree")

    terms = {
        (1, 1, 0, 0): ratio,
        (1, 0, 1, 0): b02,
        (1, 0, 0, 1): b03,
        (0, 1, 1, 0): a12,
        (0, 1, 0, 1): a13,
        (0, 0, 1, 1): field.one,
    }
    q = HomogeneousForm(4, 2, terms, field)

    if frame is not None:
        q = _from_frame(q, frame, field)
    return q.normalized()


def _from_frame(q, frame, field):
    pts = [list(p) for p in frame]
    if len(pts) != 4 or rank(Matrix(pts, field)) != 4:
        raise GlueError("frame must be four independent points")
    # x = P u with frame points as columns of P; substitute u = P^{-1} x.
    p_mat = Matrix(pts, field).transpose()
    inv = _invert(p_mat)
    maps = []
    for i in range(4):
        row = {(0,) * j + (1,) + (0,) * (3 - j): inv.data[i][j]
               for j in range(4) if inv.data[i][j] != field.zero}
        maps.append(HomogeneousForm(4, 1, row, field))
    return q.compose(maps)


def _invert(m):
    n = m.rows
    aug = Matrix([list(m.data[i]) + [m.field.one if j == i else m.field.zero
                                     for j in range(n)]
                  for i in range(n)], m.field)
    red, _, rk = rref(aug)
    if rk != n:
        raise GlueError("frame matrix is singular")
    return Matrix([row[n:] for row in red.data], m.field)


def cut_by_frame_planes(q, frame):
    """Restrict a quadric to the four coordinate planes of a frame; inverse
    of glue_conics up to scale."""
    out = []
    for i in range(4):
        others = [frame[j] for j in range(4) if j != i]
        out.append(restrict_to_plane(q, [list(p) for p in others]))
    return out
