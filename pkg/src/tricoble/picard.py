"""Pullback action on the Neron-Severi lattice of the blown-up surface.

The surface is a plane blown up at 6 + 2k points: the six points giving the
cubic surface model and one pair per involution.  The lattice has basis
(H, E1..E6, then a pair of classes per involution pair) with intersection
form diag(1, -1, ..., -1).

Each Bertini involution is classical on the degree-1 del Pezzo sublattice
spanned by H, E1..E6 and its own pair: it fixes the anticanonical class
k = -3H + sum(E) of that sublattice and negates its orthogonal complement,

    tau*(D) = -D + 2 (D . k) k,

and leaves the other pairs' classes alone.  The composition phi* is the
product of the three blocks in application order.
"""

from fractions import Fraction

from .fields import QQ
from .linalg import Matrix, char_poly, kernel_basis
from .roots import dominant_real_root


class NSLattice:
    """Basis bookkeeping and the hyperbolic intersection form."""

    __slots__ = ("npairs", "rank", "labels")

    def __init__(self, npairs=3):
        if npairs < 1:
            raise ValueError("need at least one pair")
        self.npairs = npairs
        self.rank = 7 + 2 * npairs
        pair_names = ("p", "q", "r", "s", "t", "u", "v", "w")[:npairs]
        labels = ["H"] + ["E%d" % i for i in range(1, 7)]
        for name in pair_names:
            labels += ["E_%s1" % name, "E_%s2" % name]
        self.labels = tuple(labels)

    def inner(self, u, v):
        if len(u) != self.rank or len(v) != self.rank:
            raise ValueError("vector length does not match the rank")
        return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))

    def gram(self):
        g = [[Fraction(0)] * self.rank for _ in range(self.rank)]
        g[0][0] = Fraction(1)
        for i in range(1, self.rank):
            g[i][i] = Fraction(-1)
        return Matrix(g, QQ)

    def is_isometry(self, m):
        g = self.gram()
        return m.transpose() * g * m == g

    def pair_slots(self, pair_index):
        if not 0 <= pair_index < self.npairs:
            raise ValueError("pair index out of range")
        base = 7 + 2 * pair_index
        return (base, base + 1)


def canonical_class(lattice):
    """Anticanonical direction of the full blow-up, (-3, 1, ..., 1)."""
    return (-3,) + (1,) * (lattice.rank - 1)


def bertini_block(lattice, pair_index):
    """Pullback of the Bertini involution attached to one pair."""
    n = lattice.rank
    active = list(range(7)) + list(lattice.pair_slots(pair_index))
    # reflection data of the rank-9 sublattice: k = (-3, 1, ..., 1) there,
    # k.k = 1, and tau*(D) = -D + 2 (D.k) k
    k = [-3] + [1] * 8
    rows = [[Fraction(1 if i == j else 0) for j in range(n)]
            for i in range(n)]
    sign = [1] + [-1] * 8
    for ci, c in enumerate(active):
        for ri, r in enumerate(active):
            val = 2 * k[ci] * sign[ci] * k[ri]
            if ri == ci:
                val -= 1
            rows[r][c] = Fraction(val)
    return Matrix(rows, QQ)


def phi_pullback(lattice=None):
    """Matrix of phi* = (tau_p o tau_q o tau_r)* on the rank-13 lattice."""
    if lattice is None:
        lattice = NSLattice(3)
    if lattice.npairs != 3:
        raise ValueError("phi needs exactly three pairs")
    b_p = bertini_block(lattice, 0)
    b_q = bertini_block(lattice, 1)
    b_r = bertini_block(lattice, 2)
    return b_r * b_q * b_p


def dynamical_degree(m, eps=Fraction(1, 10 ** 9)):
    """Certified interval of width <= eps around the largest real
    eigenvalue, together with the characteristic polynomial."""
    p = char_poly(m)
    lo, hi = dominant_real_root(p, eps)
    return p, lo, hi


def fixed_space(m):
    """Primitive integer basis of the eigenspace for eigenvalue 1."""
    n = m.rows
    ident = Matrix.identity(n, m.field)
    return kernel_basis(m - ident)
