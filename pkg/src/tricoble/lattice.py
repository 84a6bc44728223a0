"""Exact LLL reduction over the integers.

Gram-Schmidt data is kept as Fractions, so the Lovasz condition is tested
exactly and the output is deterministic.  For two-dimensional lattices a
Gauss-Lagrange finishing pass is applied, which guarantees the first output
vector attains the lattice minimum (plain LLL with delta = 3/4 does not).
"""

from fractions import Fraction


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def lll_reduce(basis, delta=Fraction(3, 4)):
    """LLL-reduce a list of linearly independent integer vectors.

    Returns a new list of integer tuples spanning the same lattice.  Raises
    ValueError if the input vectors are dependent or delta is outside
    (1/4, 1).
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    b = [list(map(int, v)) for v in basis]
    n = len(b)
    if n == 0:
        return []
    dim = len(b[0])
    if any(len(v) != dim for v in b):
        raise ValueError("ragged basis")

    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [[Fraction(0)] * dim for _ in range(n)]
    norm = [Fraction(0)] * n

    def update_gso(i):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            mu[i][j] = _dot(b[i], bstar[j]) / norm[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar[i] = v
        norm[i] = _dot(v, v)
        if norm[i] == 0:
            raise ValueError("input vectors are linearly dependent")

    for i in range(n):
        update_gso(i)

    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = _round_half_even(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                for i in range(j + 1):
                    mu[k][i] -= q * (mu[j][i] if i < j else 1)
        if norm[k] >= (delta - mu[k][k - 1] ** 2) * norm[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            for i in range(k - 1, n):
                update_gso(i)
            k = max(k - 1, 1)

    if n == 2:
        _gauss_pass(b)
    return [tuple(v) for v in b]


def _round_half_even(x):
    # Fraction lacks __round__ only on very old Pythons; do it explicitly
    # so ties break the same everywhere.
    num, den = x.numerator, x.denominator
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2):
        q += 1
    return q


def _gauss_pass(b):
    """Gauss-Lagrange reduction in dimension 2, in place."""
    while True:
        if _dot(b[0], b[0]) > _dot(b[1], b[1]):
            b[0], b[1] = b[1], b[0]
        n0 = _dot(b[0], b[0])
        q = _round_half_even(Fraction(_dot(b[0], b[1]), n0))
        if q == 0:
            return
        b[1] = [x - q * y for x, y in zip(b[1], b[0])]
