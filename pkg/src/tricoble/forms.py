"""Homogeneous forms in up to 4 variables over an exact field.

Forms are stored as sparse exponent-tuple maps.  The coefficient slot order
used for (de)serialization is the one produced by monomial_exponents, which
lists monomials of degree d in graded lexicographic order of the variables
(for 4 variables w > x > y > z this gives w^2, wx, wy, wz, x^2, ... for
degree 2 and w^3, w^2 x, ..., z^3 for degree 3).

compose_terms is deliberately duck-typed over the coefficient scalars: the
orbit iteration feeds it plain (gmpy2-backed) integers to keep millions of
digits out of Fraction normalization.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from .fields import QQ, normalize_int_vector


class InexactDivisionError(ArithmeticError):
    pass


def monomial_exponents(nvars, degree):
    """All exponent tuples of the given total degree, in slot order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


def _mul_terms(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = ca * cb
            if e in out:
                c = out[e] + c
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def compose_terms(terms, maps, new_nvars, one=1):
    """Substitute maps[i] (a term dict in new variables) for variable i.

    Raw scalar arithmetic; no field coercion.  `one` must be the scalar 1
    of whatever coefficient domain the inputs live in.
    """
    unit = {(0,) * new_nvars: one}
    powers = []
    for m in maps:
        powers.append([unit, dict(m)])
    out = {}
    for exp, coeff in terms.items():
        acc = unit
        for i, e in enumerate(exp):
            if not e:
                continue
            pw = powers[i]
            while len(pw) <= e:
                pw.append(_mul_terms(pw[-1], pw[1]))
            acc = _mul_terms(acc, pw[e])
        for e, c in acc.items():
            v = coeff * c
            if e in out:
                v = out[e] + v
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


class HomogeneousForm:
    __slots__ = ("nvars", "degree", "terms", "field")

    def __init__(self, nvars, degree, terms, field=QQ):
        tdict = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError("bad exponent tuple %r" % (exp,))
            if sum(exp) != degree:
                raise ValueError("exponent %r does not have degree %d"
                                 % (exp, degree))
            c = field.of(c)
            if c != field.zero:
                tdict[exp] = c
        self.nvars = nvars
        self.degree = degree
        self.terms = tdict
        self.field = field

    @classmethod
    def from_vector(cls, nvars, degree, vec, field=QQ):
        exps = monomial_exponents(nvars, degree)
        vec = list(vec)
        if len(vec) != len(exps):
            raise ValueError("expected %d coefficients, got %d"
                             % (len(exps), len(vec)))
        return cls(nvars, degree, dict(zip(exps, vec)), field)

    def coefficient_vector(self):
        zero = self.field.zero
        return [self.terms.get(e, zero) for e in
                monomial_exponents(self.nvars, self.degree)]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    @property
    def is_zero(self):
        return not self.terms

    def evaluate(self, point):
        point = [self.field.of(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point has %d coordinates, form has %d variables"
                             % (len(point), self.nvars))
        total = self.field.zero
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                for _ in range(e):
                    v = v * x
            total = total + v
        return total

    def gradient(self):
        parts = []
        for i in range(self.nvars):
            t = {}
            for exp, c in self.terms.items():
                if exp[i]:
                    e = list(exp)
                    e[i] -= 1
                    t[tuple(e)] = c * exp[i]
            parts.append(HomogeneousForm(self.nvars, self.degree - 1, t,
                                         self.field))
        return tuple(parts)

    def compose(self, maps):
        """Substitute a homogeneous degree-e form (as HomogeneousForm) for
        each variable; all maps must share nvars and degree."""
        if len(maps) != self.nvars:
            raise ValueError("need one substitution per variable")
        new_n = maps[0].nvars
        e = maps[0].degree
        if any(m.nvars != new_n or m.degree != e for m in maps):
            raise ValueError("substitution forms must share shape")
        raw = compose_terms(self.terms, [m.terms for m in maps], new_n,
                            one=self.field.one)
        return HomogeneousForm(new_n, self.degree * e, raw, self.field)

    def __add__(self, other):
        self._check_shape(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, self.field.zero) + c
            if v != self.field.zero:
                t[e] = v
            elif e in t:
                del t[e]
        return HomogeneousForm(self.nvars, self.degree, t, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HomogeneousForm(self.nvars, self.degree,
                               {e: -c for e, c in self.terms.items()},
                               self.field)

    def __mul__(self, other):
        if isinstance(other, HomogeneousForm):
            if other.nvars != self.nvars or other.field != self.field:
                raise ValueError("form shapes differ")
            return HomogeneousForm(self.nvars, self.degree + other.degree,
                                   _mul_terms(self.terms, other.terms),
                                   self.field)
        c = self.field.of(other)
        return HomogeneousForm(self.nvars, self.degree,
                               {e: v * c for e, v in self.terms.items()},
                               self.field)

    __rmul__ = __mul__

    def _check_shape(self, other):
        if (other.nvars != self.nvars or other.degree != self.degree
                or other.field != self.field):
            raise ValueError("form shapes differ")

    def __eq__(self, other):
        return (isinstance(other, HomogeneousForm)
                and self.nvars == other.nvars and self.degree == other.degree
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, self.field,
                     frozenset(self.terms.items())))

    def normalized(self):
        """Canonical representative up to scale.

        Over Q: integer coefficients, content 1, first nonzero slot
        positive.  Over F_p: first nonzero slot scaled to 1.
        """
        if self.is_zero:
            return self
        vec = self.coefficient_vector()
        if self.field.char == 0:
            vec = normalize_int_vector(vec)
        else:
            lead = next(c for c in vec if c != 0)
            vec = [c / lead for c in vec]
        return HomogeneousForm.from_vector(self.nvars, self.degree, vec,
                                           self.field)

    def __repr__(self):
        n = len(self.terms)
        return ("HomogeneousForm(deg %d in %d vars, %d term%s)"
                % (self.degree, self.nvars, n, "" if n == 1 else "s"))


def restrict_to_plane(f, frame):
    """f(u*a + v*b + t*c) for a frame of three independent points in P^3."""
    from .linalg import Matrix, rank
    a, b, c = (list(p) for p in frame)
    if rank(Matrix([a, b, c], f.field)) != 3:
        raise ValueError("frame points are projectively dependent")
    return _linear_substitute(f, [a, b, c])


def restrict_to_line(f, a, b):
    """The binary form f(s*a + t*b); identically zero iff the line lies in
    the zero locus of f."""
    a, b = list(a), list(b)
    if _proportional(a, b, f.field):
        raise ValueError("line endpoints coincide")
    return _linear_substitute(f, [a, b])


def _linear_substitute(f, points):
    m = len(points)
    maps = []
    for i in range(f.nvars):
        t = {}
        for j, p in enumerate(points):
            c = f.field.of(p[i])
            if c != f.field.zero:
                e = [0] * m
                e[j] = 1
                t[tuple(e)] = c
        maps.append(HomogeneousForm(m, 1, t, f.field))
    return f.compose(maps)


def _proportional(a, b, field):
    a = [field.of(x) for x in a]
    b = [field.of(x) for x in b]
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] * b[j] - a[j] * b[i] != field.zero:
                return False
    return True


def exact_divide(num, div, field=QQ):
    """Quotient of univariate polynomials (ascending coefficients), which
    must be exact; raises InexactDivisionError on a nonzero remainder."""
    num = [field.of(c) for c in num]
    div = [field.of(c) for c in div]
    while div and div[-1] == field.zero:
        div.pop()
    if not div:
        raise ZeroDivisionError("division by the zero polynomial")
    while num and num[-1] == field.zero:
        num.pop()
    if not num:
        return (field.zero,)
    if len(num) < len(div):
        raise InexactDivisionError("degree of numerator is too small")
    lead = div[-1]
    q = [field.zero] * (len(num) - len(div) + 1)
    rem = list(num)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(div) - 1] / lead
        q[k] = c
        if c != field.zero:
            for i, d in enumerate(div):
                rem[k + i] = rem[k + i] - c * d
    if any(c != field.zero for c in rem):
        raise InexactDivisionError("nonzero remainder")
    return tuple(q)
