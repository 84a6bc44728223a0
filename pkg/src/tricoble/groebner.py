"""Buchberger engine over exact fields, graded reverse lexicographic order.

Used exclusively for emptiness and zero-dimensional-degree certificates, so
grevlex is the only order offered.  The classical product and chain criteria
prune S-pairs; a reduction-step budget (TRICOBLE_SPAIR_BUDGET, default 10^6)
turns a runaway computation into an explicit BudgetExceeded diagnostic
instead of a silent hang.
"""

import heapq
import os
from fractions import Fraction

from .fields import QQ, normalize_int_vector

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    pass


class NotZeroDimensionalError(ValueError):
    pass


def _grevlex(exp):
    # Sort key: larger means later in the monomial order (leading = max).
    return (sum(exp), tuple(-e for e in reversed(exp)))


class Poly:
    """Sparse polynomial (not necessarily homogeneous) over a field."""

    __slots__ = ("nvars", "terms", "field")

    def __init__(self, nvars, terms, field=QQ):
        tdict = {}
        for exp, c in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError("bad exponent tuple %r" % (exp,))
            c = field.of(c)
            if c != field.zero:
                tdict[exp] = c
        self.nvars = nvars
        self.terms = tdict
        self.field = field

    @property
    def is_zero(self):
        return not self.terms

    def leading(self):
        exp = max(self.terms, key=_grevlex)
        return exp, self.terms[exp]

    def evaluate(self, point):
        point = [self.field.of(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        total = self.field.zero
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                for _ in range(e):
                    v = v * x
            total = total + v
        return total

    def _made(self, terms):
        p = Poly.__new__(Poly)
        p.nvars = self.nvars
        p.terms = terms
        p.field = self.field
        return p

    def sub_term_mul(self, coeff, shift, other):
        """self - coeff * x^shift * other, one reduction step."""
        t = dict(self.terms)
        zero = self.field.zero
        for exp, c in other.terms.items():
            e = tuple(a + b for a, b in zip(exp, shift))
            v = t.get(e, zero) - coeff * c
            if v != zero:
                t[e] = v
            elif e in t:
                del t[e]
        return self._made(t)

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading()
        if lc == self.field.one:
            return self
        inv = self.field.one / lc
        return self._made({e: c * inv for e, c in self.terms.items()})

    def primitive(self):
        """Unit-normalize: over Q clear to integer content 1 with positive
        leading coefficient; over F_p make monic."""
        if not self.terms:
            return self
        if self.field.char != 0:
            return self.monic()
        exps = sorted(self.terms, key=_grevlex, reverse=True)
        ints = normalize_int_vector([self.terms[e] for e in exps])
        return self._made({e: Fraction(c) for e, c in zip(exps, ints) if c})

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.nvars == other.nvars
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return "Poly(%d vars, %d terms)" % (self.nvars, len(self.terms))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def step(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(
                "reduction budget exhausted; raise TRICOBLE_SPAIR_BUDGET "
                "to allow more work")


def _active_budget(budget):
    if budget is None:
        budget = int(os.environ.get("TRICOBLE_SPAIR_BUDGET", DEFAULT_BUDGET))
    return _Budget(budget)


def _reduce_full(f, basis, budget):
    """Normal form of f against basis (complete reduction of every term)."""
    remainder = {}
    zero = f.field.zero
    while f.terms:
        exp, coeff = f.leading()
        hit = None
        for g in basis:
            gexp, gc = g.leading()
            if _divides(gexp, exp):
                hit = (g, gexp, gc)
                break
        if hit is None:
            remainder[exp] = coeff
            t = dict(f.terms)
            del t[exp]
            f = f._made(t)
            continue
        g, gexp, gc = hit
        budget.step()
        shift = tuple(a - b for a, b in zip(exp, gexp))
        f = f.sub_term_mul(coeff / gc, shift, g)
    out = f._made({e: c for e, c in remainder.items() if c != zero})
    return out


def _spoly(f, g):
    fe, fc = f.leading()
    ge, gc = g.leading()
    lcm = _lcm_exp(fe, ge)
    sf = tuple(a - b for a, b in zip(lcm, fe))
    sg = tuple(a - b for a, b in zip(lcm, ge))
    zero_poly = f._made({})
    left = zero_poly.sub_term_mul(-(f.field.one / fc), sf, f)
    return left.sub_term_mul(f.field.one / gc, sg, g)


def buchberger(gens, budget=None):
    """The unique reduced Groebner basis (grevlex), monic, sorted with the
    largest leading term first."""
    gens = [g.primitive() for g in gens if not g.is_zero]
    if not gens:
        return []
    budget = _active_budget(budget)
    basis = list(gens)
    pending = set()
    heap = []

    def enqueue(i, j):
        ei = basis[i].leading()[0]
        ej = basis[j].leading()[0]
        lcm = _lcm_exp(ei, ej)
        if lcm == tuple(a + b for a, b in zip(ei, ej)):
            return  # coprime leading terms: S-poly reduces to zero
        pending.add((i, j))
        heapq.heappush(heap, (_grevlex(lcm), i, j))

    for j in range(len(basis)):
        for i in range(j):
            enqueue(i, j)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = _lcm_exp(basis[i].leading()[0], basis[j].leading()[0])
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if not _divides(basis[k].leading()[0], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        rem = _reduce_full(_spoly(basis[i], basis[j]), basis, budget)
        if rem.is_zero:
            continue
        basis.append(rem.primitive())
        new = len(basis) - 1
        for i2 in range(new):
            enqueue(i2, new)

    return _interreduce(basis, budget)


def _interreduce(basis, budget):
    kept = []
    for i, f in enumerate(basis):
        fe = f.leading()[0]
        if any(_divides(basis[j].leading()[0], fe)
               for j in range(len(basis)) if j != i
               and (j > i or basis[j].leading()[0] != fe)):
            continue
        kept.append(f)
    out = []
    for i, f in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        out.append(_reduce_full(f, others, budget).monic())
    out.sort(key=lambda p: _grevlex(p.leading()[0]), reverse=True)
    return out


def is_empty_affine(gens, budget=None):
    """True iff the ideal has no solutions over the algebraic closure,
    certified by the reduced Groebner basis being {1}."""
    gb = buchberger(gens, budget)
    return len(gb) == 1 and gb[0].leading()[0] == (0,) * gb[0].nvars


def zero_dim_degree(gens, budget=None):
    """Dimension of the quotient ring (scheme degree with multiplicity).

    Returns 0 for an empty variety; raises NotZeroDimensionalError when
    some variable has no pure power among the leading terms.
    """
    gb = buchberger(gens, budget)
    if not gb:
        raise NotZeroDimensionalError("zero ideal")
    nvars = gb[0].nvars
    leads = [g.leading()[0] for g in gb]
    if (0,) * nvars in leads:
        return 0
    box = []
    for i in range(nvars):
        powers = [e[i] for e in leads
                  if all(e[j] == 0 for j in range(nvars) if j != i)]
        if not powers:
            raise NotZeroDimensionalError(
                "no pure power of variable %d in the leading-term ideal" % i)
        box.append(min(powers))
    count = 0
    stack = [(0,) * nvars]
    seen = {stack[0]}
    while stack:
        mono = stack.pop()
        if any(_divides(l, mono) for l in leads):
            continue
        count += 1
        for i in range(nvars):
            if mono[i] < box[i]:
                nxt = mono[:i] + (mono[i] + 1,) + mono[i + 1:]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return count


def vanishes_at(gens, point):
    return all(g.evaluate(point) == g.field.zero for g in gens)
