"""Cubic-surface interpolation from a tangent-quadric configuration, and
the six-part nondegeneracy certificate.

A configuration is three smooth quadrics pairwise tangent at two points:
Q1 touches the target cubic along the pairs p and q, Q2 along p and r, Q3
along q and r.  Prescribing the tangent plane of the cubic at the six
points imposes 18 linear conditions on the 20 cubic coefficients; the
certificate then checks the geometry needed for the three Bertini
involutions to be biregular with positive-entropy composition.

Certificate soundness notes live in the README (in particular why
"singular scheme of degree 4 supported at the 4 tangency points, no line
through a tangency point" forces the quadric sections to be irreducible
nodal curves).
"""

from itertools import combinations

from .fields import GF, QQ, normalize_int_vector
from .forms import HomogeneousForm, monomial_exponents, restrict_to_plane
from .groebner import (NotZeroDimensionalError, Poly, is_empty_affine,
                       vanishes_at, zero_dim_degree)
from .lattice import lll_reduce
from .linalg import Matrix, int_kernel_basis, kernel_basis, rank
from .projgeom import (ProjPlane, ProjPoint, SingularPointError, coplanar,
                       line_in_surface, tangent_plane)

LABELS = ("p1", "p2", "q1", "q2", "r1", "r2")
PAIRS = {"p": ("p1", "p2"), "q": ("q1", "q2"), "r": ("r1", "r2")}
QUADRIC_TANGENCY = (
    ("p1", "p2", "q1", "q2"),
    ("p1", "p2", "r1", "r2"),
    ("q1", "q2", "r1", "r2"),
)


class ConfigError(ValueError):
    pass


class DegenerateConfigError(ValueError):
    pass


class InterpolationError(ValueError):
    pass


class TangencyConfig:
    __slots__ = ("quadrics", "points", "field")

    def __init__(self, quadrics, points, field=QQ):
        quadrics = tuple(quadrics)
        if len(quadrics) != 3:
            raise ConfigError("need exactly three quadrics")
        for i, q in enumerate(quadrics):
            if q.nvars != 4 or q.degree != 2 or q.field != field:
                raise ConfigError("Q%d is not a quadric over the "
                                  "configuration field" % (i + 1))
        pts = {}
        for label in LABELS:
            if label not in points:
                raise ConfigError("missing point %s" % label)
            p = points[label]
            if not isinstance(p, ProjPoint):
                p = ProjPoint(p, field)
            if p.field != field or len(p) != 4:
                raise ConfigError("point %s has the wrong shape" % label)
            pts[label] = p
        self.quadrics = quadrics
        self.points = pts
        self.field = field

    @classmethod
    def from_vectors(cls, quadric_vecs, point_vecs, field=QQ):
        quadrics = tuple(HomogeneousForm.from_vector(4, 2, v, field)
                         for v in quadric_vecs)
        points = {label: ProjPoint(point_vecs[label], field)
                  for label in LABELS if label in point_vecs}
        return cls(quadrics, points, field)

    def reduce_mod(self, p):
        """The same configuration over F_p; fails if any datum collapses."""
        field = GF(p)
        quadrics = []
        for i, q in enumerate(self.quadrics):
            vec = [int(c) for c in q.normalized().coefficient_vector()]
            form = HomogeneousForm.from_vector(4, 2, vec, field)
            if form.is_zero:
                raise ConfigError("Q%d vanishes modulo %d" % (i + 1, p))
            quadrics.append(form)
        points = {}
        for label in LABELS:
            coords = [int(c) % p for c in self.points[label]]
            if not any(coords):
                raise ConfigError("point %s degenerates modulo %d"
                                  % (label, p))
            points[label] = ProjPoint(coords, field)
        return TangencyConfig(quadrics, points, field)

    def pair(self, name):
        a, b = PAIRS[name]
        return self.points[a], self.points[b]


def _gram_rank(q):
    # Rank of the symmetric matrix of the doubled bilinear form.
    field = q.field
    if field.char == 2:
        raise ConfigError("quadric rank test is unavailable in "
                          "characteristic 2")
    two = field.of(2)
    m = [[field.zero] * 4 for _ in range(4)]
    for exp, c in q.terms.items():
        idx = [i for i in range(4) for _ in range(exp[i])]
        i, j = idx
        if i == j:
            m[i][i] = two * c
        else:
            m[i][j] = c
            m[j][i] = c
    return rank(Matrix(m, field))


def validate_config(cfg):
    """Check the smoothness/incidence/tangency invariants; returns the six
    prescribed tangent planes keyed by point label."""
    field = cfg.field
    for i, q in enumerate(cfg.quadrics):
        r = _gram_rank(q)
        if r != 4:
            raise ConfigError("Q%d is degenerate (rank %d)" % (i + 1, r))
    pts = [cfg.points[label] for label in LABELS]
    for i in range(6):
        for j in range(i + 1, 6):
            if pts[i] == pts[j]:
                raise ConfigError("points %s and %s coincide"
                                  % (LABELS[i], LABELS[j]))
    planes = {}
    for label in LABELS:
        point = cfg.points[label]
        incident = [i for i in range(3) if label in QUADRIC_TANGENCY[i]]
        for i in range(3):
            value = cfg.quadrics[i].evaluate(point)
            if i in incident and value != field.zero:
                raise ConfigError("point %s is not on Q%d" % (label, i + 1))
            if i not in incident and value == field.zero:
                raise ConfigError("point %s lies on Q%d but must not"
                                  % (label, i + 1))
        grads = []
        for i in incident:
            g = [part.evaluate(point)
                 for part in cfg.quadrics[i].gradient()]
            if all(x == field.zero for x in g):
                raise ConfigError("Q%d is singular at %s" % (i + 1, label))
            grads.append(g)
        g1, g2 = grads
        for a in range(4):
            for b in range(a + 1, 4):
                if g1[a] * g2[b] - g1[b] * g2[a] != field.zero:
                    raise ConfigError(
                        "tangent planes of Q%d and Q%d differ at %s"
                        % (incident[0] + 1, incident[1] + 1, label))
        planes[label] = ProjPlane(g1, field)
    return planes


_CUBIC_EXPS = monomial_exponents(4, 3)


def _partial_rows(point, field):
    """partials[i][col] = d/dx_i of cubic monomial col, evaluated at the
    point."""
    coords = [field.of(c) for c in point]
    partials = [[field.zero] * len(_CUBIC_EXPS) for _ in range(4)]
    for col, exp in enumerate(_CUBIC_EXPS):
        for i in range(4):
            if not exp[i]:
                continue
            v = field.of(exp[i])
            for k in range(4):
                e = exp[k] - (1 if k == i else 0)
                for _ in range(e):
                    v = v * coords[k]
            partials[i][col] = v
    return partials


def interpolation_system(cfg, planes=None):
    """The 36x20 tangency system: for each point with prescribed normal n,
    the six rows n_j dF_i - n_i dF_j over index pairs i < j.  Vanishing of
    the point value itself follows from the Euler identity."""
    if planes is None:
        planes = validate_config(cfg)
    field = cfg.field
    rows = []
    for label in LABELS:
        n = [field.of(c) for c in planes[label].coeffs]
        partials = _partial_rows(cfg.points[label], field)
        for i in range(4):
            for j in range(i + 1, 4):
                rows.append([n[j] * partials[i][col] - n[i] * partials[j][col]
                             for col in range(len(_CUBIC_EXPS))])
    return Matrix(rows, field)


class CubicPencil:
    __slots__ = ("basis", "field")

    def __init__(self, basis, field):
        self.basis = tuple(tuple(v) for v in basis)
        self.field = field

    def contains(self, vec):
        vec = [self.field.of(c) for c in vec]
        m = Matrix(list(self.basis) + [vec], self.field)
        return rank(m) == len(self.basis)

    def member(self, s, t):
        v1, v2 = self.basis
        s, t = self.field.of(s), self.field.of(t)
        return [s * self.field.of(a) + t * self.field.of(b)
                for a, b in zip(v1, v2)]


def cubic_pencil(cfg, planes=None):
    m = interpolation_system(cfg, planes)
    # over Q take the saturated integer kernel, so every integer cubic
    # satisfying the tangencies is an integer combination of the basis
    if cfg.field.char == 0:
        basis = int_kernel_basis(m)
    else:
        basis = kernel_basis(m)
    if len(basis) != 2:
        raise DegenerateConfigError(
            "tangency system has kernel dimension %d, expected 2"
            % len(basis))
    return CubicPencil(basis, cfg.field)


def short_cubic(pencil):
    """The small-coefficient cubic in the pencil: LLL on the rank-2 kernel
    lattice, then the least max-norm vector among small combinations of
    the reduced basis (ties broken lexicographically)."""
    if pencil.field.char != 0:
        # No lattice structure mod p; the first kernel vector is canonical.
        return HomogeneousForm.from_vector(4, 3, pencil.basis[0],
                                           pencil.field)
    v1, v2 = lll_reduce([list(v) for v in pencil.basis])
    # the max-norm minimum of a 2-dim lattice with Gauss-reduced basis has
    # coordinates below sqrt(2 * 20) in that basis
    candidates = []
    for a in range(-8, 9):
        for b in range(-8, 9):
            if a == 0 and b == 0:
                continue
            candidates.append(normalize_int_vector(
                [a * x + b * y for x, y in zip(v1, v2)]))
    best = min(candidates, key=lambda v: (max(abs(c) for c in v), v))
    return HomogeneousForm.from_vector(4, 3, best, QQ)


def check_interpolation(cfg, f, planes=None):
    """Raise InterpolationError unless f satisfies all 36 tangency rows."""
    m = interpolation_system(cfg, planes)
    residual = m.apply(f.coefficient_vector())
    if any(x != cfg.field.zero for x in residual):
        bad = next(i for i, x in enumerate(residual) if x != cfg.field.zero)
        raise InterpolationError(
            "cubic violates tangency row %d (point %s)"
            % (bad, LABELS[bad // 6]))


# --- certificate ---------------------------------------------------------

class ConditionResult:
    __slots__ = ("passed", "witness")

    def __init__(self, passed, witness):
        self.passed = passed
        self.witness = witness

    def __repr__(self):
        return "ConditionResult(%s)" % ("PASS" if self.passed else "FAIL")


class CertReport:
    __slots__ = ("conditions", "per_quadric", "tri_coble",
                 "simple_tri_coble")

    def __init__(self, conditions, per_quadric):
        self.conditions = conditions
        self.per_quadric = per_quadric
        self.tri_coble = all(c.passed for c in conditions.values())
        self.simple_tri_coble = self.tri_coble and any(per_quadric.values())

    def to_dict(self):
        return {
            "conditions": {str(k): {"passed": v.passed, "witness": v.witness}
                           for k, v in self.conditions.items()},
            "per_quadric_simple": {("Q%d" % (i + 1)): v
                                   for i, v in self.per_quadric.items()},
            "tri_coble": self.tri_coble,
            "simple_tri_coble": self.simple_tri_coble,
        }


def _chart_poly(form, chart):
    terms = {}
    field = form.field
    for exp, c in form.terms.items():
        e = tuple(exp[k] for k in range(form.nvars) if k != chart)
        if e in terms:
            v = terms[e] + c
            if v == field.zero:
                del terms[e]
            else:
                terms[e] = v
        else:
            terms[e] = c
    return Poly(form.nvars - 1, terms, field)


def _slice_form(form, idx):
    terms = {tuple(e for k, e in enumerate(exp) if k != idx): c
             for exp, c in form.terms.items() if exp[idx] == 0}
    return HomogeneousForm(form.nvars - 1, form.degree, terms, form.field)


def _proj_empty(forms, budget=None):
    """Projective emptiness of a homogeneous system, chart by chart."""
    nv = forms[0].nvars
    for chart in range(nv):
        gens = [_chart_poly(g, chart) for g in forms if not g.is_zero]
        if not gens:
            return False
        if not is_empty_affine(gens, budget):
            return False
    return True


def _cond1_smooth(f, budget):
    witness = {}
    gens = list(f.gradient()) + [f]
    for chart in range(4):
        polys = [_chart_poly(g, chart) for g in gens if not g.is_zero]
        witness["chart_%d" % chart] = is_empty_affine(polys, budget)
    return ConditionResult(all(witness.values()), witness)


def _cond2_lines(cfg, f):
    witness = {}
    for name in ("p", "q", "r"):
        a, b = cfg.pair(name)
        witness[name] = not line_in_surface(f, a, b)
    return ConditionResult(all(witness.values()), witness)


def _cond3_coplanar(cfg):
    witness = {}
    ok = True
    for quad in combinations(LABELS, 4):
        w = coplanar(*(cfg.points[l] for l in quad))
        witness["".join(quad)] = str(w.det)
        if w.coplanar:
            ok = False
    return ConditionResult(ok, witness)


def _cond4_plane_cubics(cfg, f, budget):
    witness = {}
    ok = True
    for triple in combinations(LABELS, 3):
        key = "".join(triple)
        frame = [list(cfg.points[l]) for l in triple]
        try:
            g = restrict_to_plane(f, frame)
        except ValueError:
            witness[key] = "degenerate frame"
            ok = False
            continue
        gens = list(g.gradient()) + [g]
        smooth = all(
            is_empty_affine([_chart_poly(h, chart) for h in gens
                             if not h.is_zero], budget)
            for chart in range(3))
        witness[key] = smooth
        ok = ok and smooth
    return ConditionResult(ok, witness)


def _cond5_tangent_planes(cfg, f):
    witness = {}
    ok = True
    for label in LABELS:
        try:
            plane = tangent_plane(f, cfg.points[label])
        except SingularPointError:
            witness[label] = "surface singular here"
            ok = False
            continue
        hits = [other for other in LABELS if other != label
                and plane.contains(cfg.points[other])]
        witness[label] = hits
        ok = ok and not hits
    return ConditionResult(ok, witness)


def _shear_constant(points, field):
    """c such that every point has t0 + c t1 + c^2 t2 + c^3 t3 nonzero; at
    most 12 values are bad, so 13 candidates suffice over Q."""
    if field.char == 0 or field.char >= 13:
        candidates = range(13)
    else:
        candidates = range(field.char)
    for c in candidates:
        cc = field.of(c)
        good = True
        for t in points:
            v = (field.of(t[0]) + cc * field.of(t[1])
                 + cc * cc * field.of(t[2]) + cc * cc * cc * field.of(t[3]))
            if v == field.zero:
                good = False
                break
        if good:
            return c
    return None


def _shear_form(form, c):
    field = form.field
    cc = field.of(c)
    maps = []
    row0 = {(1, 0, 0, 0): field.one, (0, 1, 0, 0): -cc,
            (0, 0, 1, 0): -cc * cc, (0, 0, 0, 1): -cc * cc * cc}
    maps.append(HomogeneousForm(4, 1, row0, field))
    for j in range(1, 4):
        e = [0] * 4
        e[j] = 1
        maps.append(HomogeneousForm(4, 1, {tuple(e): field.one}, field))
    return form.compose(maps)


def _line_system(f, q, t, field):
    """Generators cutting out directions v of lines through t inside both
    V(f) and V(q), extracted from the s-graded expansion of f(s*t + v)."""
    def expand(form):
        maps = []
        for i in range(4):
            terms = {}
            ti = field.of(t[i])
            if ti != field.zero:
                terms[(1, 0, 0, 0, 0)] = ti
            e = [0] * 5
            e[1 + i] = 1
            terms[tuple(e)] = field.one
            maps.append(HomogeneousForm(5, 1, terms, field))
        big = form.compose(maps)
        layers = {}
        for exp, c in big.terms.items():
            s_deg = exp[0]
            rest = exp[1:]
            layer = layers.setdefault(s_deg, {})
            layer[rest] = layer.get(rest, field.zero) + c
        out = {}
        for s_deg, terms in layers.items():
            out[s_deg] = HomogeneousForm(4, form.degree - s_deg, terms,
                                         field)
        return out

    ef = expand(f)
    eq = expand(q)
    gens = []
    for s_deg in (2, 1, 0):
        if s_deg in ef and not ef[s_deg].is_zero:
            gens.append(ef[s_deg])
    for s_deg in (1, 0):
        if s_deg in eq and not eq[s_deg].is_zero:
            gens.append(eq[s_deg])
    return gens


def _cond6_for_quadric(cfg, f, qi, budget):
    field = cfg.field
    q = cfg.quadrics[qi]
    targets = [cfg.points[l] for l in QUADRIC_TANGENCY[qi]]
    witness = {}

    gf = f.gradient()
    gq = q.gradient()
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            minors.append(gf[i] * gq[j] - gf[j] * gq[i])
    gens = [f, q] + [m for m in minors if not m.is_zero]

    c = _shear_constant(targets, field)
    witness["shear"] = c
    if c is None:
        witness["error"] = "no chart covers all tangency points"
        return ConditionResult(False, witness)

    sheared = [_shear_form(g, c) for g in gens]
    moved = []
    cc = field.of(c)
    for t in targets:
        u0 = (field.of(t[0]) + cc * field.of(t[1]) + cc * cc * field.of(t[2])
              + cc * cc * cc * field.of(t[3]))
        moved.append((u0, field.of(t[1]), field.of(t[2]), field.of(t[3])))

    slice_forms = [_slice_form(g, 0) for g in sheared]
    inf_empty = _proj_empty([g for g in slice_forms if not g.is_zero],
                            budget)
    witness["empty_at_infinity"] = inf_empty

    chart_gens = [_chart_poly(g, 0) for g in sheared]
    try:
        degree = zero_dim_degree(chart_gens, budget)
    except NotZeroDimensionalError:
        witness["degree"] = "not zero-dimensional"
        return ConditionResult(False, witness)
    witness["degree"] = degree

    supported = True
    for (u0, u1, u2, u3), label in zip(moved, QUADRIC_TANGENCY[qi]):
        pt = (u1 / u0, u2 / u0, u3 / u0)
        if not vanishes_at(chart_gens, pt):
            supported = False
            witness["missing_point"] = label
    witness["supported_at_tangency"] = supported

    lines = {}
    for label in QUADRIC_TANGENCY[qi]:
        t = cfg.points[label]
        idx = next(i for i in range(4) if field.of(t[i]) != field.zero)
        system = _line_system(f, q, t, field)
        sliced = [_slice_form(g, idx) for g in system]
        sliced = [g for g in sliced if not g.is_zero]
        lines[label] = _proj_empty(sliced, budget) if sliced else False
    witness["no_lines_through"] = lines

    passed = (inf_empty and degree == 4 and supported
              and all(lines.values()))
    return ConditionResult(passed, witness)


def certify(cfg, f, budget=None):
    """Run the full nondegeneracy certificate for the cubic f.

    Preconditions (configuration validity and the interpolation residual)
    raise; the six condition verdicts are reported, never raised."""
    planes = validate_config(cfg)
    check_interpolation(cfg, f, planes)
    conditions = {
        1: _cond1_smooth(f, budget),
        2: _cond2_lines(cfg, f),
        3: _cond3_coplanar(cfg),
        4: _cond4_plane_cubics(cfg, f, budget),
        5: _cond5_tangent_planes(cfg, f),
    }
    per_quadric = {}
    six = {}
    for qi in range(3):
        res = _cond6_for_quadric(cfg, f, qi, budget)
        per_quadric[qi] = res.passed
        six[qi] = res
    conditions[6] = ConditionResult(
        all(r.passed for r in six.values()),
        {("Q%d" % (qi + 1)): r.witness for qi, r in six.items()})
    return CertReport(conditions, per_quadric)
