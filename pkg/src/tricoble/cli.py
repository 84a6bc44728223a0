"""Command line front end and the JSON configuration/report formats.

All reports carry the schema tag "tricoble/1" and contain no floats:
integers are decimal strings, rationals are "num/den" strings, and the
dynamical degree is an exact rational interval plus a display decimal.

Exit codes: 0 success, 2 malformed input, 3 mathematical validation or
certification failure, 4 structural degeneracy.
"""

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from .bertini import (BertiniDegeneracyError, ComposedBertini, FFBoundExceeded,
                      NotOnCubicError, ff_fixing_exponent, orbit,
                      t2_fixed_point_checks)
from .construct import (LABELS, PAIRS, ConfigError, DegenerateConfigError,
                        InterpolationError, TangencyConfig, certify,
                        check_interpolation, cubic_pencil, short_cubic,
                        validate_config)
from .fields import QQ, fraction_to_decimal_str, is_prime, mpz
from .forms import HomogeneousForm
from .groebner import BudgetExceeded
from .picard import (NSLattice, bertini_block, canonical_class,
                     dynamical_degree, fixed_space)
from .projgeom import (DependentPointsError, LineOnSurfaceError, ProjPoint,
                       third_intersection)
from .roots import strip_integer_roots

SCHEMA = "tricoble/1"


class SchemaError(ValueError):
    pass


# --- config parsing ------------------------------------------------------

def _as_int(value, where):
    if isinstance(value, bool):
        raise SchemaError("%s: expected an integer, got a boolean" % where)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise SchemaError("%s: %r is not an integer" % (where, value))
    raise SchemaError("%s: expected an integer or decimal string" % where)


def _int_list(value, length, where):
    if not isinstance(value, list) or len(value) != length:
        raise SchemaError("%s: expected a list of %d integers"
                          % (where, length))
    return [_as_int(v, "%s[%d]" % (where, i)) for i, v in enumerate(value)]


def load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        raise SchemaError("cannot read %s: %s" % (path, err))
    except json.JSONDecodeError as err:
        raise SchemaError("%s: malformed JSON (%s)" % (path, err))
    return parse_config(doc)


def parse_config(doc):
    if not isinstance(doc, dict):
        raise SchemaError("config: expected a JSON object")
    tag = doc.get("schema", SCHEMA)
    if tag != SCHEMA:
        raise SchemaError("schema: expected %r, got %r" % (SCHEMA, tag))
    known = {"schema", "quadrics", "points", "cubic", "prime"}
    for key in doc:
        if key not in known:
            raise SchemaError("%s: unknown field" % key)
    quads = doc.get("quadrics")
    if not isinstance(quads, list) or len(quads) != 3:
        raise SchemaError("quadrics: expected a list of three coefficient "
                          "vectors")
    quadrics = [_int_list(q, 10, "quadrics[%d]" % i)
                for i, q in enumerate(quads)]
    pts = doc.get("points")
    if not isinstance(pts, dict) or set(pts) != set(LABELS):
        raise SchemaError("points: expected exactly the labels %s"
                          % ", ".join(LABELS))
    points = {label: _int_list(pts[label], 4, "points.%s" % label)
              for label in LABELS}
    cubic = doc.get("cubic")
    if cubic is not None:
        cubic = _int_list(cubic, 20, "cubic")
    prime = doc.get("prime")
    if prime is not None:
        prime = _as_int(prime, "prime")
        if not is_prime(prime):
            raise SchemaError("prime: %d is not prime" % prime)
    return {"quadrics": quadrics, "points": points, "cubic": cubic,
            "prime": prime}


def build_config(raw):
    """TangencyConfig over Q, reduced mod p when the config asks for it."""
    cfg = TangencyConfig.from_vectors(raw["quadrics"], raw["points"], QQ)
    if raw["prime"] is not None:
        cfg = cfg.reduce_mod(raw["prime"])
    return cfg


def config_cubic(raw, cfg):
    if raw["cubic"] is None:
        return None
    f = HomogeneousForm.from_vector(4, 3, raw["cubic"], cfg.field)
    if f.is_zero:
        raise ConfigError("cubic vanishes modulo %d" % raw["prime"])
    return f


# --- report serialization ------------------------------------------------

def _istr(x):
    # mpz prints orbit-sized integers in subquadratic time; plain str on a
    # CPython int is quadratic and chokes on multi-million digit heights
    return str(mpz(int(x)))


def _vec(v):
    return [_istr(c) for c in v]


def _frac(x):
    return str(Fraction(x))


def _echo(raw):
    echo = {
        "quadrics": [_vec(q) for q in raw["quadrics"]],
        "points": {label: _vec(p) for label, p in raw["points"].items()},
    }
    if raw["cubic"] is not None:
        echo["cubic"] = _vec(raw["cubic"])
    if raw["prime"] is not None:
        echo["prime"] = _istr(raw["prime"])
    return echo


def _matrix(m):
    return [[_istr(x) for x in row] for row in m.to_int_rows()]


def _emit(doc, out):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command, raw=None, **body):
    doc = {"schema": SCHEMA, "command": command}
    if raw is not None:
        doc["inputs"] = _echo(raw)
    doc.update(body)
    return doc


def _plane_dict(planes):
    return {label: _vec(plane) for label, plane in planes.items()}


# --- subcommands ---------------------------------------------------------

def cmd_construct(args):
    raw = load_config(args.config)
    cfg = build_config(raw)
    planes = validate_config(cfg)
    pencil = cubic_pencil(cfg, planes)
    f = short_cubic(pencil)
    body = {
        "validation": {"ok": True, "tangent_planes": _plane_dict(planes)},
        "pencil_basis": [_vec(v) for v in pencil.basis],
        "cubic": _vec(f.coefficient_vector()),
    }
    if raw["cubic"] is not None:
        body["input_cubic_in_pencil"] = pencil.contains(
            config_cubic(raw, cfg).coefficient_vector())
    _emit(_report("construct", raw, **body), args.out)
    return 0


def cmd_certify(args):
    raw = load_config(args.config)
    if raw["cubic"] is None:
        raise SchemaError("cubic: certify requires one in the config")
    cfg = build_config(raw)
    f = config_cubic(raw, cfg)
    report = certify(cfg, f, budget=args.budget)
    if not report.tri_coble:
        # the fixed-point checks presuppose a certified surface; report the
        # verdicts and stop before the involutions can hit a degeneracy
        _emit(_report("certify", raw, certificate=report.to_dict()),
              args.out)
        first = min(k for k, v in report.conditions.items() if not v.passed)
        bad = report.conditions[first]
        sys.stderr.write("condition (%d) failed: %s\n"
                         % (first, json.dumps(bad.witness, sort_keys=True,
                                              default=str)))
        return 3
    pairs = {name: cfg.pair(name) for name in PAIRS}
    t2 = t2_fixed_point_checks(f, pairs)
    t2_ok = all(t2.values())
    body = {
        "certificate": report.to_dict(),
        "t2_fixed_points": dict(sorted(t2.items())),
        "t2_all_fixed": t2_ok,
    }
    _emit(_report("certify", raw, **body), args.out)
    if not t2_ok:
        bad = sorted(k for k, v in t2.items() if not v)[0]
        sys.stderr.write("fixed-point check failed: %s\n" % bad)
        return 3
    return 0


def _lambda_block(lo, hi, places=10):
    return {
        "lo": _frac(lo),
        "hi": _frac(hi),
        "decimal": fraction_to_decimal_str(lo, places),
    }


def cmd_dynamics(args):
    eps = _parse_eps(args.eps)
    lat = NSLattice(args.pairs)
    blocks = [bertini_block(lat, i) for i in range(args.pairs)]
    m = blocks[-1]
    for b in reversed(blocks[:-1]):
        m = m * b
    p, lo, hi = dynamical_degree(m, eps)
    roots, rest = strip_integer_roots(p)
    body = {
        "lattice": {"rank": lat.rank, "labels": list(lat.labels)},
        "blocks": {name: _matrix(b)
                   for name, b in zip(("p", "q", "r"), blocks)},
        "pullback": _matrix(m),
        "char_poly": _vec(p.coeffs),
        "char_poly_integer_roots": {_istr(r): mult for r, mult in roots},
        "char_poly_remaining_factor": _vec(rest.coeffs),
        "lambda1": _lambda_block(lo, hi),
        "fixed_space": [_vec(v) for v in fixed_space(m)],
        "canonical_class": _vec(canonical_class(lat)),
    }
    _emit(_report("dynamics", **body), args.out)
    return 0


def _parse_eps(text):
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SchemaError("eps: %r is not a rational (use p/q or a decimal)"
                          % text)
    if eps <= 0:
        raise SchemaError("eps: must be positive")
    return eps


def _resolve_seed(text, cfg, f):
    if text in LABELS:
        return cfg.points[text]
    if text.startswith("chord:"):
        parts = text[len("chord:"):].split(",")
        if len(parts) != 2 or any(p not in LABELS for p in parts):
            raise SchemaError("seed: chord wants two point labels")
        return third_intersection(f, cfg.points[parts[0]],
                                  cfg.points[parts[1]])
    if text.startswith("point:"):
        parts = text[len("point:"):].split(",")
        coords = [_as_int(p, "seed") for p in parts]
        if len(coords) != 4:
            raise SchemaError("seed: explicit point wants 4 coordinates")
        return ProjPoint(coords, cfg.field)
    raise SchemaError(
        "seed: use a point label, chord:<label>,<label>, or point:a,b,c,d")


def cmd_orbit(args):
    raw = load_config(args.config)
    if raw["prime"] is not None:
        raise SchemaError("prime: orbit heights are defined over Q only")
    if raw["cubic"] is None:
        raise SchemaError("cubic: orbit requires one in the config")
    cfg = build_config(raw)
    f = config_cubic(raw, cfg)
    planes = validate_config(cfg)
    check_interpolation(cfg, f, planes)
    seed = _resolve_seed(args.seed, cfg, f)
    pairs = {name: cfg.pair(name) for name in PAIRS}
    rec = orbit(f, pairs, seed, args.steps, height_budget=args.height_budget)
    body = {
        "seed": _vec(rec.seed),
        "steps_requested": args.steps,
        "steps_completed": len(rec.points) - 1,
        "points": [_vec(p) for p in rec.points],
        "heights": [_istr(h) for h in rec.heights],
        "log_height_ratios": [_frac(r) for r in rec.log_height_ratios],
        "height_budget_digits": _istr(args.height_budget),
        "truncated": rec.truncated,
    }
    _emit(_report("orbit", raw, **body), args.out)
    return 0


def cmd_ffexp(args):
    raw = load_config(args.config)
    if raw["prime"] is None:
        raise SchemaError("prime: ffexp needs a finite field")
    if raw["cubic"] is None:
        raise SchemaError("cubic: ffexp requires one in the config")
    cfg = build_config(raw)
    f = config_cubic(raw, cfg)
    report = certify(cfg, f, budget=args.budget)
    if not report.tri_coble:
        first = min(k for k, v in report.conditions.items() if not v.passed)
        raise ConfigError(
            "prime %d is bad: condition (%d) fails modulo it"
            % (raw["prime"], first))
    letters = list(args.map)
    if not letters or any(ch not in PAIRS for ch in letters):
        raise SchemaError("map: use a nonempty word in the letters p, q, r")
    targets = [t.strip() for t in args.targets.split(",")]
    if not targets or any(t not in LABELS for t in targets):
        raise SchemaError("targets: use a comma-separated list of point "
                          "labels")
    mapping = ComposedBertini(f, [(ch, cfg.pair(ch)) for ch in letters])
    m, cycles = ff_fixing_exponent(mapping, [cfg.points[t] for t in targets],
                                   bound=args.bound)
    body = {
        "map": args.map,
        "targets": targets,
        "certificate": report.to_dict(),
        "cycle_lengths": {t: _istr(c) for t, c in zip(targets, cycles)},
        "fixing_exponent": _istr(m),
        "bound": _istr(args.bound),
    }
    _emit(_report("ffexp", raw, **body), args.out)
    return 0


def cmd_fixture(args):
    text = resources.files("tricoble").joinpath("data/fixture.json") \
                    .read_text(encoding="utf-8")
    # parse and re-emit so the shipped file and CLI output stay canonical
    doc = json.loads(text)
    _emit(doc, args.out)
    return 0


# --- entry point ---------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tricoble",
        description="Exact construction, certification, and dynamics of "
                    "tri-Coble cubic surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", metavar="FILE",
                       help="write the JSON report here instead of stdout")

    p = sub.add_parser("construct",
                       help="interpolate the tangency system and pick a "
                            "small cubic")
    p.add_argument("config")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify",
                       help="run the full nondegeneracy certificate")
    p.add_argument("config")
    p.add_argument("--budget", type=int, default=None,
                   help="Groebner S-pair budget override")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("dynamics",
                       help="lattice pullback, characteristic polynomial, "
                            "dynamical degree")
    p.add_argument("--pairs", type=int, default=3, choices=(1, 2, 3))
    p.add_argument("--eps", default="1/1000000000",
                   help="interval width for the dynamical degree")
    common(p)
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("orbit", help="iterate phi from a seed point")
    p.add_argument("config")
    p.add_argument("--seed", required=True,
                   help="point label, chord:<l1>,<l2>, or point:a,b,c,d")
    p.add_argument("--steps", type=int, default=3)
    p.add_argument("--height-budget", type=int, default=10 ** 7,
                   metavar="DIGITS")
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("ffexp",
                       help="fixing exponent of a composed map over F_p")
    p.add_argument("config")
    p.add_argument("--map", default="pq",
                   help="composition word, rightmost letter acts first")
    p.add_argument("--targets", default="r1,r2")
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.add_argument("--budget", type=int, default=None,
                   help="Groebner S-pair budget override")
    common(p)
    p.set_defaults(func=cmd_ffexp)

    p = sub.add_parser("fixture",
                       help="print the packaged example configuration")
    common(p)
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv=None):
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2 ** 31 - 1)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as err:
        sys.stderr.write("error: %s\n" % err)
        return 2
    except (ConfigError, InterpolationError, NotOnCubicError,
            DependentPointsError, FFBoundExceeded, BudgetExceeded) as err:
        sys.stderr.write("error: %s\n" % err)
        return 3
    except BertiniDegeneracyError as err:
        stage = "" if err.stage is None else " (stage %s)" % err.stage
        sys.stderr.write("error: %s%s\n" % (err, stage))
        return 4
    except (DegenerateConfigError, LineOnSurfaceError) as err:
        sys.stderr.write("error: %s\n" % err)
        return 4


if __name__ == "__main__":
    sys.exit(main())
