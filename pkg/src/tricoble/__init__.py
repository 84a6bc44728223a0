"""Exact construction, certification, and dynamics of tri-Coble cubic
surfaces: cubics tangent to three quadrics along a three-pair tangency
configuration, carrying three Bertini involutions whose composition has
positive entropy."""

from .bertini import (BertiniContext, ComposedBertini, OrbitRecord,
                      bertini_apply, bertini_conic, ff_fixing_exponent,
                      is_bertini_fixed, orbit, phi_apply, phi_map,
                      point_height, t2_fixed_point_checks)
from .construct import (CertReport, ConfigError, CubicPencil,
                        DegenerateConfigError, InterpolationError,
                        TangencyConfig, certify, check_interpolation,
                        cubic_pencil, interpolation_system, short_cubic,
                        validate_config)
from .fields import GF, QQ, is_prime
from .forms import HomogeneousForm
from .picard import (NSLattice, bertini_block, canonical_class,
                     dynamical_degree, fixed_space, phi_pullback)
from .projgeom import ProjPoint, coplanar, tangent_plane, third_intersection

__version__ = "0.1.0"

__all__ = [
    "BertiniContext", "CertReport", "ComposedBertini", "ConfigError",
    "CubicPencil", "DegenerateConfigError", "GF", "HomogeneousForm",
    "InterpolationError", "NSLattice", "OrbitRecord", "ProjPoint", "QQ",
    "TangencyConfig", "bertini_apply", "bertini_block", "bertini_conic",
    "canonical_class", "certify", "check_interpolation", "coplanar",
    "cubic_pencil", "dynamical_degree", "ff_fixing_exponent", "fixed_space",
    "interpolation_system", "is_bertini_fixed", "is_prime", "orbit",
    "phi_apply", "phi_map", "phi_pullback", "point_height", "short_cubic",
    "t2_fixed_point_checks", "tangent_plane", "third_intersection",
    "validate_config",
]
