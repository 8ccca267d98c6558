"""Exact constructions of hyperelliptic curves y^2 = a x^{2n} + b x^n + a with
eight rational points in geometric progression."""

from .conic import ConicModel, ConicPoint, conic_param, conic_param_inverse, reflect_point, solve_ab
from .conformance import ConformanceReport, audit
from .elliptic import (ECPoint, INFINITY, QuarticBridge, WeierstrassCurve, bridge_pull_multiple,
                       ec_add, ec_mul, is_nontorsion, quartic_to_weierstrass)
from .exact import (BinaryForm, Rational, UniPoly, fmt_rational, form_compose_quadratic, form_eval,
                    is_square, parse_rational, rat_normalize)
from .family import (FamilyRecord, GPSequence, TrinomialCurve, closed_form_family, gp8_family,
                     jacobian_bridge, smoothness_check)
from .quartic import QuarticModel, ninth_condition, quartic_invariants, seventh_condition
from .search import (GeneralCurve, HeightBound, gp_search, gp_verify, length10_search,
                     reduction_curve)

__version__ = "0.1.0"
