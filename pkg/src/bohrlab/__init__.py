"""Numerical laboratory for sharp Bohr-type inequalities on shifted disks."""

from .geometry import AffineTransport, ShiftedDisk, circle_points, make_disk, mobius_auto
from .series import (
    CoeffSeries,
    HarmonicPair,
    TailMode,
    area_analytic,
    area_harmonic,
    area_quadrature,
    check_lemma_quadratic,
    extremal_pair,
    extremal_series,
    from_shifted_coeffs,
    from_unit_coeffs,
    majorant,
    quadratic_sum,
)
from .functionals import (
    EvalResult,
    FunctionalSpec,
    eval_background,
    eval_f_area_T4,
    eval_h_area_T3,
    eval_harmonic_T2,
    eval_refined_T1,
)
from .extremal import class_bound_lhs, closed_form_lhs, monotonicity_report
from .solver import (
    RadiusResult,
    REGISTRY,
    critical_radius,
    sharpest_K,
    sup_over_family,
    t4_constant_report,
    violation_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
