"""Closed forms from the sharpness arguments: deficit functions and family sums.

Each inequality variant comes with two closed-form companions:

* ``closed_form_lhs`` -- the left-hand side evaluated on the Mobius extremal
  family, as a fast oracle against term-by-term series summation;
* ``class_bound_lhs`` -- the coefficient-bound upper envelope of the left-hand
  side over the whole class, whose supremum crossing 1 pins the sharp constants.

The deficit functions (xi, F1, F2, W, F3, F4 and the bracket functions Phi/F)
factor the family excess as lhs - 1 = (sign) * (1-a) * deficit / (positive),
so critical radii can be located through a sign test that stays linear in the
distance to the critical radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

VARIANTS_NEW = ("T1", "T2", "T2cor", "T3", "T4")
VARIANTS_BACKGROUND = ("B", "F", "CorA")

A_CAP = 1.0 - 1e-8


def _guard(denoms: Tuple[float, ...], context: str) -> None:
    for d in denoms:
        if d <= 0.0:
            raise ZeroDivisionError(f"{context}: nonpositive denominator {d}")


# ---------------------------------------------------------------------------
# sharp constants
# ---------------------------------------------------------------------------


def t3_constant(k: float) -> float:
    """Sharp area multiplier of the analytic-area variant: 2(k+2)^2(k+1)^2/(2k+3)^2."""
    return 2.0 * (k + 2.0) ** 2 * (k + 1.0) ** 2 / (2.0 * k + 3.0) ** 2


def t3_constant_proof_form(k: float) -> float:
    """The same constant in the proof's arrangement (2k+4)^2(2k+2)^2/(8(2k+3)^2)."""
    return (2.0 * k + 4.0) ** 2 * (2.0 * k + 2.0) ** 2 / (8.0 * (2.0 * k + 3.0) ** 2)


def t4_constant_statement(k: float) -> float:
    """Harmonic-area multiplier as stated: 2(k+2)^2(k+1)/((1-k)(2k+3)^2)."""
    if k >= 1.0:
        raise ValueError("the stated harmonic-area constant diverges at k=1")
    return 2.0 * (k + 2.0) ** 2 * (k + 1.0) / ((1.0 - k) * (2.0 * k + 3.0) ** 2)


def t4_constant_proof(k: float) -> float:
    """Harmonic-area multiplier the proof's bound actually supports at gamma=0:
    2(k+2)^2(k+1)/(2k+3)^2."""
    return 2.0 * (k + 2.0) ** 2 * (k + 1.0) / (2.0 * k + 3.0) ** 2


def t4_constant_empirical(gamma: float, k: float) -> float:
    """(1-gamma)^2 times the proof-supported constant: what the numerics confirm."""
    return (1.0 - gamma) ** 2 * t4_constant_proof(k)


# ---------------------------------------------------------------------------
# proof deficit functions (refined analytic variant)
# ---------------------------------------------------------------------------


def coeff_A(rho: float) -> float:
    _guard((1.0 - rho,), "coeff_A")
    return rho / (1.0 - rho)


def coeff_B(rho: float) -> float:
    _guard((1.0 - rho * rho,), "coeff_B")
    return rho * rho / (1.0 - rho * rho)


def coeff_C(rho: float) -> float:
    _guard(((1.0 - rho) * (1.0 - rho * rho),), "coeff_C")
    return rho**3 / ((1.0 - rho) * (1.0 - rho * rho))


def xi_T1(a: float, rho: float) -> float:
    """Class-bound deficit of the refined analytic variant; xi <= 0 iff the bound holds."""
    A, B, C = coeff_A(rho), coeff_B(rho), coeff_C(rho)
    one_minus_a2 = 1.0 - a * a
    return A * one_minus_a2 + B * one_minus_a2 * (1.0 - a) + C * one_minus_a2**2 - (1.0 - a)


def xi_T1_d1(a: float, rho: float) -> float:
    A, B, C = coeff_A(rho), coeff_B(rho), coeff_C(rho)
    return 1.0 - 2.0 * a * A + B * (3.0 * a * a - 2.0 * a - 1.0) - 4.0 * C * (a - a**3)


def xi_T1_d2(a: float, rho: float) -> float:
    A, B, C = coeff_A(rho), coeff_B(rho), coeff_C(rho)
    return -2.0 * A + B * (6.0 * a - 2.0) - 4.0 * C * (1.0 - 3.0 * a * a)


def xi_T1_d3(a: float, rho: float) -> float:
    B, C = coeff_B(rho), coeff_C(rho)
    return 6.0 * B + 24.0 * a * C


def F1(a: float, rho: float) -> float:
    """First sharpness deficit: family lhs = 1 - (1-a) F1 / (1-a rho)."""
    _guard((1.0 - rho, 1.0 + a * rho), "F1")
    refine = 1.0 / (1.0 + a) + rho / (1.0 - rho)
    return (
        1.0
        - a * rho
        - (1.0 + a) * rho
        - refine * (1.0 - a * a) * (1.0 + a) * rho * rho / (1.0 + a * rho)
    )


# ---------------------------------------------------------------------------
# harmonic variant deficits
# ---------------------------------------------------------------------------


def xi_T2(a: float, rho: float, k: float) -> float:
    """Class-bound deficit of the harmonic majorant variant."""
    _guard((1.0 - rho,), "xi_T2")
    return (1.0 + k) * (1.0 - a * a) * rho / (1.0 - rho) - (1.0 - a)


def W(a: float, rho: float, k: float) -> float:
    """Violation bracket of the harmonic variant: family lhs > 1 iff W < 0 near a=1."""
    return (1.0 - a * rho) - (1.0 + a) * (1.0 + k) * rho


def W_at_one(rho: float, k: float) -> float:
    """The a=1 limit in its factored form 1 - (2k+3) rho."""
    return 1.0 - (2.0 * k + 3.0) * rho


def F2(a: float, rho: float, k: float) -> float:
    """(1-a) W(a, rho): family lhs = 1 - F2/(1 - a rho)."""
    return (1.0 - a) * W(a, rho, k)


def F3(a: float, rho: float, k: float, K: Optional[float] = None) -> float:
    """Analytic-area sharpness deficit: family lhs = 1 + (1-a) F3."""
    if K is None:
        K = t3_constant(k)
    _guard((1.0 - a * rho,), "F3")
    q = 1.0 - a * a * rho * rho
    _guard((q,), "F3")
    return (
        (1.0 + a) * (1.0 + k) * rho / (1.0 - a * rho)
        + K * (1.0 - a) * (1.0 + a) ** 2 * rho * rho / (q * q)
        - 1.0
    )


def F4(
    rho: float, a: float, k: float, gamma: float = 0.0, K: Optional[float] = None
) -> float:
    """Harmonic-area sharpness deficit: family lhs = 1 + (1-a) F4.

    K is the raw area multiplier of the functional; the family's harmonic area
    carries its own (1-k^2)/(1-gamma)^2 factor, folded in here.
    """
    if K is None:
        K = t3_constant_proof_form(k)  # the multiplier used in the proof's display
    _guard((1.0 - a * rho,), "F4")
    q = 1.0 - a * a * rho * rho
    _guard((q,), "F4")
    scale = (1.0 - k * k) / (1.0 - gamma) ** 2
    return (
        (1.0 + a) * (1.0 + k) * rho / (1.0 - a * rho)
        + K * scale * (1.0 - a) * (1.0 + a) ** 2 * rho * rho / (q * q)
        - 1.0
    )


# ---------------------------------------------------------------------------
# bracket functions of the area-constant arguments
# ---------------------------------------------------------------------------


def phi_T3(x: float, k: float, K: float) -> float:
    """Constant-sharpness bracket of the analytic-area variant.

    The class-bound deficit at the critical radius factors as
    ((1-x^2)/2) * phi_T3(x); the largest K keeping phi_T3 <= 0 on [0,1] is the
    sharp constant.
    """
    c = 2.0 * K * (2.0 * k + 3.0) ** 2 / ((2.0 * k + 4.0) ** 2 * (2.0 * k + 2.0) ** 2)
    return 1.0 + c * (1.0 - x * x) - 2.0 / (1.0 + x)


def F_T4(x: float, k: float, K: float, gamma: float) -> float:
    """Constant-sharpness bracket of the harmonic-area variant (with its
    1/(1-gamma)^2 factor as displayed)."""
    c = (
        2.0
        * K
        * (1.0 + k)
        * (2.0 * k + 3.0) ** 2
        / ((1.0 - gamma) ** 2 * (2.0 * k + 4.0) ** 2 * (2.0 * k + 2.0) ** 2)
    )
    return 1.0 + c * (1.0 - x * x) - 2.0 / (1.0 + x)


def phi_T4_rho(rho: float, a: float, k: float, gamma: float, K: float) -> float:
    """Class-bound deficit of the harmonic-area variant as a function of rho."""
    _guard((1.0 - rho, 1.0 - rho * rho), "phi_T4_rho")
    one_minus_a2 = 1.0 - a * a
    return (
        (1.0 + k) * one_minus_a2 * rho / (1.0 - rho)
        + K * (1.0 + k) * one_minus_a2**2 / (1.0 - gamma) ** 2 * rho * rho / (1.0 - rho * rho) ** 2
        - (1.0 - a)
    )


# ---------------------------------------------------------------------------
# family closed forms and class bounds, per variant
# ---------------------------------------------------------------------------


def _check_a(a: float) -> float:
    a = float(a)
    if not (0.0 <= a <= 1.0):
        raise ValueError(f"family parameter must lie in [0, 1], got {a!r}")
    return min(a, 1.0)


def _background_terms(a: float, rho: float, gamma: float) -> Tuple[float, float]:
    """(constant term, geometric-sum factor) of the origin-centered extremal family."""
    denom1 = 1.0 - a * gamma
    denom2 = denom1 - a * (1.0 - gamma) * rho
    _guard((denom1, denom2), "background family")
    beta = abs((a - gamma) / denom1)
    tail = (1.0 - a * a) * (1.0 - gamma) * rho / (denom1 * denom2)
    return beta, tail


def closed_form_lhs(
    variant: str,
    a: float,
    rho: float,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
) -> float:
    """Left-hand side of a variant on its extremal family member, in closed form.

    For the shifted-expansion variants (T1..T4) the family is the transported
    Mobius automorphism with parameter a; for the background variants (B, F,
    CorA) it is the same automorphism expanded around the origin.
    """
    a = _check_a(a)
    if variant == "T2cor":
        variant, k = "T2", 1.0
    if variant == "CorA":
        variant, k = "F", 1.0
    if variant in ("T1", "T2", "T3", "T4"):
        if a >= 1.0:
            return 1.0  # constant unimodular limit
        base = a + (1.0 - a * a) * rho / (1.0 - a * rho)
        if variant == "T1":
            refine = 1.0 / (1.0 + a) + rho / (1.0 - rho)
            quad = (1.0 - a * a) ** 2 * rho * rho / (1.0 - a * a * rho * rho)
            return base + refine * quad
        coupled = a + (1.0 + k) * (1.0 - a * a) * rho / (1.0 - a * rho)
        if variant == "T2":
            return coupled
        area = (1.0 - a * a) ** 2 * rho * rho / (1.0 - a * a * rho * rho) ** 2
        if variant == "T3":
            if K is None:
                K = t3_constant(k)
            return coupled + K * area
        # T4: the family's harmonic area carries (1-k^2)/(1-gamma)^2
        if K is None:
            K = t4_constant_empirical(gamma, k)
        return coupled + K * (1.0 - k * k) / (1.0 - gamma) ** 2 * area
    if variant in ("B", "F"):
        kk = 0.0 if variant == "B" else k
        if a >= 1.0:
            return 1.0
        beta, tail = _background_terms(a, rho, gamma)
        return beta + (1.0 + kk) * tail
    raise ValueError(f"no extremal family closed form for variant {variant!r}")


def class_bound_lhs(
    variant: str,
    a: float,
    rho: float,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
) -> float:
    """Coefficient-bound upper envelope of the left-hand side over the class,
    as a function of a = |d_0|."""
    a = _check_a(a)
    if variant == "T2cor":
        variant, k = "T2", 1.0
    if variant == "CorA":
        variant, k = "F", 1.0
    if variant == "T1":
        return 1.0 + xi_T1(a, rho)
    if variant == "T2":
        return 1.0 + xi_T2(a, rho, k)
    if variant == "T3":
        if K is None:
            K = t3_constant(k)
        _guard((1.0 - rho, 1.0 - rho * rho), "class bound T3")
        one_minus_a2 = 1.0 - a * a
        return (
            a
            + (1.0 + k) * one_minus_a2 * rho / (1.0 - rho)
            + K * one_minus_a2**2 * rho * rho / (1.0 - rho * rho) ** 2
        )
    if variant == "T4":
        if K is None:
            K = t4_constant_empirical(gamma, k)
        return 1.0 + phi_T4_rho(rho, a, k, gamma, K)
    if variant in ("B", "F"):
        kk = 0.0 if variant == "B" else k
        # |alpha_n| <= (1-|alpha_0|^2)/(1+gamma) for the origin-centered class
        _guard((1.0 - rho,), "class bound background")
        return a + (1.0 + kk) * (1.0 - a * a) / (1.0 + gamma) * rho / (1.0 - rho)
    raise ValueError(f"no class bound for variant {variant!r}")


def violation_margin(
    variant: str,
    a: float,
    rho: float,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
) -> float:
    """Factored family excess: positive somewhere on a in [0,1] iff some family
    member violates the inequality at rho.

    The factor (1-a) is divided out, so the margin stays linear in rho - rho0
    at a = 1; this is what makes radius bisection accurate to 1e-6 and beyond.
    """
    a = _check_a(a)
    if variant == "T2cor":
        variant, k = "T2", 1.0
    if variant == "CorA":
        variant, k = "F", 1.0
    if variant == "T1":
        return -F1(a, rho)
    if variant == "T2":
        return -W(a, rho, k)
    if variant == "T3":
        return F3(a, rho, k, K)
    if variant == "T4":
        if K is None:
            # the empirically confirmed constant keeps the family radius at
            # 1/(2k+3) for every gamma; the stated constant does not
            K = t4_constant_empirical(gamma, k)
        # F4 folds in the family area factor (1-k^2)/(1-gamma)^2 for the raw
        # multiplier K
        return F4(rho, a, k, gamma, K)
    if variant in ("B", "F"):
        kk = 0.0 if variant == "B" else k
        denom = 1.0 - a * gamma - a * (1.0 - gamma) * rho
        _guard((denom,), "violation margin background")
        return (1.0 + kk) * (1.0 + a) * (1.0 - gamma) * rho / denom - (1.0 + gamma)
    raise ValueError(f"no violation margin for variant {variant!r}")


# ---------------------------------------------------------------------------
# grid monotonicity / sign reports
# ---------------------------------------------------------------------------

PROOF_FUNCTIONS: Dict[str, Callable[..., float]] = {
    "xi_T1": xi_T1,
    "xi_T1_d1": xi_T1_d1,
    "xi_T1_d2": xi_T1_d2,
    "xi_T1_d3": xi_T1_d3,
    "F1": F1,
    "F2": F2,
    "W": W,
    "F3": F3,
    "xi_T2": xi_T2,
    "F4": F4,
    "phi_T3": phi_T3,
    "F_T4": F_T4,
}


@dataclass(frozen=True)
class MonotonicityReport:
    name: str
    axis: str
    direction: str
    grid: Tuple[int, ...]
    passed: bool
    worst_point: Tuple[float, ...]
    worst_value: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "axis": self.axis,
            "direction": self.direction,
            "grid": list(self.grid),
            "pass": self.passed,
            "worst_point": list(self.worst_point),
            "worst_value": self.worst_value,
        }


def _linspace(lo: float, hi: float, n: int):
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def monotonicity_report(
    name: str,
    axis: str,
    direction: str,
    axis_range: Tuple[float, float],
    other: Dict[str, Tuple[float, float]] | None = None,
    fixed: Dict[str, float] | None = None,
    n_points: int = 101,
    margin: float = 1e-12,
) -> MonotonicityReport:
    """Finite-difference sign check of a proof function along one axis.

    direction is 'increasing' or 'decreasing'; the check passes iff every
    consecutive difference has the claimed sign with at least ``margin``.
    ``other`` adds cross-product grid axes; ``fixed`` pins remaining parameters.
    """
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be increasing/decreasing, got {direction!r}")
    fn = PROOF_FUNCTIONS[name]
    fixed = dict(fixed or {})
    other = dict(other or {})
    axis_vals = _linspace(axis_range[0], axis_range[1], n_points)
    cross = [{}]
    for pname, rng in other.items():
        vals = _linspace(rng[0], rng[1], n_points)
        cross = [dict(c, **{pname: v}) for c in cross for v in vals]
    sign = 1.0 if direction == "increasing" else -1.0
    passed = True
    worst_value = math.inf
    worst_point: Tuple[float, ...] = ()
    for params in cross:
        kwargs = dict(fixed, **params)
        prev = fn(**{axis: axis_vals[0]}, **kwargs)
        for v in axis_vals[1:]:
            cur = fn(**{axis: v}, **kwargs)
            diff = sign * (cur - prev)
            if diff < worst_value:
                worst_value = diff
                worst_point = (v,) + tuple(params.values())
            if diff < margin:
                passed = False
            prev = cur
    grid_shape = (n_points,) * (1 + len(other))
    return MonotonicityReport(name, axis, direction, grid_shape, passed, worst_point, worst_value)


def central_difference(fn: Callable[[float], float], x: float, h: float = 1e-5) -> float:
    return (fn(x + h) - fn(x - h)) / (2.0 * h)
