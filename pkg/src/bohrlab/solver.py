"""Critical radii by bisection and empirical sharp-constant probes.

The supremum over the whole function class is replaced by the supremum over
the Mobius extremal family (for radii) or over the coefficient-bound envelope
(for area constants); each sharpness proof shows these attain the respective
critical values.  Radius bisection tests the factored violation margin, which
crosses zero linearly at the critical radius, so the recovered radii are
accurate well beyond 1e-6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from . import extremal as ext

#: excess threshold separating "equality in the a -> 1 limit" from violation.
VIOLATION_DELTA = 1e-12

#: cap keeping the family parameter away from the constant-function limit.
A_CAP = 1.0 - 1e-8

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_max(
    fn: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> Tuple[float, float]:
    """Golden-section maximization on [lo, hi]; assumes unimodality there."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = fn(c), fn(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fn(d)
    x = (a + b) / 2.0
    return x, fn(x)


def _grid_refine_max(
    fn: Callable[[float], float], lo: float, hi: float, n_grid: int, tol: float = 1e-12
) -> Tuple[float, float]:
    """Coarse grid scan followed by golden-section refinement around the argmax."""
    step = (hi - lo) / (n_grid - 1)
    best_i, best_v = 0, -math.inf
    vals = []
    for i in range(n_grid):
        v = fn(lo + i * step)
        vals.append(v)
        if v > best_v:
            best_i, best_v = i, v
    blo = lo + max(best_i - 1, 0) * step
    bhi = lo + min(best_i + 1, n_grid - 1) * step
    x, v = golden_max(fn, blo, bhi, tol)
    if v >= best_v:
        return x, v
    return lo + best_i * step, best_v


# ---------------------------------------------------------------------------
# registry of closed-form radii and constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremRegistryEntry:
    variant: str
    radius: Callable[[float, float], float]  # (gamma, k) -> rho0
    constant: Optional[Callable[[float, float], float]] = None  # (gamma, k) -> K
    uses_k: bool = False
    note: str = ""


REGISTRY: Dict[str, TheoremRegistryEntry] = {
    "T1": TheoremRegistryEntry("T1", lambda g, k: 1.0 / 3.0),
    "T2": TheoremRegistryEntry("T2", lambda g, k: 1.0 / (2.0 * k + 3.0), uses_k=True),
    "T2cor": TheoremRegistryEntry("T2cor", lambda g, k: 1.0 / 5.0),
    "T3": TheoremRegistryEntry(
        "T3",
        lambda g, k: 1.0 / (2.0 * k + 3.0),
        constant=lambda g, k: ext.t3_constant(k),
        uses_k=True,
    ),
    "T4": TheoremRegistryEntry(
        "T4",
        lambda g, k: 1.0 / (2.0 * k + 3.0),
        constant=lambda g, k: ext.t4_constant_empirical(g, k),
        uses_k=True,
        note=(
            "area constant is the empirically confirmed (1-gamma)^2-rescaled "
            "proof value, not the stated one (see sharpest_K)"
        ),
    ),
    "B": TheoremRegistryEntry("B", lambda g, k: (1.0 + g) / (3.0 + g)),
    "F": TheoremRegistryEntry(
        "F", lambda g, k: (1.0 + g) / (3.0 + 2.0 * k + g), uses_k=True
    ),
    "CorA": TheoremRegistryEntry("CorA", lambda g, k: (1.0 + g) / (5.0 + g)),
}


def reference_radius(variant: str, gamma: float = 0.0, k: float = 0.0) -> float:
    return REGISTRY[variant].radius(gamma, k)


@dataclass(frozen=True)
class RadiusResult:
    variant: str
    gamma: float
    k: float
    rho_star: float
    bracket: Tuple[float, float]
    iterations: int
    reference: float
    abs_err: float

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "gamma": self.gamma,
            "k": self.k,
            "rho_star": self.rho_star,
            "bracket": list(self.bracket),
            "iterations": self.iterations,
            "reference": self.reference,
            "abs_err": self.abs_err,
        }


# ---------------------------------------------------------------------------
# suprema and radii
# ---------------------------------------------------------------------------


def sup_over_family(
    variant: str,
    rho: float,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
    n_grid: int = 129,
) -> float:
    """Supremum of the family left-hand side over a in [0, 1 - 1e-8]."""
    fn = lambda a: ext.closed_form_lhs(variant, a, rho, gamma, k, K)
    _, v = _grid_refine_max(fn, 0.0, A_CAP, n_grid)
    return v


def _max_violation_margin(
    variant: str,
    rho: float,
    gamma: float,
    k: float,
    K: Optional[float],
    n_grid: int = 129,
) -> float:
    fn = lambda a: ext.violation_margin(variant, a, rho, gamma, k, K)
    _, v = _grid_refine_max(fn, 0.0, 1.0, n_grid)
    return v


def critical_radius(
    variant: str,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
    tol: float = 1e-8,
    delta: float = VIOLATION_DELTA,
) -> RadiusResult:
    """Largest rho at which no family member exceeds 1, by bisection.

    The sign test uses the factored violation margin with threshold delta;
    the bracket [0.01, 0.99] must straddle the critical radius or a
    transcription error upstream is reported.
    """
    if tol < 1e-10:
        raise ValueError(f"tol must be >= 1e-10, got {tol!r}")
    lo, hi = 0.01, 0.99
    violated = lambda rho: _max_violation_margin(variant, rho, gamma, k, K) > delta
    if violated(lo) or not violated(hi):
        raise RuntimeError(
            f"no sign change for {variant} on [{lo}, {hi}]: "
            "transcription error upstream"
        )
    iterations = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if violated(mid):
            hi = mid
        else:
            lo = mid
        iterations += 1
    rho_star = (lo + hi) / 2.0
    reference = reference_radius(variant, gamma, k)
    return RadiusResult(
        variant, gamma, k, rho_star, (lo, hi), iterations, reference,
        abs(rho_star - reference),
    )


def violation_witness(
    variant: str,
    rho: float,
    gamma: float = 0.0,
    k: float = 0.0,
    K: Optional[float] = None,
    n_grid: int = 257,
) -> Tuple[float, float]:
    """A family parameter a with lhs > 1 at the given rho (must exceed rho0)."""
    fn = lambda a: ext.closed_form_lhs(variant, a, rho, gamma, k, K)
    a_star, lhs = _grid_refine_max(fn, 0.0, A_CAP, n_grid)
    if lhs <= 1.0 + VIOLATION_DELTA:
        raise RuntimeError(
            f"no violation witness for {variant} at rho={rho} "
            f"(max lhs {lhs} at a={a_star})"
        )
    return a_star, lhs


# ---------------------------------------------------------------------------
# empirical sharp constants
# ---------------------------------------------------------------------------


def _bracket_excess(variant: str, K: float, gamma: float, k: float) -> float:
    """Max over x in [0,1] of the constant-sharpness bracket function."""
    if variant == "T3":
        fn = lambda x: ext.phi_T3(x, k, K)
    elif variant == "T4":
        fn = lambda x: ext.F_T4(x, k, K, gamma)
    else:
        raise ValueError(f"sharpest_K only supports T3/T4, got {variant!r}")
    _, v = _grid_refine_max(fn, 0.0, 1.0, 129)
    return v


def sharpest_K(
    variant: str,
    gamma: float = 0.0,
    k: float = 0.0,
    tol: float = 1e-6,
    delta: float = 1e-14,
) -> float:
    """Empirical supremal admissible area multiplier, by bisection on K.

    A multiplier is inadmissible when the proof's bracket function goes
    positive somewhere on [0, 1], i.e. the coefficient-bound envelope of the
    left-hand side exceeds 1 at the critical radius.
    """
    lo, hi = 0.0, 1.0
    while _bracket_excess(variant, hi, gamma, k) <= delta:
        hi *= 2.0
        if hi > 1e6:
            raise RuntimeError("no inadmissible K found below 1e6")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if _bracket_excess(variant, mid, gamma, k) > delta:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2.0


def t4_constant_report(gamma: float, k: float, tol: float = 1e-6) -> dict:
    """Resolve the harmonic-area constant discrepancy for one (gamma, k) cell.

    Compares the empirical supremal K against the stated constant and the
    proof-derived one, and reports which the numerics support (within 1e-3);
    at gamma > 0 the match is to the (1-gamma)^2-rescaled proof value.
    """
    empirical = sharpest_K("T4", gamma, k, tol)
    stated = ext.t4_constant_statement(k) if k < 1.0 else math.inf
    proof = ext.t4_constant_proof(k)
    rescaled = ext.t4_constant_empirical(gamma, k)
    atol = 1e-3
    match_stated = abs(empirical - stated) <= atol
    match_proof = abs(empirical - proof) <= atol
    if match_stated and match_proof:
        supported = "both"
    elif match_stated:
        supported = "statement"
    elif match_proof:
        supported = "proof"
    elif abs(empirical - rescaled) <= atol:
        supported = "proof-gamma-rescaled"
    else:
        supported = "neither"
    return {
        "gamma": gamma,
        "k": k,
        "empirical_K": empirical,
        "candidate_statement": stated,
        "candidate_proof": proof,
        "candidate_proof_gamma_rescaled": rescaled,
        "supported": supported,
    }
