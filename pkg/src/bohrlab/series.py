"""Truncated coefficient series with certified geometric tail bounds.

A CoeffSeries stores the unit-disk-normalized coefficients d_n of an analytic
function bounded by 1 on the shifted disk: if the function expands as
sum a_n (z + gamma/(1-gamma))^n around the disk center, then d_n = a_n/(1-gamma)^n
are the Taylor coefficients of the transported function on the unit disk.
Storing d_n makes every functional gamma-free internally; gamma is kept for I/O
and for the 1/(1-gamma)^2 prefactor of the harmonic area.

Under the Schwarz-Pick tail mode the coefficients must satisfy
|d_n| <= 1 - |d_0|^2, which certifies a geometric bound on every truncated tail.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .geometry import _check_gamma

#: hard cap on the stored truncation order.
N_TRUNC_CAP = 4096

#: slack allowed when validating coefficient bounds (extremal families attain
#: the Schwarz-Pick bound with equality).
COEFF_TOL = 1e-12


class TailMode(enum.Enum):
    """How the truncation tail of a series is certified."""

    SCHWARZ_PICK = "schwarz-pick"
    ZERO = "zero"


class ValueWithTail(NamedTuple):
    """A partial-sum value together with a bound on the neglected tail.

    certified is False for TailMode.ZERO series (finite user polynomials): the
    reported tail 0 is then a convention, not a certificate.
    """

    value: float
    tail: float
    certified: bool


@dataclass(frozen=True)
class CoeffSeries:
    """Truncated coefficient sequence d_0..d_N of a transported analytic function."""

    gamma: float
    coeffs: Tuple[complex, ...]
    mode: TailMode = TailMode.SCHWARZ_PICK

    def __post_init__(self) -> None:
        gamma = _check_gamma(self.gamma)
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("series needs at least the constant coefficient")
        if len(coeffs) - 1 > N_TRUNC_CAP:
            raise ValueError(f"truncation order {len(coeffs)-1} exceeds cap {N_TRUNC_CAP}")
        d0 = abs(coeffs[0])
        if d0 > 1.0 + COEFF_TOL:
            raise ValueError(f"|d_0| = {d0} exceeds 1")
        if self.mode is TailMode.SCHWARZ_PICK:
            bound = 1.0 - d0 * d0
            for n, c in enumerate(coeffs[1:], start=1):
                if abs(c) > bound + COEFF_TOL:
                    raise ValueError(
                        f"Schwarz-Pick bound violated at index {n}: "
                        f"|d_{n}| = {abs(c)} > 1 - |d_0|^2 = {bound}; the input "
                        f"cannot come from a function bounded by 1 on the shifted disk"
                    )
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_trunc(self) -> int:
        return len(self.coeffs) - 1

    @property
    def sp_bound(self) -> float:
        """1 - |d_0|^2, the Schwarz-Pick bound on all higher coefficients."""
        d0 = abs(self.coeffs[0])
        return 1.0 - d0 * d0

    def shifted_coeffs(self) -> List[complex]:
        """The disk-centered coefficients a_n = d_n (1-gamma)^n."""
        s = 1.0 - self.gamma
        return [c * s**n for n, c in enumerate(self.coeffs)]

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "mode": self.mode.value,
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
        }

    @staticmethod
    def from_dict(data: dict) -> "CoeffSeries":
        coeffs = tuple(complex(re, im) for re, im in data["coeffs"])
        return CoeffSeries(data["gamma"], coeffs, TailMode(data["mode"]))


def from_unit_coeffs(
    gamma: float, d: Sequence[complex], mode: TailMode = TailMode.SCHWARZ_PICK
) -> CoeffSeries:
    """Build a series directly from unit-disk-normalized coefficients d_n."""
    return CoeffSeries(gamma, tuple(complex(c) for c in d), mode)


def from_shifted_coeffs(
    gamma: float, a: Sequence[complex], mode: TailMode = TailMode.SCHWARZ_PICK
) -> CoeffSeries:
    """Build a series from disk-centered coefficients a_n; stores d_n = a_n/(1-gamma)^n.

    Under the Schwarz-Pick mode the shifted bound |a_n| <= (1-gamma)^n (1-|a_0|^2)
    is enforced (the offending index is reported on failure).
    """
    gamma = _check_gamma(gamma)
    s = 1.0 - gamma
    d = tuple(complex(c) / s**n for n, c in enumerate(a))
    return CoeffSeries(gamma, d, mode)


def constant_series(gamma: float, c: complex) -> CoeffSeries:
    return CoeffSeries(gamma, (complex(c),), TailMode.SCHWARZ_PICK)


def extremal_series(gamma: float, a: float, rho_ref: float = 1.0 - 1e-3) -> CoeffSeries:
    """The Mobius extremal series: d_0 = a, d_n = -a^(n-1)(1-a^2) for n >= 1.

    It is the transported automorphism w -> (a-w)/(1-aw) and attains the
    Schwarz-Pick bound with equality at n = 1.  The truncation order is chosen
    so the neglected majorant tail at rho_ref stays below 1e-12, capped at
    N_TRUNC_CAP.
    """
    a = float(a)
    if not (0.0 <= a < 1.0):
        raise ValueError(f"extremal parameter must lie in [0, 1), got {a!r}")
    one_minus_a2 = 1.0 - a * a
    n = 1
    if a > 0.0:
        # family tail: sum_{m > n} (1-a^2) a^(m-1) rho^m = (1-a^2)(a rho)^n rho/(1-a rho)
        x = a * rho_ref
        tail = one_minus_a2 * x * rho_ref / (1.0 - x)
        while tail > 1e-12 and n < N_TRUNC_CAP:
            n += 1
            tail *= x
    coeffs = [complex(a)] + [complex(-(a ** (m - 1)) * one_minus_a2) for m in range(1, n + 1)]
    return CoeffSeries(gamma, tuple(coeffs), TailMode.SCHWARZ_PICK)


# ---------------------------------------------------------------------------
# harmonic pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HarmonicPair:
    """The analytic parts (h, g) of a harmonic mapping h + conj(g), with |g'| <= k|h'|."""

    h: CoeffSeries
    g: CoeffSeries
    k: float

    def __post_init__(self) -> None:
        if self.h.gamma != self.g.gamma:
            raise ValueError("h and g must share the same gamma")
        if abs(self.g.coeffs[0]) != 0.0:
            raise ValueError("g must have zero constant term")
        if not (0.0 <= self.k <= 1.0):
            raise ValueError(f"dilatation bound k must lie in [0, 1], got {self.k!r}")

    def to_dict(self) -> dict:
        return {"h": self.h.to_dict(), "g": self.g.to_dict(), "k": self.k}

    @staticmethod
    def from_dict(data: dict) -> "HarmonicPair":
        return HarmonicPair(
            CoeffSeries.from_dict(data["h"]), CoeffSeries.from_dict(data["g"]), data["k"]
        )


def extremal_pair(gamma: float, a: float, k: float) -> HarmonicPair:
    """The sharpness pair: h the Mobius extremal and g = -k (h - h(center))."""
    h = extremal_series(gamma, a)
    g_coeffs = (0j,) + tuple(-k * c for c in h.coeffs[1:])
    g = CoeffSeries(gamma, g_coeffs, TailMode.SCHWARZ_PICK)
    return HarmonicPair(h, g, k)


def make_pair(
    h: CoeffSeries,
    g: CoeffSeries,
    k: float,
    validate: bool = True,
    samples: int = 1000,
    tol: float = 1e-9,
    seed: int = 0,
) -> HarmonicPair:
    """Build a pair from user series, checking |g'| <= k|h'| by sampling.

    The dilatation hypothesis is validated on random points of radius <= 0.999
    in the transported unit disk; exact symbolic validation is out of reach for
    truncated input.
    """
    pair = HarmonicPair(h, g, k)
    if validate:
        rng = random.Random(seed)
        hd = _derivative(h.coeffs)
        gd = _derivative(g.coeffs)
        for _ in range(samples):
            r = 0.999 * math.sqrt(rng.random())
            theta = 2.0 * math.pi * rng.random()
            w = r * complex(math.cos(theta), math.sin(theta))
            hv = _horner(hd, w)
            gv = _horner(gd, w)
            if abs(gv) > k * abs(hv) + tol:
                raise ValueError(
                    f"dilatation bound violated at w={w}: |g'|={abs(gv)} > k|h'|={k*abs(hv)}"
                )
    return pair


def _derivative(coeffs: Sequence[complex]) -> List[complex]:
    return [n * c for n, c in enumerate(coeffs)][1:] or [0j]


def _horner(coeffs: Sequence[complex], w: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * w + c
    return acc


# ---------------------------------------------------------------------------
# functionals of a single series
# ---------------------------------------------------------------------------


def _check_rho(rho: float, allow_zero: bool = True) -> float:
    rho = float(rho)
    lo = 0.0 if allow_zero else 0.0
    if not (lo <= rho < 1.0):
        raise ValueError(f"rho must lie in [0, 1), got {rho!r}")
    return rho


def majorant(s: CoeffSeries, rho: float) -> ValueWithTail:
    """sum |d_n| rho^n with a certified geometric tail bound."""
    rho = _check_rho(rho)
    value = 0.0
    p = 1.0
    for c in s.coeffs:
        value += abs(c) * p
        p *= rho
    if s.mode is TailMode.SCHWARZ_PICK:
        tail = s.sp_bound * p / (1.0 - rho)  # p == rho^(N+1) here
        return ValueWithTail(value, tail, True)
    return ValueWithTail(value, 0.0, False)


def quadratic_sum(s: CoeffSeries, rho: float) -> ValueWithTail:
    """sum_{n>=1} |d_n|^2 rho^(2n) with a certified tail bound."""
    rho = _check_rho(rho)
    x = rho * rho
    value = 0.0
    p = x
    for c in s.coeffs[1:]:
        value += abs(c) ** 2 * p
        p *= x
    if s.mode is TailMode.SCHWARZ_PICK:
        tail = s.sp_bound**2 * p / (1.0 - x)
        return ValueWithTail(value, tail, True)
    return ValueWithTail(value, 0.0, False)


def _area_tail(bound: float, n_trunc: int, x: float) -> float:
    # sum_{n > N} n x^n = x^(N+1) ((N+1) - N x) / (1-x)^2
    n = n_trunc
    return bound * x ** (n + 1) * ((n + 1) - n * x) / (1.0 - x) ** 2


def area_analytic(s: CoeffSeries, rho: float) -> ValueWithTail:
    """Normalized image area sum_{n>=1} n |d_n|^2 rho^(2n) of the transported sub-disk."""
    rho = _check_rho(rho)
    x = rho * rho
    value = 0.0
    p = x
    for n, c in enumerate(s.coeffs[1:], start=1):
        value += n * abs(c) ** 2 * p
        p *= x
    if s.mode is TailMode.SCHWARZ_PICK:
        tail = _area_tail(s.sp_bound**2, s.n_trunc, x)
        return ValueWithTail(value, tail, True)
    return ValueWithTail(value, 0.0, False)


def area_harmonic(p: HarmonicPair, rho: float) -> ValueWithTail:
    """Normalized area of the harmonic image, with the 1/(1-gamma)^2 prefactor.

    (1/(1-gamma)^2) sum n (|d^h_n|^2 - |d^g_n|^2) rho^(2n).  A negative value
    flags a non-sense-preserving pair and raises.
    """
    rho = _check_rho(rho)
    x = rho * rho
    value = 0.0
    px = x
    n_max = max(p.h.n_trunc, p.g.n_trunc)
    hc, gc = p.h.coeffs, p.g.coeffs
    for n in range(1, n_max + 1):
        ah = abs(hc[n]) ** 2 if n < len(hc) else 0.0
        bg = abs(gc[n]) ** 2 if n < len(gc) else 0.0
        value += n * (ah - bg) * px
        px *= x
    scale = (1.0 - p.h.gamma) ** 2
    certified = p.h.mode is TailMode.SCHWARZ_PICK and p.g.mode is TailMode.SCHWARZ_PICK
    tail = 0.0
    if certified:
        tail = (
            _area_tail(p.h.sp_bound**2, p.h.n_trunc, x)
            + _area_tail(p.g.sp_bound**2, p.g.n_trunc, x)
        ) / scale
    value /= scale
    if value < -(tail + 1e-12):
        raise ValueError(
            f"negative harmonic area {value}: the pair is not sense-preserving"
        )
    return ValueWithTail(value, tail, certified)


def area_quadrature(s: CoeffSeries, rho: float, grid: int = 512) -> float:
    """Midpoint polar-rule estimate of (1/pi) * area of the transported image.

    Integrates |phi'(w)|^2 over |w| < rho on a product grid (grid angular
    points, grid//2 radial points).  Independent oracle for area_analytic:
    it never uses the coefficient-sum formula.
    """
    rho = _check_rho(rho)
    if grid < 64:
        raise ValueError(f"grid must be >= 64, got {grid}")
    n_theta = grid
    n_r = grid // 2
    r = (np.arange(n_r) + 0.5) * (rho / n_r)
    theta = (np.arange(n_theta) + 0.5) * (2.0 * np.pi / n_theta)
    w = r[:, None] * np.exp(1j * theta)[None, :]
    deriv = np.array(_derivative(s.coeffs), dtype=complex)
    vals = np.polyval(deriv[::-1], w)
    integrand = np.abs(vals) ** 2 * r[:, None]
    return float(integrand.sum() * (rho / n_r) * (2.0 * np.pi / n_theta) / np.pi)


@dataclass(frozen=True)
class LemmaReport:
    """Both quadratic-sum inequalities of the coefficient lemma, with a pass flag."""

    weighted_lhs: float
    weighted_rhs: float
    plain_lhs: float
    plain_rhs: float
    passed: bool


def check_lemma_quadratic(p: HarmonicPair, rho: float, tol: float = 1e-12) -> LemmaReport:
    """Check sum n|d^g_n|^2 rho^(2n) <= k^2 sum n|d^h_n|^2 rho^(2n) and the
    rho^n-weighted analogue, reporting both sides."""
    rho = _check_rho(rho)
    k2 = p.k * p.k
    w_l = w_r = p_l = p_r = 0.0
    n_max = max(p.h.n_trunc, p.g.n_trunc)
    hc, gc = p.h.coeffs, p.g.coeffs
    x = rho * rho
    px, pr = x, rho
    for n in range(1, n_max + 1):
        ah = abs(hc[n]) ** 2 if n < len(hc) else 0.0
        bg = abs(gc[n]) ** 2 if n < len(gc) else 0.0
        w_l += n * bg * px
        w_r += n * ah * px
        p_l += bg * pr
        p_r += ah * pr
        px *= x
        pr *= rho
    passed = w_l <= k2 * w_r + tol and p_l <= k2 * p_r + tol
    return LemmaReport(w_l, k2 * w_r, p_l, k2 * p_r, passed)


# ---------------------------------------------------------------------------
# small series utilities used to manufacture admissible test inputs
# ---------------------------------------------------------------------------


def multiply_series(c1: Sequence[complex], c2: Sequence[complex], n_trunc: int) -> List[complex]:
    """Cauchy product of two coefficient lists, truncated at order n_trunc."""
    out = [0j] * (n_trunc + 1)
    for i, a in enumerate(c1[: n_trunc + 1]):
        if a == 0:
            continue
        for j, b in enumerate(c2[: n_trunc + 1 - i]):
            out[i + j] += a * b
    return out


def blaschke_factor_coeffs(c: float, theta: float, n_trunc: int) -> List[complex]:
    """Unit-disk Taylor coefficients of e^(i theta) (c - w)/(1 - c w), c in [0, 1)."""
    if not (0.0 <= c < 1.0):
        raise ValueError(f"Blaschke parameter must lie in [0, 1), got {c!r}")
    rot = complex(math.cos(theta), math.sin(theta))
    coeffs = [rot * c]
    one_minus_c2 = 1.0 - c * c
    for n in range(1, n_trunc + 1):
        coeffs.append(-rot * (c ** (n - 1)) * one_minus_c2)
    return coeffs
