"""Shared helpers: randomized admissible series and harmonic pairs.

Admissible inputs are manufactured from genuine bounded functions (rotated
Mobius factors and their products), so coefficient bounds hold by theorem and
not by construction fiat.
"""

from __future__ import annotations

import math
import random

import numpy as np

from bohrlab import series as ser


def random_blaschke_series(rng: random.Random, gamma: float, n_trunc: int = 200,
                           degree: int = 2) -> ser.CoeffSeries:
    """Transported coefficients of a random Blaschke product of small degree."""
    coeffs = np.zeros(n_trunc + 1, dtype=complex)
    coeffs[0] = 1.0
    for _ in range(rng.randint(1, degree)):
        factor = np.array(
            ser.blaschke_factor_coeffs(rng.uniform(0.0, 0.8),
                                       rng.uniform(0.0, 2.0 * math.pi), n_trunc),
            dtype=complex,
        )
        coeffs = np.convolve(coeffs, factor)[: n_trunc + 1]
    return ser.CoeffSeries(gamma, tuple(coeffs), ser.TailMode.SCHWARZ_PICK)


def random_admissible_pair(rng: random.Random, gamma: float, k: float,
                           n_trunc: int = 200) -> ser.HarmonicPair:
    """Pair with h a random Blaschke product and g' = k * omega * h' for a
    random Blaschke factor omega, so |g'| <= k |h'| holds exactly."""
    h = random_blaschke_series(rng, gamma, n_trunc)
    omega = np.array(
        ser.blaschke_factor_coeffs(rng.uniform(0.0, 0.8),
                                   rng.uniform(0.0, 2.0 * math.pi), n_trunc),
        dtype=complex,
    )
    h_deriv = np.array([n * c for n, c in enumerate(h.coeffs)][1:], dtype=complex)
    g_deriv = k * np.convolve(omega, h_deriv)[:n_trunc]
    g_coeffs = [0j] + [g_deriv[n - 1] / n for n in range(1, n_trunc + 1)]
    # g inherits h's certificate only through the dilatation bound; store as
    # uncertified-tail data
    g = ser.CoeffSeries(gamma, tuple(g_coeffs), ser.TailMode.ZERO)
    return ser.HarmonicPair(h, g, k)
