"""Shifted disks, the affine transport to the unit disk, and Mobius automorphisms.

The family of disks treated here is parameterized by gamma in [0, 1): the disk
with center -gamma/(1-gamma) and radius 1/(1-gamma).  Every such disk contains
the unit disk and its boundary circle passes through z = 1.  The affine map
z -> gamma + (1-gamma)z carries the disk onto the unit disk; all series-level
machinery in this package works in the transported (unit disk) coordinates.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence

#: gamma values at or above this cap are rejected: the disk radius 1/(1-gamma)
#: blows up and every downstream formula loses precision.
GAMMA_CAP = 1.0 - 1e-6

#: tolerance used to classify points relative to a disk boundary.
BOUNDARY_TOL = 1e-12


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if isinstance(gamma, complex):  # pragma: no cover - float() above raises first
        raise TypeError("gamma must be real")
    if not (0.0 <= gamma < 1.0):
        raise ValueError(f"gamma must lie in [0, 1), got {gamma!r}")
    if gamma >= GAMMA_CAP:
        raise ValueError(
            f"gamma={gamma!r} too close to 1: disk radius 1/(1-gamma) overflows "
            f"(cap is {GAMMA_CAP})"
        )
    return gamma


@dataclass(frozen=True)
class ShiftedDisk:
    """The disk with center -gamma/(1-gamma) and radius 1/(1-gamma)."""

    gamma: float
    center: complex = field(init=False)
    radius: float = field(init=False)

    def __post_init__(self) -> None:
        gamma = _check_gamma(self.gamma)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "center", complex(-gamma / (1.0 - gamma), 0.0))
        object.__setattr__(self, "radius", 1.0 / (1.0 - gamma))

    def classify(self, z: complex) -> str:
        """Return 'inside', 'boundary' or 'outside' for the point z.

        Points within BOUNDARY_TOL of the boundary circle are classified as
        'boundary', never 'inside'.
        """
        d = abs(z - self.center)
        if abs(d - self.radius) <= BOUNDARY_TOL:
            return "boundary"
        return "inside" if d < self.radius else "outside"

    def contains(self, z: complex) -> bool:
        return self.classify(z) == "inside"


def make_disk(gamma: float) -> ShiftedDisk:
    """Construct the shifted disk for a given gamma in [0, 1)."""
    return ShiftedDisk(gamma)


@dataclass(frozen=True)
class AffineTransport:
    """Affine change of variable between the unit disk and the shifted disk.

    forward maps the unit disk onto the shifted disk (xi -> (xi-gamma)/(1-gamma));
    backward is its inverse (z -> gamma + (1-gamma)z).  backward(forward(xi)) == xi
    to machine precision.
    """

    gamma: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", _check_gamma(self.gamma))

    def forward(self, xi: complex) -> complex:
        return (xi - self.gamma) / (1.0 - self.gamma)

    def backward(self, z: complex) -> complex:
        return self.gamma + (1.0 - self.gamma) * z

    def normalized_radius(self, z: complex) -> float:
        """|gamma + (1-gamma)z|: the unit-disk radius of the transported point."""
        return abs(self.backward(z))


def mobius_auto(a: float) -> Callable[[complex], complex]:
    """The disk automorphism w -> (a - w)/(1 - a w) for real a in [0, 1).

    It is an involution of the unit disk swapping 0 and a.
    """
    a = float(a)
    if not (0.0 <= a < 1.0):
        raise ValueError(f"Mobius parameter must lie in [0, 1), got {a!r}")

    def psi(w: complex) -> complex:
        return (a - w) / (1.0 - a * w)

    return psi


def circle_points(disk: ShiftedDisk, n: int) -> List[complex]:
    """n equally spaced points on the boundary circle of the disk.

    The first point is z = 1, which lies on the boundary for every gamma.
    """
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    points = []
    for j in range(n):
        theta = 2.0 * math.pi * j / n
        points.append(disk.center + disk.radius * cmath.exp(1j * theta))
    return points


def circle_rows(gammas: Sequence[float], n: int) -> List[tuple]:
    """CSV rows (gamma, index, re, im) for the boundary circles of several disks."""
    rows = []
    for gamma in gammas:
        disk = make_disk(gamma)
        for j, z in enumerate(circle_points(disk, n)):
            rows.append((gamma, j, z.real, z.imag))
    return rows
