"""Fibration maps between the quaternion pair, R^4, and the unit 4-sphere.

The pipeline is: a unit pair (q0, q1) maps to Q = q1 * conj(q0) / |q1|^2 in
R^4 (the conjugated quotient, which is invariant under right multiplication
of both inputs by any unit quaternion), then to S^4 by inverse stereographic
projection from the north pole (1,0,0,0,0).  The base point splits into one
2-sphere in the (x1, b, x0) frame and one in the (tx, ty, tz) frame via
b*t = x2*i + x3*j + x4*k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import FiberAtInfinity, NorthPole, NotNormalized, OffSphere
from .quaternion import PureUnitQuaternion, Quaternion, wrap_angle
from .tolerances import EPS_UNIT, EPS_ZERO


class CoordFlag(Enum):
    """Marks angles whose value is a convention, not data."""

    PHI_A_UNDEFINED = "phi_a_undefined"      # sin(theta) ~ 0: azimuth meaningless
    T_UNDEFINED = "t_undefined"              # b ~ 0: whole t sphere meaningless, t := k
    XI_UNDEFINED = "xi_undefined"            # c ~ 0 with b != 0: t = +-k, xi := 0
    PHI_B_UNDEFINED = "phi_b_undefined"      # theta_B ~ 0
    SOUTH_POLE_A = "south_pole_a"            # |1>_A (x) |psi_B| exception
    THETA_B_PI_AMBIGUOUS = "theta_b_pi_ambiguous"  # zeta_B pinned to 0


@dataclass(frozen=True, slots=True)
class HopfPointR4:
    """Q = q1 + q2*i + q3*j + q4*k viewed as a point of R^4."""

    q1: float
    q2: float
    q3: float
    q4: float

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "HopfPointR4":
        return cls(q.w, q.x, q.y, q.z)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(self.q1, self.q2, self.q3, self.q4)

    def norm_squared(self) -> float:
        return (self.q1 * self.q1 + self.q2 * self.q2
                + self.q3 * self.q3 + self.q4 * self.q4)


@dataclass(frozen=True, slots=True)
class S4Point:
    """Cartesian point on the unit 4-sphere embedded in R^5.

    b is the non-negative magnitude of the (x2, x3, x4) block (the signed
    version lives on the coordinate branches, not here) and c the magnitude
    of the (x2, x3) sub-block.
    """

    x0: float
    x1: float
    x2: float
    x3: float
    x4: float

    @property
    def b(self) -> float:
        return math.sqrt(self.x2 * self.x2 + self.x3 * self.x3 + self.x4 * self.x4)

    @property
    def c(self) -> float:
        return math.hypot(self.x2, self.x3)

    def norm_squared(self) -> float:
        return (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2
                + self.x3 * self.x3 + self.x4 * self.x4)

    def validate(self, tol: float = EPS_UNIT) -> None:
        err = abs(self.norm_squared() - 1.0)
        if err > tol:
            raise OffSphere(f"coordinates off the unit 4-sphere by {err:.3e}")


NORTH_POLE = S4Point(1.0, 0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class BaseAngles:
    """Angle parameterization of an S^4 point, with degeneracy flags."""

    theta: float
    phi: float
    chi: float
    xi: float
    flags: frozenset[CoordFlag]


def h1(q0: Quaternion, q1: Quaternion) -> HopfPointR4:
    """Map a unit quaternion pair to Q = q1 * conj(q0) / |q1|^2 in R^4.

    Right multiplication of both inputs by a common unit quaternion leaves
    Q unchanged (the multiplier is the fiber).  Raises FiberAtInfinity when
    |q1| vanishes: that pair belongs to the excluded north pole and the
    caller must use (1,0,0,0,0) directly.
    """
    total = q0.norm_squared() + q1.norm_squared()
    if not (abs(total - 1.0) <= EPS_UNIT):
        raise NotNormalized(f"|q0|^2 + |q1|^2 = {total:.12g}, expected 1")
    n2 = q1.norm_squared()
    if n2 <= EPS_ZERO * EPS_ZERO:
        raise FiberAtInfinity("q1 = 0 maps to the excluded north pole")
    return HopfPointR4.from_quaternion((q1 * q0.conjugate()) * (1.0 / n2))


def inverse_stereographic(point: HopfPointR4) -> S4Point:
    """Lift R^4 onto the unit 4-sphere (origin to the south pole)."""
    n2 = point.norm_squared()
    d = n2 + 1.0
    return S4Point((n2 - 1.0) / d, 2.0 * point.q1 / d, 2.0 * point.q2 / d,
                   2.0 * point.q3 / d, 2.0 * point.q4 / d)


def stereographic(p: S4Point) -> HopfPointR4:
    """Project the 4-sphere minus the north pole back onto R^4."""
    if p.x0 >= 1.0 - EPS_ZERO:
        raise NorthPole("x0 = 1 is the projection point")
    d = 1.0 - p.x0
    return HopfPointR4(p.x1 / d, p.x2 / d, p.x3 / d, p.x4 / d)


def base_from_angles(theta: float, phi: float, chi: float, xi: float) -> S4Point:
    """Cartesian S^4 coordinates from (theta, phi) and the t-sphere (chi, xi).

    x0 = cos(theta), x1 = sin(theta)cos(phi), and the remaining block is
    b*t with b = sin(theta)sin(phi), t = (sin(chi)cos(xi), sin(chi)sin(xi),
    cos(chi)).
    """
    st = math.sin(theta)
    b = st * math.sin(phi)
    sc = math.sin(chi)
    return S4Point(
        math.cos(theta),
        st * math.cos(phi),
        b * sc * math.cos(xi),
        b * sc * math.sin(xi),
        b * math.cos(chi),
    )


def angles_from_base(p: S4Point) -> BaseAngles:
    """Invert ``base_from_angles`` on the b >= 0 branch.

    Degenerate directions fall back to fixed conventions and are flagged:
    phi := 0 at the poles sin(theta) ~ 0; (chi, xi) := (0, 0) i.e. t = k when
    b ~ 0; xi := 0 when c ~ 0 with b != 0 (t at a pole of its own sphere).
    Raises OffSphere for points off the unit 4-sphere.
    """
    p.validate()
    flags = set()

    b = p.b
    st = math.hypot(p.x1, b)
    theta = math.atan2(st, p.x0)

    if st <= EPS_ZERO:
        phi = 0.0
        flags.add(CoordFlag.PHI_A_UNDEFINED)
    else:
        phi = math.atan2(b, p.x1)  # b >= 0 keeps phi in [0, pi]

    if b <= EPS_ZERO:
        chi = 0.0
        xi = 0.0
        flags.add(CoordFlag.T_UNDEFINED)
        flags.add(CoordFlag.XI_UNDEFINED)
    else:
        c = p.c
        chi = math.atan2(c, p.x4)
        if c <= EPS_ZERO:
            xi = 0.0
            flags.add(CoordFlag.XI_UNDEFINED)
        else:
            xi = wrap_angle(math.atan2(p.x3, p.x2))

    return BaseAngles(theta, phi, chi, xi, frozenset(flags))


def split_t(p: S4Point) -> tuple[float, PureUnitQuaternion, frozenset[CoordFlag]]:
    """Split the (x2, x3, x4) block into b >= 0 and the unit t direction.

    Falls back to t = k (flagged) when b vanishes.
    """
    b = p.b
    if b <= EPS_ZERO:
        return 0.0, PureUnitQuaternion(0.0, 0.0, 1.0), frozenset({CoordFlag.T_UNDEFINED})
    return b, PureUnitQuaternion(p.x2 / b, p.x3 / b, p.x4 / b), frozenset()
