"""Real quaternion algebra with a variable imaginary unit.

Component order is (w, x, y, z) for q = w + x*i + y*j + z*k.  Throughout the
package the k component doubles as the ordinary complex imaginary unit: a
complex number z embeds as z.real + z.imag*k, and every quaternion splits as
q = u + v*j with complex u, v (see ``to_complex_pair``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotPureUnit, NotUnit, ZeroNorm
from .tolerances import EPS_UNIT, EPS_ZERO

TWO_PI = 2.0 * math.pi


def wrap_angle(a: float) -> float:
    """Map an angle into [0, 2*pi).  Values within one ulp of 2*pi wrap to 0."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:
        a = 0.0
    return a


def angle_distance(a: float, b: float) -> float:
    """Wrap-aware distance between two angles, in [0, pi]."""
    d = abs(wrap_angle(a) - wrap_angle(b))
    return min(d, TWO_PI - d)


@dataclass(frozen=True, slots=True)
class Quaternion:
    """q = w + x*i + y*j + z*k with real coefficients."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        """Hamilton product (non-commutative), or scaling by a real number."""
        if isinstance(other, Quaternion):
            w1, x1, y1, z1 = self.w, self.x, self.y, self.z
            w2, x2, y2, z2 = other.w, other.x, other.y, other.z
            return Quaternion(
                w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        """Sign-flip of the i, j, k parts."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_squared(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    __abs__ = norm

    def inverse(self) -> "Quaternion":
        """Multiplicative inverse conj(q) / |q|^2.

        Raises ZeroNorm when |q| <= 1e-12.
        """
        n2 = self.norm_squared()
        if n2 <= EPS_ZERO * EPS_ZERO:
            raise ZeroNorm(f"cannot invert quaternion with norm {math.sqrt(n2):.3e}")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def is_unit(self, tol: float = EPS_UNIT) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def is_close(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (abs(self.w - other.w) <= tol and abs(self.x - other.x) <= tol
                and abs(self.y - other.y) <= tol and abs(self.z - other.z) <= tol)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def to_complex_pair(q: Quaternion) -> tuple[complex, complex]:
    """Split q = u + v*j into complex u, v, with k as the complex unit.

    Expanding (a + b*k) + (c + d*k)*j = a - d*i + c*j + b*k gives
    u = w + z*k and v = y - x*k.  Exact inverse of ``from_complex_pair``.
    """
    return complex(q.w, q.z), complex(q.y, -q.x)


def from_complex_pair(u: complex, v: complex) -> Quaternion:
    """Assemble u + v*j from two complex numbers (k as the complex unit)."""
    return Quaternion(u.real, -v.imag, v.real, u.imag)


@dataclass(frozen=True, slots=True)
class PureUnitQuaternion:
    """A pure (zero real part) unit quaternion: a point on the 2-sphere.

    Squares to -1, so it serves as a variable imaginary unit.  Polar angle
    chi in [0, pi] is measured from the k axis, azimuth xi in [0, 2*pi)
    from the i axis toward j.
    """

    tx: float
    ty: float
    tz: float

    @classmethod
    def from_angles(cls, chi: float, xi: float) -> "PureUnitQuaternion":
        s = math.sin(chi)
        return cls(s * math.cos(xi), s * math.sin(xi), math.cos(chi))

    @classmethod
    def from_components(cls, tx: float, ty: float, tz: float,
                        tol: float = EPS_UNIT) -> "PureUnitQuaternion":
        n = math.sqrt(tx * tx + ty * ty + tz * tz)
        if not (abs(n - 1.0) <= tol):
            raise NotPureUnit(f"components have norm {n:.12g}, expected 1")
        return cls(tx / n, ty / n, tz / n)

    @classmethod
    def from_quaternion(cls, q: Quaternion,
                        tol: float = EPS_UNIT) -> "PureUnitQuaternion":
        if abs(q.w) > tol:
            raise NotPureUnit(f"real part {q.w:.3e} is not zero")
        return cls.from_components(q.x, q.y, q.z, tol=tol)

    @property
    def chi(self) -> float:
        return math.atan2(math.hypot(self.tx, self.ty), self.tz)

    @property
    def xi(self) -> float:
        if math.hypot(self.tx, self.ty) <= EPS_ZERO:
            return 0.0
        return wrap_angle(math.atan2(self.ty, self.tx))

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.tx, self.ty, self.tz)

    def __neg__(self) -> "PureUnitQuaternion":
        return PureUnitQuaternion(-self.tx, -self.ty, -self.tz)


T_K = PureUnitQuaternion(0.0, 0.0, 1.0)


def exp_pure(t: PureUnitQuaternion, phi: float) -> Quaternion:
    """exp(t*phi) = cos(phi) + t*sin(phi); always unit norm."""
    c, s = math.cos(phi), math.sin(phi)
    return Quaternion(c, s * t.tx, s * t.ty, s * t.tz)


def conjugate_rotate(q: Quaternion, t: PureUnitQuaternion) -> PureUnitQuaternion:
    """Rotate the unit t by a unit quaternion q as conj(q) * t * q.

    For q = exp(k*zeta) this turns t clockwise around the k axis by 2*zeta.
    The opposite sandwich q * t * conj(q) is obtained by passing conj(q).
    """
    if not q.is_unit():
        raise NotUnit(f"rotor norm {q.norm():.12g} is not 1")
    r = q.conjugate() * t.as_quaternion() * q
    return PureUnitQuaternion.from_quaternion(r, tol=1e-6)
