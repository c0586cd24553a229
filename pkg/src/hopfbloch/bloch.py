"""Seven-angle Bloch coordinates for a two-qubit pure state.

The coordinate set is (theta_a, phi_a) on the qubit-A quasi-Bloch sphere,
(chi, xi) on the entanglement sphere carrying the variable imaginary unit t,
(theta_b, phi_b) on the qubit-B quasi-Bloch sphere, and the fiber phase
zeta_b.  Extraction runs in four steps: the polar coordinate x0 from the
amplitude magnitudes, the (x1, x4) block from the column overlap, the
(x2, x3) block from the amplitude determinant, and finally the fiber
quaternion q_B once the base angles are known.

Two conventions matter everywhere: the canonical branch keeps
b = sin(theta_a) sin(phi_a) >= 0 (the (-b, -t) twin describes the same
state), and zeta_b is a true global phase only after shifting xi and phi_b
down by 2*zeta_b.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

from .errors import OutOfRange, SouthPoleA
from .hopf import CoordFlag, S4Point, angles_from_base, split_t
from .quaternion import (
    PureUnitQuaternion,
    Quaternion,
    angle_distance,
    exp_pure,
    from_complex_pair,
    to_complex_pair,
    wrap_angle,
)
from .state import TwoQubitState
from .tolerances import EPS_DEGENERATE, EPS_NUM, EPS_ZERO

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class BlochCoordinates:
    """The seven angles plus degeneracy flags.

    Ranges: theta_a, theta_b, chi in [0, pi]; phi_a, phi_b, zeta_b, xi in
    [0, 2*pi).  phi_a beyond pi encodes the non-canonical b < 0 branch.
    """

    theta_a: float
    phi_a: float
    chi: float
    xi: float
    theta_b: float
    phi_b: float
    zeta_b: float
    flags: frozenset[CoordFlag] = frozenset()

    def angles(self) -> tuple[float, float, float, float, float, float, float]:
        return (self.theta_a, self.phi_a, self.chi, self.xi,
                self.theta_b, self.phi_b, self.zeta_b)

    @property
    def x0(self) -> float:
        return math.cos(self.theta_a)

    @property
    def x1(self) -> float:
        return math.sin(self.theta_a) * math.cos(self.phi_a)

    @property
    def b(self) -> float:
        """Signed: negative on the non-canonical branch."""
        return math.sin(self.theta_a) * math.sin(self.phi_a)

    @property
    def t(self) -> PureUnitQuaternion:
        return PureUnitQuaternion.from_angles(self.chi, self.xi)

    @property
    def signed_concurrence(self) -> float:
        return self.b * math.sin(self.chi)

    @property
    def concurrence(self) -> float:
        return abs(self.signed_concurrence)

    @property
    def s4_point(self) -> S4Point:
        bt = self.b
        sc = math.sin(self.chi)
        return S4Point(self.x0, self.x1, bt * sc * math.cos(self.xi),
                       bt * sc * math.sin(self.xi), bt * math.cos(self.chi))

    @property
    def qubit_b_vector(self) -> tuple[float, float, float]:
        st = math.sin(self.theta_b)
        return (st * math.cos(self.phi_b), st * math.sin(self.phi_b),
                math.cos(self.theta_b))


def _fiber_angles(u: complex, v: complex) -> tuple[float, float, float, set]:
    """(theta_b, phi_b, zeta_b, flags) from the complex split of q_B."""
    au, av = abs(u), abs(v)
    theta_b = 2.0 * math.atan2(av, au)
    flags = set()
    if au <= EPS_ZERO:
        # theta_b ~ pi: phi_b and zeta_b are interchangeable; pin zeta_b = 0
        zeta_b = 0.0
        phi_b = wrap_angle(cmath.phase(v))
        flags.add(CoordFlag.THETA_B_PI_AMBIGUOUS)
    elif av <= EPS_ZERO:
        zeta_b = wrap_angle(cmath.phase(u))
        phi_b = 0.0
        flags.add(CoordFlag.PHI_B_UNDEFINED)
    else:
        zeta_b = wrap_angle(cmath.phase(u))
        phi_b = wrap_angle(cmath.phase(v) + zeta_b)
    return theta_b, phi_b, zeta_b, flags


def _base_point(s: TwoQubitState) -> S4Point:
    """The five base coordinates from the amplitude bilinears."""
    a, b, g, d = s.amplitudes()
    x0 = abs(a) ** 2 + abs(b) ** 2 - abs(g) ** 2 - abs(d) ** 2
    col = 2.0 * (a.conjugate() * g + b.conjugate() * d)
    det2 = 2.0 * (a * d - b * g)
    return S4Point(x0, col.real, -det2.imag, det2.real, col.imag)


def extract(s: TwoQubitState) -> BlochCoordinates:
    """The seven angles of a state, on the canonical b >= 0 branch.

    Raises SouthPoleA (carrying the normalized qubit-B amplitudes) for
    states of the form |1>_A (x) |psi_B>, where the model is undefined.
    """
    a, b_, g, d = s.amplitudes()
    p = _base_point(s)
    if 1.0 + p.x0 <= EPS_DEGENERATE:
        n = math.sqrt(abs(g) ** 2 + abs(d) ** 2)
        raise SouthPoleA((g / n, d / n))

    base = angles_from_base(p)
    flags = set(base.flags)

    # fiber: q_B = cos(theta_a/2) q0 + sin(theta_a/2) exp(-t phi_a) q1
    # (x0 can land one ulp outside [-1, 1])
    ch = math.sqrt(max(0.0, 0.5 * (1.0 + p.x0)))
    sh = math.sqrt(max(0.0, 0.5 * (1.0 - p.x0)))
    t = PureUnitQuaternion.from_angles(base.chi, base.xi)
    q0 = from_complex_pair(a, b_)
    q1 = from_complex_pair(g, d)
    q_b = ch * q0 + sh * (exp_pure(t, -base.phi) * q1)
    u, v = to_complex_pair(q_b)
    theta_b, phi_b, zeta_b, fiber_flags = _fiber_angles(u, v)
    flags.update(fiber_flags)

    return BlochCoordinates(base.theta, base.phi, base.chi, base.xi,
                            theta_b, phi_b, zeta_b, frozenset(flags))


def _check_range(name: str, value: float, closed_pi: bool) -> float:
    hi = math.pi if closed_pi else TWO_PI
    if not math.isfinite(value) or value < -EPS_NUM or value > hi + EPS_NUM:
        raise OutOfRange(f"{name} = {value!r} outside [0, {'pi' if closed_pi else '2*pi'}"
                         f"{']' if closed_pi else ')'}")
    if closed_pi:
        return min(max(value, 0.0), math.pi)
    return wrap_angle(value)


def reconstruct(c: BlochCoordinates) -> TwoQubitState:
    """Amplitudes from the seven angles (closed form, k as the complex unit)."""
    theta_a = _check_range("theta_a", c.theta_a, True)
    theta_b = _check_range("theta_b", c.theta_b, True)
    chi = _check_range("chi", c.chi, True)
    phi_a = _check_range("phi_a", c.phi_a, False)
    phi_b = _check_range("phi_b", c.phi_b, False)
    zeta_b = _check_range("zeta_b", c.zeta_b, False)
    xi = _check_range("xi", c.xi, False)

    ca, sa = math.cos(0.5 * theta_a), math.sin(0.5 * theta_a)
    cb, sb = math.cos(0.5 * theta_b), math.sin(0.5 * theta_b)
    gz = cmath.exp(1j * zeta_b)
    gp = cmath.exp(1j * (phi_b - zeta_b))
    axial = complex(math.cos(phi_a), math.sin(phi_a) * math.cos(chi))
    swirl = 1j * math.sin(phi_a) * math.sin(chi) * cmath.exp(1j * (xi - phi_b))

    return TwoQubitState(
        ca * cb * gz,
        ca * sb * gp,
        sa * (axial * cb + swirl * sb) * gz,
        sa * (axial * sb - swirl * cb) * gp,
    )


def normalize_global_phase(c: BlochCoordinates) -> BlochCoordinates:
    """Push the fiber phase into the amplitudes: zeta_b -> 0 with xi and
    phi_b each shifted down by 2*zeta_b.

    The result reconstructs to exp(-k*zeta_b) times the original state.
    Flagged conventional angles stay at their conventions.
    """
    if c.zeta_b == 0.0:
        return c
    shift = 2.0 * c.zeta_b
    xi = c.xi if CoordFlag.XI_UNDEFINED in c.flags else wrap_angle(c.xi - shift)
    # a flagged phi_b is inert (theta_b ~ 0), so its convention survives
    phi_b = (c.phi_b if CoordFlag.PHI_B_UNDEFINED in c.flags
             else wrap_angle(c.phi_b - shift))
    return replace(c, xi=xi, phi_b=phi_b, zeta_b=0.0)


def _flip_branch(c: BlochCoordinates) -> BlochCoordinates:
    """(b, t) -> (-b, -t): phi_a reflects, t passes to its antipode."""
    xi = c.xi if CoordFlag.XI_UNDEFINED in c.flags else wrap_angle(c.xi + math.pi)
    return replace(c, phi_a=wrap_angle(-c.phi_a), chi=math.pi - c.chi, xi=xi)


def alternate(c: BlochCoordinates) -> BlochCoordinates:
    """The (-b, -t) twin of the same state, or c itself when b ~ 0."""
    if CoordFlag.T_UNDEFINED in c.flags or abs(c.b) <= EPS_ZERO:
        return c
    return _flip_branch(c)


def canonicalize(c: BlochCoordinates) -> BlochCoordinates:
    """Return the b >= 0 branch; idempotent, state-preserving."""
    if c.b < -EPS_ZERO:
        return _flip_branch(c)
    return c


def coords_distance(c1: BlochCoordinates, c2: BlochCoordinates) -> float:
    """Wrap-aware sum of the seven angle distances."""
    return sum(angle_distance(a1, a2)
               for a1, a2 in zip(c1.angles(), c2.angles()))


@dataclass(frozen=True, slots=True)
class ShortcutBase:
    """Base data read off the first column of the quasi-density matrix."""

    x0: float
    x1: float
    b: float
    t: PureUnitQuaternion
    column: tuple[Quaternion, Quaternion]
    flags: frozenset[CoordFlag]


def shortcut_base(s: TwoQubitState) -> ShortcutBase:
    """(x0, x1, b, t) without the angle detour, plus the unit column
    (1 + x0, x1 + b*t) / sqrt(2 (1 + x0)) whose conjugate reads out q_B.

    Raises SouthPoleA when 1 + x0 vanishes (the column is degenerate).
    """
    p = _base_point(s)
    if 1.0 + p.x0 <= EPS_DEGENERATE:
        g, d = s.gamma, s.delta
        n = math.sqrt(abs(g) ** 2 + abs(d) ** 2)
        raise SouthPoleA((g / n, d / n))
    b, t, flags = split_t(p)
    scale = 1.0 / math.sqrt(2.0 * (1.0 + p.x0))
    col0 = Quaternion(scale * (1.0 + p.x0), 0.0, 0.0, 0.0)
    col1 = Quaternion(scale * p.x1, scale * p.x2, scale * p.x3, scale * p.x4)
    return ShortcutBase(p.x0, p.x1, b, t, (col0, col1), flags)


def fiber_quaternion(s: TwoQubitState) -> Quaternion:
    """q_B via the quasi-density shortcut: conj(column) dotted into the pair."""
    sc = shortcut_base(s)
    c0, c1 = sc.column
    q0 = from_complex_pair(s.alpha, s.beta)
    q1 = from_complex_pair(s.gamma, s.delta)
    return c0.conjugate() * q0 + c1.conjugate() * q1
