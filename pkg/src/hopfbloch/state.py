"""Two-qubit pure states, quaternionic quasi-states, and density matrices.

A state is the amplitude quadruple (alpha, beta, gamma, delta) of
|00>, |01>, |10>, |11>.  Converting to the quaternion pair keeps the base
qubit's kets and turns the other qubit's kets into quaternion units
(|0> -> 1, |1> -> j); the dyad of that pair is the quasi-density matrix,
which equals the base qubit's reduced density matrix plus a concurrence
term on the j axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotNormalized
from .hopf import S4Point
from .quaternion import Quaternion, from_complex_pair, wrap_angle
from .tolerances import EPS_UNIT, NORM_INPUT_TOL


class Basis(Enum):
    """Which qubit stays as the ket basis (the other becomes quaternion units)."""

    A = "A"
    B = "B"


@dataclass(frozen=True, slots=True)
class TwoQubitState:
    """Unit-normalized amplitudes of |00>, |01>, |10>, |11>.

    Inputs within 1e-6 of unit norm are renormalized silently; anything
    further off raises NotNormalized.
    """

    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def __post_init__(self):
        n2 = (abs(self.alpha) ** 2 + abs(self.beta) ** 2
              + abs(self.gamma) ** 2 + abs(self.delta) ** 2)
        n = math.sqrt(n2)
        # the comparison must fail non-finite norms too, hence the negation
        if not (abs(n - 1.0) <= NORM_INPUT_TOL):
            raise NotNormalized(f"amplitude norm {n:.12g} is not 1")
        if n2 != 1.0:
            object.__setattr__(self, "alpha", self.alpha / n)
            object.__setattr__(self, "beta", self.beta / n)
            object.__setattr__(self, "gamma", self.gamma / n)
            object.__setattr__(self, "delta", self.delta / n)

    @classmethod
    def from_vector(cls, vec) -> "TwoQubitState":
        a, b, c, d = (complex(v) for v in vec)
        return cls(a, b, c, d)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta],
                        dtype=complex)

    def amplitudes(self) -> tuple[complex, complex, complex, complex]:
        return self.alpha, self.beta, self.gamma, self.delta


_BELL = {
    "00": (1, 0, 0, 1),
    "01": (0, 1, 1, 0),
    "10": (1, 0, 0, -1),
    "11": (0, 1, -1, 0),
}


def bell_state(code: str) -> TwoQubitState:
    """One of the four maximally entangled presets keyed '00'..'11'."""
    if code not in _BELL:
        raise ValueError(f"bell code must be one of {sorted(_BELL)}, got {code!r}")
    a, b, c, d = _BELL[code]
    s = math.sqrt(0.5)
    return TwoQubitState(a * s, b * s, c * s, d * s)


def phase_aligned_distance(s1: TwoQubitState, s2: TwoQubitState) -> float:
    """Max amplitude deviation after aligning the global phases.

    The alignment phase is taken from the largest-magnitude amplitude of s1.
    """
    v1 = s1.amplitudes()
    v2 = s2.amplitudes()
    k = max(range(4), key=lambda i: abs(v1[i]))
    if abs(v2[k]) == 0.0:
        return max(abs(a - b) for a, b in zip(v1, v2))
    phase = v1[k] / v2[k]
    phase /= abs(phase)
    return max(abs(a - phase * b) for a, b in zip(v1, v2))


@dataclass(frozen=True, slots=True)
class QuasiState:
    """Quaternion amplitude pair in the chosen basis; |q0|^2 + |q1|^2 = 1."""

    q0: Quaternion
    q1: Quaternion
    basis: Basis = Basis.A

    def norm_squared(self) -> float:
        return self.q0.norm_squared() + self.q1.norm_squared()


def quasi_state(s: TwoQubitState, basis: Basis = Basis.A) -> QuasiState:
    """Fold the non-base qubit into quaternion units: |0> -> 1, |1> -> j."""
    if basis is Basis.A:
        return QuasiState(from_complex_pair(s.alpha, s.beta),
                          from_complex_pair(s.gamma, s.delta), Basis.A)
    return QuasiState(from_complex_pair(s.alpha, s.gamma),
                      from_complex_pair(s.beta, s.delta), Basis.B)


@dataclass(frozen=True, slots=True)
class QuasiDensity:
    """2x2 quaternion-entried dyad of a quasi-state.

    Hermitian with real diagonal, trace 1, and idempotent (a projector).
    """

    e00: Quaternion
    e01: Quaternion
    e10: Quaternion
    e11: Quaternion

    @property
    def trace(self) -> float:
        return self.e00.w + self.e11.w

    def matmul(self, other: "QuasiDensity") -> "QuasiDensity":
        return QuasiDensity(
            self.e00 * other.e00 + self.e01 * other.e10,
            self.e00 * other.e01 + self.e01 * other.e11,
            self.e10 * other.e00 + self.e11 * other.e10,
            self.e10 * other.e01 + self.e11 * other.e11,
        )

    def entries(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return self.e00, self.e01, self.e10, self.e11


def quasi_density(qs: QuasiState) -> QuasiDensity:
    """Dyad |psi~><psi~| of the quaternion pair."""
    n = qs.norm_squared()
    if not (abs(n - 1.0) <= EPS_UNIT):
        raise NotNormalized(f"quasi-state norm^2 {n:.12g} is not 1")
    q0, q1 = qs.q0, qs.q1
    return QuasiDensity(q0 * q0.conjugate(), q0 * q1.conjugate(),
                        q1 * q0.conjugate(), q1 * q1.conjugate())


def reduced_density(s: TwoQubitState, keep: Basis = Basis.A) -> np.ndarray:
    """2x2 complex reduced density matrix of the kept qubit."""
    a, b, c, d = s.amplitudes()
    if keep is Basis.A:
        off = a * c.conjugate() + b * d.conjugate()
        return np.array([[abs(a) ** 2 + abs(b) ** 2, off],
                         [off.conjugate(), abs(c) ** 2 + abs(d) ** 2]],
                        dtype=complex)
    off = a * b.conjugate() + c * d.conjugate()
    return np.array([[abs(a) ** 2 + abs(c) ** 2, off],
                     [off.conjugate(), abs(b) ** 2 + abs(d) ** 2]],
                    dtype=complex)


def concurrence(s: TwoQubitState) -> tuple[float, float]:
    """Concurrence 2|alpha*delta - beta*gamma| and its phase in [0, 2*pi).

    Twice the amplitude determinant equals concurrence * e^(k(xi - pi/2))
    with xi the extracted entanglement azimuth on the canonical branch.
    """
    det = s.alpha * s.delta - s.beta * s.gamma
    return 2.0 * abs(det), wrap_angle(cmath.phase(det))


def phase_family_state(a: float, b: float, c: float, d: float,
                       phi1: float, phi2: float, eta: float = 0.0) -> TwoQubitState:
    """State with a pinned concurrence phase and free pairwise phases.

    Amplitudes e^(k*eta) * (a e^(-k*phi1), b e^(-k*phi2), c e^(k*phi2),
    d e^(k*phi1)) for non-negative a, b, c, d; the amplitude determinant is
    (a*d - b*c) e^(2k*eta), so the concurrence is 2|a*d - b*c|.
    """
    if min(a, b, c, d) < 0.0:
        raise ValueError("magnitudes a, b, c, d must be non-negative")
    n = math.sqrt(a * a + b * b + c * c + d * d)
    if abs(n - 1.0) > EPS_UNIT:
        raise NotNormalized(f"magnitude vector norm {n:.12g} is not 1")
    g = cmath.exp(1j * eta)
    return TwoQubitState(g * a * cmath.exp(-1j * phi1),
                         g * b * cmath.exp(-1j * phi2),
                         g * c * cmath.exp(1j * phi2),
                         g * d * cmath.exp(1j * phi1))


def partial_trace_projection(p: S4Point) -> np.ndarray:
    """Reduced density matrix read straight off an S^4 base point.

    Tracing out the fiber qubit projects b*t onto the k axis
    (b*t -> x4*k), giving rho = ((1+x0, x1 - x4*k), (x1 + x4*k, 1-x0))/2.
    The Bloch vector (x1, x4, x0) then has length sqrt(1 - c^2): constant
    concurrence shells of the sphere flatten into concentric shells of a
    ball of radius sqrt(1 - c^2).
    """
    p.validate()
    off = complex(p.x1, -p.x4)
    return 0.5 * np.array([[1.0 + p.x0, off],
                           [off.conjugate(), 1.0 - p.x0]], dtype=complex)
