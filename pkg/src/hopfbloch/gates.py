"""Two-qubit gates as phase-then-rotation paths, sampled into coordinates.

A controlled-U factors as e^(k*eta) R_n(omega) on its active 2x2 block.
The sampled path sweeps the phase first (eta: 0 -> pi/2 at omega = 0) and
then the rotation (omega: 0 -> pi at eta = pi/2); each sample applies the
partially swept gate to the same input state.  CNOT and CZ place the block
on the (gamma, delta) pair (qubit A controls); SWAP places its X block on
the (beta, gamma) pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bloch import (
    BlochCoordinates,
    _fiber_angles,
    alternate,
    coords_distance,
    extract,
)
from .errors import BadAxis, SouthPoleA
from .hopf import CoordFlag
from .state import TwoQubitState
from .tolerances import EPS_UNIT

_HALF_PI = 0.5 * math.pi

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class GateKind(Enum):
    CNOT = "cnot"
    CZ = "cz"
    SWAP = "swap"
    CONTROLLED_U = "controlled_u"


@dataclass(frozen=True, slots=True)
class GateSpec:
    """A gate endpoint e^(k*eta) R_axis(omega) on its active amplitude pair."""

    kind: GateKind
    axis: tuple[float, float, float]
    eta: float = _HALF_PI
    omega: float = math.pi

    def __post_init__(self):
        n = math.sqrt(sum(a * a for a in self.axis))
        # negated form so non-finite axes fail too
        if not (abs(n - 1.0) <= EPS_UNIT):
            raise BadAxis(f"axis norm {n:.12g} is not 1")

    @classmethod
    def cnot(cls) -> "GateSpec":
        return cls(GateKind.CNOT, (1.0, 0.0, 0.0))

    @classmethod
    def cz(cls) -> "GateSpec":
        return cls(GateKind.CZ, (0.0, 0.0, 1.0))

    @classmethod
    def swap(cls) -> "GateSpec":
        return cls(GateKind.SWAP, (1.0, 0.0, 0.0))

    @classmethod
    def controlled_u(cls, axis, omega: float, eta: float) -> "GateSpec":
        ax = tuple(float(a) for a in axis)
        return cls(GateKind.CONTROLLED_U, ax, eta, omega)

    @property
    def block_indices(self) -> tuple[int, int]:
        if self.kind is GateKind.SWAP:
            return 1, 2
        return 2, 3


class Stage(Enum):
    PHASE_RAMP = "phase"
    ROTATION_RAMP = "rotation"


@dataclass(frozen=True, slots=True)
class TrajectorySample:
    stage: Stage
    s: float
    state: TwoQubitState
    coords: BlochCoordinates
    branch_flip: bool = False


@dataclass(frozen=True, slots=True)
class Trajectory:
    gate: GateSpec
    samples: tuple[TrajectorySample, ...]
    initial_state: TwoQubitState
    final_state: TwoQubitState


def gate_matrix(g: GateSpec, eta: float, omega: float) -> np.ndarray:
    """4x4 unitary with e^(k*eta) R_axis(omega) on the gate's active block."""
    nx, ny, nz = g.axis
    n_sigma = nx * _PAULI["x"] + ny * _PAULI["y"] + nz * _PAULI["z"]
    half = 0.5 * omega
    block = np.exp(1j * eta) * (math.cos(half) * np.eye(2, dtype=complex)
                                - 1j * math.sin(half) * n_sigma)
    i, j = g.block_indices
    m = np.eye(4, dtype=complex)
    m[np.ix_((i, j), (i, j))] = block
    return m


def apply(g: GateSpec, s: TwoQubitState) -> TwoQubitState:
    """The full gate (its endpoint parameters) applied to a state."""
    return TwoQubitState.from_vector(gate_matrix(g, g.eta, g.omega) @ s.vector)


def _south_pole_coords(exc: SouthPoleA) -> BlochCoordinates:
    """Conventional coordinates for a |1>_A (x) |psi_B> sample."""
    u, v = exc.psi_b
    theta_b, phi_b, zeta_b, fiber_flags = _fiber_angles(u, v)
    flags = {CoordFlag.SOUTH_POLE_A, CoordFlag.PHI_A_UNDEFINED,
             CoordFlag.T_UNDEFINED, CoordFlag.XI_UNDEFINED}
    flags.update(fiber_flags)
    return BlochCoordinates(math.pi, 0.0, 0.0, 0.0, theta_b, phi_b, zeta_b,
                            frozenset(flags))


def trajectory(g: GateSpec, s: TwoQubitState, n1: int = 32,
               n2: int = 32) -> Trajectory:
    """Sample the two-step gate path applied to s, with branch continuity.

    n1 samples sweep the phase (the first is the untouched input), n2 sweep
    the rotation (the last is the full gate).  Every sample carries extracted
    coordinates; when the (-b, -t) twin of the canonical extraction is
    wrap-closer to the previously emitted sample it is emitted instead and
    the flip is flagged.  South-pole samples are flagged, not fatal.
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("n1 and n2 must be at least 2")
    schedule = [(Stage.PHASE_RAMP, i / (n1 - 1), g.eta * i / (n1 - 1), 0.0)
                for i in range(n1)]
    schedule += [(Stage.ROTATION_RAMP, i / (n2 - 1), g.eta, g.omega * i / (n2 - 1))
                 for i in range(n2)]

    samples = []
    prev_coords = None
    prev_alt = False
    for stage, frac, eta, omega in schedule:
        state = TwoQubitState.from_vector(gate_matrix(g, eta, omega) @ s.vector)
        try:
            canon = extract(state)
        except SouthPoleA as exc:
            coords = _south_pole_coords(exc)
            flip = prev_alt
            prev_alt = False
        else:
            twin = alternate(canon)
            use_alt = False
            if prev_coords is not None and twin is not canon:
                use_alt = (coords_distance(twin, prev_coords)
                           < coords_distance(canon, prev_coords))
            coords = twin if use_alt else canon
            flip = prev_coords is not None and use_alt != prev_alt
            prev_alt = use_alt
        samples.append(TrajectorySample(stage, frac, state, coords, flip))
        prev_coords = coords

    return Trajectory(g, tuple(samples), s, samples[-1].state)
