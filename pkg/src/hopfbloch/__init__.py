"""Three-sphere Bloch coordinates for two-qubit pure states.

The public surface: quaternion algebra (``Quaternion``, ``PureUnitQuaternion``),
the fibration maps (``h1``, ``stereographic``, ``inverse_stereographic``,
``base_from_angles``, ``angles_from_base``), state machinery
(``TwoQubitState``, ``quasi_state``, ``quasi_density``, ``reduced_density``,
``concurrence``, ``phase_family_state``, ``partial_trace_projection``),
the seven-angle conversions (``extract``, ``reconstruct``,
``normalize_global_phase``, ``canonicalize``, ``shortcut_base``), and gate
trajectories (``GateSpec``, ``gate_matrix``, ``apply``, ``trajectory``).
"""

from .bloch import (
    BlochCoordinates,
    alternate,
    canonicalize,
    coords_distance,
    extract,
    fiber_quaternion,
    normalize_global_phase,
    reconstruct,
    shortcut_base,
)
from .errors import (
    BadAxis,
    FiberAtInfinity,
    HopfBlochError,
    NorthPole,
    NotNormalized,
    NotPureUnit,
    NotUnit,
    OffSphere,
    OutOfRange,
    SouthPoleA,
    UnknownGate,
    ZeroNorm,
)
from .gates import (
    GateKind,
    GateSpec,
    Stage,
    Trajectory,
    TrajectorySample,
    apply,
    gate_matrix,
    trajectory,
)
from .hopf import (
    NORTH_POLE,
    BaseAngles,
    CoordFlag,
    HopfPointR4,
    S4Point,
    angles_from_base,
    base_from_angles,
    h1,
    inverse_stereographic,
    stereographic,
)
from .quaternion import (
    PureUnitQuaternion,
    Quaternion,
    angle_distance,
    conjugate_rotate,
    exp_pure,
    from_complex_pair,
    to_complex_pair,
    wrap_angle,
)
from .state import (
    Basis,
    QuasiDensity,
    QuasiState,
    TwoQubitState,
    bell_state,
    concurrence,
    partial_trace_projection,
    phase_aligned_distance,
    phase_family_state,
    quasi_density,
    quasi_state,
    reduced_density,
)

__version__ = "0.1.0"
