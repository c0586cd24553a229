"""Command-line front end: state <-> coordinates conversion, gate
trajectories, and an invariant check sweep.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 unknown gate.
All numbers are emitted with 12 significant digits so identical inputs
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import svg
from .bloch import (
    BlochCoordinates,
    alternate,
    canonicalize,
    extract,
    normalize_global_phase,
    reconstruct,
)
from .errors import HopfBlochError, NotNormalized, OutOfRange, SouthPoleA, UnknownGate
from .gates import GateSpec, Trajectory, trajectory
from .hopf import CoordFlag, h1, inverse_stereographic
from .quaternion import Quaternion, angle_distance
from .state import (
    Basis,
    TwoQubitState,
    bell_state,
    concurrence,
    partial_trace_projection,
    phase_aligned_distance,
    quasi_density,
    quasi_state,
    reduced_density,
)
from .tolerances import EPS_NUM


class ParseError(Exception):
    pass


def _round12(v: float) -> float:
    return float(f"{v:.12g}")


def _pair(z: complex) -> list[float]:
    return [_round12(z.real), _round12(z.imag)]


def _angles_dict(c: BlochCoordinates) -> dict:
    return {name: _round12(val)
            for name, val in zip(("theta_a", "phi_a", "chi", "xi",
                                  "theta_b", "phi_b", "zeta_b"), c.angles())}


def _coords_record(c: BlochCoordinates, label: str | None) -> dict:
    p = c.s4_point
    t = c.t
    xb, yb, zb = c.qubit_b_vector
    alt = alternate(c)
    record = {}
    if label is not None:
        record["label"] = label
    record.update({
        "angles": _angles_dict(c),
        "cartesian": {k: _round12(v) for k, v in
                      (("x0", p.x0), ("x1", p.x1), ("x2", p.x2),
                       ("x3", p.x3), ("x4", p.x4))},
        "t": {"tx": _round12(t.tx), "ty": _round12(t.ty), "tz": _round12(t.tz)},
        "qubit_b": {"xb": _round12(xb), "yb": _round12(yb), "zb": _round12(zb)},
        "concurrence": _round12(c.concurrence),
        "flags": sorted(f.value for f in c.flags),
        "alternate": _angles_dict(alt),
    })
    return record


def _state_record(s: TwoQubitState, label: str | None) -> dict:
    record = {}
    if label is not None:
        record["label"] = label
    record["amplitudes"] = [_pair(z) for z in s.amplitudes()]
    return record


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_state(args) -> tuple[TwoQubitState, str | None]:
    if args.bell is not None:
        if args.bell not in ("00", "01", "10", "11"):
            raise ParseError(f"--bell takes 00, 01, 10 or 11, got {args.bell!r}")
        return bell_state(args.bell), f"bell_{args.bell}"
    if args.state is None:
        raise ParseError("provide --state or --bell")
    parts = args.state.split(";")
    if len(parts) != 4:
        raise ParseError("--state needs four 're,im' pairs separated by ';'")
    amps = []
    for part in parts:
        fields = part.split(",")
        if len(fields) != 2:
            raise ParseError(f"bad amplitude {part!r}, expected 're,im'")
        try:
            amps.append(complex(float(fields[0]), float(fields[1])))
        except ValueError as exc:
            raise ParseError(f"bad amplitude {part!r}: {exc}") from None
    return TwoQubitState(*amps), None


def _south_pole_payload(exc: SouthPoleA) -> dict:
    return {
        "error": "south_pole_a",
        "message": str(exc),
        "psi_b": [_pair(z) for z in exc.psi_b],
    }


def cmd_coords(args) -> int:
    state, label = _parse_state(args)
    try:
        coords = extract(state)
    except SouthPoleA as exc:
        _emit(_south_pole_payload(exc))
        return 3
    if args.fix_phase:
        coords = normalize_global_phase(coords)
    if args.canonical:
        coords = canonicalize(coords)
    _emit(_coords_record(coords, label))
    return 0


def _parse_angles(text: str) -> BlochCoordinates:
    fields = text.split(",")
    if len(fields) != 7:
        raise ParseError("--angles needs 7 comma-separated radians: "
                         "theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b")
    try:
        values = [float(f) for f in fields]
    except ValueError as exc:
        raise ParseError(f"bad angle list: {exc}") from None
    return BlochCoordinates(*values)


def cmd_amplitudes(args) -> int:
    coords = _parse_angles(args.angles)
    state = reconstruct(coords)
    record = _state_record(state, None)
    if args.roundtrip:
        try:
            again = extract(state)
            angle_dev = max(angle_distance(x, y) for x, y in
                            zip(again.angles(), canonicalize(coords).angles()))
            amp_dev = phase_aligned_distance(state, reconstruct(again))
            record["roundtrip"] = {
                "angle_max_deviation": _round12(angle_dev),
                "amplitude_max_deviation": _round12(amp_dev),
                "flags": sorted(f.value for f in again.flags),
            }
        except SouthPoleA as exc:
            record["roundtrip"] = _south_pole_payload(exc)
    _emit(record)
    return 0


def _make_gate(args) -> GateSpec:
    name = args.gate.lower()
    if name == "cnot":
        return GateSpec.cnot()
    if name == "cz":
        return GateSpec.cz()
    if name == "swap":
        return GateSpec.swap()
    if name in ("cu", "controlled-u"):
        if args.axis is None:
            raise ParseError("controlled-U needs --axis nx,ny,nz")
        fields = args.axis.split(",")
        if len(fields) != 3:
            raise ParseError("--axis needs 3 comma-separated components")
        axis = tuple(float(f) for f in fields)
        return GateSpec.controlled_u(axis, args.omega, args.eta)
    raise UnknownGate(f"unknown gate {args.gate!r}; use cnot, cz, swap or cu")


_CSV_HEADER = ("stage,s,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
               "delta_re,delta_im,theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b,"
               "concurrence,branch_flip")


def _traj_csv(traj: Trajectory) -> str:
    lines = [_CSV_HEADER]
    for smp in traj.samples:
        cells = [smp.stage.value, f"{smp.s:.12g}"]
        for z in smp.state.amplitudes():
            cells += [f"{z.real:.12g}", f"{z.imag:.12g}"]
        cells += [f"{a:.12g}" for a in smp.coords.angles()]
        cells.append(f"{smp.coords.concurrence:.12g}")
        cells.append("1" if smp.branch_flip else "0")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _traj_json(traj: Trajectory) -> dict:
    g = traj.gate
    return {
        "gate": {
            "kind": g.kind.value,
            "axis": [_round12(a) for a in g.axis],
            "eta": _round12(g.eta),
            "omega": _round12(g.omega),
        },
        "samples": [
            {
                "stage": smp.stage.value,
                "s": _round12(smp.s),
                "amplitudes": [_pair(z) for z in smp.state.amplitudes()],
                "angles": _angles_dict(smp.coords),
                "concurrence": _round12(smp.coords.concurrence),
                "flags": sorted(f.value for f in smp.coords.flags),
                "branch_flip": smp.branch_flip,
            }
            for smp in traj.samples
        ],
    }


def _traj_svg(traj: Trajectory) -> str:
    sphere_a, sphere_t, sphere_b = [], [], []
    for smp in traj.samples:
        c = smp.coords
        sphere_a.append((c.x1, c.b, c.x0))
        t = c.t
        sphere_t.append((t.tx, t.ty, t.tz))
        sphere_b.append(c.qubit_b_vector)
    return svg.render_spheres([sphere_a, sphere_t, sphere_b])


def cmd_traj(args) -> int:
    if args.n1 < 2 or args.n2 < 2:
        raise ParseError("--n1 and --n2 must be at least 2")
    gate = _make_gate(args)
    state, _ = _parse_state(args)
    traj = trajectory(gate, state, args.n1, args.n2)
    if args.format == "csv":
        sys.stdout.write(_traj_csv(traj))
    elif args.format == "svg":
        sys.stdout.write(_traj_svg(traj))
    else:
        _emit(_traj_json(traj))
    return 0


def _dense_reduced(vec: np.ndarray, keep: Basis) -> np.ndarray:
    rho = np.outer(vec, vec.conj()).reshape(2, 2, 2, 2)
    if keep is Basis.A:
        return np.trace(rho, axis1=1, axis2=3)
    return np.trace(rho, axis1=0, axis2=2)


def _random_states(rng: np.random.Generator, count: int):
    raw = rng.normal(size=(count, 8))
    for row in raw:
        vec = row[0::2] + 1j * row[1::2]
        vec /= np.linalg.norm(vec)
        if 1.0 + (abs(vec[0]) ** 2 + abs(vec[1]) ** 2
                  - abs(vec[2]) ** 2 - abs(vec[3]) ** 2) <= 1e-6:
            continue
        yield TwoQubitState.from_vector(vec)


def cmd_check(args) -> int:
    seed_env = os.environ.get("HOPFBLOCH_SEED")
    seed = int(seed_env) if seed_env is not None else args.seed
    rng = np.random.default_rng(seed)
    tol = args.tolerance

    if args.state is not None or args.bell is not None:
        states = [_parse_state(args)[0]]
    else:
        states = list(_random_states(rng, args.count))

    worst = {
        "round_trip": 0.0,
        "concurrence_identity": 0.0,
        "projector": 0.0,
        "reduced_vs_oracle": 0.0,
        "ball_identity": 0.0,
        "fiber_invariance": 0.0,
    }
    for s in states:
        try:
            coords = extract(s)
        except SouthPoleA:
            continue
        back = reconstruct(coords)
        worst["round_trip"] = max(worst["round_trip"],
                                  phase_aligned_distance(s, back))

        c, _ = concurrence(s)
        claim = c * np.exp(1j * (coords.xi - 0.5 * math.pi))
        det2 = 2.0 * (s.alpha * s.delta - s.beta * s.gamma)
        dev = abs(c - coords.concurrence)
        if CoordFlag.XI_UNDEFINED not in coords.flags:
            dev = max(dev, abs(claim - det2))
        worst["concurrence_identity"] = max(worst["concurrence_identity"], dev)

        rho = quasi_density(quasi_state(s, Basis.A))
        sq = rho.matmul(rho)
        proj_dev = abs(rho.trace - 1.0)
        for e1, e2 in zip(sq.entries(), rho.entries()):
            diff = e1 - e2
            proj_dev = max(proj_dev, diff.norm())
        worst["projector"] = max(worst["projector"], proj_dev)

        for keep in (Basis.A, Basis.B):
            dense = _dense_reduced(s.vector, keep)
            worst["reduced_vs_oracle"] = max(
                worst["reduced_vs_oracle"],
                float(np.max(np.abs(reduced_density(s, keep) - dense))))

        p = coords.s4_point
        ball = p.x0 ** 2 + p.x1 ** 2 + p.x4 ** 2 + p.c ** 2
        worst["ball_identity"] = max(worst["ball_identity"], abs(ball - 1.0))
        proj = partial_trace_projection(p)
        worst["reduced_vs_oracle"] = max(
            worst["reduced_vs_oracle"],
            float(np.max(np.abs(proj - _dense_reduced(s.vector, Basis.A)))))

        qs = quasi_state(s, Basis.A)
        raw = rng.normal(size=4)
        fib = Quaternion(*(raw / np.linalg.norm(raw)))
        try:
            base = inverse_stereographic(h1(qs.q0, qs.q1))
            moved = inverse_stereographic(h1(qs.q0 * fib, qs.q1 * fib))
            fiber_dev = max(abs(a - b) for a, b in
                            zip((base.x0, base.x1, base.x2, base.x3, base.x4),
                                (moved.x0, moved.x1, moved.x2, moved.x3, moved.x4)))
            worst["fiber_invariance"] = max(worst["fiber_invariance"], fiber_dev)
        except HopfBlochError:
            pass

    failed = False
    for name, value in worst.items():
        ok = value <= tol
        failed = failed or not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name:24s} max_err={value:.3e}")
    print(f"checked {len(states)} state(s), tolerance {tol:g}")
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfbloch",
        description="Convert two-qubit pure states to three-sphere Bloch "
                    "coordinates and back, and sample gate trajectories.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_args(p):
        p.add_argument("--state",
                       help="amplitudes as 're,im;re,im;re,im;re,im' (use the "
                            "--state=... form when the first value is negative)")
        p.add_argument("--bell", help="Bell preset: 00, 01, 10 or 11")

    p_coords = sub.add_parser("coords", help="state -> seven angles")
    add_state_args(p_coords)
    p_coords.add_argument("--fix-phase", action="store_true",
                          help="shift xi and phi_b by 2*zeta_b and zero zeta_b")
    p_coords.add_argument("--canonical", action="store_true",
                          help="force the b >= 0 branch")
    p_coords.add_argument("--format", choices=["json"], default="json")
    p_coords.set_defaults(func=cmd_coords)

    p_amp = sub.add_parser("amplitudes", help="seven angles -> state")
    p_amp.add_argument("--angles", required=True,
                       help="theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b (radians)")
    p_amp.add_argument("--roundtrip", action="store_true",
                       help="re-extract and report the max deviation")
    p_amp.set_defaults(func=cmd_amplitudes)

    p_traj = sub.add_parser("traj", help="two-step gate trajectory")
    p_traj.add_argument("gate", help="cnot, cz, swap or cu")
    add_state_args(p_traj)
    p_traj.add_argument("--axis", help="controlled-U axis as 'nx,ny,nz'")
    p_traj.add_argument("--eta", type=float, default=math.pi / 2,
                        help="controlled-U phase endpoint (radians)")
    p_traj.add_argument("--omega", type=float, default=math.pi,
                        help="controlled-U rotation endpoint (radians)")
    p_traj.add_argument("--n1", type=int, default=32, help="phase-ramp samples")
    p_traj.add_argument("--n2", type=int, default=32, help="rotation-ramp samples")
    p_traj.add_argument("--format", choices=["json", "csv", "svg"],
                        default="json")
    p_traj.set_defaults(func=cmd_traj)

    p_check = sub.add_parser("check", help="run the invariant sweep")
    add_state_args(p_check)
    p_check.add_argument("--seed", type=int, default=0,
                         help="rng seed (HOPFBLOCH_SEED overrides)")
    p_check.add_argument("--count", type=int, default=500,
                         help="number of random states")
    p_check.add_argument("--tolerance", type=float, default=EPS_NUM)
    p_check.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        _emit({"error": "parse", "message": str(exc)})
        return 2
    except UnknownGate as exc:
        _emit({"error": "unknown_gate", "message": str(exc)})
        return 4
    except SouthPoleA as exc:
        _emit(_south_pole_payload(exc))
        return 3
    except (NotNormalized, OutOfRange) as exc:
        kind = "not_normalized" if isinstance(exc, NotNormalized) else "out_of_range"
        _emit({"error": kind, "message": str(exc)})
        return 3
    except HopfBlochError as exc:
        _emit({"error": "domain", "message": str(exc)})
        return 3


if __name__ == "__main__":
    sys.exit(main())
