import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from hopfbloch import TwoQubitState, bell_state, phase_aligned_distance
from hopfbloch.cli import main

from helpers import SQ2, random_states

PI = math.pi

CSV_HEADER = ("stage,s,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
              "delta_re,delta_im,theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b,"
              "concurrence,branch_flip")


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_coords_bell_00(capsys):
    code, out = run(capsys, ["coords", "--bell", "00"])
    assert code == 0
    record = json.loads(out)
    assert record["label"] == "bell_00"
    angles = record["angles"]
    for name in ("theta_a", "phi_a", "chi", "xi"):
        assert angles[name] == pytest.approx(PI / 2, abs=1e-9)
    assert angles["theta_b"] == pytest.approx(0.0, abs=1e-9)
    assert angles["zeta_b"] == 0.0
    assert record["concurrence"] == pytest.approx(1.0, abs=1e-9)
    assert record["t"]["ty"] == pytest.approx(1.0, abs=1e-9)
    assert record["cartesian"]["x3"] == pytest.approx(1.0, abs=1e-9)
    assert record["qubit_b"]["zb"] == pytest.approx(1.0, abs=1e-9)


def test_coords_product_state_flags(capsys):
    code, out = run(capsys, ["coords", "--state", "1,0;0,0;0,0;0,0"])
    assert code == 0
    record = json.loads(out)
    assert record["angles"]["theta_a"] == 0.0
    assert record["angles"]["theta_b"] == 0.0
    assert record["concurrence"] == 0.0
    assert "phi_a_undefined" in record["flags"]
    assert "t_undefined" in record["flags"]


def test_coords_south_pole_error(capsys):
    mu = 0.3
    state_arg = f"0,0;0,0;{math.cos(mu)!r},0;{math.sin(mu)!r},0"
    code, out = run(capsys, ["coords", "--state", state_arg])
    assert code == 3
    record = json.loads(out)
    assert record["error"] == "south_pole_a"
    assert record["psi_b"][0][0] == pytest.approx(math.cos(mu), abs=1e-12)
    assert record["psi_b"][1][0] == pytest.approx(math.sin(mu), abs=1e-12)


def test_coords_not_normalized_error(capsys):
    code, out = run(capsys, ["coords", "--state", "1,0;1,0;0,0;0,0"])
    assert code == 3
    assert json.loads(out)["error"] == "not_normalized"


def test_coords_parse_errors(capsys):
    code, out = run(capsys, ["coords", "--state", "1,0;2,0"])
    assert code == 2
    code, out = run(capsys, ["coords"])
    assert code == 2
    code, out = run(capsys, ["coords", "--bell", "07"])
    assert code == 2


def test_coords_fix_phase_and_canonical(capsys):
    # a state with a global phase: zeta_b moves into xi and phi_b
    code, out = run(capsys, ["coords", "--state",
                             "0.5,0.5;0.5,-0.5;0,0;0,0", "--fix-phase"])
    assert code == 0
    assert json.loads(out)["angles"]["zeta_b"] == 0.0


def test_amplitudes_bell_00(capsys):
    angles = f"{PI/2},{PI/2},{PI/2},{PI/2},0,0,0"
    code, out = run(capsys, ["amplitudes", "--angles", angles])
    assert code == 0
    amp = json.loads(out)["amplitudes"]
    got = TwoQubitState(*(complex(re, im) for re, im in amp))
    assert phase_aligned_distance(got, bell_state("00")) <= 1e-9


def test_amplitudes_zero_angles(capsys):
    code, out = run(capsys, ["amplitudes", "--angles", "0,0,0,0,0,0,0"])
    assert code == 0
    amp = json.loads(out)["amplitudes"]
    assert amp[0] == [1.0, 0.0]
    assert amp[1] == [0.0, 0.0] and amp[2] == [0.0, 0.0] and amp[3] == [0.0, 0.0]


def test_amplitudes_bell_01_and_roundtrip(capsys):
    angles = f"{PI/2},{PI/2},{PI/2},{3*PI/2},{PI},0,0"
    code, out = run(capsys, ["amplitudes", "--angles", angles, "--roundtrip"])
    assert code == 0
    record = json.loads(out)
    got = TwoQubitState(*(complex(re, im) for re, im in record["amplitudes"]))
    assert phase_aligned_distance(got, bell_state("01")) <= 1e-9
    assert record["roundtrip"]["amplitude_max_deviation"] <= 1e-9


def test_amplitudes_out_of_range(capsys):
    code, out = run(capsys, ["amplitudes", "--angles", "9,0,0,0,0,0,0"])
    assert code == 3
    assert json.loads(out)["error"] == "out_of_range"


def test_traj_unknown_gate(capsys):
    code, out = run(capsys, ["traj", "toffoli", "--bell", "00"])
    assert code == 4
    assert json.loads(out)["error"] == "unknown_gate"


def test_traj_csv_golden_shape(capsys):
    code, out = run(capsys, ["traj", "cz", "--bell", "10",
                             "--format", "csv", "--n1", "8", "--n2", "8"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 17
    assert all(len(line.split(",")) == 19 for line in lines)
    first = lines[1].split(",")
    last = lines[-1].split(",")
    assert float(first[13]) == pytest.approx(3 * PI / 2, abs=1e-9)
    assert float(last[13]) == pytest.approx(PI / 2, abs=1e-9)
    assert all(float(line.split(",")[17]) == pytest.approx(1.0, abs=1e-9)
               for line in lines[1:])


def test_traj_cnot_csv_endpoint(capsys):
    code, out = run(capsys, ["traj", "cnot", "--bell", "10",
                             "--format", "csv", "--n1", "4", "--n2", "4"])
    assert code == 0
    lines = out.strip().split("\n")
    first = lines[1].split(",")
    last = lines[-1].split(",")
    # b = sin(theta_a) sin(phi_a) vanishes at the end
    b_last = math.sin(float(last[10])) * math.sin(float(last[11]))
    assert abs(b_last) <= 1e-9
    assert float(last[14]) == pytest.approx(float(first[14]), abs=1e-9)
    assert float(last[15]) == pytest.approx(float(first[15]), abs=1e-9)


def test_traj_determinism_two_runs(capsys):
    args = ["traj", "cz", "--bell", "10", "--format", "csv",
            "--n1", "8", "--n2", "8"]
    _, out1 = run(capsys, args)
    _, out2 = run(capsys, args)
    assert out1 == out2
    args = ["coords", "--bell", "00"]
    _, out1 = run(capsys, args)
    _, out2 = run(capsys, args)
    assert out1 == out2


def test_traj_identity_rows_constant(capsys):
    code, out = run(capsys, ["traj", "cu", "--axis", "0,0,1",
                             "--eta", "0", "--omega", "0",
                             "--state", "0.5,0;0.5,0;0.5,0;0.5,0",
                             "--format", "csv", "--n1", "2", "--n2", "2"])
    assert code == 0
    lines = out.strip().split("\n")
    # stage and s differ between rows; every data cell must not
    rows = [line.split(",")[2:] for line in lines[1:]]
    assert all(row == rows[0] for row in rows)


def test_traj_svg_schema(capsys):
    code, out = run(capsys, ["traj", "swap",
                             "--state", f"{SQ2},0;0,{SQ2};0,0;0,0",
                             "--format", "svg", "--n1", "6", "--n2", "6"])
    assert code == 0
    root = ET.fromstring(out)
    groups = [el for el in root.iter("{http://www.w3.org/2000/svg}g")
              if el.get("class") == "sphere"]
    assert len(groups) == 3


def test_traj_json_fields(capsys):
    code, out = run(capsys, ["traj", "cz", "--bell", "10",
                             "--n1", "2", "--n2", "2"])
    assert code == 0
    record = json.loads(out)
    assert record["gate"]["kind"] == "cz"
    assert len(record["samples"]) == 4
    sample = record["samples"][0]
    assert set(sample) == {"stage", "s", "amplitudes", "angles",
                           "concurrence", "flags", "branch_flip"}


def test_json_roundtrip_random_states(capsys):
    rng = np.random.default_rng(61)
    for s in random_states(rng, 10):
        state_arg = ";".join(f"{z.real!r},{z.imag!r}" for z in s.amplitudes())
        # (the --state= form keeps argparse from eating a leading minus)
        code, out = run(capsys, ["coords", "--state=" + state_arg])
        if code == 3:
            continue
        assert code == 0
        angles = json.loads(out)["angles"]
        angle_arg = ",".join(repr(angles[k]) for k in
                             ("theta_a", "phi_a", "chi", "xi",
                              "theta_b", "phi_b", "zeta_b"))
        code, out = run(capsys, ["amplitudes", "--angles", angle_arg])
        assert code == 0
        got = TwoQubitState(*(complex(re, im)
                              for re, im in json.loads(out)["amplitudes"]))
        assert phase_aligned_distance(got, s) <= 1e-9


def test_check_command(capsys):
    code, out = run(capsys, ["check", "--seed", "5", "--count", "40"])
    assert code == 0
    assert out.count("ok  ") == 6
    code, out = run(capsys, ["check", "--bell", "00"])
    assert code == 0


def test_check_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("HOPFBLOCH_SEED", "123")
    _, out1 = run(capsys, ["check", "--seed", "5", "--count", "20"])
    monkeypatch.setenv("HOPFBLOCH_SEED", "123")
    _, out2 = run(capsys, ["check", "--seed", "99", "--count", "20"])
    assert out1 == out2
    monkeypatch.delenv("HOPFBLOCH_SEED")
    _, out3 = run(capsys, ["check", "--seed", "99", "--count", "20"])
    assert out3 != out1


def test_traj_small_sample_counts_rejected(capsys):
    code, out = run(capsys, ["traj", "cz", "--bell", "00", "--n1", "1"])
    assert code == 2
    assert json.loads(out)["error"] == "parse"


def test_non_finite_state_rejected(capsys):
    code, out = run(capsys, ["coords", "--state", "nan,0;0,0;0,0;0,0"])
    assert code == 3
    assert json.loads(out)["error"] == "not_normalized"


def test_traj_with_south_pole_samples(capsys):
    # a path pinned to the |1>_A family: every row flagged, none fatal
    code, out = run(capsys, ["traj", "cu", "--axis", "0,0,1",
                             "--eta", "0", "--omega", "0",
                             "--state", "0,0;0,0;0.6,0;0.8,0",
                             "--format", "json", "--n1", "2", "--n2", "2"])
    assert code == 0
    record = json.loads(out)
    assert len(record["samples"]) == 4
    for sample in record["samples"]:
        assert "south_pole_a" in sample["flags"]
        assert sample["angles"]["theta_a"] == pytest.approx(math.pi)
