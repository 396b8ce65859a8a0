from __future__ import annotations

import json

import pytest

from boxpart.cli import build_parser, main, sample_volumes
from boxpart.ensembles import distribution, pp


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_dist_json_round_trip(capsys):
    code, out = run(capsys, "dist", "pp", "--r", "2", "--s", "2", "--t", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == "1"
    assert payload["spec"] == {"kind": "pp", "r": 2, "s": 2, "t": 2}
    assert payload["bounding_volume"] == 8
    assert payload["total"] == "20"
    assert [int(c) for c in payload["counts"]] == [1, 1, 3, 3, 4, 3, 3, 1, 1]


def test_dist_csv(capsys):
    code, out = run(capsys, "dist", "spp", "--r", "2", "--t", "1",
                    "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["volume,count", "0,1", "1,1", "2,0",
                                "3,1", "4,1"]


def test_output_bytes_are_stable(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    for path in (first, second):
        code = main(["dist", "cspp", "--r", "3", "--out", str(path)])
        assert code == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    assert first.read_bytes().endswith(b"\n")


def test_moments_reports_exact_agreement(capsys):
    code, out = run(capsys, "moments", "spp", "--r", "3", "--t", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["equal"] is True
    assert payload["mean_closed"] == "9"
    assert payload["mean_closed"] == payload["mean_empirical"]


def test_converge_gaussian_family(capsys):
    code, out = run(capsys, "converge", "--family", "pp-cube",
                    "--sizes", "2,4", "--law", "gaussian")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size,ks_distance"
    assert lines[-1] == "# nonincreasing: true"
    sizes = [line.split(",")[0] for line in lines[1:-1]]
    assert sizes == ["2", "4"]
    values = [float(line.split(",")[1]) for line in lines[1:-1]]
    assert values[1] < values[0]


def test_converge_size_range_syntax(capsys):
    code, out = run(capsys, "converge", "--family", "cspp",
                    "--sizes", "2..4", "--law", "gaussian")
    assert code == 0
    assert len(out.splitlines()) == 5


def test_converge_uniform_family_needs_fixed_sides(capsys):
    code, _ = run(capsys, "converge", "--family", "pp-fixed-rs",
                  "--sizes", "4,8", "--law", "uniform-conv")
    assert code == 2
    code, out = run(capsys, "converge", "--family", "pp-fixed-rs",
                    "--r", "2", "--s", "2", "--sizes", "4,8",
                    "--law", "uniform-conv")
    assert code == 0
    assert out.splitlines()[-1] == "# nonincreasing: true"


def test_converge_rejects_mismatched_law(capsys):
    code, _ = run(capsys, "converge", "--family", "pp-cube",
                  "--sizes", "2,4", "--law", "uniform-conv")
    assert code == 2


def test_ferrers_joint_csv(capsys):
    code, out = run(capsys, "ferrers", "--m", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["height,area,count", "1,3,1", "2,3,1",
                                "2,4,1", "3,3,1"]


def test_ferrers_diagnostics_json(capsys):
    code, out = run(capsys, "ferrers", "--m", "8", "--what", "diagnostics")
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 8
    assert payload["correlation"] == 0.0
    assert payload["standardized_height_variance"] == "1"
    assert len(payload["conditional_gaussian_ks"]) == 3


def test_ferrers_diagnostics_json_only(capsys):
    code, _ = run(capsys, "ferrers", "--m", "8", "--what", "diagnostics",
                  "--format", "csv")
    assert code == 2


def test_sample_is_deterministic(capsys):
    argv = ("sample", "pp", "--r", "2", "--s", "2", "--t", "2",
            "--n", "6", "--seed", "11")
    code, first = run(capsys, *argv)
    assert code == 0
    code, second = run(capsys, *argv)
    assert first == second
    payload = json.loads(first)
    assert len(payload["volumes"]) == 6
    assert all(0 <= v <= 8 for v in payload["volumes"])


def test_sample_volumes_tracks_distribution():
    dist = distribution(pp(2, 2, 2))
    draws = sample_volumes(dist, 20_000, seed=5)
    mean = sum(draws) / len(draws)
    assert abs(mean - 4.0) < 0.1
    assert set(draws) <= set(range(9))


def test_usage_errors_exit_2(capsys):
    code, _ = run(capsys, "dist", "pp", "--r", "2", "--s", "2")
    assert code == 2
    code, _ = run(capsys, "dist", "pp", "--r", "2", "--s", "2", "--t", "2",
                  "--m", "1")
    assert code == 2
    code, _ = run(capsys, "dist", "pp", "--r", "0", "--s", "1", "--t", "1")
    assert code == 2
    code, _ = run(capsys, "sample", "pp", "--r", "1", "--s", "1", "--t", "1",
                  "--n", "0")
    assert code == 2
    code, _ = run(capsys, "no-such-command")
    assert code == 2


def test_cap_errors_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("BOXPART_DEGREE_CAP", "50")
    code, _ = run(capsys, "dist", "pp", "--r", "5", "--s", "5", "--t", "5")
    assert code == 3
    monkeypatch.delenv("BOXPART_DEGREE_CAP")
    code, _ = run(capsys, "ferrers", "--m", "500")
    assert code == 3


def test_help_exits_zero(capsys):
    code, _ = run(capsys, "--help")
    assert code == 0
    parser = build_parser()
    assert parser.prog == "boxpart"
