"""End-to-end tests for the command-line front end."""

import csv
import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from vcausal import __version__
from vcausal.cli import app
from vcausal.kinematics import SPEED_OF_LIGHT

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

runner = CliRunner()


def _invoke(*args: str):
    return runner.invoke(app, list(args))


def _json(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def _csv(result) -> list[dict[str, str]]:
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == f"# vcausal {__version__}"
    return list(csv.DictReader(lines[1:]))


def test_roundtrip_paradox() -> None:
    doc = _json(_invoke("roundtrip", "--v", "0.9", "--ubar", "2"))
    assert doc["version"] == __version__
    assert doc["experiment"] == "round_trip"
    (row,) = doc["rows"]
    assert row["paradox"] is True
    assert row["total"] == pytest.approx(-0.28677, abs=1e-5)
    assert doc["summary"]["paradox_threshold"] == pytest.approx(0.8)


def test_roundtrip_both_regimes() -> None:
    doc = _json(_invoke("roundtrip", "--v", "0.9", "--ubar", "2", "--regime", "both"))
    assert [(r["regime"], r["paradox"]) for r in doc["rows"]] == [("sr", True), ("preferred", False)]


def test_roundtrip_in_si_units() -> None:
    c = SPEED_OF_LIGHT
    doc = _json(
        _invoke("roundtrip", "--v", repr(0.9 * c), "--ubar", repr(2 * c), "--c", repr(c))
    )
    (row,) = doc["rows"]
    assert row["v"] == pytest.approx(0.9 * c)
    assert row["total"] == pytest.approx(-0.28677 / c, rel=1e-4)
    assert doc["summary"]["c"] == c


def test_scan_flips_between_080_and_085() -> None:
    rows = _csv(_invoke("scan", "--ubar", "2"))
    assert list(rows[0]) == ["v", "t1_prime", "delta_t_prime", "total", "paradox"]
    assert len(rows) == 19
    flags = {row["v"]: row["paradox"] for row in rows}
    assert flags["0.8"] == "false"
    assert flags["0.85"] == "true"
    assert [r["paradox"] for r in rows] == sorted(r["paradox"] for r in rows)


def test_scan_both_regimes_has_regime_column() -> None:
    rows = _csv(_invoke("scan", "--ubar", "3", "--regime", "both"))
    assert len(rows) == 38
    assert {r["regime"] for r in rows} == {"sr", "preferred"}
    assert all(r["paradox"] == "false" for r in rows if r["regime"] == "preferred")


def test_ghz_signaling_accuracy() -> None:
    doc = _json(_invoke("ghz", "--l", "1", "--t-l", "0.4", "--ubar", "3", "--seed", "7"))
    assert doc["seed"] == 7
    assert doc["summary"]["accuracy"] == 1.0
    assert doc["summary"]["reachable"] is True
    assert len(doc["rows"]) == 20


def test_ghz_agreement_variant() -> None:
    doc = _json(_invoke("ghz", "--l", "1", "--t-l", "0.4", "--ubar", "3", "--model", "agreement", "--seed", "7"))
    assert doc["summary"]["accuracy"] == 0.5


def test_ghz_explicit_decisions_as_csv() -> None:
    rows = _csv(
        _invoke(
            "ghz", "--l", "1", "--t-l", "0.4", "--ubar", "3",
            "--blocks", "3", "--decisions", "1,0,0", "--format", "csv",
        )
    )
    assert [r["decision"] for r in rows] == ["true", "false", "false"]
    assert all(r["correct"] == "true" for r in rows)


def test_worker_count_does_not_change_output() -> None:
    from_config = _invoke("run", str(CONFIGS / "ghz_signaling.json"))
    from_flags = _invoke("ghz", "--l", "1", "--t-l", "0.4", "--ubar", "3", "--seed", "7")
    assert from_config.exit_code == 0
    assert from_config.stdout == from_flags.stdout


@pytest.mark.parametrize("name", ["round_trip", "kinematics_scan", "malus", "chsh", "ghz_signaling"])
def test_reruns_are_byte_identical(name: str) -> None:
    path = str(CONFIGS / f"{name}.json")
    first = _invoke("run", path)
    second = _invoke("run", path)
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout


def test_seed_flag_overrides_config() -> None:
    doc = _json(_invoke("run", str(CONFIGS / "ghz_signaling.json"), "--seed", "8"))
    assert doc["seed"] == 8


def test_format_flag_overrides_config() -> None:
    rows = _csv(_invoke("run", str(CONFIGS / "round_trip.json"), "--format", "csv"))
    assert [r["regime"] for r in rows] == ["sr", "preferred"]


def test_out_writes_file(tmp_path: Path) -> None:
    target = tmp_path / "chsh.json"
    result = _invoke("chsh", "--trials", "4000", "--out", str(target))
    assert result.exit_code == 0, result.output
    assert result.stdout == ""
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["experiment"] == "chsh_run"
    assert len(doc["rows"]) == 4


def test_malus_deltas() -> None:
    rows = _csv(_invoke("malus", "--delta", "0", "--delta", "90", "--trials", "2000", "--format", "csv"))
    assert [r["delta"] for r in rows] == ["0.0", "90.0"]
    assert rows[0]["observed"] == "1.0"


def test_parse_error_exit_code(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{"seed": 1,', encoding="utf-8")
    result = _invoke("run", str(path))
    assert result.exit_code == 2
    assert "error:" in result.output


def test_unknown_field_exit_code(tmp_path: Path) -> None:
    path = tmp_path / "extra.json"
    path.write_text(json.dumps({"experiment": {"round_trip": {"v": 0.5, "ubar": 2, "colour": 1}}}), encoding="utf-8")
    assert _invoke("run", str(path)).exit_code == 2


def test_validation_error_exit_code() -> None:
    result = _invoke("roundtrip", "--v", "1.5", "--ubar", "2")
    assert result.exit_code == 3
    assert "|v| < 1" in result.output


def test_domain_error_exit_code() -> None:
    result = _invoke("roundtrip", "--v", "0.5", "--ubar", "2", "--c=-5")
    assert result.exit_code == 4
    assert "speed of light" in result.output


def test_missing_config_exit_code(tmp_path: Path) -> None:
    result = _invoke("run", str(tmp_path / "nope.json"))
    assert result.exit_code == 5


def test_unwritable_output_exit_code(tmp_path: Path) -> None:
    result = _invoke("roundtrip", "--v", "0.5", "--ubar", "2", "--out", str(tmp_path / "missing" / "out.json"))
    assert result.exit_code == 5
    assert "cannot write" in result.output


def _reject_constant(token: str) -> float:
    raise ValueError(f"non-standard JSON constant {token}")


@pytest.mark.parametrize("seed", range(10))
def test_sparse_malus_run_is_strict_json(seed: int) -> None:
    result = _invoke("malus", "--trials", "1", "--seed", str(seed))
    assert result.exit_code == 0, result.output
    doc = json.loads(result.stdout, parse_constant=_reject_constant)
    for row in doc["rows"]:
        if row["conditioned_trials"] == 0:
            assert row["observed"] is None
            assert row["sigma"] is None
    assert isinstance(doc["summary"]["max_deviation_sigmas"], float)


@pytest.mark.parametrize("name", ["round_trip", "ghz_signaling"])
@pytest.mark.parametrize("seed", ["-1", str(2**64), str(2**70)])
def test_out_of_range_seed_override(name: str, seed: str) -> None:
    result = _invoke("run", str(CONFIGS / f"{name}.json"), f"--seed={seed}")
    assert result.exit_code == 3
    assert "error:" in result.output


def test_out_of_range_seed_flag() -> None:
    assert _invoke("roundtrip", "--v", "0.5", "--ubar", "2", "--seed=-1").exit_code == 3


def test_oversized_scan_grid() -> None:
    result = _invoke("scan", "--ubar", "2", "--v-step", "1e-15")
    assert result.exit_code == 3
    assert "exceeds" in result.output
