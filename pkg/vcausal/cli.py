"""CLI entry point."""

from __future__ import annotations

from pathlib import Path
from typing import Any, List, NoReturn, Optional

import typer
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

app = typer.Typer(help="EPR/GHZ correlation and superluminal-signal simulator")

FORMAT_HELP = "Output format: csv or json"
SEED_HELP = "Seed (overrides the config file)"
OUT_HELP = "Write results to this file instead of stdout"
C_HELP = "Speed of light in m/s: speeds are then read and written in m/s, times in s"


@app.callback()
def main(
    log_level: str = typer.Option(
        "WARNING",
        "--log-level",
        envvar="VCAUSAL_LOG_LEVEL",
        help="DEBUG, INFO, WARNING or ERROR (logs go to stderr)",
    ),
) -> None:
    from vcausal.logs import configure_logging

    try:
        configure_logging(log_level)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="--log-level")


def _fail(exc: Exception, code: int) -> NoReturn:
    typer.echo(f"error: {exc}", err=True)
    raise typer.Exit(code)


def _execute(
    experiment: dict[str, Any],
    seed: Optional[int],
    fmt: Optional[str],
    out: Optional[Path],
    default_format: str = "json",
    c: Optional[float] = None,
) -> None:
    """Validate a flag-built experiment exactly like a config file, then run it."""
    from vcausal.errors import ConfigError
    from vcausal.orchestration import config_from_mapping, run_experiment

    data: dict[str, Any] = {
        "seed": 0 if seed is None else seed,
        "experiment": experiment,
        "output": {"format": fmt or default_format},
    }
    if c is not None:
        data["c"] = c
    try:
        config = config_from_mapping(data)
    except ConfigError as exc:
        _fail(exc, exc.exit_code)
    status = run_experiment(config, out=None if out is None else str(out))
    raise typer.Exit(status)


def _natural(value: float, c: Optional[float]) -> float:
    """Flag speed in natural units; with --c the flag is in m/s."""
    from vcausal.errors import DomainError
    from vcausal.kinematics import Units

    if c is None:
        return value
    try:
        return Units(c).to_beta(value)
    except DomainError as exc:
        _fail(exc, exc.exit_code)


@app.command()
def run(
    config_path: Path = typer.Argument(..., help="JSON experiment description"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Run the experiment described by a config file."""
    from vcausal.errors import ConfigError, OutputError, ParseError
    from vcausal.orchestration import parse_config, run_experiment

    try:
        text = config_path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        _fail(ParseError(f"config is not UTF-8: {exc.reason}"), ParseError.exit_code)
    except OSError as exc:
        _fail(OutputError(f"cannot read {config_path}: {exc.strerror or exc}"), OutputError.exit_code)
    try:
        config = parse_config(text)
    except ConfigError as exc:
        _fail(exc, exc.exit_code)
    status = run_experiment(config, seed=seed, fmt=fmt, out=None if out is None else str(out))
    raise typer.Exit(status)


@app.command()
def roundtrip(
    v: float = typer.Option(..., "--v", help="Frame speed of S' (0 < v < 1)"),
    ubar: float = typer.Option(..., "--ubar", help="Superluminal signal speed (ubar > 1)"),
    x1: float = typer.Option(1.0, "--x1", help="Target position in S"),
    regime: str = typer.Option("sr", "--regime", "-r", help="sr, preferred or both"),
    c: Optional[float] = typer.Option(None, "--c", help=C_HELP),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Build one superluminal round trip and report whether it is a paradox."""
    experiment = {
        "round_trip": {"x1": x1, "v": _natural(v, c), "ubar": _natural(ubar, c), "regime": regime}
    }
    _execute(experiment, seed, fmt, out, c=c)


@app.command()
def scan(
    ubar: float = typer.Option(..., "--ubar", help="Superluminal signal speed (ubar > 1)"),
    x1: float = typer.Option(1.0, "--x1", help="Target position in S"),
    v_start: float = typer.Option(0.05, "--v-start", help="First frame speed"),
    v_stop: float = typer.Option(0.95, "--v-stop", help="Last frame speed (inclusive)"),
    v_step: float = typer.Option(0.05, "--v-step", help="Grid step"),
    regime: str = typer.Option("sr", "--regime", "-r", help="sr, preferred or both"),
    c: Optional[float] = typer.Option(None, "--c", help=C_HELP),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Scan frame speeds at fixed ubar; CSV by default."""
    experiment = {
        "kinematics_scan": {
            "ubar": _natural(ubar, c),
            "x1": x1,
            "v_start": _natural(v_start, c),
            "v_stop": _natural(v_stop, c),
            "v_step": _natural(v_step, c),
            "regime": regime,
        }
    }
    _execute(experiment, seed, fmt, out, default_format="csv", c=c)


def _source(kind: str, axis: Optional[float]) -> dict[str, Any]:
    source: dict[str, Any] = {"kind": kind}
    if axis is not None:
        source["axis_deg"] = axis
    return source


@app.command()
def malus(
    source: str = typer.Option("entangled", "--source", help="entangled or mixture"),
    axis: Optional[float] = typer.Option(None, "--axis", help="Mixture axis in degrees"),
    alpha: float = typer.Option(0.0, "--alpha", help="Polarizer I angle in degrees"),
    delta: Optional[List[float]] = typer.Option(None, "--delta", help="Relative angle in degrees (repeatable)"),
    trials: int = typer.Option(100_000, "--trials", "-n", help="Pairs per relative angle"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Check Malus' law for nu2 conditioned on nu1 being transmitted."""
    body: dict[str, Any] = {"source": _source(source, axis), "alpha_deg": alpha, "trials": trials}
    if delta:
        body["deltas_deg"] = list(delta)
    _execute({"malus_run": body}, seed, fmt, out)


@app.command()
def chsh(
    source: str = typer.Option("entangled", "--source", help="entangled or mixture"),
    axis: Optional[float] = typer.Option(None, "--axis", help="Mixture axis in degrees"),
    settings: str = typer.Option(
        "0,45,22.5,67.5", "--settings", help="a,a',b,b' in degrees"
    ),
    trials: int = typer.Option(1_000_000, "--trials", "-n", help="Total pairs, split over four settings"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Estimate the CHSH statistic S."""
    try:
        angles = [float(s) for s in settings.split(",") if s.strip()]
    except ValueError:
        raise typer.BadParameter(f"settings must be comma-separated numbers, got {settings}")
    body = {"source": _source(source, axis), "settings_deg": angles, "trials": trials}
    _execute({"chsh_run": body}, seed, fmt, out)


@app.command()
def ghz(
    l: float = typer.Option(..., "--l", help="Distance from Alice to the lab"),
    t_l: float = typer.Option(..., "--t-l", help="Bob's and Charlie's measurement instant"),
    ubar: float = typer.Option(..., "--ubar", help="Influence speed (ubar > 1)"),
    t_a: float = typer.Option(0.0, "--t-a", help="Alice's measurement instant"),
    p: float = typer.Option(1.0, "--p", help="Fraction of trials emitted in the GHZ state"),
    model: str = typer.Option("finite_speed", "--model", "-m", help="finite_speed, agreement or local_only"),
    blocks: int = typer.Option(20, "--blocks", "-b", help="Number of blocks"),
    trials: int = typer.Option(1000, "--trials", "-n", help="Trials per block"),
    decisions: str = typer.Option("alternating", "--decisions", help="alternating, random or e.g. 1,0,1"),
    threshold: float = typer.Option(0.75, "--threshold", help="Agreement rate that signals a measurement"),
    workers: int = typer.Option(1, "--workers", "-w", help="Threads running blocks"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=FORMAT_HELP),
    seed: Optional[int] = typer.Option(None, "--seed", "-s", help=SEED_HELP),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help=OUT_HELP),
) -> None:
    """Run the superluminal signaling protocol over blocks of GHZ trials."""
    schedule: Any = decisions
    if decisions not in ("alternating", "random"):
        try:
            schedule = [bool(int(d)) for d in decisions.split(",") if d.strip()]
        except ValueError:
            raise typer.BadParameter(f"decisions must be alternating, random or 0/1 values, got {decisions}")
    body = {
        "l": l, "t_a": t_a, "t_l": t_l, "ubar": ubar, "trials": trials, "p": p,
        "model": model, "blocks": blocks, "decisions": schedule,
        "threshold": threshold, "workers": workers,
    }
    _execute({"ghz_signaling": body}, seed, fmt, out)


if __name__ == "__main__":
    app()
