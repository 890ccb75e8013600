"""Run the signaling protocol under each causal model and print what the lab can infer."""

from vcausal.kinematics import RoundTripScenario, Regime, paradox_threshold, run_round_trip
from vcausal.protocol import (
    GHZSource,
    ProtocolConfig,
    decision_schedule,
    influence_model,
    reachable,
    signaling_experiment,
)


def show_round_trips(ubar: float) -> None:
    print(f"Round trips at ubar={ubar} (paradox above v={paradox_threshold(ubar):.4f})")
    for v in (0.5, 0.75, 0.9):
        for regime in Regime:
            report = run_round_trip(RoundTripScenario(x1=1.0, v=v, ubar=ubar, regime=regime))
            flag = "PARADOX" if report.paradox else "ok"
            print(f"  v={v:<5} {regime.value:<9} total={report.total:+.5f}  {flag}")


def main():
    show_round_trips(2.0)

    config = ProtocolConfig(l=1.0, t_a=0.0, t_l=0.4, ubar=3.0, trials=1000)
    decisions = decision_schedule("random", 20, seed=42)
    print(f"\nGHZ protocol, reachable={reachable(config)}, 20 blocks of {config.trials} trials")

    for name, p in (("finite_speed", 1.0), ("agreement", 1.0), ("local_only", 0.0)):
        result = signaling_experiment(config, GHZSource(p), influence_model(name), decisions, seed=42)
        print(f"  {name:<13} p={p}  accuracy={result.accuracy:.2f}")
        # Uncomment to see every block:
        # for block in result.blocks:
        #     print(f"    {block.as_row()}")


if __name__ == "__main__":
    main()
