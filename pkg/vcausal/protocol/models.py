"""Causal models linking Alice's measurement to Bob's and Charlie's outcomes."""

from __future__ import annotations

from enum import Enum
from typing import Protocol

import numpy as np

from vcausal.errors import ModelSourceConflict
from vcausal.protocol.setup import GHZSource


class InfluenceKind(str, Enum):
    FINITE_SPEED = "finite_speed"
    AGREEMENT = "agreement"
    LOCAL_ONLY = "local_only"


class InfluenceModel(Protocol):
    """How the GHZ-entangled trials resolve.

    Product-state trials never reach the model: all three photons already carry
    the hidden polarization.
    """

    @property
    def kind(self) -> InfluenceKind:
        ...

    def check_source(self, source: GHZSource) -> None:
        """Raise ModelSourceConflict if the model cannot explain this source."""
        ...

    def correlate(
        self,
        alice: np.ndarray,
        influenced: bool,
        rng: np.random.Generator,
    ) -> tuple[np.ndarray, np.ndarray]:
        """Bob's and Charlie's outcomes (True = H) for entangled trials.

        Args:
            alice: Alice's outcomes, one per trial.
            influenced: whether Alice measured and her influence arrives in time.
            rng: stream to draw unforced outcomes from.
        """
        ...

    def ghz_agreement(self, influenced: bool) -> float:
        """Probability that Bob and Charlie agree on an entangled trial."""
        ...


class FiniteSpeedVCausal:
    """Influences travel at exactly ubar from the measuring site, in the privileged frame.

    Bob and Charlie measure simultaneously, so without Alice's influence nothing
    connects them and each outcome is a fair draw.
    """

    @property
    def kind(self) -> InfluenceKind:
        return InfluenceKind.FINITE_SPEED

    def check_source(self, source: GHZSource) -> None:
        return None

    def correlate(
        self,
        alice: np.ndarray,
        influenced: bool,
        rng: np.random.Generator,
    ) -> tuple[np.ndarray, np.ndarray]:
        if influenced:
            return alice, alice
        bob = rng.random(alice.size) < 0.5
        charlie = rng.random(alice.size) < 0.5
        return bob, charlie

    def ghz_agreement(self, influenced: bool) -> float:
        return 1.0 if influenced else 0.5


class AgreementVariant:
    """Bob's and Charlie's devices settle on a common outcome before concluding.

    They always agree, with or without Alice, so agreement carries no signal.
    """

    @property
    def kind(self) -> InfluenceKind:
        return InfluenceKind.AGREEMENT

    def check_source(self, source: GHZSource) -> None:
        return None

    def correlate(
        self,
        alice: np.ndarray,
        influenced: bool,
        rng: np.random.Generator,
    ) -> tuple[np.ndarray, np.ndarray]:
        if influenced:
            return alice, alice
        shared = rng.random(alice.size) < 0.5
        return shared, shared

    def ghz_agreement(self, influenced: bool) -> float:
        return 1.0


class LocalOnly:
    """Outcomes fixed by the source's hidden product state; only valid for p = 0."""

    @property
    def kind(self) -> InfluenceKind:
        return InfluenceKind.LOCAL_ONLY

    def check_source(self, source: GHZSource) -> None:
        if source.p > 0.0:
            raise ModelSourceConflict(
                f"the local-only model cannot produce GHZ-entangled trials (p={source.p}); use p = 0"
            )

    def correlate(
        self,
        alice: np.ndarray,
        influenced: bool,
        rng: np.random.Generator,
    ) -> tuple[np.ndarray, np.ndarray]:
        raise ModelSourceConflict("the local-only model has no entangled trials to resolve")

    def ghz_agreement(self, influenced: bool) -> float:
        raise ModelSourceConflict("the local-only model has no entangled trials to resolve")


_MODELS: dict[InfluenceKind, type] = {
    InfluenceKind.FINITE_SPEED: FiniteSpeedVCausal,
    InfluenceKind.AGREEMENT: AgreementVariant,
    InfluenceKind.LOCAL_ONLY: LocalOnly,
}


def influence_model(kind: InfluenceKind | str) -> InfluenceModel:
    """Build the model for a kind name such as "finite_speed"."""
    return _MODELS[InfluenceKind(kind)]()
