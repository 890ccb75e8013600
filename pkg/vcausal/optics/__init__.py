"""Two-photon polarization experiment: sequential collapse, Malus' law and CHSH."""

from vcausal.optics.chsh import (
    OPTIMAL_SETTINGS,
    ChshResult,
    chsh_exact,
    chsh_statistic,
)
from vcausal.optics.collapse import (
    DetectionRecord,
    MalusPoint,
    PairSample,
    collapse,
    collapse_first,
    conditional_transmission,
    correlation,
    detect_pair,
    joint_probability,
    malus_probability,
    malus_scan,
    marginal_scan,
    partner_census,
    sample_pairs,
)
from vcausal.optics.geometry import DetourGeometry
from vcausal.optics.polarization import (
    Outcome,
    PairSource,
    Photon,
    PolarizationAngle,
    SourceKind,
    canonical_angle,
)

__all__ = [
    "OPTIMAL_SETTINGS",
    "ChshResult",
    "chsh_exact",
    "chsh_statistic",
    "DetectionRecord",
    "MalusPoint",
    "PairSample",
    "collapse",
    "collapse_first",
    "conditional_transmission",
    "correlation",
    "detect_pair",
    "joint_probability",
    "malus_probability",
    "malus_scan",
    "marginal_scan",
    "partner_census",
    "sample_pairs",
    "DetourGeometry",
    "Outcome",
    "PairSource",
    "Photon",
    "PolarizationAngle",
    "SourceKind",
    "canonical_angle",
]
