"""Simulator for EPR/GHZ correlations and the causal paradoxes of superluminal signals."""

__version__ = "0.1.0"
