"""Tests for vcausal."""
