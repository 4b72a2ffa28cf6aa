"""Tests for hazard-rate."""
