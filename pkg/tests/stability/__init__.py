"""Tests for stability."""
