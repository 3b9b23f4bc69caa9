"""Tests for dynamics."""
