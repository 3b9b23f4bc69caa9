"""Tests for invstab."""
