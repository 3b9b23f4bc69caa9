"""Tests for criteria."""
