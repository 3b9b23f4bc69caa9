"""Tests for arith."""
