"""Inverse stability verdict engines."""
