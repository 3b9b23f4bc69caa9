"""Exact arithmetic: scalars, coefficient domains, finite fields, polynomials."""
