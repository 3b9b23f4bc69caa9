"""Irreducibility criteria, norm formulas and character sums."""
