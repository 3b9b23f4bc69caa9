"""Iteration of 1/(z^d + c) and the x_n sequence."""
