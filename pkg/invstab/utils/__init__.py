"""Utils & helper functions."""
