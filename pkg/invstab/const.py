"""This file contains the defaults used across invstab."""

import os

SCHEMA_VERSION = 1

# Pair states visited before a scan gives up. A scan over F_q terminates
# after at most q^2 states, so this only bites for q > 1000.
DEFAULT_STEP_CAP = 1_000_000
DEFAULT_DEPTH = 3
# Iterates over Q grow doubly exponentially in size.
DEFAULT_Q_DEPTH_CAP = 4
DEFAULT_PRIME_BUDGET = 25
DEFAULT_DEGREE_CEILING = 2000
DEFAULT_MAX_DIGITS = 1_000_000
DEFAULT_SEED = 0

STEP_CAP = int(os.getenv("INVSTAB_STEP_CAP", DEFAULT_STEP_CAP))
DEPTH = int(os.getenv("INVSTAB_DEPTH", DEFAULT_DEPTH))
Q_DEPTH_CAP = int(os.getenv("INVSTAB_Q_DEPTH_CAP", DEFAULT_Q_DEPTH_CAP))
PRIME_BUDGET = int(os.getenv("INVSTAB_PRIME_BUDGET", DEFAULT_PRIME_BUDGET))
DEGREE_CEILING = int(os.getenv("INVSTAB_DEGREE_CEILING", DEFAULT_DEGREE_CEILING))
MAX_DIGITS = int(os.getenv("INVSTAB_MAX_DIGITS", DEFAULT_MAX_DIGITS))

# 64-bit ceiling on finite field moduli.
MAX_FIELD_MODULUS = 2**64
