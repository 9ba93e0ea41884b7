#!/usr/bin/env python3
"""Default limits. Every value can be overridden per call and on the command line."""

# Largest vertex count the exhaustive minimiser accepts
EXHAUSTIVE_CAP = 12

# Largest vertex count the brute-force realizer search accepts
ORACLE_CAP = 7

# Worker processes for the first branching level of the B&B search
DEFAULT_WORKERS = 1

# None means "no node budget" / "no enumeration limit"
DEFAULT_NODE_BUDGET = None
DEFAULT_ENUMERATION_LIMIT = None

# How many alternative equality orderings certify lists under --verbose
VERBOSE_ALTERNATIVES_LIMIT = 10
