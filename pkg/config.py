"""
Project-wide defaults
Every value can be overridden per call (keyword arguments) or per CLI invocation
"""

import os

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "quantale", "data")

# Randomized suites
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 200

# Random PLFun generation
DEFAULT_MAX_BREAKS = 8
DEFAULT_DENOMINATOR = 16

# Enumeration budgets
DEFAULT_MAX_CANDIDATES = 10**7
DEFAULT_WORD_BUDGET = 10**5
ORACLE_MAX_D = 7

# Memoised envelope operations of the interval quantale, per function
INTERVAL_CACHE_SIZE = 1 << 14

# SVG output
SVG_SIZE = 512
SVG_MARKER_RADIUS = 2
SVG_MARGIN = 24
