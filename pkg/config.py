"""
Configuration settings for the application.
"""

import os

# Paths
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))

# Size Guards
MAX_TABLE_M = 200           # Largest triangle the table command will build
MAX_ENUMERATION_M = 12      # Set-partition enumeration blows up past this
MAX_POLY_N = 100
MAX_POWER_SUM_M = 1000
MAX_NAIVE_N = 10 ** 6       # Naive power-sum loop only

# Verification Settings
DEFAULT_VERIFY_MAX = 12
DEFAULT_VERIFY_ORDER = 16
DEFAULT_SEED = int(os.getenv("STIRLING_FORGE_SEED", "0"))
VERIFY_RANDOM_SAMPLES = 20          # Random rational points per identity
VERIFY_POWER_SUM_N = 100            # Upper summation limit for power-sum suites
VERIFY_NEWTON_DEGREE = 10           # Degree of random polynomials for the difference suites
VERIFY_INVERSE_FACTORIAL_M = 4
VERIFY_INVERSE_FACTORIAL_K = 6

# Random rationals: numerator in [-RANDOM_NUMERATOR, RANDOM_NUMERATOR], denominator in [1, RANDOM_DENOMINATOR]
RANDOM_NUMERATOR = 20
RANDOM_DENOMINATOR = 12

# Known transcription defects in the historical tables.
# (kind, m, n) -> (printed value, computed value)
FIGURE_ERRATA = {
    ("s2", 9, 7): (461, 462),
    ("s1u", 9, 3): (105056, 118124),
}

# Logging
LOG_LEVEL = os.getenv("STIRLING_FORGE_LOG_LEVEL", "WARNING")
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
