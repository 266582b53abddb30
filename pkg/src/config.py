"""
Configuration module for the generalized Satake diagram toolkit
"""

# Rank caps
MAX_RANK = 8           # enumeration / classification
HECK_MAX_RANK = 4      # exhaustive Heck battery
SERRE_MAX_RANK = 6     # realization-based batteries (Serre, dimension, theta)
WEYL_ORDER_CAP = 51840  # |W(E6)|; larger Weyl groups are not materialized

# Chevalley realization checks
JACOBI_EXHAUSTIVE_RANK = 4
JACOBI_SAMPLE_SIZE = 2000
NILPOTENCY_BOUND = 5   # ad(e_i)^k vanishes for some k <= this in finite type

# Parameters
DEFAULT_SEED = 0
DEFAULT_JOBS = 1
REDUCED_WORD_SAMPLES = 3

# Output configuration
DEFAULT_FORMAT = "json"
OUTPUT_FORMATS = ("json", "text")
OUTPUT_DIR = "results"
PLOT_DIR = "plots"
CLASSIFICATION_CSV = "classification.csv"
TABLE1_CSV = "table1.csv"
