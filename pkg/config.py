import os
from dotenv import load_dotenv

# Load environment variables (logging only; numbers never depend on them)
load_dotenv()

# Arithmetic and certification settings
NUMERIC_SETTINGS = {
    'OUTWARD_FACTOR': 1.0 + 2.0 ** -40,
    'CLOSED_FORM_ULPS': 8,
    'ZETA_TOLERANCE': 1e-10,
    'ZETA_MIN_EXPONENT': 1.0 + 1e-3,
    'ZETA_MAX_TERMS': 20_000_000,
    'ZETA_CHUNK': 1_000_000,
    'QUAD_TOLERANCE': 1e-12,
    'QUAD_LIMIT': 200,
    'QUAD_ACCEPT': 1e-9,
    'ROOT_HALF_WIDTH': 1e-8,
    'CROSSOVER_HALF_WIDTH': 1e-6,
}

# Default b_k = (k(k+1))^p parameters for the bound engine
BOUND_SETTINGS = {
    'P': 0.88,
    'N_TERMS': 100,
    'M': 200_000,
    'Q': 2.0,
    'MONOTONE_SPOT_CHECK': 10_000,
}

# Property suites
VERIFY_SETTINGS = {
    'SEED': 7,
    'TRIALS': 500,
    'MAX_LENGTH': 200,
    'MAX_STEPS': 8,
    'SLACK': 1e-12,
}

# Figure emission
FIGURE_SETTINGS = {
    'GRID': 99,
    'SIGNIFICANT_DIGITS': 15,
    'OUTPUT_DIR': 'figures',
}

# Logging Configuration
LOGGING_CONFIG = {
    'level': os.getenv('LOG_LEVEL', 'WARNING'),
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    'file': os.getenv('LOG_FILE'),
}
