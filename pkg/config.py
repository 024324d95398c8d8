"""Tool configuration."""
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Base configuration."""

    TOOL_NAME = 'tubedef'
    TOOL_VERSION = '0.1.0'

    # Randomness (every randomized operation receives an explicit seed)
    DEFAULT_SEED = int(os.environ.get('TUBEDEF_SEED', 0))
    RANDOM_BOUND = int(os.environ.get('TUBEDEF_RANDOM_BOUND', 64))

    # Algebra construction
    MAX_DEGREE = int(os.environ.get('TUBEDEF_MAX_DEGREE', 50))
    SYMMETRIC_RETRIES = int(os.environ.get('TUBEDEF_SYMMETRIC_RETRIES', 32))
    SYMMETRIC_EXHAUSTIVE_LIMIT = 65536  # functionals enumerated over F_p

    # Module comparisons and searches
    ISO_SAMPLES = int(os.environ.get('TUBEDEF_ISO_SAMPLES', 64))
    SURJECTION_SAMPLES = int(os.environ.get('TUBEDEF_SURJECTION_SAMPLES', 256))
    SEARCH_ATTEMPTS = int(os.environ.get('TUBEDEF_SEARCH_ATTEMPTS', 512))
    SEARCH_ENTRY_BOUND = 3  # entries of random mouth-module candidates
    DIVISION_SAMPLES = 32
    DIVISION_MAX_DIM = 4

    # Bands
    MAX_BAND_LENGTH = int(os.environ.get('TUBEDEF_MAX_BAND_LENGTH', 4))
    BAND_LIMIT = 1000
    LAMBDA_SAMPLES = (1, 2, 3, 5, 7)
    RANDOM_LAMBDAS = 2

    # Deformation certificates
    DEFAULT_LEVELS = int(os.environ.get('TUBEDEF_LEVELS', 5))

    # Logging goes to stderr; stdout is reserved for JSON
    LOG_LEVEL = os.environ.get('TUBEDEF_LOG_LEVEL', 'WARNING')


class DevelopmentConfig(Config):
    """Development configuration."""
    LOG_LEVEL = os.environ.get('TUBEDEF_LOG_LEVEL', 'INFO')


class TestingConfig(Config):
    """Testing configuration."""
    DEFAULT_SEED = 0
    ISO_SAMPLES = 32
    SEARCH_ATTEMPTS = 64
    LOG_LEVEL = 'WARNING'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': Config
}


def get_config(config_name=None):
    """Return the configuration class selected by name or TUBEDEF_ENV."""
    if config_name is None:
        config_name = os.environ.get('TUBEDEF_ENV', 'default').strip()
    return config.get(config_name, Config)
