import logging
import numbers
import os
from fractions import Fraction

from dotenv import load_dotenv

from ..model.errors import ProfileInputError

logger = logging.getLogger(__name__)

# Find project root (go up from src/engine/ to project root)
_current_dir = os.path.dirname(__file__)
_project_root = os.path.dirname(os.path.dirname(_current_dir))
env_path = os.path.join(_project_root, '.env')
if os.path.exists(env_path):
    load_dotenv(env_path, override=False)


def _read(key: str, default, cast):
    raw = os.environ.get(key)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = cast(raw.split('#')[0].strip())  # Handle inline comments
    except (ValueError, ZeroDivisionError):
        logger.warning("[Config] Ignoring %s=%r, using default %r", key, raw, default)
        return default
    return value


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise ValueError(raw)
    return value


# numpy.random.default_rng takes seeds in [0, 2**64)
SEED_LIMIT = 2 ** 64


def _seed(raw: str) -> int:
    value = int(raw)
    if not 0 <= value < SEED_LIMIT:
        raise ValueError(raw)
    return value


def check_seed(seed) -> int:
    """Return `seed` if it is a usable RNG seed, else raise ProfileInputError."""
    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or not 0 <= seed < SEED_LIMIT:
        raise ProfileInputError(f"seed must be an integer in [0, 2**64), got {seed!r}")
    return int(seed)


# Exact enumeration refuses electorates above this size
EXACT_CAP = _read('DSF_EXACT_CAP', 20, _positive_int)
MC_SAMPLES = _read('DSF_MC_SAMPLES', 20000, _positive_int)
DEFAULT_SEED = _read('DSF_SEED', 7, _seed)
THREADS = _read('DSF_THREADS', 1, _positive_int)

# Axiom-check quantifier budget
ANONYMITY_SWEEP_MAX_N = _read('DSF_ANONYMITY_SWEEP_MAX_N', 6, _positive_int)
NEUTRALITY_SWEEP_MAX_M = _read('DSF_NEUTRALITY_SWEEP_MAX_M', 5, _positive_int)
PERMUTATION_SAMPLES = _read('DSF_PERMUTATION_SAMPLES', 200, _positive_int)
UNIFORM_COPIES = _read('DSF_UNIFORM_COPIES', 1, _positive_int)

EPSILON = _read('DSF_EPSILON', Fraction(1, 100), Fraction)
LOG_LEVEL = _read('DSF_LOG_LEVEL', 'WARNING', lambda s: s.upper())
