import logging
import os

from dotenv import load_dotenv

load_dotenv()

logging.basicConfig(
    level=os.getenv("PROXYSMALL_LOG_LEVEL", "INFO"),
    format="%(asctime)s [%(levelname)s] %(message)s",
)
logger = logging.getLogger("proxysmall")

# --- Fields ---
DEFAULT_PRIME = int(os.getenv("PROXYSMALL_DEFAULT_PRIME", "32003"))
MIN_RANDOM_PRIME = 101  # below this, random linear forms fail too often
MAX_PRIME = 2**62

# --- Polynomials ---
MAX_ARITY = 16

# --- Witness search ---
DEFAULT_SEED = int(os.getenv("PROXYSMALL_SEED", "1"))
DEFAULT_MAX_ATTEMPTS = int(os.getenv("PROXYSMALL_MAX_ATTEMPTS", "200"))
DEFAULT_COEFF_BOUND = int(os.getenv("PROXYSMALL_COEFF_BOUND", "10"))
COEFF_BOUND_BLOCK = 50  # failures before the rational coefficient bound doubles

# --- Exit codes ---
EXIT_WITNESS = 0
EXIT_NO_WITNESS = 2
EXIT_INPUT_ERROR = 3
EXIT_VERIFY_FAILED = 4

# --- Certificates ---
CERTIFICATE_VERSION = 1
