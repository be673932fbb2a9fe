"""Layer 1: Settings - Application constants."""

import re

# Frames
DEFAULT_DIMENSION = 3
MAX_DIMENSION = 16  # blade index sets over {0..n} fit a 17-bit mask
ORIGIN_INDEX = 0
DEFAULT_ORIGIN_NAME = "O"

# Named classes (bipoint, tripoint, ...) and the statics operations live in A3
NAMED_CLASS_DIMENSION = 3

# Exact rational literals: "p" or "p/q"
RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

# CLI exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_DOMAIN_ERROR = 2

# Logging
LOG_FILE_MAX_BYTES = 10485760  # 10 MB
LOG_FILE_BACKUP_COUNT = 5
