from pathlib import Path

# --- Application Constants ---
APP_NAME = "KRel Lab"
APP_VERSION = "1.0.0"
LOGGER_NAME = "KRelLab"

# --- Configuration Constants ---
DEFAULT_CONFIG_FILENAME = "lab_config.json"
DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "config" / DEFAULT_CONFIG_FILENAME
DEFAULT_REGRESSION_PATH = "config/enumeration_regression.json"
DEFAULT_INSTANCE = "nat"
DEFAULT_VARIABLES = ["x", "y", "z"]
DEFAULT_DIFF_SEMANTICS = "monus"
DEFAULT_SEED = 20110613  # published default; CI reproducibility depends on it
DEFAULT_AXIOM_TRIALS = 10_000
DEFAULT_IDENTITY_TRIALS = 1_000
DEFAULT_REGISTRATION_SAMPLES = 1_000
DEFAULT_SAMPLE_SIZE = 8
DEFAULT_MAX_TUPLES = 4
DEFAULT_DOMAIN_SIZE = 3
DEFAULT_SCHEMA_WIDTH = 2
DEFAULT_NAT_BOUND = 7
DEFAULT_TROPICAL_BOUND = 7
DEFAULT_FUZZ_GRID = 4
DEFAULT_OUTPUT_FORMAT = "text"
DEFAULT_WORKERS = 1
DEFAULT_LOG_OUTPUT = "console"
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_LOG_FILE_PATH = "krel_lab.log"

OUTPUT_FORMATS = ("text", "csv", "records")
LOG_OUTPUT_CHOICES = ("console", "file", "both", "none")

# --- Carrier Limits ---
FINITE_CARRIER_LIMIT = 64  # X-parameterized carriers up to this size are enumerated
MONUS_UNIQUENESS_MAX_ORDER = 3
MONUS_UNIQUENESS_FLAGGED_ORDER = 4
ENUMERATION_MAX_ORDER = 3
ENUMERATION_FLAGGED_ORDER = 4
ENUMERATION_MIN_ORDER = 2

# --- Relations ---
ANNOTATION_COLUMN = "@k"
RELATION_TEXT_SEPARATOR = " : "

# --- Reports ---
VERDICT_HOLDS = "holds"
VERDICT_FAILS = "fails"
VERDICT_INAPPLICABLE = "inapplicable"
REPORT_FIELD_ORDER = (
    "subject", "instance", "semantics", "strategy", "verdict",
    "trials", "witness", "lhs", "rhs", "reason",
)
TABLE3_HOLDS_HEADER = "|= A13"
TABLE3_FAILS_HEADER = "|/= A13"

# --- Exit Codes ---
EXIT_OK = 0
EXIT_DIAGNOSTIC = 1
EXIT_UNEXPECTED_VERDICT = 2

# --- Magic Numbers and Conversion Constants ---
MEMORY_BYTES_TO_MB = 1024 * 1024
MEMORY_THRESHOLD_MB = 500.0

# --- Status Messages ---
STATUS_INSTANCE_REGISTERED = "Registered instance '{}' ({} carrier)."
STATUS_CHECK_VERDICT = "{} on {}: {}"
STATUS_ENUMERATION_CENSUS = "Order {} census: {} semirings, {} naturally ordered, {} with monus, {} satisfying A13."
STATUS_REGRESSION_RECORDED = "Recorded enumeration regression values for order {}."
STATUS_REGRESSION_MISMATCH = "Enumeration census for order {} differs from stored regression values: stored={} observed={}"
STATUS_TABLE3_SUMMARY = "A13 classification: {} agree, {} disagree{}"

# --- Error Messages with Suggestions ---
ERROR_FILE_NOT_FOUND = "File not found: {filename}"
ERROR_FILE_NOT_FOUND_SUGGESTION = "Check that the relation file exists and the path is correct."

ERROR_PERMISSION_DENIED = "Permission denied accessing file: {filename}"
ERROR_PERMISSION_SUGGESTION = "Check file permissions or choose a different location."

ERROR_UNKNOWN_INSTANCE = "Unknown annotation instance: {name}"
ERROR_UNKNOWN_INSTANCE_SUGGESTION = "Choose one of: {choices}."

ERROR_EMPTY_VARIABLES = "Instance '{name}' requires a nonempty variable list"
ERROR_EMPTY_VARIABLES_SUGGESTION = "Pass variables with --vars x,y,z."

ERROR_MISSING_BOUND = "Instance '{name}' requires a positive bound"
ERROR_MISSING_BOUND_SUGGESTION = "Pass the bound explicitly, e.g. make_instance('{name}', bound=7)."

ERROR_REGISTRATION_FAILED = "Instance '{name}' failed the registration gate on {subject}"
ERROR_REGISTRATION_SUGGESTION = "The operations do not form the structure they claim to; see the witness in the details."

ERROR_INAPPLICABLE = "{operation} is inapplicable to '{name}': {reason}"
ERROR_INAPPLICABLE_SUGGESTION = "Pick an instance that provides the required operation."

ERROR_ANNOTATION_PARSE = "Cannot parse annotation '{text}' for instance '{name}': {reason}"
ERROR_ANNOTATION_PARSE_SUGGESTION = "Use the annotation grammar of the chosen instance."

ERROR_QUERY_PARSE = "Syntax error at {line}:{column}: {reason}"
ERROR_QUERY_PARSE_SUGGESTION = "Grammar: expr := term (('UNION'|'-') term)*, term := factor ('JOIN' factor)*."

ERROR_SCHEMA = "Schema error in {node}: {reason}"
ERROR_SCHEMA_SUGGESTION = "Check attribute names and that UNION/- operands share a schema."

ERROR_UNSUPPORTED_SEMANTICS = "Difference semantics '{semantics}' is not supported by '{name}': {reason}"
ERROR_UNSUPPORTED_SEMANTICS_SUGGESTION = "monus needs a monus, ring needs negation, cond needs a zero test."

ERROR_BOUND_EXCEEDED = "{operation} supports carrier order up to {limit}, got {order}"
ERROR_BOUND_EXCEEDED_SUGGESTION = "Order 4 is available behind --allow-order4; larger orders are out of reach."

ERROR_CONFIGURATION = "Invalid configuration value for '{key}': {value}"
ERROR_CONFIGURATION_SUGGESTION = "Fix the value in the configuration file or on the command line."

ERROR_SELECTOR = "Invalid check selector: {selector}"
ERROR_SELECTOR_SUGGESTION = "Axioms are A1..A13, identities I1..I13, EXT1, EXT2."

ERROR_RELATION_FILE = "Malformed relation file {filename}: {reason}"
ERROR_RELATION_FILE_SUGGESTION = "Header row holds attribute names and optionally a final '@k' column."

ERROR_GENERAL = "An unexpected error occurred: {}"
ERROR_GENERAL_SUGGESTION = "Run with --log-level DEBUG for details."
