LANG = "en"
CONFIG_PATH = None

THREADS = None
TIMEOUT = 10.0
PROGRESS_SECONDS = 30

SUBDIVISION_SIZE_LIMIT = 14
DECOMPOSE_SIZE_LIMIT = 120
KURATOWSKI_SIZE_LIMIT = 10
ATLAS_N_MAX = 8

THREADS_ENV_VAR = "CLIQUE_COLORER_THREADS"
DEFAULT_CONFIG_FILE = "config/clique_colorer.yml"
