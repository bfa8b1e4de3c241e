# environment variable that overrides the default truncation order of symbolic checks
HPTKIT_DEFAULT_ORDER_ENV_VAR = "HPTKIT_DEFAULT_ORDER"

# truncation order of completed-algebra computations
DEFAULT_ORDER = 8
# length bound of the truncated realizations of the two-generator algebras
DEFAULT_BOUND = 10
# length bound of the truncated realization of the free product
DEFAULT_PRODUCT_BOUND = 6
# the twisted free product must satisfy every axiom on words up to bound minus this slack
TWISTED_WINDOW_SLACK = 4
# number of random perturbation instances in the verification suite
DEFAULT_INSTANCES = 200
DEFAULT_SEED = 0
# largest total dimension of a random instance
MAX_INSTANCE_DIMENSION = 12
MAX_INSTANCE_DEGREE = 5
INSTANCE_WEIGHTS = 3

# word-length bounds of the exhaustive free-algebra checks
DEFAULT_CONFLUENCE_LENGTH = 6
DEFAULT_ASSOCIATIVITY_LENGTH = 9
# D∘D and (D^x)∘(D^x) are asserted on inputs up to this word length
DIFFERENTIAL_CHECK_BOUND = 8
# highest power of tau in the vanishing check v·tau^j·u = 0
DEFAULT_TAU_POWER = 4

MAX_REPORTED_VIOLATIONS = 10

EXIT_OK = 0
EXIT_AXIOM_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_NONTERMINATION = 3
