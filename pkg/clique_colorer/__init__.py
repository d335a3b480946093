__version__ = "0.1.0"

(
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INFEASIBLE,
    EXIT_ODD_CYCLE,
    EXIT_VIOLATIONS,
) = range(5)
