class CliqueColorerError(Exception):
    pass


class GraphError(CliqueColorerError):
    pass


class Graph6Error(GraphError):
    pass


class ColoringError(CliqueColorerError):
    pass


class PreconditionError(CliqueColorerError):
    pass


class SizeLimitExceeded(CliqueColorerError):
    def __init__(self, size, limit, what="graph"):
        super().__init__(f"{what} has {size} vertices, limit is {limit}")
        self.size = size
        self.limit = limit


class WagnerError(CliqueColorerError):
    def __init__(self, message, piece_index=None):
        if piece_index is not None:
            message = f"piece {piece_index}: {message}"
        super().__init__(message)
        self.piece_index = piece_index


class Infeasible(CliqueColorerError):
    pass


class OddCycleException(CliqueColorerError):
    """
    Raised for odd cycles of order greater than three, whose
    clique-chromatic number is 3
    """

    def __init__(self, order):
        super().__init__(f"odd cycle of order {order} has clique-chromatic number 3")
        self.order = order


class Cancelled(CliqueColorerError):
    pass


class InternalFault(CliqueColorerError):
    """
    A search whose success is guaranteed by a known existence
    result failed. Always a bug, never a property of the input.
    """


class ConstructionFailed(CliqueColorerError):
    """
    A direct construction produced no valid coloring for an input outside
    the class it is proven for
    """
