class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, duplicate edge)."""


class NotConnectedError(GraphError):
    pass


class NotChordalError(GraphError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"graph is not chordal; chordless cycle {list(self.cycle)}")


class NotBlockGraphError(GraphError):
    pass


class InvalidOrderingError(GraphError):
    pass


class CliqueBlowupError(RuntimeError):
    """k-clique enumeration would exceed the configured cap."""


class OracleCapExceeded(RuntimeError):
    pass
