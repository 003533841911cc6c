"""Shared exception types."""


class SolverFailure(RuntimeError):
    """An iterative solver failed to reach its stopping tolerance, or an
    optimization instance was infeasible/unbounded where the caller
    required a solution. The message carries the residual or status."""
