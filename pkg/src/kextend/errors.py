"""Exception hierarchy; ``exit_code`` is the CLI contract for each failure class."""

from __future__ import annotations


class KExtendError(Exception):
    exit_code = 1


class InputError(KExtendError):
    exit_code = 1


class Graph6Error(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PreconditionError(KExtendError, ValueError):
    """A documented precondition does not hold; ``clause`` names which one."""

    exit_code = 2

    def __init__(self, message: str, clause: str):
        super().__init__(message)
        self.clause = clause


class BudgetExceeded(KExtendError):
    exit_code = 3


class ConvergenceError(KExtendError, ArithmeticError):
    exit_code = 1

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message}: residual={residual:.3e} after {iterations} iterations")
        self.residual = residual
        self.iterations = iterations
