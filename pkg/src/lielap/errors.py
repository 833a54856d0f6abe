"""Exception taxonomy shared across the package.

DomainError marks mathematically invalid inputs (indefinite metrics,
singular gram matrices, vanishing weights, labels outside an operation's
domain); the CLI maps it to exit code 3.  Internal contract violations
(broken operator constructions, inexact divisions) raise ArithmeticError
and are never caught: they signal bugs, not bad input.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class WitnessSearchExhausted(RuntimeError):
    """No sampled tensor certified everything; carries the best attempt."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
