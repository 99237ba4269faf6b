"""Shared exception types.

DomainError marks bad input (caller's fault).  InternalInvariantError and
BudgetError mark defects in the engine or its configuration: valid inputs
must never raise them.
"""


class DomainError(ValueError):
    """Input outside an operation's domain (wrong sign, order, shape...)."""


class InternalInvariantError(AssertionError):
    """An arithmetic invariant that should be unbreakable broke."""


class BudgetError(InternalInvariantError):
    """Step budget exhausted before termination or recurrence.

    With the default budget this cannot happen for valid inputs, so it is
    classified as an internal defect rather than a user error.
    """
