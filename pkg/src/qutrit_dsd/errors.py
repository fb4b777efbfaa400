"""Shared exception types."""


class DomainError(ValueError):
    """A parameter lies outside its physical or mathematical domain."""


class ContractError(RuntimeError):
    """An input violates an operation's contract (shape, ordering, ...)."""
