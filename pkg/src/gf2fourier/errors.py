"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(DomainError):
    """The requested size exceeds what can be enumerated exhaustively."""


MAX_VARS = 24


def check_capacity(n_vars):
    if n_vars > MAX_VARS:
        raise CapacityError(f"n_vars={n_vars} exceeds the cap of {MAX_VARS}")
