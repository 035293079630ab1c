"""Exception hierarchy shared by the library and the CLI."""


class SymbreakError(Exception):
    """Base class for all library errors."""


class InputError(SymbreakError, ValueError):
    """Malformed or out-of-range input (CLI exit status 2)."""


class DomainError(SymbreakError, ValueError):
    """A formula or index was requested outside its domain of validity."""


class CapacityError(SymbreakError, RuntimeError):
    """A search or enumeration would exceed a documented bound (CLI exit status 3)."""


class InvariantViolation(SymbreakError, AssertionError):
    """An internal mathematical invariant failed; indicates a bug."""
