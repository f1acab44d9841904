"""Exception types shared across the package."""


class UsageError(ValueError):
    """An operation was called with inputs that violate its preconditions."""


class ConfigError(UsageError):
    """A scenario configuration file is missing keys or holds bad values."""


class PhaseUndefinedError(UsageError):
    """Relative phase requested on a state with (numerically) zero visibility."""


class ContractViolation(RuntimeError):
    """A numerical invariant (normalization, positivity, hermiticity) was breached."""
