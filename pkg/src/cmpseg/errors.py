"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Input violates a documented precondition (shape, range, finiteness)."""


class NumericalConsistencyError(ArithmeticError):
    """A numerical self-check failed, e.g. an amplitude/phase pair that no
    longer corresponds to a real-valued map."""


class DegenerateMaskError(ValueError):
    """A support mask has no foreground left after downsampling to the
    feature grid."""


class ExpansionError(RuntimeError):
    """Category expansion failed: no reachable endpoint, no lexicon entry
    and the generic fallback is disabled."""


class FrozenBankError(RuntimeError):
    """Write attempted on a frozen memory bank."""


class ConfigError(ValueError):
    """Invalid or unknown run-configuration key/value."""
