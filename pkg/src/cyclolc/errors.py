"""Exception types shared across the package."""


class CycloError(Exception):
    """Base class for all package-specific errors."""


class NotPrime(CycloError):
    """The given modulus is not a prime number."""


class WrongResidueClass(CycloError):
    """The prime is not congruent to 5 modulo 8."""


class NoQuarticForm(CycloError):
    """p = x^2 + 4 y^2 has neither |x| = 1 nor |y| = 1."""


class BadOverride(CycloError):
    """A supplied generator is not a primitive root."""


class BadPeriod(CycloError):
    """Sequence period is neither p nor 2p."""


class NonBinary(CycloError):
    """Operation requires a 0/1-valued sequence."""


class NotGated(CycloError):
    """Configuration fails the form or autocorrelation gate."""


class NoWitnessFound(CycloError):
    """Witness pattern search exhausted without a verified hit."""
