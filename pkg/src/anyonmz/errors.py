"""Exception hierarchy for anyonmz.

Errors are grouped by origin: model data problems, invalid run inputs,
and numerical-consistency failures detected at run time.
"""


class AnyonmzError(Exception):
    """Base class for all package errors."""


class ModelError(AnyonmzError):
    """Problems with anyon-model input data."""


class MultiplicityUnsupported(ModelError):
    """A fusion outcome appears with multiplicity > 1."""


class InconsistentData(ModelError):
    """Pentagon/hexagon (or other algebraic) consistency check failed."""


class NonModular(ModelError):
    """The derived S-matrix is not unitary."""


class ParseError(ModelError):
    """Malformed model definition text."""


class UnknownCharge(AnyonmzError):
    """A charge label is not part of the model."""


class InvalidDistribution(AnyonmzError):
    """Probabilities are negative or do not sum to one."""


class InadmissibleChannel(AnyonmzError):
    """A requested fusion channel is forbidden by the fusion rules."""


class ZeroProbabilityOutcome(AnyonmzError):
    """Conditioning on an outcome of (numerically) zero probability."""


class OracleTooLarge(AnyonmzError):
    """Brute-force path enumeration would exceed the configured budget."""


class NotAState(AnyonmzError):
    """Matrix is not Hermitian / trace-one / positive semidefinite."""


class OddTwist(AnyonmzError):
    """Even twist count required."""


class EvenTwist(AnyonmzError):
    """Odd twist count required."""


class UntunedSplitters(AnyonmzError):
    """Beam-splitter parameters violate a tuned-phase-gate contract."""


class InvalidParameter(AnyonmzError):
    """Scalar parameter outside its legal range."""


class ConfigError(AnyonmzError):
    """Invalid experiment configuration (CLI-level)."""


class ValidationError(AnyonmzError):
    """A numerical self-check failed during a run (CLI exit code 3)."""
