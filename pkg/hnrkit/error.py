# -*- coding:utf-8 -*-

"""
Error Message.

Every failure raised by the toolkit is an `Error`, so the command line can map all of
them to exit status 1 and print `msg`.

Date:   2026/10/19
"""


class Error(Exception):

    def __init__(self, msg):
        super(Error, self).__init__(msg)
        self._msg = msg

    @property
    def msg(self):
        return self._msg

    def __str__(self):
        return str(self._msg)

    def __repr__(self):
        return "{}({!r})".format(self.__class__.__name__, self._msg)


class DomainError(Error):
    """Input outside the domain of an operation."""


class DegenerateConfigurationError(DomainError):
    """Geometric configuration for which the requested object is not determined."""


class UnsupportedDimensionError(DomainError):
    """Operation defined only for some dimensions n."""


class FormatError(DomainError):
    """Malformed OBJ / CSV / boundary JSON input."""


class ConfigError(Error):
    """Invalid configuration file or environment override."""


class ContractViolation(Error):
    """Caller-asserted property (e.g. exponential decay) not observed."""


class IntegrationError(Error):
    """ODE integration stopped before its target event."""


class AccuracyError(Error):
    """Quadrature failed to reach its tolerance.

    Attributes:
        estimate: Best value reached.
        error_bound: Error estimate of `estimate`.
    """

    def __init__(self, msg, estimate, error_bound):
        super(AccuracyError, self).__init__(msg)
        self.estimate = estimate
        self.error_bound = error_bound


class NumericalError(Error):
    """Root bracketing failed.

    Attributes:
        samples: Sampled `(t, value)` pairs that were inspected.
    """

    def __init__(self, msg, samples=None):
        super(NumericalError, self).__init__(msg)
        self.samples = samples or []
