"""
Exceptions raised by multiomit.

Everything derives from ValueError so callers that only catch ValueError keep working.
"""

__all__ = ['MultiOmitError', 'ParameterError', 'UnknownScenarioError', 'PreconditionError',
           'ConfigError', 'DegenerateSteadyStateError', 'PoleError', 'SingularSystemError',
           'UnstableDriftError', 'ConvergenceError']


class MultiOmitError(ValueError):
    """Base class of all multiomit errors."""


class ParameterError(MultiOmitError):
    """A SystemParams invariant or an input argument is violated."""


class UnknownScenarioError(ParameterError, KeyError):

    def __init__(self, name, valid):
        self.name = name
        self.valid = list(valid)
        super().__init__('Unknown scenario \'' + str(name) +
                         '\'. Valid scenarios are: ' + ', '.join(self.valid))

    def __str__(self):
        return self.args[0]


class PreconditionError(ParameterError):
    """A reduced formula was asked for with a coupling that must be zero."""


class ConfigError(MultiOmitError):
    """Run configuration could not be parsed."""


class DegenerateSteadyStateError(MultiOmitError):
    """The mean-field operating point has a vanishing denominator."""


class PoleError(MultiOmitError):

    def __init__(self, message, delta=None, magnitude=None):
        self.delta = delta
        self.magnitude = magnitude
        super().__init__(message)


class SingularSystemError(PoleError):

    def __init__(self, message, delta=None, condition=None):
        self.condition = condition
        super().__init__(message, delta=delta)


class UnstableDriftError(MultiOmitError):

    def __init__(self, message, eigenvalues=None):
        self.eigenvalues = eigenvalues
        super().__init__(message)


class ConvergenceError(MultiOmitError):

    def __init__(self, message, estimates=None):
        self.estimates = estimates
        super().__init__(message)
