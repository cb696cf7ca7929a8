# Licensed with the 3-clause BSD license.  See LICENSE for details.
class VRCException(Exception):
    pass


class InputError(VRCException):
    pass


class ProfileParseError(InputError):
    """Malformed ordering or profile text.

    Parameters
    ----------
    message : string
        Description of the problem.

    line : int, optional
        1-based line number in the profile file.

    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = 'line {}: {}'.format(line, message)
        super().__init__(message)


class UnknownAlternativeError(InputError):
    pass


class NoTriplesError(InputError):
    pass


class EmptySubsetError(InputError):
    pass


class ExperimentConfigError(InputError):
    pass


class CapExceededError(ExperimentConfigError):
    pass


class VacuousTableError(VRCException):
    pass


class InvariantViolation(VRCException):
    pass


class UsageError(InputError):
    pass
