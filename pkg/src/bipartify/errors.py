"""Exception hierarchy.

``InputError`` subclasses map to CLI exit code 2, ``ComputationError``
subclasses to exit code 3.
"""


class BipartifyError(Exception):
    pass


class InputError(BipartifyError, ValueError):
    pass


class ComputationError(BipartifyError, RuntimeError):
    pass


class ParseError(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class SelfLoop(InputError):
    pass


class MissingEdge(InputError, KeyError):
    pass


class InvalidK(InputError):
    pass


class InvalidM(InputError):
    pass


class TooLarge(InputError):
    pass


class EmptyInput(InputError):
    pass


class MisalignedRecords(InputError):
    pass


class MissingSeries(InputError, KeyError):
    pass


class NoConvergence(ComputationError):
    pass


class NotPositive(ComputationError):
    pass


class ExhaustedResampling(ComputationError):
    pass
