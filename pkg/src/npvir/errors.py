"""Exception hierarchy.

Every library error carries a machine-readable ``code`` and the process
``exit_status`` the CLI uses when the error escapes a command.
"""


class NPVirError(Exception):
    code = "error"
    exit_status = 1


class ParseError(NPVirError):
    code = "parse_error"
    exit_status = 3

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ForeignPole(NPVirError):
    code = "foreign_pole"
    exit_status = 4


class ConfigMismatch(NPVirError):
    code = "config_mismatch"
    exit_status = 5


class ReducibleModulus(NPVirError):
    code = "reducible_modulus"
    exit_status = 6


class UnexpectedGroup(NPVirError):
    code = "unexpected_group"
    exit_status = 7


class InfiniteGroup(NPVirError):
    code = "infinite_group"
    exit_status = 8


class SpecMismatch(NPVirError):
    code = "spec_mismatch"
    exit_status = 9


class DivisionByZero(NPVirError, ZeroDivisionError):
    code = "division_by_zero"
    exit_status = 10


class BadIndex(NPVirError, IndexError):
    code = "bad_index"
    exit_status = 11


class PoleEvaluation(NPVirError):
    code = "pole_evaluation"
    exit_status = 12


class DegenerateInput(NPVirError, ValueError):
    code = "degenerate_input"
    exit_status = 13


class BadParameters(NPVirError, ValueError):
    code = "bad_parameters"
    exit_status = 14


class NotApplicable(NPVirError):
    code = "not_applicable"
    exit_status = 15
