"""Exception taxonomy shared by all modules.

Every error carries a stable machine-readable ``code`` (used by the CLI to
build error payloads) and maps to one of three exit-code families: input
errors (2), domain errors (3) and budget errors (4).
"""

from __future__ import annotations

EXIT_OK = 0
EXIT_FAIL = 1  # corpus runs with failing checks
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


class NumsemError(Exception):
    code = "Error"
    exit_code = EXIT_DOMAIN


class InputError(NumsemError):
    exit_code = EXIT_INPUT


class DomainError(NumsemError):
    exit_code = EXIT_DOMAIN


class BudgetError(NumsemError):
    exit_code = EXIT_BUDGET


# --- input errors -----------------------------------------------------------

class EmptyInput(InputError):
    code = "EmptyInput"


class BadInput(InputError):
    code = "BadInput"


class GcdNotOne(InputError):
    code = "GcdNotOne"


class ParseError(InputError):
    code = "ParseError"


class FileNotFound(InputError):
    code = "FileNotFound"


class NotReduced(InputError):
    code = "NotReduced"


class OrderViolation(InputError):
    code = "OrderViolation"


class WrongDimension(InputError):
    code = "WrongDimension"


class NotPairwiseCoprime(InputError):
    code = "NotPairwiseCoprime"


class ArityMismatch(InputError):
    code = "ArityMismatch"


class ZeroElement(InputError):
    code = "ZeroElement"


# --- domain errors ----------------------------------------------------------

class NotASemigroup(DomainError):
    code = "NotASemigroup"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness  # pair (x, y) with x, y members but x+y a gap


class NotFundamentalGapSet(DomainError):
    code = "NotFundamentalGapSet"


class NotAMember(DomainError):
    code = "NotAMember"


class DegenerateInterval(DomainError):
    code = "DegenerateInterval"


class CapTooSmall(DomainError):
    code = "CapTooSmall"


class NotMinimalTriple(DomainError):
    code = "NotMinimalTriple"


class NoSolution(DomainError):
    code = "NoSolution"


class BadLambda(DomainError):
    code = "BadLambda"


class BadMu(DomainError):
    code = "BadMu"


class NotCoprime(DomainError):
    code = "NotCoprime"


class VarietyAuditError(DomainError):
    code = "VarietyAuditError"


# --- budget errors ----------------------------------------------------------

class BudgetExceeded(BudgetError):
    code = "BudgetExceeded"


class DepthTooLarge(BudgetError):
    code = "DepthTooLarge"


class Overflow(BudgetError):
    code = "Overflow"
