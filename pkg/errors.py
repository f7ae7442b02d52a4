"""
Exception hierarchy shared by every package
"""


class QuantaleError(Exception):
    """Base class for all errors raised by this project"""


class DocumentError(QuantaleError):
    """Malformed JSON document or schema violation"""


class QuantaleLoadError(QuantaleError):
    """A quantale-table document violates a law"""

    def __init__(self, law, witness=None, message=None):
        self.law = law
        self.witness = tuple(witness) if witness is not None else None
        text = message or law
        if self.witness is not None:
            text = f"{text} (witness {self.witness})"
        super().__init__(text)


class DomainError(QuantaleError):
    """Input is well-formed but outside the domain of the operation"""


class OutOfRangeError(DomainError):
    pass


class MixedCarrierError(DomainError):
    pass


class NotClopenError(DomainError):
    pass


class NotMixError(DomainError):
    pass


class BudgetExceededError(DomainError):
    pass


class InvalidPathError(DomainError):
    pass


class NotStepFunctionError(DomainError):
    pass


class WordMismatchError(DomainError):
    pass


class UnknownBuiltinError(DomainError):
    pass


class InvariantViolation(QuantaleError):
    """An internal cross-check failed; this always indicates a bug"""
