"""Exceptions and warnings shared across the package."""


class AtomlatError(Exception):
    """Base class for all errors raised by this package."""


class EmptySignature(AtomlatError):
    """A signature must declare at least one constant."""


class DuplicateConstant(AtomlatError):
    """A signature must not declare the same constant twice."""


class InvalidConstantName(AtomlatError):
    """Constant names must be non-empty, without whitespace, ' or #."""


class UnknownConstant(AtomlatError):
    """A name was looked up that the signature does not declare."""


class SignatureMismatch(AtomlatError):
    """Operands built over different signatures were combined."""


class ZeroAtomHasNoPinningTerm(AtomlatError):
    """The zero atom sits below every constant, leaving no term to pin it."""


class CapExceeded(AtomlatError):
    """The signature is too large for exhaustive enumeration."""


class EmptyRestrictionSet(AtomlatError):
    """Restriction requires a non-empty set of constants to keep."""


class UnknownTargetConstant(AtomlatError):
    """A rename maps onto a constant missing from the target signature."""


class RenameMapIncomplete(AtomlatError):
    """A rename map must give a (possibly empty) target set for every source constant."""


class NameCollision(AtomlatError):
    """A freshly introduced constant name clashes with an existing one."""


class TrivialModel(AtomlatError):
    """The operation is undefined on the one-element model."""


class ParseError(AtomlatError):
    """A script line could not be parsed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class UndeclaredConstant(ParseError):
    """A script used a constant before declaring it."""

    def __init__(self, line: int, name: str):
        super().__init__(line, f"undeclared constant {name!r}")
        self.name = name


class CoverageRepairWarning(UserWarning):
    """Emitted when model construction inserts the zero atom to cover constants."""
