"""Exception hierarchy.

The CLI maps these onto exit codes: parse errors -> 2, domain errors -> 3,
singular systems / non-generic q -> 4.
"""


class QuasiShuffleError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QuasiShuffleError):
    pass


class AlphabetMismatchError(DomainError):
    pass


class CompositionMismatchError(DomainError, ValueError):
    pass


class DivergentSeriesError(DomainError):
    pass


class InvalidAlphabetError(DomainError):
    pass


class SingularMatrixError(QuasiShuffleError):
    pass


class NonGenericQError(SingularMatrixError):
    """Phi_q could not be inverted on some word's permutation orbit."""


class LyndonBasisError(QuasiShuffleError):
    """The Lyndon product system was singular; this would contradict freeness."""


class ParseError(QuasiShuffleError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownLetterError(ParseError):
    def __init__(self, name, suggestion=None, position=None):
        self.name = name
        self.suggestion = suggestion
        msg = f"unknown letter {name!r}"
        if suggestion:
            msg += f"; did you mean {suggestion!r}?"
        super().__init__(msg, position)
