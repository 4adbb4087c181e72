"""Exception hierarchy shared by every module."""


class TildeError(ValueError):
    """Base class for all errors raised by tildeiso."""


class InvalidWordError(TildeError):
    """A string could not be parsed as a word over the declared alphabet."""

    def __init__(self, text, position, alphabet):
        self.text = text
        self.position = position
        self.alphabet = alphabet
        super().__init__(
            f"invalid symbol {text[position - 1]!r} at position {position} "
            f"of {text!r} (alphabet {alphabet!r})"
        )


class UnsupportedAlphabetError(TildeError):
    pass


class BoundsError(TildeError, IndexError):
    pass


class LengthMismatchError(TildeError):
    pass


class InapplicableOpError(TildeError):
    pass


class BudgetExceededError(TildeError):
    pass


class PreconditionError(TildeError):
    pass
