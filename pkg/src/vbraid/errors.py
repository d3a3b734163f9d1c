"""Exception types shared across the package."""


class SingularPoint(ZeroDivisionError):
    """A denominator vanished (or a coordinate hit zero) while applying an
    operator to a concrete point, or a denominator became the identically
    zero polynomial during symbolic evaluation.

    ``letter_index`` is the 1-based position (counted from the left) of the
    offending letter when the failure happened inside word evaluation.
    """

    def __init__(self, message: str = "singular point", letter_index: int | None = None):
        super().__init__(message)
        self.letter_index = letter_index


class WordSyntaxError(ValueError):
    """Unparseable token in a braid-word string."""


class KindMismatch(ValueError):
    """A generator not available in the requested group kind (e.g. a virtual
    generator in a purely classical group)."""


class ArityMismatch(ValueError):
    """Point length does not match the arity required by the word's group
    kind and strand count."""


class InvalidStrandCount(ValueError):
    """Strand count below 2."""


class LengthLimitExceeded(ValueError):
    """Symbolic comparison refused because the combined word length exceeds
    the configured cost guard."""
