"""Exception hierarchy shared across the package."""


class BSLabError(Exception):
    """Base class for all errors raised by bslab."""


class InvalidRankError(BSLabError, ValueError):
    pass


class UnsupportedWordError(BSLabError, ValueError):
    pass


class ShapeError(BSLabError, ValueError):
    pass


class InvalidEntryError(BSLabError, ValueError):
    pass


class InvalidTableauError(BSLabError, ValueError):
    pass


class NotSkewError(BSLabError, ValueError):
    pass


class BlockMismatchError(BSLabError, ValueError):
    pass


class InvalidSectionError(BSLabError, ValueError):
    pass


class InvalidMinorError(BSLabError, ValueError):
    pass


class EvaluationError(BSLabError, KeyError):
    pass


class BasisFailure(BSLabError, ArithmeticError):
    """The straight tableaux failed to span or were dependent."""


class NonPolynomialGrowthError(BSLabError, ArithmeticError):
    pass


class EmbeddingError(BSLabError, ValueError):
    pass


class NotBinomialError(BSLabError, ValueError):
    pass


class NotRationalOfClaimedFormError(BSLabError, ArithmeticError):
    pass
