"""Exception hierarchy shared by all modules."""


class SeifertNetError(Exception):
    """Base class for every error raised by this package."""


class NonCoprime(SeifertNetError, ValueError):
    pass


class DegenerateInput(SeifertNetError, ValueError):
    """An operation that needs a non-degenerate fibration got an index-0 fiber."""


class TooManyFibers(SeifertNetError, ValueError):
    pass


class UnsupportedFamily(SeifertNetError, ValueError):
    pass


class NotTorusKnot(SeifertNetError, ValueError):
    pass


class UnknotHost(SeifertNetError, ValueError):
    pass


class DegenerateSlope(SeifertNetError, ValueError):
    pass


class DomainError(SeifertNetError, ValueError):
    pass


class CatalogError(SeifertNetError):
    pass


class VertexAbsent(SeifertNetError, KeyError):
    pass


class SeiferterNotValid(SeifertNetError):
    """The seiferter is not known to be a seiferter at the given surgery.

    ``step`` is the index inside a twist script when raised from a sequence.
    """

    def __init__(self, message, step=None):
        self.step = step
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)


class LemmaViolation(SeifertNetError, AssertionError):
    """A proved arithmetic statement failed: carries the counterexample."""

    def __init__(self, lemma, record):
        self.lemma = lemma
        self.record = record
        super().__init__(f"{lemma}: counterexample {record!r}")
