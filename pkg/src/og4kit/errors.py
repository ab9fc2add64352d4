"""Exception hierarchy shared across og4kit.

The CLI maps these onto exit codes, so every failure the library can raise
derives from :class:`Og4Error`.
"""


class Og4Error(Exception):
    """Base class for all library errors."""


class CapExceeded(Og4Error):
    """Element closure grew past the configured cap."""


class BoundExceeded(Og4Error):
    """Group order exceeds the bound for an exhaustive computation."""


class NotInvariant(Og4Error):
    """A partition is not preserved by the group."""


class DegreeMismatch(Og4Error):
    pass


class BadParam(Og4Error):
    """Construction parameters violate the family's conditions."""


class Disconnected(Og4Error):
    pass


class ArcTransitive(Og4Error):
    pass


class NotHalfTransitive(Og4Error):
    """The group does not split the arcs into two mutually reverse orbits."""


class NotNormal(Og4Error):
    pass


class InconsistentEll(Og4Error):
    pass


class NotAutomorphism(Og4Error):
    pass


class NotKernel(Og4Error):
    pass


class NotGenerating(Og4Error):
    pass


class NotInverseClosed(Og4Error):
    pass


class TheoremViolation(Og4Error):
    """A computed object contradicts a structural theorem.

    Raised on the redundant cross-checks; seeing one means either a bug or
    an input outside the theory.
    """


class NotACover(TheoremViolation):
    pass


class NoMatch(TheoremViolation):
    pass


class NoIndependentQuotients(Og4Error):
    pass


class DocumentError(Og4Error):
    """Malformed pair document; ``where`` points at the offending field."""

    def __init__(self, message, where=None):
        self.where = where
        if where is not None:
            message = f"{where}: {message}"
        super().__init__(message)
