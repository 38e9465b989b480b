"""Exception hierarchy.

Domain errors (bad mathematical input, unsupported structure) derive from
:class:`DomainError`; the CLI maps them to exit status 1.  Input that cannot
be parsed raises :class:`ParseError` (exit status 2).
"""


class PiclocError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PiclocError):
    pass


class ParseError(PiclocError):
    pass


class CompositionNonzero(DomainError):
    """Consecutive coboundaries do not compose to zero."""


class UnsupportedModel(DomainError):
    pass


class UnknownVertex(DomainError):
    pass


class UncoveredVertex(DomainError):
    """A listed vertex lies in no facet (singletons must be faces)."""


class NotAFace(DomainError):
    pass


class VoidComplex(DomainError):
    pass


class NotAGraph(DomainError):
    pass


class Disconnected(DomainError):
    pass


class TorsionDetected(DomainError):
    pass


class NonCancellative(DomainError):
    pass


class NonIntegral(DomainError):
    pass


class NotSimplicialError(DomainError):
    pass


class MixedPresentation(DomainError):
    pass


class RestrictionIncoherent(DomainError):
    pass


class CrossCheckMismatch(DomainError):
    """The direct and closed-form pipelines disagree (an implementation bug)."""


class CharPUnsupported(DomainError):
    pass
