"""Exception types raised across the package."""


class ChordhomError(Exception):
    """Base class for all computation errors."""


class LabelCountError(ChordhomError, ValueError):
    """A double-occurrence word has a label that does not occur exactly twice."""


class PDSyntaxError(ChordhomError, ValueError):
    """Malformed PD text."""


class ArcCountError(ChordhomError, ValueError):
    """A PD arc label does not occur exactly twice."""


class GapOutOfRange(ChordhomError, IndexError):
    pass


class NotLinearError(ChordhomError, ValueError):
    pass


class InvalidDiagram(ChordhomError, ValueError):
    """The PD code does not close up into a valid 4-valent diagram."""


class OrientationAmbiguous(ChordhomError, ValueError):
    """Arc numbering does not induce a consistent orientation."""


class UnresolvedCertificate(ChordhomError, ValueError):
    """A certificate still contains unresolved (unknown) parts."""
