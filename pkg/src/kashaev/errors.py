"""Exception hierarchy.

Input problems (bad PD text, unsupported moves) derive from
:class:`DiagramError`; the CLI maps those to exit code 2.  Failed
verifications derive from :class:`VerificationError` and map to exit code 1.
"""


class KashaevError(Exception):
    pass


class DiagramError(KashaevError, ValueError):
    pass


class MalformedSyntax(DiagramError):
    pass


class LabelCountError(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class OrientationInconsistent(DiagramError):
    pass


class InconsistentWinding(DiagramError):
    pass


class EdgesNotCofacial(DiagramError):
    pass


class FacesNotAdjacent(DiagramError):
    pass


class AlgebraError(KashaevError, ArithmeticError):
    pass


class NotSymmetric(AlgebraError):
    pass


class NotHermitian(AlgebraError):
    pass


class InternalParity(AlgebraError):
    pass


class NotASquare(AlgebraError):
    pass


class NotOnCircle(AlgebraError):
    pass


class OmegaIsOne(AlgebraError):
    pass


class SingularZ(AlgebraError):
    pass


class VerificationError(KashaevError):
    pass


class KernelViolation(VerificationError):
    pass


class RankMismatch(VerificationError):
    pass
