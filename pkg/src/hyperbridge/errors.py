"""Exception hierarchy.

Every domain error carries a stable ``kind`` string (the class name) which the
command-line layer reports verbatim.
"""


class HyperbridgeError(ValueError):
    @property
    def kind(self) -> str:
        return type(self).__name__


class NonUnimodular(HyperbridgeError):
    pass


class SingularCurve(HyperbridgeError):
    pass


class ZeroQuartic(HyperbridgeError):
    pass


class DegenerateCubic(HyperbridgeError):
    pass


class PointNotOnCurve(HyperbridgeError):
    pass


class NotASquare(HyperbridgeError):
    pass


class ZeroG(HyperbridgeError):
    pass


class NotCubic(HyperbridgeError):
    pass


class VZero(HyperbridgeError):
    pass


class DegenerateParams(HyperbridgeError):
    pass


class ZeroDivisor(HyperbridgeError):
    pass


class NoAssignmentFound(HyperbridgeError):
    pass


class PointNotOnQuartic(HyperbridgeError):
    pass


class SingularQuartic(HyperbridgeError):
    pass
