"""Exceptions raised across the package."""


class PZError(Exception):
    """Base class for every error raised by pzfield."""


class AllZeroParams(PZError, ValueError):
    """a = b = c = 0: the y-equation degenerates to the null polynomial."""


class DomainError(PZError, ValueError):
    """A fractional (or negative) power was requested outside its real domain."""


class LineOfEquilibria(PZError):
    """The family has a non-isolated set of critical points (the line y = 0)."""


class AffineFamilyUnsupported(PZError, ValueError):
    """The chart construction at infinity is only done for homogeneous families."""


class RhoZero(PZError, ValueError):
    """The Darboux elements divide by sqrt(rho); rho = 0 has no Darboux set."""


class PoleEncountered(PZError, ArithmeticError):
    """Evaluation point (or trajectory) came too close to a zero of a denominator."""
