"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CyclotomyError(Exception):
    """Base class for all errors raised by :mod:`cyclopell`."""


class InvalidModulusError(CyclotomyError, ValueError):
    """The modulus is not an odd prime."""


class ModulusMismatchError(CyclotomyError, ValueError):
    """Two ring elements live in different cyclotomic rings."""


class InvalidAutomorphismError(CyclotomyError, ValueError):
    """A Galois exponent is divisible by p."""


class PreconditionError(CyclotomyError, ValueError):
    """An operation was called on an input outside its domain."""


class UnsupportedInputError(CyclotomyError, ValueError):
    """Valid input that the chosen method cannot handle (e.g. composite d)."""


class NotInGroupError(CyclotomyError, ValueError):
    """A Pell solution is not a power of the claimed fundamental solution."""


class InternalError(CyclotomyError, ArithmeticError):
    """An identity that must hold mathematically failed.

    Seeing one of these means there is a bug in the arithmetic, not bad input.
    """
