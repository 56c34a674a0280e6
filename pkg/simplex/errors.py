"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BernsteinError(Exception):
    """Base class for every validation failure raised by the package."""


class InvalidMultiIndex(BernsteinError):
    """A multi-index is empty or has a negative entry."""


class DegreeMismatch(BernsteinError):
    """A multi-index has total degree larger than the basis degree."""


class DimensionMismatch(BernsteinError):
    """Two objects that must share the dimension k do not."""


class OutOfSimplex(BernsteinError):
    """A point violates x_i >= 0 or |x| <= 1."""


class TruncationTooSmall(BernsteinError):
    """A generating-series truncation N is below |v|."""


class EmptyGrid(BernsteinError):
    """An evaluation grid has no points."""


class InvalidDegrees(BernsteinError):
    """A degree list is not a strictly ascending list of positive integers."""


class EmptyDegrees(InvalidDegrees):
    """A degree list is empty."""


class InvalidGridStep(BernsteinError):
    """A grid step is not of the form 1/M with M a positive integer."""


class ArityMismatch(BernsteinError):
    """A sampled function is applied to a point of the wrong dimension."""


class HypothesisViolated(BernsteinError):
    """A decomposition case breaks m <= min(|v|, n)."""


class InvalidQ(BernsteinError):
    """A deformation parameter lies outside (0, 1]."""


class UnknownFunction(BernsteinError):
    """A function label is not in the registry."""


class UnknownSuite(BernsteinError):
    """A check-suite name is not in the registry."""


class InvalidPermutation(BernsteinError):
    """An image sequence is not a bijection of {1, ..., k}."""


class UnknownWeight(BernsteinError):
    """A decomposition weight name is not recognised."""


class ResultOverflow(BernsteinError):
    """A float result is too large to represent."""
