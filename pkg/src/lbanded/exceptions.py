"""Exception hierarchy for the L-banded matrix library."""


class LBandError(ValueError):
    """Base class for every domain error raised by :mod:`lbanded`."""


class EmptyBand(LBandError):
    pass


class IndexOutOfRange(LBandError, IndexError):
    pass


class DimensionMismatch(LBandError):
    pass


class SingularMatrix(LBandError):
    """Raised when an operation needs an invertible matrix.

    ``reason`` is one of ``"zero_last"`` (a_n = 0), ``"equal_neighbors"``
    (a_k = a_{k+1}, with ``index`` = k) or ``"dense"`` (a dense elimination
    found no pivot).
    """

    def __init__(self, message, reason="dense", index=None):
        super().__init__(message)
        self.reason = reason
        self.index = index


class NoLdlDecomposition(LBandError):
    pass


class NotPositiveDefinite(LBandError):
    pass


class NotLBanded(LBandError):
    """Raised by :func:`lbanded.detect_l_banded`; ``position`` is 1-based."""

    def __init__(self, i, j, deviation):
        super().__init__(
            f"entry ({i}, {j}) differs from diagonal entry ({max(i, j)}, {max(i, j)})"
            f" by {deviation}"
        )
        self.position = (i, j)
        self.deviation = deviation


class NoConvergence(LBandError):
    pass


class ZeroNormalizer(LBandError):
    def __init__(self, message, k=None):
        super().__init__(message)
        self.k = k


class ParseError(LBandError):
    pass


class UnsupportedOp(LBandError):
    pass
