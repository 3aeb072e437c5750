"""Exception types shared across the package."""


class UnsupportedOrderError(ValueError):
    """Requested a finite field / projective plane of an unsupported order."""


class InvariantViolationError(RuntimeError):
    """A construction step failed one of its verified postconditions."""


class NotAPlaneWitnessError(ValueError):
    """A coloring failed a structural check required to extract a plane."""


class WitnessUnavailableError(LookupError):
    """A required base witness coloring is missing from the bundled store."""

    def __init__(self, t: int, n: int):
        super().__init__(f"no stored witness coloring for t={t}, n={n}")
        self.t = t
        self.n = n


class SizeLimitError(ValueError):
    """Input exceeds the supported size for an exact subroutine."""
