"""Exception types shared across the package.

Each class corresponds to one failure mode of the public operations, so
callers can catch exactly the condition they care about.  ``GPSpecError``
is the common base.
"""


class GPSpecError(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(GPSpecError):
    """A value required to be prime is not."""


class CapExceeded(GPSpecError):
    """A requested object is larger than the configured size cap."""


class BadK(GPSpecError):
    """k does not divide q - 1, so R_k is rejected."""


class BadInput(GPSpecError):
    """Arguments violate a basic precondition (e.g. gcd constraints)."""


class BadP(GPSpecError):
    """The prime p does not satisfy the required congruence."""


class NoSolution(GPSpecError):
    """A quadratic-form representation search found no admissible solution.

    Cannot occur for the in-scope targets; raised defensively if the
    bounded scan is exhausted.
    """


class NotFound(GPSpecError):
    """The minimal-exponent search was exhausted at its cap."""

    def __init__(self, t_cap):
        super().__init__(f"no admissible representation found for t <= {t_cap}")
        self.t_cap = t_cap


class OutOfScope(GPSpecError):
    """The (k, p, m) triple fails the hypotheses of the closed formulas."""


class NonIntegralEigenvalue(GPSpecError):
    """A closed-form eigenvalue division left a remainder.

    Signals an internal inconsistency; must never fire on in-scope input.
    """


class HasLoops(GPSpecError):
    """Complementation requested for a spectrum with loops."""


class NonIntegral(GPSpecError):
    """A numerically computed eigenvalue failed to round to an integer."""

    def __init__(self, residual):
        super().__init__(f"eigenvalue residual {residual:.3e} exceeds tolerance")
        self.residual = residual


class NoConvergence(GPSpecError):
    """The iterative eigensolver did not converge."""

    def __init__(self, sweeps):
        super().__init__(f"no convergence after {sweeps} sweeps")
        self.sweeps = sweeps
