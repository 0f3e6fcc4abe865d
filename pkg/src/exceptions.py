"""Error hierarchy shared by all subsystems.

Configuration problems map to CLI exit code 2, numerical failures to exit code 3.
"""


class SpinPhaseError(Exception):
    """Base class for toolkit errors."""


class ConfigurationError(SpinPhaseError, ValueError):
    """Invalid model specification, arguments or run configuration."""


class NumericalError(SpinPhaseError):
    """A numerical routine could not deliver a result within its contract."""


class ConvergenceError(NumericalError):
    """The iterative eigensolver exhausted its restarts."""

    def __init__(self, message: str, best_residual: float, iterations: int):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual
        self.iterations = iterations


class QuadratureError(NumericalError):
    """Adaptive quadrature hit its subinterval cap before reaching the tolerance."""

    def __init__(self, message: str, error_estimate: float, lam: float | None = None):
        super().__init__(message)
        self.error_estimate = error_estimate
        self.lam = lam


class LoopResolutionError(NumericalError):
    """Consecutive states of a Wilson loop overlap too weakly."""

    def __init__(self, segment: int, overlap: float, threshold: float):
        super().__init__(
            f"Loop under-resolved at segment {segment}: |overlap|={overlap:.3e} < {threshold}"
        )
        self.segment = segment
        self.overlap = overlap


class DegenerateLoopError(NumericalError):
    """The ground state is (nearly) degenerate, so the loop of ground states is ill-defined."""

    def __init__(self, lam: float, phi: float, gap: float):
        super().__init__(f"Gap collapse at lambda={lam}, phi={phi}: gap={gap:.3e}")
        self.lam = lam
        self.phi = phi
        self.gap = gap


class DensityMatrixError(NumericalError):
    """A two-site density matrix violates Hermiticity, unit trace or positivity."""


class NonFiniteValueError(NumericalError, ValueError):
    """A result table holds NaN or infinity and cannot be written."""

    def __init__(self, column: str, value: float):
        super().__init__(f"refusing to write non-finite value {value} in column {column}")
        self.column = column
        self.value = value
