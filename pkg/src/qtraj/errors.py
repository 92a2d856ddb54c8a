"""Exception types shared across the simulator."""

from __future__ import annotations


class SimulationError(Exception):
    """Base class for all simulator errors."""


class GridMismatchError(SimulationError):
    """Fields sampled on different grids were combined."""


class DegenerateStateError(SimulationError):
    """Every grid point fell below the density floor."""


class DomainError(SimulationError):
    """A field violated a pointwise domain requirement (e.g. rho <= 0)."""


class BoundaryLeakError(SimulationError):
    """Wavefunction amplitude at the grid edge exceeded the leak threshold."""


class CrossingError(SimulationError):
    """Trajectories crossed: the label-to-position map lost monotonicity.

    Carries the time and label of the first offending point, plus (when
    available) the last accepted ensemble as a diagnostic snapshot.
    """

    def __init__(self, message, t=None, label=None, snapshot=None):
        super().__init__(message)
        self.t = t
        self.label = label
        self.snapshot = snapshot


class InstabilityError(SimulationError):
    """Conserved energy jumped beyond the configured factor in one step."""

    def __init__(self, message, t=None, snapshot=None):
        super().__init__(message)
        self.t = t
        self.snapshot = snapshot


class InitializationError(SimulationError):
    """Trajectory ensemble could not be built from the given wavefunction."""


class ReconstructionError(SimulationError):
    """Field or wavefunction reconstruction failed."""


class UnmeasurablePointError(SimulationError):
    """Probe point sits in a node-masked region for the whole protocol."""


class ConfigError(SimulationError):
    """Configuration rejected; ``violations`` lists every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {v}" for v in self.violations))
