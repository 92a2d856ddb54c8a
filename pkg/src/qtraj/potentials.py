"""External potential family: free, harmonic trap, or tabulated samples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from .grids import GridSpec, PhysicalConstants


@dataclass(frozen=True)
class PotentialSpec:
    """Tagged union over the supported potential shapes.

    Use the constructors :meth:`free`, :meth:`harmonic`, :meth:`tabulated`.
    The harmonic trap is (1/2) m omega^2 x^2, so evaluation needs the
    constants bundle.
    """

    kind: str
    omega: float | None = None
    samples: np.ndarray | None = None
    grid: GridSpec | None = None

    def __post_init__(self):
        if self.kind not in ("free", "harmonic", "tabulated"):
            raise ValueError(f"unknown potential kind {self.kind!r}")
        if self.kind == "harmonic":
            if self.omega is None or self.omega <= 0:
                raise ValueError("harmonic potential needs omega > 0")
        if self.kind == "tabulated":
            if self.samples is None or self.grid is None:
                raise ValueError("tabulated potential needs samples and their grid")
            samples = np.asarray(self.samples, dtype=float)
            if samples.shape != (self.grid.n_points,):
                raise ValueError("samples shape does not match grid")
            if not np.all(np.isfinite(samples)):
                raise ValueError("tabulated samples must be finite")
            object.__setattr__(self, "samples", samples)

    @classmethod
    def free(cls) -> "PotentialSpec":
        return cls(kind="free")

    @classmethod
    def harmonic(cls, omega: float) -> "PotentialSpec":
        return cls(kind="harmonic", omega=omega)

    @classmethod
    def tabulated(cls, samples: np.ndarray, grid: GridSpec) -> "PotentialSpec":
        return cls(kind="tabulated", samples=samples, grid=grid)

    def _spline(self) -> CubicSpline:
        return CubicSpline(self.grid.x, self.samples)

    def evaluate(self, x: np.ndarray, consts: PhysicalConstants) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.kind == "free":
            return np.zeros_like(x)
        if self.kind == "harmonic":
            return 0.5 * consts.mass * self.omega**2 * x**2
        return self._spline()(x)

    def gradient(self, x: np.ndarray, consts: PhysicalConstants) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.kind == "free":
            return np.zeros_like(x)
        if self.kind == "harmonic":
            return consts.mass * self.omega**2 * x
        return self._spline()(x, 1)
