"""Uniform spatial and label grids, plus the physical constants bundle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GridSpec:
    """Uniform spatial grid on [x_min, x_max] with n_points samples."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 16:
            raise ValueError(f"n_points must be >= 16, got {self.n_points}")
        if not self.x_min < self.x_max:
            raise ValueError(f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)


@dataclass(frozen=True)
class LabelGrid:
    """Uniform grid of trajectory labels on [a_min, a_max]."""

    a_min: float
    a_max: float
    n_labels: int

    def __post_init__(self):
        if self.n_labels < 32:
            raise ValueError(f"n_labels must be >= 32, got {self.n_labels}")
        if not self.a_min < self.a_max:
            raise ValueError(f"need a_min < a_max, got [{self.a_min}, {self.a_max}]")

    @property
    def da(self) -> float:
        return (self.a_max - self.a_min) / (self.n_labels - 1)

    @property
    def a(self) -> np.ndarray:
        return np.linspace(self.a_min, self.a_max, self.n_labels)


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar and particle mass; defaults give natural units."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0 or self.mass <= 0:
            raise ValueError("hbar and mass must be strictly positive")
