"""Grid-sampled state types and the wavefunction <-> hydrodynamic-field maps.

A state can be held as a complex wavefunction or as the fluid triple
(rho, S, v) with S the unwrapped phase and v = S'/m. The quantum potential
and the internal energy density are computed from rho by high-order finite
differences; points under the density floor are tracked in a node mask and
excluded from every norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateStateError, DomainError, GridMismatchError
from .grids import GridSpec, PhysicalConstants
from .stencils import derivative, stencil_support_ok

DEFAULT_NODE_FLOOR = 1e-12  # relative to max rho


@dataclass(frozen=True)
class Wavefunction:
    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))
        if self.values.shape != (self.grid.n_points,):
            raise ValueError("values shape does not match grid")

    def norm(self) -> float:
        """Trapezoid-rule L2 norm squared, integral of |psi|^2 dx."""
        return float(np.trapezoid(np.abs(self.values) ** 2, dx=self.grid.dx))

    def normalized(self) -> "Wavefunction":
        n = self.norm()
        if n <= 0:
            raise DegenerateStateError("cannot normalize a null wavefunction")
        return Wavefunction(self.grid, self.values / np.sqrt(n))


@dataclass(frozen=True)
class HydroState:
    """Eulerian fields on a grid; node_mask is True where rho sat under the floor."""

    grid: GridSpec
    rho: np.ndarray
    S: np.ndarray
    v: np.ndarray
    node_mask: np.ndarray = field(repr=False)

    def __post_init__(self):
        n = self.grid.n_points
        for name in ("rho", "S", "v", "node_mask"):
            arr = np.asarray(getattr(self, name))
            if arr.shape != (n,):
                raise ValueError(f"{name} shape does not match grid")
            object.__setattr__(self, name, arr)


def unwrap_phase(theta: np.ndarray, good: np.ndarray) -> np.ndarray:
    """Left-to-right cumulative unwrap over the trusted points.

    Jumps beyond pi between consecutive trusted samples are folded back by
    2*pi increments; this also offset-matches the segments on either side of
    a masked run. Masked entries are filled by linear interpolation so that
    downstream stencils stay finite (they remain flagged by the caller).
    """
    idx = np.flatnonzero(good)
    if idx.size == 0:
        raise DegenerateStateError("no trusted points to unwrap")
    sub = np.unwrap(np.asarray(theta, dtype=float)[idx])
    return np.interp(np.arange(theta.shape[0]), idx, sub)


def polar_decompose(
    psi: Wavefunction,
    consts: PhysicalConstants,
    node_floor: float = DEFAULT_NODE_FLOOR,
    acc: int = 4,
) -> HydroState:
    """Split psi into density, unwrapped phase, and velocity fields.

    ``node_floor`` is relative to max rho; points under it are flagged in
    the node mask (phase and velocity there are fill values, not data).
    """
    if node_floor <= 0:
        raise ValueError("node_floor must be positive")
    rho = np.abs(psi.values) ** 2
    mask = rho < node_floor * rho.max(initial=0.0)
    if mask.all():
        raise DegenerateStateError("all grid points fall below the density floor")
    s = consts.hbar * unwrap_phase(np.angle(psi.values), ~mask)
    v = derivative(s, psi.grid.dx, deriv=1, acc=acc) / consts.mass
    return HydroState(psi.grid, rho, s, v, mask)


def recompose(h: HydroState, consts: PhysicalConstants) -> Wavefunction:
    """Rebuild sqrt(rho) * exp(i S / hbar) from hydrodynamic fields."""
    return Wavefunction(h.grid, np.sqrt(np.maximum(h.rho, 0.0)) * np.exp(1j * h.S / consts.hbar))


def quantum_potential(
    rho: np.ndarray,
    grid: GridSpec,
    consts: PhysicalConstants,
    node_mask: np.ndarray | None = None,
    acc: int = 4,
) -> np.ndarray:
    """-(hbar^2 / 2m) * (sqrt(rho))'' / sqrt(rho), NaN where unevaluable.

    Points whose stencil reads a masked sample carry the NaN sentinel, as do
    the masked points themselves.
    """
    rho = np.asarray(rho, dtype=float)
    if node_mask is None:
        node_mask = np.zeros(rho.shape, dtype=bool)
    if np.any(rho[~node_mask] <= 0):
        raise DomainError("rho must be strictly positive at unmasked points")
    r = np.sqrt(np.where(node_mask, 1.0, rho))  # masked entries are dummies
    d2r = derivative(r, grid.dx, deriv=2, acc=acc)
    vq = -(consts.hbar**2 / (2.0 * consts.mass)) * d2r / r
    ok = stencil_support_ok(node_mask, deriv=2, acc=acc) & ~node_mask
    vq[~ok] = np.nan
    return vq


def internal_energy_density(
    rho: np.ndarray,
    grid: GridSpec,
    consts: PhysicalConstants,
    node_mask: np.ndarray | None = None,
    acc: int = 4,
) -> np.ndarray:
    """(hbar^2 / 8m) * (rho')^2 / rho^2, NaN where unevaluable."""
    rho = np.asarray(rho, dtype=float)
    if node_mask is None:
        node_mask = np.zeros(rho.shape, dtype=bool)
    if np.any(rho[~node_mask] <= 0):
        raise DomainError("rho must be strictly positive at unmasked points")
    drho = derivative(np.where(node_mask, 1.0, rho), grid.dx, deriv=1, acc=acc)
    u = (consts.hbar**2 / (8.0 * consts.mass)) * (drho / np.where(node_mask, 1.0, rho)) ** 2
    ok = stencil_support_ok(node_mask, deriv=1, acc=acc) & ~node_mask
    u[~ok] = np.nan
    return u


@dataclass(frozen=True)
class HydroResiduals:
    """Max-norm defects of the continuity and force laws over a time series."""

    continuity_max: float
    euler_max: float
    n_times_checked: int


def hydro_residuals(
    series: list[HydroState],
    times: np.ndarray,
    potential,
    consts: PhysicalConstants,
    acc: int = 4,
) -> HydroResiduals:
    """Check d(rho)/dt + (rho v)' = 0 and the velocity force law on a series.

    Time derivatives are central (2nd order), so at least three uniformly
    spaced snapshots are required. Node-masked and stencil-contaminated
    points are skipped.
    """
    times = np.asarray(times, dtype=float)
    if len(series) < 3 or times.shape[0] != len(series):
        raise ValueError("need at least 3 snapshots with matching times")
    steps = np.diff(times)
    if not np.allclose(steps, steps[0], rtol=1e-9, atol=1e-15):
        raise ValueError("snapshots must be uniformly spaced in time")
    grid = series[0].grid
    for h in series:
        if h.grid != grid:
            raise GridMismatchError("all snapshots must share one grid")
    dt = float(steps[0])
    dx = grid.dx
    v_ext = potential.evaluate(grid.x, consts)

    cont_max = 0.0
    euler_max = 0.0
    for k in range(1, len(series) - 1):
        prev, cur, nxt = series[k - 1], series[k], series[k + 1]
        mask = prev.node_mask | cur.node_mask | nxt.node_mask
        vq = quantum_potential(cur.rho, grid, consts, node_mask=cur.node_mask, acc=acc)

        drho_dt = (nxt.rho - prev.rho) / (2.0 * dt)
        cont = drho_dt + derivative(cur.rho * cur.v, dx, deriv=1, acc=acc)

        dv_dt = (nxt.v - prev.v) / (2.0 * dt)
        total_pot = np.where(np.isnan(vq), 0.0, vq) + v_ext
        euler = dv_dt + cur.v * derivative(cur.v, dx, deriv=1, acc=acc) + derivative(
            total_pot, dx, deriv=1, acc=acc
        ) / consts.mass

        ok = stencil_support_ok(mask | np.isnan(vq), deriv=1, acc=acc) & ~mask & ~np.isnan(vq)
        if ok.any():
            cont_max = max(cont_max, float(np.max(np.abs(cont[ok]))))
            euler_max = max(euler_max, float(np.max(np.abs(euler[ok]))))
    return HydroResiduals(cont_max, euler_max, len(series) - 2)
