"""High-order finite differences on uniform grids.

Central stencils on the interior, one-sided stencils of the same accuracy
at the edges. Weights are solved from the Taylor (Vandermonde) system, so
any derivative/accuracy pair is supported without hand-tabulated tables.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def fd_weights(offsets: tuple, deriv: int) -> np.ndarray:
    """Stencil weights for the ``deriv``-th derivative at offset 0.

    ``offsets`` are integer grid offsets (in units of the spacing). The
    weights satisfy sum_j w_j f(x + o_j h) = f^(deriv)(x) * h^deriv + O(h^p)
    with p = len(offsets) - deriv.
    """
    from math import factorial

    o = np.asarray(offsets, dtype=float)
    n = len(o)
    if deriv >= n:
        raise ValueError(f"need more than {deriv} points for derivative {deriv}")
    # Taylor system: sum_j w_j o_j^k = k! delta_{k,deriv}
    mat = np.vander(o, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[deriv] = factorial(deriv)
    return np.linalg.solve(mat, rhs)


def stencil_halfwidth(deriv: int, acc: int) -> int:
    """Halfwidth of the central stencil for the given derivative and accuracy."""
    if acc % 2 != 0 or acc < 2:
        raise ValueError(f"accuracy must be a positive even integer, got {acc}")
    return (deriv + acc - 1) // 2


def derivative(f: np.ndarray, dx: float, deriv: int = 1, acc: int = 4) -> np.ndarray:
    """Differentiate samples of a smooth function on a uniform grid.

    Interior points use the central stencil; the outermost ``halfwidth``
    points on each side use one-sided stencils of matching accuracy.
    """
    f = np.asarray(f)
    n = f.shape[0]
    hw = stencil_halfwidth(deriv, acc)
    npts_side = deriv + acc  # one-sided stencil size for the same accuracy
    if n < max(2 * hw + 1, npts_side):
        raise ValueError(f"grid too small ({n} points) for derivative {deriv} at accuracy {acc}")

    out = np.empty_like(f, dtype=np.result_type(f.dtype, float))
    w_c = fd_weights(tuple(range(-hw, hw + 1)), deriv)
    # correlate with real weights: valid part covers the interior rows
    acc_sum = np.zeros(n - 2 * hw, dtype=out.dtype)
    for j, w in enumerate(w_c):
        acc_sum += w * f[j : j + n - 2 * hw]
    out[hw : n - hw] = acc_sum

    for i in range(hw):
        w_l = fd_weights(tuple(k - i for k in range(npts_side)), deriv)
        out[i] = w_l @ f[:npts_side]
        w_r = fd_weights(tuple(-(k - i) for k in range(npts_side)), deriv)
        out[n - 1 - i] = w_r @ f[n - npts_side :][::-1]
    return out / dx**deriv


def stencil_support_ok(bad: np.ndarray, deriv: int, acc: int) -> np.ndarray:
    """Which output points of :func:`derivative` have a fully valid stencil.

    ``bad`` flags contaminated input samples; a point is dropped if any
    sample its stencil reads is flagged.
    """
    bad = np.asarray(bad, dtype=bool)
    n = bad.shape[0]
    hw = stencil_halfwidth(deriv, acc)
    npts_side = deriv + acc
    ok = np.ones(n, dtype=bool)
    any_bad = np.zeros(n - 2 * hw, dtype=bool)
    for j in range(2 * hw + 1):
        any_bad |= bad[j : j + n - 2 * hw]
    ok[hw : n - hw] = ~any_bad
    edge_l = bad[:npts_side].any()
    edge_r = bad[n - npts_side :].any()
    ok[:hw] = not edge_l
    ok[n - hw :] = not edge_r
    return ok
