"""Kitaev and XY chains mapped onto the four-term recursion.

In the Majorana sublattice basis the Kitaev chain reduces to a real
symmetric matrix h acting on one sublattice, with h v = E^2 v.  The
eigenvector entries obey the recursion with effective coefficients

    zeta = (E^2 - mu^2 - 2 t^2 - 2 delta^2) / (t^2 - delta^2)
    eta  = -2 t mu / (t^2 - delta^2)

i.e. effective hoppings t1_eff = 2 t mu and t2_eff = t^2 - delta^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import denselinalg
from .errors import DegenerateCouplingError
from .recurrence import Coefficients


@dataclass(frozen=True)
class KitaevParams:
    """Chain of n sites with hopping t, p-wave pairing delta, onsite mu."""

    mu: float
    t: float
    delta: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two sites")


@dataclass(frozen=True)
class XYParams:
    jx: float
    jy: float
    hfield: float


def kitaev_effective_hoppings(p: KitaevParams):
    """Emergent (nearest, next-nearest) couplings of the sublattice matrix."""
    return 2.0 * p.t * p.mu, p.t * p.t - p.delta * p.delta


def kitaev_effective_coeffs(e: float, p: KitaevParams) -> Coefficients:
    t2_eff = p.t * p.t - p.delta * p.delta
    if t2_eff == 0.0:
        raise DegenerateCouplingError("effective map needs t^2 != delta^2")
    zeta = (e * e - p.mu * p.mu - 2.0 * p.t * p.t - 2.0 * p.delta * p.delta) / t2_eff
    eta = -2.0 * p.t * p.mu / t2_eff
    return Coefficients(zeta=zeta, eta=eta)


def xy_effective_hoppings(p: XYParams):
    """Emergent couplings of the transverse-field XY chain."""
    return -2.0 * p.hfield * (p.jx + p.jy), p.jx * p.jy


def effective_h_matrix(p: KitaevParams) -> np.ndarray:
    """Sublattice matrix h with h v = E^2 v, materialized as real symmetric.

    With a = i(delta - t) and b = i(delta + t) all products entering h are
    real: -a^2 = (delta - t)^2, -b^2 = (delta + t)^2, i mu (a - b) =
    2 t mu, a b = t^2 - delta^2.
    """
    n = p.n
    am_sq = (p.delta - p.t) ** 2   # -a^2
    bm_sq = (p.delta + p.t) ** 2   # -b^2
    h = np.zeros((n, n))
    for j in range(n):
        diag = p.mu * p.mu
        if j != n - 1:
            diag += am_sq
        if j != 0:
            diag += bm_sq
        h[j, j] = diag
    t1_eff, t2_eff = kitaev_effective_hoppings(p)
    for j in range(n - 1):
        h[j, j + 1] = h[j + 1, j] = t1_eff
    for j in range(n - 2):
        h[j, j + 2] = h[j + 2, j] = t2_eff
    return h


def bdg_matrix(p: KitaevParams) -> np.ndarray:
    """Particle-hole (2N x 2N) single-particle matrix of the Kitaev chain."""
    n = p.n
    h0 = np.zeros((n, n))
    np.fill_diagonal(h0, -p.mu)
    for j in range(n - 1):
        h0[j, j + 1] = h0[j + 1, j] = -p.t
    d = np.zeros((n, n))
    for j in range(n - 1):
        d[j + 1, j] = p.delta
        d[j, j + 1] = -p.delta
    top = np.hstack([h0, d])
    bottom = np.hstack([-d, -h0])
    return np.vstack([top, bottom])


def kitaev_spectrum(p: KitaevParams):
    """Excitation energies as sorted +-E pairs from the sublattice matrix."""
    w, _ = denselinalg.sym_eigen(effective_h_matrix(p))
    scale = max(1.0, float(np.abs(w).max()))
    energies = []
    for lam in w:
        if lam < -1e-10 * scale:
            raise ValueError(f"sublattice matrix not PSD: eigenvalue {lam}")
        e = math.sqrt(max(float(lam), 0.0))
        energies.extend([-e, e])
    return sorted(energies)


def bdg_spectrum(p: KitaevParams):
    """Excitation energies from the full particle-hole matrix (oracle)."""
    w, _ = denselinalg.sym_eigen(bdg_matrix(p))
    return sorted(float(x) for x in w)
