"""Spectrum and eigenvectors of the open chain with two hopping ranges.

The Hamiltonian matrix is pentadiagonal symmetric Toeplitz: onsite -mu,
first off-diagonals -t1, second off-diagonals -t2.  Eigenvector entries
obey the four-term recursion with zeta = -(E + mu)/t2, eta = -t1/t2 and
the open-boundary extension xi_0 = xi_{-1} = xi_{N+1} = xi_{N+2} = 0.

Eigenvalues come from the dense oracle; wavevectors are recovered
analytically per energy and the transcendental quantization relation is
used as a residual diagnostic, not as a root finder.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import denselinalg
from .closedform import characterize
from .errors import (DegenerateModeError, PreconditionError,
                     RemovableSingularityError, ZeroT2Error)
from .exactnum import basic_sequences
from .recurrence import Coefficients


@dataclass(frozen=True)
class ChainParams:
    """Chain with onsite energy mu, hoppings t1 (nearest), t2 (next)."""

    mu: float
    t1: float
    t2: float
    n: int
    d: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one site")


class Arrow(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class EigenMode:
    """One chain eigenvalue with its wavevector and symmetry data."""

    e: float
    k1: complex
    k2: complex
    k_plus: complex
    k_minus: complex
    s_q: int
    lambda_i: int
    arrow: Arrow
    quant_residual: float
    vector: np.ndarray


@dataclass(frozen=True)
class CrossingRecord:
    """One exactly-degenerate eigenvalue and the parameters producing it."""

    n_idx: int
    l_idx: int
    k_plus: float
    k_minus: float
    eta: float
    zeta: float
    t1_over_t2: float
    e: float


def build_chain_matrix(p: ChainParams) -> np.ndarray:
    h = np.zeros((p.n, p.n))
    np.fill_diagonal(h, -p.mu)
    for j in range(p.n - 1):
        h[j, j + 1] = h[j + 1, j] = -p.t1
    for j in range(p.n - 2):
        h[j, j + 2] = h[j + 2, j] = -p.t2
    return h


def dispersion(k: complex, p: ChainParams) -> complex:
    kd = k * p.d
    return -p.mu - 2.0 * p.t1 * cmath.cos(kd) - 2.0 * p.t2 * cmath.cos(2.0 * kd)


def coeffs_from_energy(e: float, p: ChainParams) -> Coefficients:
    if p.t2 == 0.0:
        raise ZeroT2Error("coefficient map needs t2 != 0")
    return Coefficients(zeta=-(e + p.mu) / p.t2, eta=-p.t1 / p.t2)


def wavevectors_from_energy(e: float, p: ChainParams):
    """Recover (k1, k2) for one eigenvalue via the characteristic roots."""
    cd = characterize(coeffs_from_energy(e, p))
    return cd.theta1 / p.d, cd.theta2 / p.d


def _sin_ratio(k: complex, n: int, d: float) -> complex:
    """f(k) = sin(k d (N+2)) / sin(k d), with the removable limit filled in."""
    kd = k * d
    s = cmath.sin(kd)
    if abs(s) < 1e-12:
        return (n + 2) * cmath.cos(kd * (n + 2)) / cmath.cos(kd)
    return cmath.sin(kd * (n + 2)) / s


def quantization_residual(k1: complex, k2: complex, n: int, d: float = 1.0):
    """Residual of the two-branch quantization relation and its branch sign.

    Evaluates f at k_+- = (k1 +- k2)/2 and returns (residual, s_q) with
    s_q the sign minimizing |f(k+) - s f(k-)|, scaled by the larger
    magnitude.
    """
    kp = (k1 + k2) / 2.0
    km = (k1 - k2) / 2.0
    if abs(cmath.sin(kp * d)) < 1e-12 or abs(cmath.sin(km * d)) < 1e-12:
        raise RemovableSingularityError("sin(k d) vanishes at k+ or k-")
    fp = _sin_ratio(kp, n, d)
    fm = _sin_ratio(km, n, d)
    scale = max(abs(fp), abs(fm), 1.0)
    res_plus = abs(fp - fm) / scale
    res_minus = abs(fp + fm) / scale
    if res_plus <= res_minus:
        return res_plus, +1
    return res_minus, -1


def _robust_residual(k1: complex, k2: complex, n: int, d: float):
    kp = (k1 + k2) / 2.0
    km = (k1 - k2) / 2.0
    fp = _sin_ratio(kp, n, d)
    fm = _sin_ratio(km, n, d)
    scale = max(abs(fp), abs(fm), 1.0)
    res_plus = abs(fp - fm) / scale
    res_minus = abs(fp + fm) / scale
    if res_plus <= res_minus:
        return res_plus, +1
    return res_minus, -1


def spectrum(p: ChainParams):
    """All N modes, sorted by energy, with symmetry and arrow diagnostics."""
    h = build_chain_matrix(p)
    w, v = denselinalg.sym_eigen(h)
    scale = max(1.0, float(np.abs(w).max()))
    clusters = denselinalg.cluster_eigenvalues(w, 1e-8 * scale)
    modes = []
    for cluster in clusters:
        vecs = v[:, cluster]
        if len(cluster) == 1:
            parities = [_parity_sign(vecs[:, 0])]
        else:
            # diagonalize the reflection inside the degenerate subspace
            r = vecs.T @ vecs[::-1, :]
            r = 0.5 * (r + r.T)
            pw, pu = denselinalg.sym_eigen(r)
            vecs = vecs @ pu
            parities = [1 if x > 0 else -1 for x in pw]
        for pos, idx in enumerate(cluster):
            e = float(w[idx])
            vec = vecs[:, pos]
            lam = parities[pos]
            k1, k2 = wavevectors_from_energy(e, p)
            kp = (k1 + k2) / 2.0
            km = (k1 - k2) / 2.0
            residual, s_q = _robust_residual(k1, k2, p.n, p.d)
            if len(cluster) > 1:
                # both branches vanish at a crossing; pair sign with parity
                residual, s_q = 0.0, -lam
            inside = (abs(k1.imag) < 1e-7 / p.d) and (abs(k2.imag) < 1e-7 / p.d)
            modes.append(EigenMode(
                e=e, k1=k1, k2=k2, k_plus=kp, k_minus=km, s_q=s_q,
                lambda_i=lam, arrow=Arrow.INSIDE if inside else Arrow.OUTSIDE,
                quant_residual=float(residual), vector=vec.copy(),
            ))
    modes.sort(key=lambda m: m.e)
    return modes


def _parity_sign(vec: np.ndarray) -> int:
    overlap = float(vec @ vec[::-1])
    return 1 if overlap > 0 else -1


def t1_zero_spectrum(p: ChainParams):
    """Exact spectrum of the two decoupled sublattices (t1 = 0 only)."""
    if p.t1 != 0.0:
        raise PreconditionError("exact sublattice spectrum needs t1 = 0")
    n = p.n
    energies = []
    if n % 2 == 0:
        for m in range(1, n // 2 + 1):
            e = -p.mu - 2.0 * p.t2 * math.cos(2.0 * m * math.pi / (n + 2))
            energies.extend([e, e])
    else:
        for m in range(1, (n + 1) // 2 + 1):
            energies.append(-p.mu - 2.0 * p.t2 * math.cos(2.0 * m * math.pi / (n + 3)))
        for m in range(1, (n - 1) // 2 + 1):
            energies.append(-p.mu - 2.0 * p.t2 * math.cos(2.0 * m * math.pi / (n + 1)))
    return sorted(energies)


def crossings(n: int, d: float = 1.0):
    """Enumerate every twofold-degenerate eigenvalue of the N-site chain.

    Records are generated at mu = 0, t2 = 1; eta fixes t1.  Both sign
    families of eta are included, with the eta = 0 double count removed.
    """
    if n < 2:
        raise PreconditionError("crossing enumeration needs n >= 2")
    n_max = (n + 2) // 2 if n % 2 == 0 else (n + 1) // 2
    records = []
    for n_idx in range(2, n_max + 1):
        for l_idx in range(1, n_idx):
            kp = n_idx * math.pi / (n + 2)
            km = l_idx * math.pi / (n + 2)
            records.append(_crossing_record(n_idx, l_idx, kp, km, d))
            # eta <= 0 family; skip when kp = pi/2 maps onto itself
            if not (n % 2 == 0 and n_idx == (n + 2) // 2):
                records.append(_crossing_record(n_idx, l_idx, math.pi - kp, km, d))
    records.sort(key=lambda r: (r.eta, r.e))
    return records


def _crossing_record(n_idx, l_idx, kp, km, d):
    eta = 4.0 * math.cos(kp) * math.cos(km)
    t1_over_t2 = -eta
    k1 = kp + km
    t1, t2 = t1_over_t2, 1.0
    e = -2.0 * t1 * math.cos(k1) - 2.0 * t2 * math.cos(2.0 * k1)
    return CrossingRecord(
        n_idx=n_idx, l_idx=l_idx, k_plus=kp / d, k_minus=km / d,
        eta=eta, zeta=-e, t1_over_t2=t1_over_t2, e=e,
    )


def eigenvector_tetranacci(e: float, p: ChainParams, g_m2: float = 1.0) -> np.ndarray:
    """Closed-form eigenvector amplitudes xi_1..xi_N for a non-degenerate E.

    The combination T_-2(j) T_-2(N+2) - T_-2(N+1) T_-2(j+1) cancels down
    by |r|^(2j) for modes with complex wavevectors, so it is evaluated with
    exact rational arithmetic before the final division.
    """
    c = coeffs_from_energy(e, p)
    t = basic_sequences(complex(c.zeta), complex(c.eta), 0, p.n + 2,
                        indices=(-2,))[-2]
    scale = max(abs(t[j].to_complex()) for j in range(0, p.n + 3)) or 1.0
    tn2 = t[p.n + 2]
    tn1 = t[p.n + 1]
    if abs(tn2.to_complex()) <= 1e-10 * scale:
        raise DegenerateModeError(
            "boundary value vanishes; eigenvalue is (numerically) degenerate")
    out = np.empty(p.n)
    for j in range(1, p.n + 1):
        val = (t[j] * tn2 - tn1 * t[j + 1]).div(tn2)
        out[j - 1] = g_m2 * val.to_complex().real
    return out


def arrow_classify(zeta: float, eta: float, tol: float = 1e-9) -> Arrow:
    """Classify a (zeta, eta) point against the real-wavevector region.

    Inside requires zeta <= 2 - 2|eta| and, for |eta| <= 4, zeta >=
    -2 - eta^2/4; points within tol of either bounding curve are Boundary.
    """
    upper = 2.0 - 2.0 * abs(eta)
    lower = -2.0 - eta * eta / 4.0
    if abs(zeta - upper) <= tol or (abs(eta) <= 4.0 + tol and abs(zeta - lower) <= tol):
        return Arrow.BOUNDARY
    if zeta < upper and abs(eta) <= 4.0 and zeta > lower:
        return Arrow.INSIDE
    return Arrow.OUTSIDE


def newton_refine_wavevectors(k1: complex, k2: complex, p: ChainParams,
                              s_q: int, max_iter: int = 50,
                              tol: float = 1e-12):
    """Polish (k1, k2) on the constraint pair by damped 2-D Newton.

    The system couples the equal-energy relation cos(k1 d) + cos(k2 d) =
    -t1/(2 t2) with the branch-resolved quantization f(k+) = s_q f(k-).
    The Jacobian is taken by central differences.
    """
    if p.t2 == 0.0:
        raise ZeroT2Error("refinement needs t2 != 0")
    target = -p.t1 / (2.0 * p.t2)

    def system(x):
        a, b = x[0] + 1j * x[1], x[2] + 1j * x[3]
        kp, km = (a + b) / 2.0, (a - b) / 2.0
        f1 = cmath.cos(a * p.d) + cmath.cos(b * p.d) - target
        f2 = _sin_ratio(kp, p.n, p.d) - s_q * _sin_ratio(km, p.n, p.d)
        return np.array([f1.real, f1.imag, f2.real, f2.imag])

    x = np.array([k1.real, k1.imag, k2.real, k2.imag])
    h = 1e-7
    for _ in range(max_iter):
        fx = system(x)
        if np.abs(fx).max() < tol:
            break
        jac = np.empty((4, 4))
        for col in range(4):
            dx = np.zeros(4)
            dx[col] = h
            jac[:, col] = (system(x + dx) - system(x - dx)) / (2.0 * h)
        try:
            step = np.linalg.solve(jac, fx)
        except np.linalg.LinAlgError:
            break
        x = x - step
    return x[0] + 1j * x[1], x[2] + 1j * x[3]
