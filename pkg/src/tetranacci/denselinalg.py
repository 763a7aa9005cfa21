"""Self-contained dense linear algebra used as ground truth.

A cyclic Jacobi eigensolver for real symmetric matrices and Gaussian
elimination with partial pivoting for complex systems.  Deliberately
independent of numpy.linalg so the physics modules are checked against
arithmetic we own end to end.
"""

from __future__ import annotations

import numpy as np

from .errors import AsymmetryError, SingularMatrixError


def sym_eigen(m: np.ndarray):
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Returns (eigenvalues ascending, eigenvector matrix with orthonormal
    columns).  Sweeps continue until the off-diagonal Frobenius norm drops
    below 1e-14 times the matrix norm.
    """
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    norm = np.abs(a).max()
    if norm > 0 and np.abs(a - a.T).max() >= 1e-12 * norm:
        raise AsymmetryError("matrix is not symmetric")
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    fro = np.sqrt((a * a).sum()) or 1.0
    tol = 1e-14 * fro
    for _ in range(100):
        off = np.sqrt(2.0 * (np.triu(a, 1) ** 2).sum())
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                # classic Jacobi rotation annihilating a[p, q]
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = a.diagonal().copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def solve_complex(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve a x = b by Gaussian elimination with partial pivoting.

    b may be a vector or a matrix of right-hand sides.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    b = np.array(b, dtype=complex)
    vector = b.ndim == 1
    rhs = b.reshape(n, -1).copy()
    for col in range(n):
        piv = col + np.argmax(np.abs(a[col:, col]))
        if abs(a[piv, col]) <= 1e-300:
            raise SingularMatrixError(f"no pivot in column {col}")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            rhs[[col, piv]] = rhs[[piv, col]]
        factors = a[col + 1:, col] / a[col, col]
        a[col + 1:, col:] -= np.outer(factors, a[col, col:])
        rhs[col + 1:] -= np.outer(factors, rhs[col])
    x = np.zeros_like(rhs)
    for row in range(n - 1, -1, -1):
        x[row] = (rhs[row] - a[row, row + 1:] @ x[row + 1:]) / a[row, row]
    return x[:, 0] if vector else x


def inverse_complex(a: np.ndarray) -> np.ndarray:
    """Full inverse via solve_complex against the identity."""
    n = np.asarray(a).shape[0]
    return solve_complex(a, np.eye(n, dtype=complex))


def cluster_eigenvalues(w: np.ndarray, gap: float):
    """Group sorted eigenvalues into clusters separated by less than gap."""
    clusters = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] - w[i - 1] >= gap:
            clusters.append(list(range(start, i)))
            start = i
    return clusters


def subspace_angle(u: np.ndarray, v: np.ndarray) -> float:
    """Largest principal angle (radians) between the column spans of u, v."""
    qu, _ = np.linalg.qr(u)
    qv, _ = np.linalg.qr(v)
    sv = np.linalg.svd(qu.T.conj() @ qv, compute_uv=False)
    sv = np.clip(sv, -1.0, 1.0)
    return float(np.arccos(sv.min()))
