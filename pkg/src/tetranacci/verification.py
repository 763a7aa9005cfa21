"""Seeded self-check suites behind the `verify` CLI subcommand.

Each suite returns (name, passed, detail) triples covering the module
invariants: exact polynomial identities, closed-form against recursion
replay, the dense oracle's own residuals, and transport equivalence.
"""

from __future__ import annotations

import numpy as np

from . import denselinalg
from .bipoly import BiPoly, tetranacci_poly, verify_identity
from .chain import ChainParams
from .closedform import appendix_a_solutions, characterize, xi_closed
from .errors import SingularBoundaryError
from .recurrence import Coefficients, InitialValues, eval_range
from .transport import (LeadParams, TransportSetup, green_1n_dense,
                        green_1n_tetranacci)


def _random_coeffs(rng) -> Coefficients:
    return Coefficients(complex(rng.normal(), rng.normal()),
                        complex(rng.normal(), rng.normal()))


def _random_initials(rng) -> InitialValues:
    return InitialValues(tuple(complex(a, b) for a, b in rng.normal(size=(4, 2))))


def suite_lemmata(seed: int = 0):
    checks = []
    ok_inv = all(
        verify_identity(tetranacci_poly(1, j), tetranacci_poly(-2, -1 - j))
        and verify_identity(tetranacci_poly(0, j), tetranacci_poly(-1, -1 - j))
        and verify_identity(tetranacci_poly(-2, j), tetranacci_poly(1, -1 - j))
        and verify_identity(tetranacci_poly(-1, j), tetranacci_poly(0, -1 - j))
        for j in range(-12, 13))
    checks.append(("inversion identities (4 relations)", ok_inv, "j in [-12, 12]"))
    eta = BiPoly.eta()
    ok_link = all(
        verify_identity(tetranacci_poly(-2, j), -tetranacci_poly(-2, -j))
        and verify_identity(tetranacci_poly(-1, j),
                            tetranacci_poly(-2, j - 1) - eta * tetranacci_poly(-2, j))
        and verify_identity(tetranacci_poly(0, j),
                            eta * tetranacci_poly(-2, j + 1) - tetranacci_poly(-2, j + 2))
        and verify_identity(tetranacci_poly(1, j), -tetranacci_poly(-2, j + 1))
        for j in range(-12, 13))
    checks.append(("reduction identities (4 relations)", ok_link, "j in [-12, 12]"))
    return checks


def suite_closed_form(seed: int = 0):
    rng = np.random.default_rng(seed)
    checks = []
    worst = 0.0
    for _ in range(50):
        c = _random_coeffs(rng)
        g = _random_initials(rng)
        cd = characterize(c)
        window = eval_range(g, c, -20, 20)
        scale = max(abs(v) for v in window.values) or 1.0
        for j in range(-20, 21):
            worst = max(worst, abs(xi_closed(g, j, cd) - window.value(j)) / scale)
    checks.append(("closed form vs replay (generic draws)", worst < 1e-9,
                   f"max rel err {worst:.3e}"))
    worst = 0.0
    for _ in range(50):
        eta = complex(rng.normal(), rng.normal())
        c = Coefficients(-2.0 - eta * eta / 4.0, eta)
        g = _random_initials(rng)
        cd = characterize(c)
        window = eval_range(g, c, -20, 20)
        scale = max(abs(v) for v in window.values) or 1.0
        for j in range(-20, 21):
            worst = max(worst, abs(xi_closed(g, j, cd) - window.value(j)) / scale)
    checks.append(("closed form vs replay (degenerate locus)", worst < 1e-9,
                   f"max rel err {worst:.3e}"))
    res = appendix_a_solutions(characterize(Coefficients(-3.0, 2.0)), range(-10, 11))
    checks.append(("degenerate extra solutions", max(res.values()) < 1e-9,
                   f"max residual {max(res.values()):.3e}"))
    return checks


def suite_oracle(seed: int = 0):
    rng = np.random.default_rng(seed)
    checks = []
    worst_res, worst_orth = 0.0, 0.0
    for n in (5, 20, 60):
        m = rng.normal(size=(n, n))
        m = m + m.T
        w, v = denselinalg.sym_eigen(m)
        worst_res = max(worst_res, float(np.abs(m @ v - v * w).max()) / np.abs(m).max())
        worst_orth = max(worst_orth, float(np.abs(v.T @ v - np.eye(n)).max()))
    checks.append(("eigen residual", worst_res < 1e-10, f"{worst_res:.3e}"))
    checks.append(("eigenvector orthonormality", worst_orth < 1e-10, f"{worst_orth:.3e}"))
    worst = 0.0
    for n in (4, 8, 16):
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) + n * np.eye(n)
        b = rng.normal(size=n) + 1j * rng.normal(size=n)
        x = denselinalg.solve_complex(a, b)
        worst = max(worst, float(np.abs(a @ x - b).max()
                                 / (np.abs(a).max() * np.abs(x).max() + np.abs(b).max())))
    checks.append(("linear solve residual", worst < 1e-10, f"{worst:.3e}"))
    return checks


def suite_transport(seed: int = 0):
    rng = np.random.default_rng(seed)
    checks = []
    worst = 0.0
    skipped = 0
    for _ in range(10):
        n = int(rng.integers(3, 15))
        chain = ChainParams(mu=rng.normal(), t1=rng.normal(),
                            t2=rng.normal() + np.sign(rng.normal()) * 0.5, n=n)
        setup = TransportSetup(chain,
                               LeadParams(abs(rng.normal()), rng.normal() * 0.2),
                               LeadParams(abs(rng.normal()), rng.normal() * 0.2))
        for e in rng.normal(size=8) * 3.0:
            try:
                gt = green_1n_tetranacci(float(e), setup)
            except SingularBoundaryError:
                skipped += 1
                continue
            gd = green_1n_dense(float(e), setup)
            worst = max(worst, abs(gt - gd) / max(abs(gd), 1e-300))
    checks.append(("corner Green's function vs dense", worst < 1e-8,
                   f"max rel err {worst:.3e}, skipped {skipped}"))
    return checks


SUITES = {
    "lemmata": suite_lemmata,
    "closed-form": suite_closed_form,
    "oracle": suite_oracle,
    "transport": suite_transport,
}


def run_suite(name: str, seed: int = 0):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend((f"{key}: {n}", ok, detail)
                       for n, ok, detail in SUITES[key](seed))
        return out
    return SUITES[name](seed)
