"""Shared test utilities: independent pipeline solvers and random data.

The solvers here derive (a2, a3, a4) directly from the defining
differential relations using only the series engine, term by term.  They
share no formulas with toepsharp.coeffs, so agreement between the two is
a genuine cross-check.
"""

from __future__ import annotations

import numpy as np

from toepsharp.coeffs import PhiSpec
from toepsharp.schwarz import SchwarzTriple, schur_to_coeffs, SchurParams
from toepsharp.series import Series, compose


def phi_series(phi: PhiSpec) -> Series:
    b1, b2, b3 = phi.as_floats()
    return Series((1.0, b1, b2, b3))


def omega_series(t: SchwarzTriple) -> Series:
    return Series((0.0, t.c1, t.c2, t.c3))


def solve_starlike(phi: PhiSpec, t: SchwarzTriple) -> tuple[complex, complex, complex]:
    """(a2, a3, a4) from z f' = f * phi(omega) solved degree by degree."""
    p = compose(phi_series(phi), omega_series(t)).coeffs
    a = [1.0 + 0j]
    for m in range(2, 5):
        # m a_m - a_m = sum_{k=1}^{m-1} p_k a_{m-k}
        a.append(sum(p[k] * a[m - k - 1] for k in range(1, m)) / (m - 1))
    return a[1], a[2], a[3]


def solve_convex(phi: PhiSpec, t: SchwarzTriple) -> tuple[complex, complex, complex]:
    """(a2, a3, a4) from 1 + z f''/f' = phi(omega), via f' = 1 + sum d_m z^m."""
    p = compose(phi_series(phi), omega_series(t)).coeffs
    d = [1.0 + 0j]
    for m in range(1, 4):
        # z (f')' = f' (phi(omega) - 1): m d_m = sum_{k=1}^{m} p_k d_{m-k}
        d.append(sum(p[k] * d[m - k] for k in range(1, m + 1)) / m)
    # f' coefficient of z^{m} is (m+1) a_{m+1}
    return d[1] / 2, d[2] / 3, d[3] / 4


def random_complex(rng: np.random.Generator, scale: float = 5.0) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def random_triples(seed: int, n: int) -> list[SchwarzTriple]:
    """n admissible triples drawn through the unit-disk parameterization."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        r = rng.random(3) ** 0.5
        th = rng.uniform(0, 2 * np.pi, 3)
        g = r * np.exp(1j * th)
        out.append(schur_to_coeffs(SchurParams(g[0], g[1], g[2])))
    return out
