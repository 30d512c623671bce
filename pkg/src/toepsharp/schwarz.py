"""The first-three-coefficient body of Schwarz functions.

A Schwarz function omega(z) = c1 z + c2 z^2 + c3 z^3 + ... maps the unit
disk into itself with omega(0) = 0.  The attainable (c1, c2, c3) form a
compact body described by

    |c1| <= 1,
    |c2| <= 1 - |c1|^2,
    |c3 (1 - |c1|^2) + conj(c1) c2^2| <= (1 - |c1|^2)^2 - |c2|^2.

Three free unit-disk parameters (gamma0, gamma1, gamma2) generate the
whole body surjectively, which is what the sampler and the maximization
oracle work with: box constraints only, no rejection needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PARAM_TOL = 1e-12


@dataclass(frozen=True)
class SchurParams:
    """Free parameters, each in the closed unit disk."""

    gamma0: complex
    gamma1: complex
    gamma2: complex

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.gamma0, self.gamma1, self.gamma2)


@dataclass(frozen=True)
class SchwarzTriple:
    """Raw leading coefficients (c1, c2, c3) of a Schwarz function."""

    c1: complex
    c2: complex
    c3: complex


def schur_to_coeffs(p: SchurParams) -> SchwarzTriple:
    """Forward map from free parameters onto the coefficient body.

    The output satisfies the three body inequalities for any valid
    parameters; equality in the third one corresponds to |gamma2| = 1.
    """
    g0, g1, g2 = (complex(g) for g in p.as_tuple())
    for k, g in enumerate((g0, g1, g2)):
        if abs(g) > 1 + _PARAM_TOL:
            raise ValueError(f"|gamma{k}| = {abs(g)} exceeds 1")
    t0 = 1.0 - abs(g0) ** 2
    c1 = g0
    c2 = t0 * g1
    c3 = t0 * ((1.0 - abs(g1) ** 2) * g2 - g0.conjugate() * g1 ** 2)
    return SchwarzTriple(c1, c2, c3)


def coeffs_to_schur(t: SchwarzTriple) -> SchurParams:
    """Inverse of the forward map, defined only in the interior.

    Degenerate layers (|c1| = 1, or |gamma1| = 1) have no unique
    preimage; callers sampling the interior never hit them.
    """
    t0 = 1.0 - abs(t.c1) ** 2
    if t0 <= 0:
        raise ValueError("parameter recovery undefined at |c1| = 1")
    g0 = t.c1
    g1 = t.c2 / t0
    t1 = 1.0 - abs(g1) ** 2
    if t1 <= 0:
        raise ValueError("parameter recovery undefined at |gamma1| = 1")
    g2 = (t.c3 / t0 + g0.conjugate() * g1 ** 2) / t1
    return SchurParams(g0, g1, g2)


def is_admissible(t: SchwarzTriple, tol: float = 1e-12) -> bool:
    """Whether (c1, c2, c3) lies in the coefficient body, within tol.

    Extremal points sit exactly on the constraint surface, so a small
    positive tolerance is the useful default.
    """
    s1 = abs(t.c1)
    if s1 > 1 + tol:
        return False
    t0 = 1.0 - s1 ** 2
    if abs(t.c2) > t0 + tol:
        return False
    lhs = abs(t.c3 * t0 + t.c1.conjugate() * t.c2 ** 2)
    rhs = t0 ** 2 - abs(t.c2) ** 2
    return lhs <= rhs + tol


def sample_params(seed: int, n: int, strategy: str = "uniform-polar") -> np.ndarray:
    """Draw n parameter triples as an (n, 3) complex array.

    Deterministic given the seed, and prefix-stable: the first m rows of
    a size-n draw equal a size-m draw with the same seed (the underlying
    uniforms are generated row-major).

    "uniform-polar" draws each gamma with uniform modulus and argument.
    "boundary-biased" pushes |gamma0| into [0.9, 1] for half the rows,
    since the functionals peak on the |gamma0| = 1 face.
    """
    if strategy not in ("uniform-polar", "boundary-biased"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = np.random.default_rng(seed)
    u = rng.random((n, 7))
    r = u[:, 0:5:2].copy()
    theta = 2.0 * np.pi * u[:, 1:6:2]
    if strategy == "boundary-biased":
        near = u[:, 6] < 0.5
        r[near, 0] = 1.0 - 0.1 * r[near, 0] ** 2
    return r * np.exp(1j * theta)


def sample(seed: int, strategy: str = "uniform-polar") -> SchurParams:
    """One deterministic pseudo-random parameter triple."""
    g = sample_params(seed, 1, strategy)[0]
    return SchurParams(g[0], g[1], g[2])
