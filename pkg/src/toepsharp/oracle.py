"""Independent numerical maximization over the Schwarz coefficient body.

Each functional is a smooth function of six real parameters (modulus and
argument of the three free unit-disk parameters), so a seeded random
multistart plus a derivative-free compass search on the box is enough to
hit the global maximum reliably.  The known extremal point omega(z) = iz
and its real rotations are always injected as starts, so the empirical
maximum can never fall below the attainment value, whatever the budget.

Everything is deterministic given (inputs, seed, budget): sampling uses
one row-major uniform block (so sample streams are prefix-stable in the
budget) and the refinement itself uses no randomness at all, which also
makes the per-start work embarrassingly parallel with identical results
in any execution order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import bounds
from .coeffs import ClassKind, FunctionalKind, PhiSpec
from .schwarz import SchurParams

VIOLATION_TOL = 1e-9
SHARPNESS_TOL = 1e-4

_N_STARTS = 64
_STEP_INIT = 0.1
_STEP_MIN = 1e-9
_MAX_ITERS = 400


class Verdict(Enum):
    SHARP_CONFIRMED = "SharpConfirmed"
    VALID_NOT_ATTAINED = "ValidNotAttained"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class VerificationReport:
    functional: FunctionalKind
    class_kind: ClassKind
    phi: PhiSpec
    bound: float
    empirical_max: float
    argmax: SchurParams
    samples_used: int
    refinement_iters: int
    seed: int
    verdict: Verdict
    margin: float           # bound - empirical_max
    applicable: bool        # False = bound is a formula value only, unproven


def _gammas(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Box coordinates (r0,t0,r1,t1,r2,t2) -> three complex parameters."""
    g = x[..., 0::2] * np.exp(1j * x[..., 1::2])
    return g[..., 0], g[..., 1], g[..., 2]


def _triples(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    g0, g1, g2 = _gammas(x)
    t0 = 1.0 - np.abs(g0) ** 2
    c1 = g0
    c2 = t0 * g1
    c3 = t0 * ((1.0 - np.abs(g1) ** 2) * g2 - np.conj(g0) * g1 ** 2)
    return c1, c2, c3


def _functional_objective(functional: FunctionalKind, kind: ClassKind, phi: PhiSpec):
    """Vectorized |T| as a function of the box coordinates."""
    B1, B2, B3 = phi.as_floats()
    convex = kind is ClassKind.CONVEX

    def obj(x: np.ndarray) -> np.ndarray:
        c1, c2, c3 = _triples(x)
        a2 = B1 * c1
        a3 = ((B1 * B1 + B2) * c1 ** 2 + B1 * c2) / 2
        a4 = ((B1 ** 3 + 3 * B1 * B2 + 2 * B3) * c1 ** 3
              + (3 * B1 * B1 + 4 * B2) * c1 * c2 + 2 * B1 * c3) / 6
        if convex:
            a2, a3, a4 = a2 / 2, a3 / 3, a4 / 4
        if functional is FunctionalKind.T21_INV:
            return np.abs(a2 ** 2 - (2 * a2 ** 2 - a3) ** 2)
        if functional is FunctionalKind.T22_INV:
            b3 = 2 * a2 ** 2 - a3
            b4 = -5 * a2 ** 3 + 5 * a2 * a3 - a4
            return np.abs(b3 ** 2 - b4 ** 2)
        g2v = -(a3 - 1.5 * a2 ** 2) / 2
        if functional is FunctionalKind.T21_LOG_INV:
            return np.abs((a2 / 2) ** 2 - g2v ** 2)
        g3v = -(a4 - 4 * a2 * a3 + (10 / 3) * a2 ** 3) / 2
        return np.abs(g2v ** 2 - g3v ** 2)

    return obj


def _lemma_objective(sigma: float, mu: float):
    def obj(x: np.ndarray) -> np.ndarray:
        c1, c2, c3 = _triples(x)
        return np.abs(c3 + sigma * c1 * c2 + mu * c1 ** 3)

    return obj


# starts that are always injected: the extremal omega(z) = i z, its real
# rotations, and the pure-c3 corner (reaches |c3| = 1 when gamma0 = gamma1 = 0)
_SEED_POINTS = np.array([
    [1.0, np.pi / 2, 0.0, 0.0, 0.0, 0.0],   # gamma0 = i
    [1.0, 0.0, 0.0, 0.0, 0.0, 0.0],          # gamma0 = 1
    [1.0, np.pi, 0.0, 0.0, 0.0, 0.0],        # gamma0 = -1
    [1.0, 3 * np.pi / 2, 0.0, 0.0, 0.0, 0.0],  # gamma0 = -i
    [0.0, 0.0, 0.0, 0.0, 1.0, 0.0],          # gamma2 = 1
])


def _sample_box(seed: int, n: int) -> np.ndarray:
    """Half uniform-polar, half boundary-biased draws; prefix-stable in n."""
    rng = np.random.default_rng(seed)
    u = rng.random((n, 7))
    x = np.empty((n, 6))
    x[:, 0::2] = u[:, 0:5:2]
    x[:, 1::2] = 2.0 * np.pi * u[:, 1:6:2]
    near = u[:, 6] < 0.5
    x[near, 0] = 1.0 - 0.1 * x[near, 0] ** 2
    return x


def _project(x: np.ndarray) -> np.ndarray:
    x[..., 0::2] = np.clip(x[..., 0::2], 0.0, 1.0)
    x[..., 1::2] = np.mod(x[..., 1::2], 2.0 * np.pi)
    return x


def _compass_search(obj, x0: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Vectorized compass (pattern) search on the box, one row per start.

    Probes +-step along each coordinate, moves to the best improving
    probe, halves the step when nothing improves.  Deterministic.
    """
    x = x0.copy()
    f = obj(x)
    step = np.full(len(x), _STEP_INIT)
    iters = 0
    while np.any(step >= _STEP_MIN) and iters < _MAX_ITERS:
        iters += 1
        cand = np.repeat(x[None, :, :], 12, axis=0)  # (12, S, 6)
        for d in range(6):
            cand[2 * d, :, d] += step
            cand[2 * d + 1, :, d] -= step
        _project(cand)
        fc = obj(cand)                # (12, S)
        best = np.argmax(fc, axis=0)  # first max wins: deterministic
        fbest = fc[best, np.arange(len(x))]
        improved = fbest > f
        x[improved] = cand[best[improved], np.arange(len(x))[improved]]
        f = np.where(improved, fbest, f)
        step = np.where(improved, step, step / 2.0)
    return x, f, iters


def _maximize_objective(obj, budget: int, seed: int):
    samples = _sample_box(seed, budget)
    fs = obj(samples)
    n_top = min(_N_STARTS, budget)
    # stable ranking so equal values keep sample order
    order = np.argsort(-fs, kind="stable")[:n_top]
    starts = np.vstack([_SEED_POINTS, samples[order]])
    xr, fr, iters = _compass_search(obj, starts)
    k = int(np.argmax(fr))
    return xr[k], float(fr[k]), iters


def _params_of(x: np.ndarray) -> SchurParams:
    g0, g1, g2 = _gammas(x)
    return SchurParams(complex(g0), complex(g1), complex(g2))


def _verdict(bound: float, emp: float,
             violation_tol: float, sharpness_tol: float) -> Verdict:
    if emp > bound + violation_tol:
        return Verdict.VIOLATION
    if bound - emp <= sharpness_tol:
        return Verdict.SHARP_CONFIRMED
    return Verdict.VALID_NOT_ATTAINED


def maximize(
    functional: FunctionalKind,
    kind: ClassKind,
    phi: PhiSpec,
    budget: int = 10 ** 5,
    seed: int = 0,
    violation_tol: float = VIOLATION_TOL,
    sharpness_tol: float = SHARPNESS_TOL,
) -> VerificationReport:
    """Empirically maximize a functional and judge it against its bound.

    An inapplicable bound (failed hypothesis) still produces a report:
    the formula value is judged as if it were a bound, flagged unproven
    via ``applicable=False``.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    report = bounds.theorem_bound(functional, kind, phi)
    obj = _functional_objective(functional, kind, phi)
    x, emp, iters = _maximize_objective(obj, budget, seed)
    bound = float(report.bound)
    return VerificationReport(
        functional=functional,
        class_kind=kind,
        phi=phi,
        bound=bound,
        empirical_max=emp,
        argmax=_params_of(x),
        samples_used=budget,
        refinement_iters=iters,
        seed=seed,
        verdict=_verdict(bound, emp, violation_tol, sharpness_tol),
        margin=bound - emp,
        applicable=report.applicable,
    )


def lemma1_scan(
    sigma: float,
    mu: float,
    budget: int = 10 ** 4,
    seed: int = 0,
    violation_tol: float = VIOLATION_TOL,
    sharpness_tol: float = SHARPNESS_TOL,
) -> tuple[float, float | None, Verdict]:
    """Scan |c3 + sigma c1 c2 + mu c1^3| over the coefficient body.

    Returns (empirical max, bound, verdict); the bound is |mu| when
    (sigma, mu) lies in one of the Omega regions and None otherwise, in
    which case only the empirical value is meaningful and the verdict is
    judged against it (never VIOLATION).
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    obj = _lemma_objective(float(sigma), float(mu))
    _, emp, _ = _maximize_objective(obj, budget, seed)
    membership = bounds.omega_region(float(sigma), float(mu))
    if membership.region is bounds.Region.NONE:
        return emp, None, Verdict.VALID_NOT_ATTAINED
    bound = abs(float(mu))
    return emp, bound, _verdict(bound, emp, violation_tol, sharpness_tol)
