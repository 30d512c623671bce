"""Closed-form sharp bounds with full hypothesis checking.

Each of the four functionals has one bound per class, valid under an
inequality on the generator data and (for the T_{2,2} functionals) a
region condition on an associated pair (sigma, mu).  The region calculus
is the one of the |c3 + sigma c1 c2 + mu c1^3| <= |mu| lemma:

    Omega1: |sigma| <= 2 and mu >= 1
    Omega2: 2 <= |sigma| <= 4 and mu >= (sigma^2 + 8)/12
    Omega3: |sigma| >= 4 and mu >= (2/3)(|sigma| - 1)

All arithmetic is polymorphic over float and Fraction: exact generator
data yields exact bounds, which is what the corollary fixtures assert.
Formula values are reported even when a hypothesis fails, flagged as
not applicable, so parameter sweeps see the whole curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .coeffs import ClassKind, FunctionalKind, PhiSpec, Real

HYP_TOL = 1e-12


class Region(Enum):
    NONE = "none"
    OMEGA1 = "omega1"
    OMEGA2 = "omega2"
    OMEGA3 = "omega3"


@dataclass(frozen=True)
class RegionMembership:
    region: Region
    sigma: float
    mu: float


@dataclass(frozen=True)
class Hypothesis:
    """One checked condition: satisfied iff margin >= -tolerance."""

    name: str
    satisfied: bool
    margin: float


@dataclass(frozen=True)
class BoundReport:
    functional: FunctionalKind
    class_kind: ClassKind
    phi: PhiSpec
    bound: Real
    hypotheses: tuple[Hypothesis, ...]
    sigma_mu: RegionMembership | None
    applicable: bool
    witness: str


class UndefinedSigmaMuError(ValueError):
    """Raised when B1 = 0 makes the (sigma, mu) pair undefined."""


class HypothesisError(ValueError):
    """Raised by intermediate_bound when its validity condition fails."""


def _in_region(sigma: float, mu: float, i: int) -> float:
    """Smallest slack of region Omega_i's conditions (negative = outside)."""
    s = abs(sigma)
    if i == 1:
        return min(2.0 - s, mu - 1.0)
    if i == 2:
        return min(s - 2.0, 4.0 - s, mu - (sigma * sigma + 8.0) / 12.0)
    if i == 3:
        return min(s - 4.0, mu - (2.0 / 3.0) * (s - 1.0))
    raise ValueError(i)


def omega_region(sigma: float, mu: float, tol: float = HYP_TOL) -> RegionMembership:
    """Lowest-index region containing (sigma, mu), or NONE.

    Overlaps (|sigma| exactly 2 or 4) report the lower index.
    """
    sigma, mu = float(sigma), float(mu)
    for i, tag in ((1, Region.OMEGA1), (2, Region.OMEGA2), (3, Region.OMEGA3)):
        if _in_region(sigma, mu, i) >= -tol:
            return RegionMembership(tag, sigma, mu)
    return RegionMembership(Region.NONE, sigma, mu)


# Which Omega union each T22 theorem requires, as printed.
_ALLOWED_REGIONS = {
    (FunctionalKind.T22_LOG_INV, ClassKind.STARLIKE): (1, 2, 3),
    (FunctionalKind.T22_LOG_INV, ClassKind.CONVEX): (2, 3),
    (FunctionalKind.T22_INV, ClassKind.STARLIKE): (2, 3),
    (FunctionalKind.T22_INV, ClassKind.CONVEX): (1, 2, 3),
}


def sigma_mu(kind: ClassKind, phi: PhiSpec, which: FunctionalKind) -> tuple[Real, Real]:
    """The (sigma, mu) pair whose region membership the T22 bounds need."""
    if which not in (FunctionalKind.T22_LOG_INV, FunctionalKind.T22_INV):
        raise ValueError(f"no (sigma, mu) data for {which}")
    b1, b2, b3 = phi.b1, phi.b2, phi.b3
    if b1 == 0:
        raise UndefinedSigmaMuError("(sigma, mu) undefined at B1 = 0")
    if which is FunctionalKind.T22_LOG_INV:
        if kind is ClassKind.STARLIKE:
            return (-(9 * b1 * b1 - 4 * b2) / (2 * b1),
                    (9 * b1 ** 3 - 9 * b1 * b2 + 2 * b3) / (2 * b1))
        return (-(5 * b1 * b1 - 4 * b2) / (2 * b1),
                (3 * b1 ** 3 - 5 * b1 * b2 + 2 * b3) / (2 * b1))
    if kind is ClassKind.STARLIKE:
        return (2 * (b2 - 3 * b1 * b1) / b1,
                (8 * b1 ** 3 - 6 * b1 * b2 + b3) / b1)
    return ((4 * b2 - 7 * b1 * b1) / (2 * b1),
            (6 * b1 ** 3 - 7 * b1 * b2 + 2 * b3) / (2 * b1))


def fekete_szego_bound(kind: ClassKind, phi: PhiSpec, lam: Real) -> Real:
    """Sharp piecewise bound on |a3 - lambda a2^2| for real lambda.

    Adjacent branch formulas agree at the branch boundaries, so plain
    comparisons suffice.
    """
    b1, b2 = phi.b1, phi.b2
    if kind is ClassKind.STARLIKE:
        t = 2 * lam * b1 * b1
        if t <= b1 * b1 + b2 - b1:
            return (b1 * b1 + b2 - t) / 2
        if t <= b1 * b1 + b2 + b1:
            return b1 / 2
        return (t - b1 * b1 - b2) / 2
    t = 3 * lam * b1 * b1
    if t <= 2 * (b1 * b1 + b2 - b1):
        return (b2 + b1 * b1 - t / 2) / 6
    if t <= 2 * (b1 * b1 + b2 + b1):
        return b1 / 6
    return (t / 2 - b1 * b1 - b2) / 6


class IntermediateKind(Enum):
    A2 = "a2"
    GAMMA2 = "gamma2"
    GAMMA3 = "gamma3"
    B3COEF = "b3"
    B4COEF = "b4"


def _require(name: str, margin) -> None:
    if margin < -HYP_TOL:
        raise HypothesisError(f"hypothesis failed: {name} (margin {float(margin)})")


def intermediate_bound(kind: ClassKind, phi: PhiSpec, which: IntermediateKind) -> Real:
    """Sharp bound on one coefficient magnitude, as used in the proofs.

    Bounds the actual quantity named: |a2|, |Gamma2|, |Gamma3|, |b3| or
    |b4|.  Raises HypothesisError when the matching validity condition
    (inequality on the generator data, or region membership) fails.
    """
    b1, b2, b3 = phi.b1, phi.b2, phi.b3
    star = kind is ClassKind.STARLIKE
    if which is IntermediateKind.A2:
        return b1 if star else b1 / 2
    if which is IntermediateKind.GAMMA2:
        if star:
            q = b2 - 2 * b1 * b1
            _require("|B2 - 2 B1^2| >= B1", abs(q) - b1)
            return abs(q) / 4
        q = 4 * b2 - 5 * b1 * b1
        _require("|B2 - (5/4) B1^2| >= B1", abs(q) / 4 - b1)
        return abs(q) / 48
    if which is IntermediateKind.B3COEF:
        if star:
            q = 3 * b1 * b1 - b2
            _require("B1 <= |3 B1^2 - B2|", abs(q) - b1)
            return abs(q) / 2
        q = 2 * b1 * b1 - b2
        _require("B1 <= |2 B1^2 - B2|", abs(q) - b1)
        return abs(q) / 6
    # the two third-coefficient bounds need region membership
    functional = (FunctionalKind.T22_LOG_INV if which is IntermediateKind.GAMMA3
                  else FunctionalKind.T22_INV)
    s, m = sigma_mu(kind, phi, functional)
    allowed = _ALLOWED_REGIONS[(functional, kind)]
    slack = max(_in_region(float(s), float(m), i) for i in allowed)
    _require(f"(sigma, mu) in Omega union {allowed}", slack)
    if which is IntermediateKind.GAMMA3:
        if star:
            return abs(9 * b1 ** 3 - 9 * b1 * b2 + 2 * b3) / 12
        return abs(3 * b1 ** 3 - 5 * b1 * b2 + 2 * b3) / 48
    if star:
        return abs(8 * b1 ** 3 - 6 * b1 * b2 + b3) / 3
    return abs(6 * b1 ** 3 - 7 * b1 * b2 + 2 * b3) / 24


def _ineq(name: str, margin) -> Hypothesis:
    return Hypothesis(name, margin >= -HYP_TOL, float(margin))


def _witness(kind: ClassKind) -> str:
    if kind is ClassKind.STARLIKE:
        return "rotation extremal f with z f'(z)/f(z) = phi(i z), i.e. omega(z) = i z"
    return "rotation extremal h with 1 + z h''(z)/h'(z) = phi(i z), i.e. omega(z) = i z"


def theorem_bound(functional: FunctionalKind, kind: ClassKind, phi: PhiSpec) -> BoundReport:
    """Dispatch to the sharp closed-form bound for (functional, class).

    The bound value is always populated; ``applicable`` records whether
    every hypothesis holds (within HYP_TOL, so boundary generators
    count as satisfied).
    """
    b1, b2, b3 = phi.b1, phi.b2, phi.b3
    hyps: list[Hypothesis] = []
    membership: RegionMembership | None = None
    star = kind is ClassKind.STARLIKE

    if functional is FunctionalKind.T21_LOG_INV:
        if star:
            q = b2 - 2 * b1 * b1
            bound = b1 * b1 / 4 + q * q / 16
            hyps.append(_ineq("|B2 - 2 B1^2| >= B1", abs(q) - b1))
        else:
            q = 4 * b2 - 5 * b1 * b1
            bound = b1 * b1 / 16 + q * q / 2304
            hyps.append(_ineq("|B2 - (5/4) B1^2| >= B1", abs(q) / 4 - b1))
    elif functional is FunctionalKind.T22_LOG_INV:
        if star:
            q = b2 - 2 * b1 * b1
            n = 9 * b1 ** 3 - 9 * b1 * b2 + 2 * b3
            bound = q * q / 16 + n * n / 144
            hyps.append(_ineq("|B2 - 2 B1^2| >= B1", abs(q) - b1))
        else:
            q = 4 * b2 - 5 * b1 * b1
            n = 3 * b1 ** 3 - 5 * b1 * b2 + 2 * b3
            bound = q * q / 2304 + n * n / 2304
            hyps.append(_ineq("|B2 - (5/4) B1^2| >= B1", abs(q) / 4 - b1))
    elif functional is FunctionalKind.T21_INV:
        if star:
            q = 3 * b1 * b1 - b2
            bound = b1 * b1 + q * q / 4
            hyps.append(_ineq("B1 <= |3 B1^2 - B2|", abs(q) - b1))
        else:
            q = 2 * b1 * b1 - b2
            bound = b1 * b1 / 4 + q * q / 36
            hyps.append(_ineq("B1 <= |2 B1^2 - B2|", abs(q) - b1))
    elif functional is FunctionalKind.T22_INV:
        if star:
            q = b2 - 3 * b1 * b1
            n = 8 * b1 ** 3 - 6 * b1 * b2 + b3
            bound = q * q / 4 + n * n / 9
            hyps.append(_ineq("B1 <= |3 B1^2 - B2|", abs(q) - b1))
        else:
            q = b2 - 2 * b1 * b1
            n = 6 * b1 ** 3 - 7 * b1 * b2 + 2 * b3
            bound = q * q / 36 + n * n / 576
            hyps.append(_ineq("B1 <= |2 B1^2 - B2|", abs(q) - b1))
    else:
        raise ValueError(f"unknown functional {functional}")

    if functional in (FunctionalKind.T22_LOG_INV, FunctionalKind.T22_INV):
        if b1 == 0:
            hyps.append(Hypothesis("B1 > 0 ((sigma, mu) defined)", False, 0.0))
        else:
            s, m = sigma_mu(kind, phi, functional)
            allowed = _ALLOWED_REGIONS[(functional, kind)]
            membership = omega_region(float(s), float(m))
            slack = max(_in_region(float(s), float(m), i) for i in allowed)
            names = " | ".join(f"Omega{i}" for i in allowed)
            hyps.append(_ineq(f"(sigma, mu) in {names}", slack))

    return BoundReport(
        functional=functional,
        class_kind=kind,
        phi=phi,
        bound=bound,
        hypotheses=tuple(hyps),
        sigma_mu=membership,
        applicable=all(h.satisfied for h in hyps),
        witness=_witness(kind),
    )
