"""Built-in generator catalog and the published sharp values.

Each well-known subclass corresponds to a generator phi; only its first
three Taylor coefficients matter here.  Fixture values are stored as
exact rationals wherever the published value is rational, so the
regression table can assert exact equality; the parabolic-domain class
is the one irrational case (powers of pi).

The lemniscate class is encoded with generator sqrt(1 + z^2) exactly as
published (B1 = 0): its listed values 1/64 and 1/16 are consistent only
with that Taylor data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coeffs import ClassKind, FunctionalKind, PhiSpec, Real

F = Fraction

_PI2 = math.pi ** 2


def _janowski(a: Real, b: Real) -> PhiSpec:
    if not (-1 <= b < a <= 1):
        raise ValueError("Janowski parameters need -1 <= B < A <= 1")
    return PhiSpec(a - b, -b * (a - b), b * b * (a - b))


def _order(alpha: Real) -> PhiSpec:
    if not 0 <= alpha < 1:
        raise ValueError("order parameter needs 0 <= alpha < 1")
    t = 2 * (1 - alpha)
    return PhiSpec(t, t, t)


def _strongly(beta: Real) -> PhiSpec:
    if not 0 < beta <= 1:
        raise ValueError("strong parameter needs 0 < beta <= 1")
    return PhiSpec(2 * beta, 2 * beta * beta, 2 * beta * (1 + 2 * beta * beta) / 3)


_FIXED_PHIS: dict[str, PhiSpec] = {
    "halfplane": PhiSpec(F(2), F(2), F(2)),            # (1+z)/(1-z)
    "cardioid": PhiSpec(F(1), F(1), F(1, 2)),          # 1 + z e^z
    "exp": PhiSpec(F(1), F(1, 2), F(1, 6)),            # e^z
    "lune": PhiSpec(F(1), F(1, 2), F(0)),              # z + sqrt(1+z^2)
    "parabolic": PhiSpec(8 / _PI2, 16 / (3 * _PI2), 184 / (45 * _PI2)),
    "lemniscate": PhiSpec(F(0), F(1, 2), F(0)),        # sqrt(1+z^2)
}

_PARAMETRIC_PHIS: dict[str, Callable[..., PhiSpec]] = {
    "janowski": _janowski,
    "starlike-order": _order,
    "convex-order": _order,
    "strongly-starlike": _strongly,
    "strongly-convex": _strongly,
}

PHI_NAMES = tuple(_FIXED_PHIS) + tuple(_PARAMETRIC_PHIS)


def phi_coeffs(name: str, **params: Real) -> PhiSpec:
    """Taylor data (B1, B2, B3) for a catalog generator.

    Parametric generators take ``alpha``, ``beta`` or ``a``/``b``; pass
    Fractions to keep everything downstream exact.
    """
    if name in _FIXED_PHIS:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return _FIXED_PHIS[name]
    if name in _PARAMETRIC_PHIS:
        return _PARAMETRIC_PHIS[name](**params)
    raise ValueError(f"unknown catalog generator {name!r}")


_T21F = FunctionalKind.T21_LOG_INV
_T22F = FunctionalKind.T22_LOG_INV
_T21 = FunctionalKind.T21_INV
_T22 = FunctionalKind.T22_INV

# Published sharp values for the parameter-free classes.  Entries absent
# from a list are the ones whose hypotheses fail for that generator
# (e.g. no T22 values for the lemniscate class, where B1 = 0).
_PARABOLIC_T21 = 128 * (648 - 36 * _PI2 + 5 * _PI2 ** 2) / (9 * _PI2 ** 4)
_PARABOLIC_T22 = (64 * (_PI2 - 36) ** 2 / (9 * _PI2 ** 4)
                  + 64 * (23040 - 1440 * _PI2 + 23 * _PI2 ** 2) ** 2
                  / (18225 * _PI2 ** 6))

_FIXTURES: dict[tuple[str, ClassKind], tuple[tuple[FunctionalKind, Real], ...]] = {
    ("halfplane", ClassKind.STARLIKE): (
        (_T21F, F(13, 4)), (_T22F, F(481, 36)), (_T21, F(29)), (_T22, F(221))),
    ("halfplane", ClassKind.CONVEX): (
        (_T21F, F(5, 16)), (_T22F, F(13, 144)), (_T21, F(2)), (_T22, F(2))),
    ("exp", ClassKind.STARLIKE): (
        (_T21F, F(25, 64)), (_T22F, F(785, 2592)), (_T21, F(41, 16)), (_T22, F(5869, 1296))),
    ("lune", ClassKind.STARLIKE): (
        (_T21F, F(25, 64)), (_T22F, F(9, 32)), (_T21, F(41, 16)), (_T22, F(625, 144))),
    ("cardioid", ClassKind.STARLIKE): (
        (_T21F, F(5, 16)), (_T21, F(2)), (_T22, F(61, 36))),
    ("lemniscate", ClassKind.STARLIKE): (
        (_T21F, F(1, 64)), (_T21, F(1, 16))),
    ("parabolic", ClassKind.STARLIKE): (
        (_T21, _PARABOLIC_T21), (_T22, _PARABOLIC_T22)),
}

_LABELS = {
    ("halfplane", ClassKind.STARLIKE): "S*",
    ("halfplane", ClassKind.CONVEX): "C",
    ("exp", ClassKind.STARLIKE): "S*_e",
    ("lune", ClassKind.STARLIKE): "Delta*",
    ("cardioid", ClassKind.STARLIKE): "S*_rho",
    ("lemniscate", ClassKind.STARLIKE): "S*_L",
    ("parabolic", ClassKind.STARLIKE): "S_P",
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    label: str
    class_kind: ClassKind
    phi: PhiSpec
    fixtures: tuple[tuple[FunctionalKind, Real], ...]


def fixtures(name: str, kind: ClassKind) -> tuple[tuple[FunctionalKind, Real], ...]:
    """Published (functional, sharp value) pairs for a catalog class."""
    key = (name, kind)
    if key not in _FIXTURES:
        raise ValueError(f"no fixtures for {name}/{kind.value}")
    return _FIXTURES[key]


def fixture_entries() -> tuple[CatalogEntry, ...]:
    """All parameter-free classes with published numeric values."""
    return tuple(
        CatalogEntry(name, _LABELS[(name, kind)], kind, phi_coeffs(name), fx)
        for (name, kind), fx in _FIXTURES.items()
    )


def certificate_entries() -> tuple[tuple[str, ClassKind, PhiSpec], ...]:
    """(label, class, phi) triples for the sharpness-certificate sweep.

    The fixed classes plus one representative parameter point per
    parametric family, chosen inside every hypothesis interval so the
    full set yields well over thirty applicable pairs.
    """
    fixed = tuple((e.label, e.class_kind, e.phi) for e in fixture_entries())
    parametric = (
        ("S*(1/4)", ClassKind.STARLIKE, phi_coeffs("starlike-order", alpha=F(1, 4))),
        ("C(1/10)", ClassKind.CONVEX, phi_coeffs("convex-order", alpha=F(1, 10))),
        ("SS*(1/2)", ClassKind.STARLIKE, phi_coeffs("strongly-starlike", beta=F(1, 2))),
        ("CC(4/5)", ClassKind.CONVEX, phi_coeffs("strongly-convex", beta=F(4, 5))),
        ("S*[1/2,-1/2]", ClassKind.STARLIKE, phi_coeffs("janowski", a=F(1, 2), b=F(-1, 2))),
        ("C[1,0]", ClassKind.CONVEX, phi_coeffs("janowski", a=F(1), b=F(0))),
    )
    return fixed + parametric


@dataclass(frozen=True)
class CorollaryCurve:
    """A published parametric sharp-bound formula and its stated interval.

    ``expected`` is the closed form as published, except where the
    publication disagrees with the proven theorem formula; then the
    theorem form is used and ``erratum`` records the discrepancy.
    """

    label: str
    class_kind: ClassKind
    functional: FunctionalKind
    param: str
    lo: float
    hi: float
    phi_of: Callable[[Real], PhiSpec]
    expected: Callable[[Real], Real]
    erratum: str | None = None


def _order_s(a: Real) -> PhiSpec:
    return phi_coeffs("starlike-order", alpha=a)


def _order_c(a: Real) -> PhiSpec:
    return phi_coeffs("convex-order", alpha=a)


def _ss(b: Real) -> PhiSpec:
    return phi_coeffs("strongly-starlike", beta=b)


def _cc(b: Real) -> PhiSpec:
    return phi_coeffs("strongly-convex", beta=b)


def _jan_star(a: Real) -> PhiSpec:
    return phi_coeffs("janowski", a=a, b=F(-1))


def _jan_conv(a: Real) -> PhiSpec:
    return phi_coeffs("janowski", a=a, b=F(-1))


COROLLARY_CURVES: tuple[CorollaryCurve, ...] = (
    # starlike functions of order alpha
    CorollaryCurve("S*(alpha)", ClassKind.STARLIKE, _T21F, "alpha", 0, 1 / 2, _order_s,
                   lambda a: (1 - a) ** 2 * ((3 - 4 * a) ** 2 + 4) / 4),
    CorollaryCurve("S*(alpha)", ClassKind.STARLIKE, _T22F, "alpha", 0, 7 / 15, _order_s,
                   lambda a: (1 - a) ** 2 * (9 * (3 - 4 * a) ** 2
                             + 4 * (2 - 3 * a) ** 2 * (5 - 6 * a) ** 2) / 36),
    CorollaryCurve("S*(alpha)", ClassKind.STARLIKE, _T21, "alpha", 0, 2 / 3, _order_s,
                   lambda a: (1 - a) ** 2 * (36 * a * a - 60 * a + 29)),
    CorollaryCurve("S*(alpha)", ClassKind.STARLIKE, _T22, "alpha", 0, 3 / 5, _order_s,
                   lambda a: (1 - a) ** 2 * (9 * (5 - 6 * a) ** 2
                             + 4 * (3 - 4 * a) ** 2 * (7 - 8 * a) ** 2) / 9),
    # convex functions of order alpha
    CorollaryCurve("C(alpha)", ClassKind.CONVEX, _T21F, "alpha", 0, 1 / 5, _order_c,
                   lambda a: 5 * (1 - a) ** 2 * (5 * a * a - 6 * a + 9) / 144),
    CorollaryCurve("C(alpha)", ClassKind.CONVEX, _T22F, "alpha", 0, 7 / 47, _order_c,
                   lambda a: (1 - a) ** 2 * ((6 * a * a - 7 * a + 2) ** 2
                             + (3 - 5 * a) ** 2) / 144),
    CorollaryCurve("C(alpha)", ClassKind.CONVEX, _T21, "alpha", 0, 1 / 2, _order_c,
                   lambda a: (1 - a) ** 2 * ((3 - 4 * a) ** 2 + 9) / 9,
                   erratum=("published corollary reads ((1-alpha)^2 (3-4 alpha)^2 + 9)/9; "
                            "the proven bound carries (1-alpha)^2 on both terms "
                            "(the two agree at alpha = 0, value 2)")),
    CorollaryCurve("C(alpha)", ClassKind.CONVEX, _T22, "alpha", 0, 39 / 95, _order_c,
                   lambda a: (1 - a) ** 2 * ((2 - 3 * a) ** 2 + 4) * (3 - 4 * a) ** 2 / 36),
    # strongly starlike of order beta
    CorollaryCurve("SS*(beta)", ClassKind.STARLIKE, _T21F, "beta", 1 / 3, 1, _ss,
                   lambda b: b * b * (9 * b * b + 4) / 4),
    CorollaryCurve("SS*(beta)", ClassKind.STARLIKE, _T22F, "beta", 1 / 3, 1, _ss,
                   lambda b: b * b * (3364 * b ** 4 + 961 * b * b + 4) / 324),
    CorollaryCurve("SS*(beta)", ClassKind.STARLIKE, _T21, "beta", 1 / 5, 1, _ss,
                   lambda b: b * b * (25 * b * b + 4)),
    CorollaryCurve("SS*(beta)", ClassKind.STARLIKE, _T22, "beta", 1 / 5, 1, _ss,
                   lambda b: b * b * (15376 * b ** 4 + 2521 * b * b + 4) / 81),
    # strongly convex of order beta
    CorollaryCurve("CC(beta)", ClassKind.CONVEX, _T21F, "beta", 2 / 3, 1, _cc,
                   lambda b: b * b * (b * b + 4) / 16),
    CorollaryCurve("CC(beta)", ClassKind.CONVEX, _T22F, "beta", 2 / 3, 1, _cc,
                   lambda b: b * b * (25 * b ** 4 + 91 * b * b + 1) / 1296),
    CorollaryCurve("CC(beta)", ClassKind.CONVEX, _T21, "beta", 1 / 3, 1, _cc,
                   lambda b: b * b * (b * b + 1)),
    CorollaryCurve("CC(beta)", ClassKind.CONVEX, _T22, "beta", math.sqrt(2 / 17), 1, _cc,
                   lambda b: b * b * (289 * b ** 4 + 358 * b * b + 1) / 324),
    # Janowski slices along B = -1 (A = 1 recovers the half-plane class);
    # the A ranges keep every hypothesis, including region membership,
    # satisfied along the slice.
    CorollaryCurve("S*[A,-1]", ClassKind.STARLIKE, _T21F, "a", 1 / 2, 1, _jan_star,
                   lambda a: (a + 1) ** 2 * (4 * a * a + 4 * a + 5) / 16),
    CorollaryCurve("S*[A,-1]", ClassKind.STARLIKE, _T22F, "a", 1 / 2, 1, _jan_star,
                   lambda a: (a + 1) ** 2 * ((9 * a * a + 9 * a + 2) ** 2
                             + 9 * (1 + 2 * a) ** 2) / 144),
    CorollaryCurve("S*[A,-1]", ClassKind.STARLIKE, _T21, "a", 1 / 2, 1, _jan_star,
                   lambda a: (a + 1) ** 2 * ((3 * a + 2) ** 2 + 4) / 4),
    CorollaryCurve("S*[A,-1]", ClassKind.STARLIKE, _T22, "a", 1 / 2, 1, _jan_star,
                   lambda a: (a + 1) ** 2 * (9 * (3 * a + 2) ** 2
                             + 4 * (1 + 2 * a) ** 2 * (4 * a + 3) ** 2) / 36),
    CorollaryCurve("C[A,-1]", ClassKind.CONVEX, _T21F, "a", 4 / 5, 1, _jan_conv,
                   lambda a: (a + 1) ** 2 * (25 * a * a + 10 * a + 145) / 2304),
    CorollaryCurve("C[A,-1]", ClassKind.CONVEX, _T22F, "a", 4 / 5, 1, _jan_conv,
                   lambda a: (a + 1) ** 2 * (a * a * (1 + 3 * a) ** 2
                             + (1 + 5 * a) ** 2) / 2304),
    CorollaryCurve("C[A,-1]", ClassKind.CONVEX, _T21, "a", 4 / 5, 1, _jan_conv,
                   lambda a: (a + 1) ** 2 * ((1 + 2 * a) ** 2 + 9) / 36),
    CorollaryCurve("C[A,-1]", ClassKind.CONVEX, _T22, "a", 4 / 5, 1, _jan_conv,
                   lambda a: (2 * a * a + 3 * a + 1) ** 2 * ((1 + 3 * a) ** 2 + 16) / 576),
)
