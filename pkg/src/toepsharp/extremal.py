"""Extremal functions certifying that the closed-form bounds are attained.

The attaining member in both classes corresponds to omega(z) = i z.  Its
Taylor coefficients satisfy a linear recursion obtained by matching
powers of z in the defining equation with phi(i z) on the right, so the
coefficients come out exact to machine precision; no quadrature of the
integral representation is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeffs import ClassKind, CoeffBundle, FunctionalKind, PhiSpec, toeplitz


@dataclass(frozen=True)
class ExtremalCoeffs:
    class_kind: ClassKind
    phi: PhiSpec
    a: tuple[complex, ...]  # a[0] = a_1 = 1

    def bundle(self) -> CoeffBundle:
        if len(self.a) < 4:
            raise ValueError("need coefficients through a4")
        return CoeffBundle(self.a[1], self.a[2], self.a[3])


def extremal_coeffs(
    kind: ClassKind, phi: PhiSpec, n: int, b_tail: tuple[float, ...] = ()
) -> ExtremalCoeffs:
    """Taylor coefficients a_1..a_N of the rotation extremal.

    Starlike: (m-1) a_m = sum_{k>=1} i^k B_k a_{m-k}.
    Convex: the derivative coefficients d_m obey m d_m = sum i^k B_k d_{m-k}
    with d_0 = 1, and a_m = d_{m-1}/m.

    Only the first three generator coefficients affect a_2..a_4 (and hence
    every functional); ``b_tail`` supplies B_4, B_5, ... for callers who
    expand an exactly known generator past degree 4.
    """
    if n < 2:
        raise ValueError("need N >= 2")
    B = [complex(x) for x in phi.as_floats()] + [complex(x) for x in b_tail]
    rot = [(1j) ** (k + 1) * B[k] for k in range(len(B))]  # i^k B_k

    def tail(seq: list[complex], m: int) -> complex:
        return sum(rot[k - 1] * seq[m - k] for k in range(1, min(m, len(B)) + 1))

    if kind is ClassKind.STARLIKE:
        a = [1.0 + 0j]
        for m in range(2, n + 1):
            a.append(tail(a, m - 1) / (m - 1))
    else:
        d = [1.0 + 0j]
        for m in range(1, n):
            d.append(tail(d, m) / m)
        a = [d[m - 1] / m for m in range(1, n + 1)]
    return ExtremalCoeffs(kind, phi, tuple(a))


def attainment(functional: FunctionalKind, kind: ClassKind, phi: PhiSpec) -> float:
    """The functional evaluated at the rotation extremal.

    Equals the closed-form theorem bound whenever that bound's
    hypotheses hold; this is the sharpness certificate.
    """
    return toeplitz(functional, extremal_coeffs(kind, phi, 4).bundle())
