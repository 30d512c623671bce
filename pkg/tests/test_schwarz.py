"""Coefficient body of Schwarz functions: forward map, admissibility, sampling."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toepsharp.schwarz import (
    SchurParams,
    SchwarzTriple,
    coeffs_to_schur,
    is_admissible,
    sample,
    sample_params,
    schur_to_coeffs,
)

unit_disk = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)


class TestForwardMap:
    def test_zero(self):
        t = schur_to_coeffs(SchurParams(0, 0, 0))
        assert (t.c1, t.c2, t.c3) == (0, 0, 0)

    def test_unimodular_first_parameter_freezes_tail(self):
        t = schur_to_coeffs(SchurParams(1, 0.3 + 0.4j, -0.9))
        assert (t.c1, t.c2, t.c3) == (1, 0, 0)

    def test_rotation_point(self):
        t = schur_to_coeffs(SchurParams(1j, 0, 0))
        assert (t.c1, t.c2, t.c3) == (1j, 0, 0)

    def test_rejects_out_of_disk(self):
        with pytest.raises(ValueError):
            schur_to_coeffs(SchurParams(1.1, 0, 0))


class TestAdmissibility:
    def test_zero(self):
        assert is_admissible(SchwarzTriple(0, 0, 0))

    def test_boundary_case_with_compensating_c3(self):
        # |c2| = 1 - |c1|^2 forces c3 (1 - |c1|^2) = -conj(c1) c2^2
        assert is_admissible(SchwarzTriple(0.5, 0.75, -0.375))

    def test_boundary_case_without_compensation(self):
        assert not is_admissible(SchwarzTriple(0.5, 0.75, 0.0))

    def test_second_constraint(self):
        assert not is_admissible(SchwarzTriple(0.8, 0.5, 0.0))

    def test_first_constraint(self):
        assert not is_admissible(SchwarzTriple(1.5, 0.0, 0.0))


class TestSampler:
    def test_deterministic(self):
        assert sample(123) == sample(123)
        a = sample_params(9, 50, "boundary-biased")
        b = sample_params(9, 50, "boundary-biased")
        assert np.array_equal(a, b)

    def test_prefix_stable(self):
        big = sample_params(5, 1000)
        small = sample_params(5, 10)
        assert np.array_equal(big[:10], small)

    def test_all_samples_admissible(self):
        for strategy in ("uniform-polar", "boundary-biased"):
            g = sample_params(17, 10 ** 4, strategy)
            assert np.all(np.abs(g) <= 1.0)
            for row in g[:500]:
                t = schur_to_coeffs(SchurParams(*row))
                assert is_admissible(t, tol=1e-12)

    def test_boundary_bias_hits_the_face(self):
        g = sample_params(3, 10 ** 4, "boundary-biased")
        frac = np.mean(np.abs(g[:, 0]) >= 0.9)
        assert frac >= 0.40

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            sample_params(0, 1, "gaussian")


def test_parameter_recovery_roundtrip():
    """The forward map is onto: interior triples round-trip through recovery."""
    rng = np.random.default_rng(42)
    found = 0
    while found < 1000:
        c = rng.uniform(-1, 1, 6)
        t = SchwarzTriple(complex(c[0], c[1]), complex(c[2], c[3]),
                          complex(c[4], c[5]))
        if not is_admissible(t, tol=0.0):
            continue
        if abs(t.c1) >= 1 - 1e-6:
            continue
        g = coeffs_to_schur(t)
        if abs(g.gamma1) >= 1 - 1e-6:
            continue
        back = schur_to_coeffs(g)
        assert abs(back.c1 - t.c1) < 1e-10
        assert abs(back.c2 - t.c2) < 1e-10
        assert abs(back.c3 - t.c3) < 1e-10
        found += 1


def test_recovery_undefined_on_degenerate_layers():
    with pytest.raises(ValueError):
        coeffs_to_schur(SchwarzTriple(1.0, 0, 0))
    with pytest.raises(ValueError):
        coeffs_to_schur(SchwarzTriple(0.0, 1.0, 0))  # |gamma1| = 1


@given(g0=unit_disk, g1=unit_disk, g2=unit_disk)
@settings(max_examples=150)
def test_conjugation_symmetry(g0, g1, g2):
    t = schur_to_coeffs(SchurParams(g0, g1, g2))
    tc = schur_to_coeffs(SchurParams(g0.conjugate(), g1.conjugate(), g2.conjugate()))
    assert tc.c1 == t.c1.conjugate()
    assert tc.c2 == t.c2.conjugate()
    assert abs(tc.c3 - t.c3.conjugate()) < 1e-15


@given(g0=unit_disk, g1=unit_disk, g2=unit_disk)
@settings(max_examples=150)
def test_forward_map_lands_in_the_body(g0, g1, g2):
    assert is_admissible(schur_to_coeffs(SchurParams(g0, g1, g2)), tol=1e-12)
