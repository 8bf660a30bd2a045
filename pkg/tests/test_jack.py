"""Jack polynomial expansion and evaluation routes."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betagap.errors import ResourceLimitError
from betagap.jack import (
    jack_C_eval,
    jack_C_eval_signlog,
    jack_in_monomial_basis,
    monomial_eval,
    rho,
)
from betagap.partitions import hook_products, jack_C_at_identity, partitions_of_weight


def test_rho_values() -> None:
    # rho(kappa) = sum k_i (k_i - 1 - 2(i-1)/alpha)
    np.testing.assert_allclose(rho((2,), 1.0), 2.0)
    np.testing.assert_allclose(rho((1, 1), 1.0), -2.0)
    np.testing.assert_allclose(rho((3, 1), 2.0), 5.0)


def test_monomial_eval_symmetrization() -> None:
    # m_(2,1)(x, y) = x^2 y + x y^2
    x, y = 1.3, 0.7
    np.testing.assert_allclose(
        monomial_eval((2, 1), (x, y)), x * x * y + x * y * y, rtol=1e-13
    )
    # m_(1,1)(x, y, z) = xy + xz + yz
    np.testing.assert_allclose(
        monomial_eval((1, 1), (2.0, 3.0, 5.0)), 2 * 3 + 2 * 5 + 3 * 5, rtol=1e-13
    )


def test_weight_one_polynomial() -> None:
    # C_(1) = x1 + ... + xm for every alpha.
    for alpha in (0.5, 1.0, 2.0):
        coeffs = jack_in_monomial_basis((1,), alpha)
        assert set(coeffs) == {(1,)}
        np.testing.assert_allclose(coeffs[(1,)], 1.0, rtol=1e-13)


def _c_normalization(kappa: tuple[int, ...], alpha: float) -> float:
    """Factor turning the monic expansion into the sum-rule normalization."""
    _, lower = hook_products(kappa, alpha)
    k = sum(kappa)
    return alpha**k * math.factorial(k) / lower


def test_weight_two_expansion() -> None:
    # In coefficient space the sum rule reads sum_kappa C_kappa = m_2 + 2 m_11.
    for alpha in (0.5, 1.0, 2.0):
        total = {}
        for kappa in ((2,), (1, 1)):
            norm = _c_normalization(kappa, alpha)
            for mu, c in jack_in_monomial_basis(kappa, alpha).items():
                total[mu] = total.get(mu, 0.0) + norm * c
        np.testing.assert_allclose(total[(2,)], 1.0, rtol=1e-12)
        np.testing.assert_allclose(total[(1, 1)], 2.0, rtol=1e-12)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_sum_rule_at_generic_point(alpha: float, k: int) -> None:
    x = (0.9, 1.7, 0.4)
    total = sum(jack_C_eval(kappa, x, alpha) for kappa in partitions_of_weight(k))
    np.testing.assert_allclose(total, sum(x) ** k, rtol=1e-11)


def test_identity_specialization_matches_monomial_route() -> None:
    for k in range(7):
        for kappa in partitions_of_weight(k):
            norm = _c_normalization(kappa, 1.5)
            expansion = jack_in_monomial_basis(kappa, 1.5)
            for m in (1, 2, 3):
                hook_value = jack_C_at_identity(kappa, 1.5, m)
                poly_value = norm * sum(
                    c * monomial_eval(mu, (1.0,) * m)
                    for mu, c in expansion.items()
                )
                np.testing.assert_allclose(hook_value, poly_value, atol=1e-12, rtol=1e-12)


def test_signlog_route_matches_direct() -> None:
    x = (2.0, 0.5, 1.0)
    for kappa in ((3, 1), (2, 2), (4,)):
        for alpha in (0.5, 1.0, 2.0):
            value = jack_C_eval(kappa, x, alpha)
            sign, log_mag = jack_C_eval_signlog(kappa, x, alpha)
            assert sign == 1
            np.testing.assert_allclose(math.exp(log_mag), value, rtol=1e-11)


def test_repeated_arguments_agree_with_perturbed() -> None:
    # The equal-argument specialization must be the limit of distinct ones.
    kappa, alpha = (3, 2), 2.0
    tied = jack_C_eval(kappa, (1.0, 1.0, 0.5), alpha)
    eps = 1e-7
    split = jack_C_eval(kappa, (1.0 + eps, 1.0 - eps, 0.5), alpha)
    np.testing.assert_allclose(tied, split, rtol=1e-5)


def test_nonadjacent_repeats_at_unit_parameter() -> None:
    # Duplicated arguments separated by a distinct one must not be treated
    # as distinct rows of the determinant (that would make it singular).
    value = jack_C_eval((1,), (1.0, 0.5, 1.0), 1.0)
    np.testing.assert_allclose(value, 2.5, rtol=1e-12)
    shuffled = jack_C_eval((2, 1), (1.0, 0.5, 1.0), 1.0)
    adjacent = jack_C_eval((2, 1), (1.0, 1.0, 0.5), 1.0)
    np.testing.assert_allclose(shuffled, adjacent, rtol=1e-12)


def test_zero_variable_padding() -> None:
    # Appending zero variables never changes the value.
    kappa, alpha = (2, 1), 0.5
    np.testing.assert_allclose(
        jack_C_eval(kappa, (1.2, 0.8), alpha),
        jack_C_eval(kappa, (1.2, 0.8, 0.0), alpha),
        rtol=1e-11,
    )


def test_too_many_rows_for_variables_gives_zero() -> None:
    assert jack_C_eval((1, 1, 1), (1.0, 2.0), 1.0) == 0.0


@given(
    st.lists(st.floats(min_value=0.05, max_value=3.0), min_size=1, max_size=3),
    st.floats(min_value=0.4, max_value=2.5),
    st.integers(min_value=1, max_value=5),
)
@settings(deadline=None, max_examples=40)
def test_sum_rule_property(xs, alpha, k) -> None:
    x = tuple(xs)
    total = sum(jack_C_eval(kappa, x, alpha) for kappa in partitions_of_weight(k))
    np.testing.assert_allclose(total, sum(x) ** k, rtol=1e-9)


def test_expansion_weight_ceiling() -> None:
    with pytest.raises(ResourceLimitError):
        jack_in_monomial_basis((201,), 1.0)
