import math

import pytest

from gr32485.quadrature import DEFAULT_CONFIG
from gr32485.representations import (
    CONSTANTS,
    NORMAL_FORM_COEFF,
    A,
    B,
    bf_identity,
    constant_residuals,
    double_angle_form,
    eval_representation,
    h,
    h1_integral,
    h2_integral,
    j1_integral,
    j2_integral,
    phi,
    representation_ids,
)

SQRT3 = math.sqrt(3.0)


def test_phi_examples():
    assert phi(0.0) == 1.0
    assert phi(1.0) == pytest.approx(4.0 / 3.0, rel=1e-15)
    assert phi(2.0) == pytest.approx(phi(0.5), rel=1e-15)


def test_phi_bounded_everywhere():
    for x in (-1e300, -17.0, 0.0, 1e-8, 3.0, 1e8, 1e300):
        assert 1.0 <= phi(x) <= 4.0 / 3.0 + 1e-15


def test_h_examples():
    assert h(0.0) == 1.0
    assert h(1.0) == 1.0
    assert h(1.0 / math.sqrt(2.0)) == pytest.approx(4.0 / 3.0, rel=1e-15)
    with pytest.raises(ValueError):
        h(1.5)


def test_A_examples():
    assert A(0.0) == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert A(SQRT3 - 1.5) == pytest.approx((2.0 + SQRT3) / 8.0, rel=1e-13)
    with pytest.raises(ValueError):
        A(0.5)
    with pytest.raises(ValueError):
        A(-1.5)


def test_A_increasing_and_divergent():
    ys = [0.049 * i for i in range(11)]
    vals = [A(y) for y in ys]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert A(0.4999) > 1e3


def test_B_examples():
    t0 = (2.0 + SQRT3) / 8.0
    assert B(t0) == pytest.approx((SQRT3 - 1.5) ** 2, abs=1e-15)
    assert B(1.0) < B(2.0)
    assert abs(B(1.0 / 3.0)) < 1e-15
    with pytest.raises(ValueError):
        B(0.0)


def test_B_limit_and_threshold():
    assert B(1e9) == pytest.approx(0.25, abs=1e-9)
    assert B(1e9) < 0.25
    t0 = (2.0 + SQRT3) / 8.0
    t = t0 * 1.0001
    while t < 1e4:
        assert 0.0 < B(t) < 0.25
        assert math.sqrt(B(t)) < 0.5
        t *= 2.7


def test_constants_exact_relations():
    for name, residual in constant_residuals().items():
        assert abs(residual) <= 1e-14, name


def test_wrong_value_definition():
    assert CONSTANTS.wrong_value == pytest.approx(math.pi / (2.0 * math.sqrt(6.0)), rel=1e-16)


def test_headline_value(rep_values):
    assert rep_values["R0"] == pytest.approx(0.666377, abs=5e-7)


def test_all_quadrature_routes_pairwise(rep_values):
    ids = [rid for rid in representation_ids() if rid not in ("R2", "R3")]
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            assert abs(rep_values[a] - rep_values[b]) < 1e-9, (a, b)


def test_series_routes_agree(rep_values):
    assert abs(rep_values["R2"] - rep_values["R0"]) < 1e-5
    assert abs(rep_values["R3"] - rep_values["R0"]) < 1e-5


def test_inversion_symmetry_form(rep_values):
    # the x -> 1/x folding of the half line onto [0, 1] preserves the value
    assert abs(rep_values["R0"] - rep_values["R1"]) < 1e-10


def test_all_routes_converged(rep_results):
    for rid, res in rep_results.items():
        assert res.converged, rid


def test_closed_form_route(rep_values):
    assert abs(rep_values["R12"] - rep_values["R0"]) < 1e-9


def test_discrepancy_window(rep_values):
    gap = abs(rep_values["R0"] - CONSTANTS.wrong_value)
    assert abs(gap - 0.025102) <= 2e-4


@pytest.mark.parametrize("which", [0, 1, 2])
def test_byrd_friedman_identities(which):
    lhs, rhs, _ = bf_identity(which)
    assert abs(lhs - rhs) < 1e-10


def test_double_angle_chain(rep_values):
    res = double_angle_form()
    assert res.converged
    assert abs(res.value - rep_values["R0"]) < 1e-10
    assert abs(res.value - rep_values["R4"]) < 1e-10
    assert abs(res.value - rep_values["R5"]) < 1e-10


def test_bilinear_map_pieces():
    h1 = h1_integral(DEFAULT_CONFIG)
    j1 = j1_integral(DEFAULT_CONFIG)
    assert abs(NORMAL_FORM_COEFF * h1.value - CONSTANTS.coeff_a * j1.value) < 1e-9
    h2 = h2_integral(DEFAULT_CONFIG)
    j2 = j2_integral(DEFAULT_CONFIG)
    assert abs(NORMAL_FORM_COEFF * h2.value - (-CONSTANTS.coeff_b * j2.value)) < 1e-9


def test_j2_is_negative():
    assert j2_integral(DEFAULT_CONFIG).value < 0.0


def test_unknown_representation_id():
    with pytest.raises(KeyError):
        eval_representation("R99")
