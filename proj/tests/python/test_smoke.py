import math
from fractions import Fraction

import numpy as np
import pytest

import spo


def test_schur_of_one_box_is_p1():
    coeffs = spo.schur([1], {"powersums": {"1": "3/2"}}, degree=3)
    assert coeffs == [0, Fraction(3, 2), 0, 0]


def test_characters_of_empty_partition():
    rho = {"powersums": {"1": 1, "2": "-1/3"}}
    assert spo.sp_char([], rho, degree=2) == [1, 0, 0]
    assert spo.o_char([], rho, degree=2) == [1, 0, 0]


def test_plancherel_partition_function():
    # Z_sp = exp(3 theta^2 / 2) for rho+ = pl(2 theta), rho- = pl(theta); coefficient of t^2
    z = spo.partition_function("sp", {"powersums": {"1": 1}}, {"powersums": {"1": "1/2"}}, degree=4)
    assert z[0] == 1 and z[1] == 0
    assert z[2] == Fraction(1, 2) - Fraction(1, 8)


def test_identity_suite_passes():
    results = spo.verify_identities(degree=4, trials=1, max_size=2)
    assert results and all(r["passed"] for r in results)


def test_kernel_representations_agree():
    for rep in ("contour", "fourier"):
        assert spo.kernel("sp", 1, -2, theta=1.0, rep=rep) == pytest.approx(
            spo.kernel("sp", 1, -2, theta=1.0, rep="bessel"), abs=1e-10)


def test_kernel_matrix_against_correlations():
    k = spo.kernel_matrix("o", [0, 1], theta=0.2)
    assert isinstance(k, np.ndarray) and k.shape == (2, 2)
    est = spo.correlation("o", [0, 1], "1/5")
    assert abs(np.linalg.det(k) - est["value"]) < 1e-7


def test_szego_and_borodin_okounkov():
    assert spo.th_det("D2", 12, "1/2") == pytest.approx(math.exp(0.375), abs=1e-8)
    r = spo.bo_check("sp", 3, 0.5)
    assert abs(r["gap"]) < 1e-8


def test_gessel():
    assert spo.gessel_check("D3", 2, {"powersums": {"1": 1, "2": 2}}, {"powersums": {"1": "1/3"}}, degree=5)


def test_asymptotics():
    assert spo.airy_2to1("+", 8.0, 8.0) == pytest.approx(0.0, abs=1e-6)
    assert spo.tw_cdf("+", 6.0) == pytest.approx(1.0, abs=1e-6)
    rows = spo.edge_scan("sp", [50.0], [0.0])
    assert len(rows) == 1 and rows[0][5] < 0.1
    assert 0.0 < spo.discrete_edge_cdf("sp", 50.0, 0.0) < 1.0


def test_errors():
    with pytest.raises(spo.ConfigError):
        spo.schur([1], "{not json", degree=2)
    with pytest.raises(spo.Error):
        spo.kernel("xx", 0, 0, theta=1.0)
