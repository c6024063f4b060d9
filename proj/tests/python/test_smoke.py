import json
import math

import pytest

import valentkit as vk


def test_cartan_and_covering():
    z = [0, 0.1, 1, 1.1]
    r = vk.cartan_measure(z, 2, 1.0)
    assert r["value"] == pytest.approx(0.1, rel=1e-12)
    assert r["exact"] is True
    assert vk.cartan_measure(z, 2, 1.0, "bnb")["value"] == r["value"]
    assert vk.covering_number([0, 1], 0.6) == 1
    assert vk.covering_number([0, 1], 0.4) == 2
    assert vk.omega_d([0, 1], 1) == pytest.approx(0.5)
    assert vk.rho_d([0, 1, 4], 2) == pytest.approx(1.0)
    c, rad = vk.min_enclosing_disk([0, 2, 2j])
    assert c == pytest.approx(1 + 1j)
    assert rad == pytest.approx(math.sqrt(2))


def test_paired_example():
    rep = vk.paired_example_report(3, 0.01, 0.2)
    assert rep["omega_d"] == pytest.approx(0.03, abs=1e-9)
    assert rep["omega_cd"] == pytest.approx(math.sqrt(3) * 0.01, abs=1e-9)
    assert rep["cartan_kappa"] >= 0.2


def test_polynomials_and_zeros():
    mm = vk.max_modulus_circle([2, 1], 1.0, 1e-10)
    assert mm["value"] == pytest.approx(3.0)
    assert mm["certified"]
    assert vk.count_zeros([-1, 1.5, 1], 1.0)["count"] == 1
    exp_coeffs = [1 / math.factorial(k) for k in range(21)]
    assert vk.count_zeros(exp_coeffs, 0.9, radius=1.0, tail_bound=1e-18)["count"] == 0
    with pytest.raises(vk.DomainError):
        vk.count_zeros([-1, 1], 1.0)


def test_valency_and_remez():
    rep = vk.example_exa_report(1, 11)
    assert rep["pass"]
    assert vk.sigma_p(0.5, 0.5, 1) == 81.0
    assert vk.valency_radius(1, 1.0, 1.0) == 1 / 64
    r = vk.remez_check_polynomial([0, 0, 1], [0.9 * complex(math.cos(a), math.sin(a)) for a in
                                              [2 * math.pi * k / 5 for k in range(5)]])
    assert r["holds"]
    kd = vk.k_d([0, 0.1, 1, 1.1], 2)
    assert kd["value"] <= min(b for _, b in kd["samples"])
    d = vk.distortion_check([0, 1, 0.25], [0], 1)
    assert d["holds"]


def test_cli_in_process():
    code, out, err = vk.run(["exa", "--p", "3", "--N", "31"])
    assert code == 0 and err == ""
    assert json.loads(out)["rows"][3]["structured_count"] == 31
    code, out, err = vk.run(["cartan", "--points", "nope.json", "--d", "1", "--alpha", "1"])
    assert code == 1
    assert "input not found" in json.loads(err)["error"]["message"]
