import json
import math

import numpy as np
import pytest

import pgquant as pq


def test_deformation():
    d = pq.Deformation(8)
    assert d.kprime == 4
    assert d.qk == pytest.approx(1j)
    with pytest.raises(ValueError, match="odd k unsupported"):
        pq.Deformation(5)


def test_qnumbers():
    assert pq.qnumber(2, 8) == pytest.approx(math.sqrt(2))
    assert pq.qnumber(2, 4) == 0.0
    assert pq.qfactorial(3, 8) == pytest.approx(math.sqrt(2))


def test_parse_and_products():
    p = pq.ParaPoly.parse("bth*th", 4)
    assert list(p.terms) == [((1,), (1,))]
    assert p.coeff([1], [1]) == pytest.approx(-1)
    q = pq.ParaPoly.parse("(1+2i)*th1^2*bth2", 6, modes=2)
    assert q.coeff([2, 0], [0, 1]) == 1 + 2j
    th = pq.ParaPoly.parse("th", 4)
    assert (th * th).is_zero()
    assert pq.ParaPoly.parse(str(q), 6, modes=2).max_abs_diff(q) == 0.0
    with pytest.raises(ValueError, match="at byte 3"):
        pq.ParaPoly.parse("th*", 4)


def test_json_round_trip():
    p = pq.ParaPoly.parse("2 - 3i*th*bth + bth", 6)
    data = json.loads(p.to_json())
    assert data["k"] == 6
    assert pq.ParaPoly.from_json(p.to_json()).max_abs_diff(p) == 0.0


def test_quantize():
    a = pq.quantize(pq.ParaPoly.parse("th", 4))
    np.testing.assert_allclose(a, [[0, 1], [0, 0]])
    for k in (4, 6, 8, 10):
        one = pq.quantize(pq.ParaPoly.parse("1", k))
        np.testing.assert_allclose(one, np.eye(k // 2), atol=1e-12)
        ad = pq.quantize(pq.ParaPoly.parse("bth", k))
        np.testing.assert_allclose(ad, pq.ladder(k).conj().T, atol=1e-12)
    right = pq.quantize(pq.ParaPoly.parse("th", 8), ordering="right")
    assert right[0, 1] == pytest.approx(-1)
    with pytest.raises(ValueError):
        pq.quantize(pq.ParaPoly.parse("th", 8), ordering="weyl")


def test_symbols_and_star():
    rng = np.random.default_rng(0)
    for k in (4, 6, 8):
        n = k // 2
        a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        f = pq.upper_symbol(a, k)
        np.testing.assert_allclose(pq.quantize(f), a, atol=1e-10)
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        g = pq.upper_symbol(b, k)
        np.testing.assert_allclose(pq.quantize(pq.moyal_star(f, g)), a @ b, atol=1e-9)
    i_sym = pq.upper_symbol(np.array([[0, 1j], [1j, 0]]), 4)
    square = pq.moyal_star(i_sym, i_sym)
    assert list(square.terms) == [((0,), (0,))]
    assert square.coeff([0], [0]) == pytest.approx(-1)


def test_lower_symbol():
    low = pq.lower_symbol(np.diag([0, 1]).astype(complex), 4)
    assert list(low.terms) == [((1,), (1,))]
    assert low.coeff([1], [1]) == pytest.approx(-1)


def test_bargmann():
    p = pq.to_bargmann([0, 0, 1, 0], 8)
    assert p.coeff([2], [0]) == pytest.approx(2 ** -0.25)


def test_verify_reports():
    report = pq.verify(6)
    assert report["all_pass"]
    assert len(report["relations"]) > 40
    assert pq.verify(4, modes=2)["all_pass"]
    demo = pq.quaternion_demo()
    assert demo["all_pass"]
    assert any(r["name"] == "I*I = -1" for r in demo["relations"])
