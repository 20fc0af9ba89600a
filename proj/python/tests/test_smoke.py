import cmath
import math
from fractions import Fraction

import pytest

import cjones


def test_trefoil_and_fig8():
    j = cjones.jones("1 1 1", N=2)
    assert j.terms() == [(1.0, 1), (3.0, 1), (4.0, -1)]
    assert cjones.jones("1 -2 1 -2", N=2) == cjones.jones_fig8_symbolic(2)
    assert len(cjones.jones("1 -2 1 -2", N=3)) == 13


def test_evaluation():
    assert cjones.jones_eval("1 1 1", 2, 0.5, strands=2) == pytest.approx(-3)
    assert cjones.jones_eval("1 -2 1 -2", 3, Fraction(1, 3)) == pytest.approx(13)
    p = cjones.jones("1 -2 1 -2", N=3)
    z = cjones.jones_eval("1 -2 1 -2", 3, 0.1, r=1.1)
    assert abs(p.evaluate(0.1, 1.1) - z) < 1e-9 * abs(z)


def test_braid_and_errors():
    b = cjones.Braid("1 -2 1 -2")
    assert b.strands == 3
    assert b.components() == 1
    assert cjones.jones(b.stabilized(-1), 2) == cjones.jones(b, 2)
    with pytest.raises(cjones.ParseError):
        cjones.parse_braid("1 x")
    with pytest.raises(cjones.Error):
        cjones.jones("3", N=2, strands=2)
    with pytest.raises(cjones.UnsupportedN):
        cjones.jones("1 1 1", N=4)


def test_closed_forms_and_volume():
    w = "1 1 " + "1 2 " * 8
    v = cjones.jones_eval(w, 3, 0.3)
    assert abs(cjones.jones_K0(3, 0.3) - v) < 1e-8 * abs(v)
    assert cjones.jones_fig8(3, Fraction(1, 3)) == pytest.approx(13)
    assert cjones.v_of_n("fig8", 20, "improved") < cjones.v_of_n("fig8", 20, "kashaev")
    assert cjones.predict_volume(100) == pytest.approx(14.27, rel=1e-3)


def test_fit_and_roots():
    xs = [10 ** (i / 5) for i in range(30)]
    ys = [3.25 * math.log(x + 36.97) - 1.72 for x in xs]
    f = cjones.fit_log_model(xs, ys, fix_b=True)
    assert f["a"] == pytest.approx(3.25, rel=1e-6)
    assert f["c"] == pytest.approx(36.97, rel=1e-6)
    with pytest.raises(cjones.DegenerateData):
        cjones.fit_log_model([1.0, 2.0], [1.0, 2.0])
    rs = cjones.roots(cjones.jones("1 1 1", N=2))
    assert len(rs) == 4
    assert min(abs(z) for z in rs) == 0
    assert cjones.verify_yang_baxter(3)
    assert cjones.largest_sector_dimension(3, 7) == 393
