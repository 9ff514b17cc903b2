import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcpath.elements import TrussElement, ZeroLengthError, lengths
from arcpath.elements.truss import strains

from conftest import central_difference

X = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])


@pytest.mark.parametrize("strain", ["engineering", "green"])
def test_unloaded_bar_has_no_force(strain):
    r = TrussElement((0, 1), A=2.0, E=3.0, strain=strain).response(X, np.zeros(6))
    assert np.all(r.force == 0)
    # small-strain stiffness is EA/L in the axial direction for both measures
    assert r.stiffness[0, 0] == pytest.approx(6.0)
    assert r.stiffness[3, 0] == pytest.approx(-6.0)


def test_stretched_unit_bar():
    u = np.array([0, 0, 0, 0.1, 0, 0])
    fe = TrussElement((0, 1), 1.0, 1.0, "engineering").response(X, u).force
    fg = TrussElement((0, 1), 1.0, 1.0, "green").response(X, u).force
    # engineering: N = EA eps_E = 0.1; Green: force = EA eps_G L / L0 = 0.105 * 1.1
    assert fe[3] == pytest.approx(0.1, rel=1e-14)
    assert fg[3] == pytest.approx(0.105 * 1.1, rel=1e-14)
    assert lengths(None, X, u) == pytest.approx((1.0, 1.1))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-0.5, 0.5), min_size=6, max_size=6))
def test_green_strain_is_quadratic_in_engineering_strain(u):
    eE, eG = strains(X, np.array(u))
    assert eG == pytest.approx(eE + 0.5 * eE**2, rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("strain", ["engineering", "green"])
def test_tangent_matches_finite_differences(strain, rng):
    el = TrussElement((0, 1), A=1.3, E=2.1, strain=strain)
    coords = rng.standard_normal((2, 3))
    for _ in range(10):
        u = 0.3 * rng.standard_normal(6)
        K = el.response(coords, u).stiffness
        Kfd = central_difference(lambda q: el.response(coords, q).force, u)
        assert np.abs(K - Kfd).max() <= 1e-6 * np.abs(K).max()
        assert np.allclose(K, K.T, rtol=0, atol=1e-14 * np.abs(K).max())


@pytest.mark.parametrize("strain", ["engineering", "green"])
def test_rigid_motion_is_force_free(strain, rng):
    el = TrussElement((0, 1), A=1.0, E=5.0, strain=strain)
    coords = rng.standard_normal((2, 3))
    Q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
    t = rng.standard_normal(3)
    u = (coords @ Q.T + t - coords).ravel()
    assert np.allclose(el.response(coords, u).force, 0, atol=1e-12)


def test_zero_length_errors():
    el = TrussElement((0, 1), A=1.0, E=1.0)
    with pytest.raises(ZeroLengthError):
        el.response(np.zeros((2, 3)), np.zeros(6))
    with pytest.raises(ZeroLengthError):
        el.response(X, np.array([0, 0, 0, -1.0, 0, 0]))


def test_invalid_properties():
    with pytest.raises(ValueError):
        TrussElement((0, 1), A=0.0, E=1.0)
    with pytest.raises(ValueError):
        TrussElement((0, 1), A=1.0, E=1.0, strain="log")
