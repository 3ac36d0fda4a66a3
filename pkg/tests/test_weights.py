import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from obw.quadrature import QuadConfig, integrate
from obw.weights import DomainError, Weight, builtin_weight


def numeric_moment(w, c, d):
    """Independent oracle: moment without the closed form."""
    stripped = Weight(name="numeric", a=w.a, b=w.b, fn=w.fn, integrator=w.integrator)
    return stripped.moment(c, d)


class TestEval:
    def test_uniform(self):
        w = builtin_weight("uniform", 0, 1)
        assert w.eval(0.3) == 1.0

    def test_boundary_vanishing(self):
        w = builtin_weight("decreasing", 0, 1)
        assert w.eval(1.0) == 0.0

    def test_exponential(self):
        w = builtin_weight("exponential", 0, 1, lam=1.0)
        assert w.eval(0.5) == pytest.approx(math.exp(-0.5), abs=1e-12)

    def test_outside_domain(self):
        w = builtin_weight("uniform", 0, 1)
        with pytest.raises(DomainError):
            w.eval(1.5)


class TestMoment:
    def test_uniform_unit(self):
        w = builtin_weight("uniform", 0, 1)
        assert w.moment(0, 1) == pytest.approx(1.0, abs=1e-14)

    def test_exponential_closed_form(self):
        w = builtin_weight("exponential", 0, 1, lam=1.0)
        assert w.moment(0, 1) == pytest.approx(1 - math.exp(-1), abs=1e-12)

    def test_oriented_sign_flip(self):
        w = builtin_weight("decreasing", 0, 1)
        assert w.moment(1.0, 0.9) == pytest.approx(-0.005, abs=1e-12)

    def test_antisymmetry(self):
        w = builtin_weight("increasing", 0, 1)
        assert w.moment(0.2, 0.7) == pytest.approx(-w.moment(0.7, 0.2), abs=1e-14)

    def test_point_moment_exact_zero(self):
        for name in ("uniform", "increasing", "exponential"):
            w = builtin_weight(name, 0, 1)
            assert w.moment(0.37, 0.37) == 0.0

    @given(
        c=st.floats(0.0, 1.0),
        mid=st.floats(0.0, 1.0),
        d=st.floats(0.0, 1.0),
    )
    @settings(max_examples=50, deadline=None)
    def test_additivity(self, c, mid, d):
        w = builtin_weight("exponential", 0, 1, lam=2.0)
        total = w.moment(c, d)
        assert w.moment(c, mid) + w.moment(mid, d) == pytest.approx(total, abs=1e-10)

    @given(c=st.floats(0.0, 1.0), d=st.floats(0.0, 1.0))
    @settings(max_examples=50, deadline=None)
    def test_uniform_is_length(self, c, d):
        w = builtin_weight("uniform", 0, 1)
        assert w.moment(c, d) == pytest.approx(d - c, abs=1e-14)


class TestBuiltins:
    def test_uniform_closed(self):
        w = builtin_weight("uniform", 0, 1)
        assert w.closed_moment(0.2, 0.9) == pytest.approx(0.7, abs=1e-14)

    def test_power_linear(self):
        w = builtin_weight("power", 0, 1, p=1, q=0)
        assert w.eval(0.4) == pytest.approx(0.4, abs=1e-12)
        assert w.closed_moment(0, 1) == pytest.approx(0.5, abs=1e-12)

    def test_arcsine_moment_is_pi(self):
        w = builtin_weight("power", 0, 1, p=-0.5, q=-0.5)
        assert w.moment(0, 1) == pytest.approx(math.pi, abs=1e-10)

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown weight"):
            builtin_weight("nope", 0, 1)

    def test_nonintegrable_power(self):
        with pytest.raises(ValueError, match="integrability"):
            builtin_weight("power", 0, 1, p=-1.0, q=0.0)

    @pytest.mark.parametrize(
        "name,params",
        [
            ("uniform", {}),
            ("increasing", {}),
            ("decreasing", {}),
            ("exponential", {"lam": 1.0}),
            ("truncnorm", {}),
            ("arcsine", {}),
        ],
    )
    def test_closed_matches_numeric(self, name, params):
        w = builtin_weight(name, 0, 1, **params)
        for c, d in [(0.0, 1.0), (0.1, 0.8), (0.5, 0.6), (0.9, 0.2)]:
            assert w.closed_moment(c, d) == pytest.approx(
                numeric_moment(w, c, d), abs=1e-9
            )

    def test_nonnegative_on_samples(self):
        for name in ("uniform", "increasing", "decreasing", "exponential", "truncnorm"):
            w = builtin_weight(name, 0, 1)
            assert all(w.eval(k / 100) >= 0 for k in range(101))


class TestSingularIntegration:
    def test_arcsine_against_smooth_function(self):
        # int_0^1 t / sqrt(t(1-t)) dt = pi / 2
        w = builtin_weight("arcsine", 0, 1)
        val = w.integrate_against(lambda t: t, 0, 1)
        assert val == pytest.approx(math.pi / 2, abs=1e-9)

    def test_left_singular_only(self):
        # int_0^1 t^(-1/2) dt = 2
        w = builtin_weight("power", 0, 1, p=-0.5, q=0.0)
        assert numeric_moment(w, 0, 1) == pytest.approx(2.0, abs=1e-9)
