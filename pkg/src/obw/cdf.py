"""Bounds relating a weighted CDF to its density, plus reliability and
expectation identities."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import BranchTriple, bounds_paper
from .kernel import TauParams
from .functionals import tau
from .norms import NormTriple, conjugate, norm_triple
from .quadrature import (
    DEFAULT_CONFIG,
    Fn1D,
    QuadConfig,
    derivative_callable,
    integrate,
)
from .weights import Weight

__all__ = [
    "DensityModel",
    "CdfReport",
    "cdf_value",
    "reliability",
    "cdf_bound_general",
    "cdf_bound_symmetric",
    "cdf_bound_left",
    "expectation_identity_check",
    "cdf_report",
]


@dataclass(frozen=True)
class DensityModel:
    """Probability density f paired with a weight, normalized so the
    weighted total mass over the weight's domain is one."""

    density: Fn1D
    weight: Weight

    def __post_init__(self) -> None:
        total = self.weight.integrate_against(self.density, self.a, self.b)
        if abs(total - 1.0) > 1e-8:
            raise ValueError(
                f"weighted density mass is {total:.10f}, expected 1 "
                "(renormalize the density)"
            )

    @property
    def a(self) -> float:
        return self.weight.a

    @property
    def b(self) -> float:
        return self.weight.b

    def norms(self, p: float, cfg: QuadConfig = DEFAULT_CONFIG) -> NormTriple:
        fprime = derivative_callable(self.density, self.a, self.b)
        return norm_triple(fprime, p, self.a, self.b, cfg)


def normalized_density(f: Fn1D, w: Weight, cfg: QuadConfig = DEFAULT_CONFIG) -> DensityModel:
    """Rescale f so the weighted mass is one and wrap it in a model."""
    total = w.integrate_against(f, w.a, w.b, cfg)
    if total <= 0:
        raise ValueError("density must carry positive weighted mass")
    scaled = Fn1D(
        fn=lambda t: f.fn(t) / total,
        derivative=(None if f.derivative is None else lambda t: f.derivative(t) / total),
        name=f.name,
    )
    return DensityModel(density=scaled, weight=w)


def cdf_value(model: DensityModel, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """F_w(x): weighted probability mass up to x."""
    if x < model.a or x > model.b:
        raise ValueError(f"x={x} outside [{model.a}, {model.b}]")
    return model.weight.integrate_against(model.density, model.a, x, cfg)


def reliability(model: DensityModel, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """R_w(x) = 1 - F_w(x)."""
    return 1.0 - cdf_value(model, x, cfg)


def cdf_bound_general(
    model: DensityModel,
    params: TauParams,
    p: float = 2.0,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> tuple[float, BranchTriple]:
    """Two-coefficient CDF bound; returns (measured lhs, bound triple).

    The lhs is algebraically (alpha+beta) m(a,x) m(x,b) |tau|, so the
    bounds are that prefactor times the printed deviation-bound triple.
    """
    w = model.weight
    f = model.density
    x = params.x
    m_l = w.moment(params.a, x, cfg)
    m_r = w.moment(x, params.b, cfg)
    fw = cdf_value(model, x, cfg)
    lhs = abs(
        (params.alpha * m_r - params.beta * m_l) * fw
        - m_l * (params.weight_sum * m_r * f(x) - params.beta)
    )
    pref = params.weight_sum * m_l * m_r
    norms = model.norms(p, cfg)
    base = bounds_paper(params, w, norms, p, cfg)
    triple = BranchTriple(inf=pref * base.inf, p=pref * base.p, one=pref * base.one)

    bridge = pref * abs(tau(f, w, params, cfg))
    if abs(lhs - bridge) > 1e-10 * max(1.0, abs(lhs)):
        raise AssertionError(
            f"CDF lhs {lhs:.12e} disagrees with tau identity {bridge:.12e}"
        )
    return lhs, triple


def cdf_bound_symmetric(
    model: DensityModel, x: float, p: float = 2.0, cfg: QuadConfig = DEFAULT_CONFIG
) -> tuple[float, BranchTriple]:
    """Equal-coefficient specialization (alpha = beta = 1/2)."""
    params = TauParams(a=model.a, b=model.b, x=x, alpha=0.5, beta=0.5)
    return cdf_bound_general(model, params, p, cfg)


def cdf_bound_left(
    model: DensityModel, x: float, p: float = 2.0, cfg: QuadConfig = DEFAULT_CONFIG
) -> tuple[float, BranchTriple]:
    """Left-mass-only bound (beta = 0): |m(a,x) f(x) - F_w(x)|.

    Bound triple follows the printed single-branch forms, which for the
    sup branch coincides with the mass-scaled deviation bound.
    """
    w = model.weight
    q = conjugate(p)
    m_l = w.moment(model.a, x, cfg)
    lhs = abs(m_l * model.density(x) - cdf_value(model, x, cfg))
    wx = w.eval(x)
    norms = model.norms(p, cfg)
    span = x - model.a
    triple = BranchTriple(
        inf=0.5 * span**2 * wx * norms.inf,
        p=span ** (1.0 + 1.0 / q) * wx * norms.p_norm / (q + 1.0) ** (1.0 / q),
        one=span * norms.one,
    )
    return lhs, triple


def expectation_identity_check(model: DensityModel, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Residual of int F_w versus b - E[X w(X)]; near zero for valid models."""
    a, b = model.a, model.b
    int_f = integrate(lambda u: cdf_value(model, u, cfg), a, b, QuadConfig(
        abs_tol=max(cfg.abs_tol, 1e-9), rel_tol=cfg.rel_tol,
        max_subdivisions=cfg.max_subdivisions,
    ))[0]
    ex = model.weight.integrate_against(
        lambda u: u * model.density(u), a, b, cfg
    )
    return int_f - (b - ex)


@dataclass(frozen=True)
class CdfReport:
    x: float
    f_w: float
    r_w: float
    lhs: float
    bound_inf: float
    bound_p: float
    bound_one: float
    identity_residual: float


CDF_COLUMNS = (
    "x",
    "F_w",
    "R_w",
    "lhs_31",
    "bound_inf",
    "bound_p",
    "bound_one",
    "identity_residual",
)


def cdf_report(
    model: DensityModel,
    params: TauParams,
    p: float = 2.0,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> CdfReport:
    lhs, triple = cdf_bound_general(model, params, p, cfg)
    return CdfReport(
        x=params.x,
        f_w=cdf_value(model, params.x, cfg),
        r_w=reliability(model, params.x, cfg),
        lhs=lhs,
        bound_inf=triple.inf,
        bound_p=triple.p,
        bound_one=triple.one,
        identity_residual=expectation_identity_check(model, cfg),
    )
