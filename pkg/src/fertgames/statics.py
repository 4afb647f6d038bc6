"""Comparative statics of the equilibrium transfer and fertility.

Writing the transfer as ``rho* = -alpha*a_w/2 + sqrt(X)`` with radicand

    X = (alpha*a_w/2)**2 + (alpha*delta/gamma) * a_w * (a_w + a_m),

every partial of ``rho*`` follows by differentiating X, and the fertility
partials follow from ``n* = gamma/delta - a_w/rho*`` by the chain rule. Each
closed form is certified against a central finite difference rather than
trusted. Fertility responds to the wife's aversion and consumption taste
through two competing channels, a direct preference term and an induced
transfer term, and the sign classification reports which channel dominates.

All derivatives here are of the unclamped equilibrium; at the zero-fertility
corner the clamp makes n* non-differentiable, so statics on n raise
``BoundaryStatics`` there (one-sided differences cross the kink silently
otherwise, which is worse than refusing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import ModelParams, validate_params
from .errors import BoundaryStatics, StepTooLarge
from .game import equilibrium_transfer, solve_game

PARTIAL_KEYS = ("alpha", "delta", "gamma", "a_w", "a_m")

_FD_RELATIVE_STEP = 1e-6


@dataclass(frozen=True)
class RegimeClassification:
    """Which channel controls the sign of a fertility partial.

    ``transfer_term`` and ``preference_term`` are the two competing
    magnitudes; ``dominant`` names the larger one and ``predicted_sign``
    is the implied sign of the fertility partial (+1, -1 or 0).
    """

    parameter: str
    transfer_term: float
    preference_term: float
    dominant: str
    predicted_sign: int


@dataclass(frozen=True)
class StaticsReport:
    """Analytic and finite-difference partials at one parameter point."""

    radicand: float
    rho_star: float
    n_star: float
    partial_rho: dict[str, float]
    partial_n: dict[str, float]
    fd_rho: dict[str, float]
    fd_n: dict[str, float]
    delta_regime: RegimeClassification
    gamma_regime: RegimeClassification
    ratio_partial: float


def transfer_radicand(p: ModelParams) -> float:
    half = 0.5 * p.alpha * p.a_w
    return half * half + (p.alpha * p.delta / p.gamma) * p.a_w * (p.a_w + p.a_m)


def analytic_partials_rho(p: ModelParams) -> dict[str, float]:
    """Closed-form partials of the equilibrium transfer.

    Derived by differentiating the radicand: with S = a_w*(a_w + a_m),

        d rho*/d a_m   = alpha*delta*a_w / (2*gamma*sqrt(X))
        d rho*/d a_w   = -alpha/2 + [2*a_w*(alpha^2/4 + alpha*delta/gamma)
                                     + (alpha*delta/gamma)*a_m] / (2*sqrt(X))
        d rho*/d delta = alpha*S / (2*gamma*sqrt(X))
        d rho*/d gamma = -alpha*delta*S / (2*gamma^2*sqrt(X))
        d rho*/d alpha = -a_w/2 + (alpha*a_w^2/2 + delta*S/gamma) / (2*sqrt(X))
    """
    validate_params(p)
    sx = math.sqrt(transfer_radicand(p))
    s = p.a_w * (p.a_w + p.a_m)
    ad_over_g = p.alpha * p.delta / p.gamma
    return {
        "alpha": -0.5 * p.a_w
        + (0.5 * p.alpha * p.a_w * p.a_w + p.delta * s / p.gamma) / (2.0 * sx),
        "delta": p.alpha * s / (2.0 * p.gamma * sx),
        "gamma": -p.alpha * p.delta * s / (2.0 * p.gamma * p.gamma * sx),
        "a_w": -0.5 * p.alpha
        + (2.0 * p.a_w * (0.25 * p.alpha * p.alpha + ad_over_g) + ad_over_g * p.a_m)
        / (2.0 * sx),
        "a_m": ad_over_g * p.a_w / (2.0 * sx),
    }


def analytic_partials_n(p: ModelParams) -> dict[str, float]:
    """Chain-rule partials of equilibrium fertility, interior points only.

    From ``n* = gamma/delta - a_w/rho*``, every parameter acts through
    ``(a_w/rho*^2) * d rho*/d theta``, plus the direct terms ``-gamma/delta^2``
    (for delta), ``1/delta`` (for gamma) and ``-1/rho*`` (for a_w).
    """
    eq = solve_game(p)
    if not eq.interior:
        raise BoundaryStatics("fertility is clamped at zero at this point")
    rho = eq.rho_star
    lever = p.a_w / (rho * rho)
    d_rho = analytic_partials_rho(p)
    return {
        "alpha": lever * d_rho["alpha"],
        "delta": -p.gamma / (p.delta * p.delta) + lever * d_rho["delta"],
        "gamma": 1.0 / p.delta + lever * d_rho["gamma"],
        "a_w": -1.0 / rho + lever * d_rho["a_w"],
        "a_m": lever * d_rho["a_m"],
    }


def ratio_partial(p: ModelParams) -> float:
    """Fertility response to the wife-to-husband income ratio, husband fixed.

    With R = a_w/a_m and a_w = R*a_m,

        d n*/d R = -(a_m/rho*^2) * [rho* - R * d rho*/d R],

    where d rho*/d R = a_m * (d rho*/d a_w). The bracket equals
    ``a_m * d rho*/d a_m`` by Euler's identity (rho* is homogeneous of
    degree one in incomes), so the response is negative everywhere interior.
    """
    eq = solve_game(p)
    if not eq.interior:
        raise BoundaryStatics("fertility is clamped at zero at this point")
    rho = eq.rho_star
    d_aw = analytic_partials_rho(p)["a_w"]
    return -(p.a_m / (rho * rho)) * (rho - p.a_w * d_aw)


def ratio_fd(p: ModelParams, h: float | None = None) -> float:
    """Central finite difference of n* in the income ratio, husband fixed."""
    ratio = p.a_w / p.a_m
    if h is None:
        h = _FD_RELATIVE_STEP * ratio
    if not ratio > 10.0 * h:
        raise StepTooLarge(f"step {h!r} too large for income ratio {ratio!r}")

    def n_at(r: float) -> float:
        eq = solve_game(replace(p, a_w=r * p.a_m))
        if not eq.interior:
            raise BoundaryStatics("fertility is clamped at zero at this point")
        return eq.n_star

    return (n_at(ratio + h) - n_at(ratio - h)) / (2.0 * h)


def _target_value(p: ModelParams, target: str) -> float:
    if target == "rho":
        return equilibrium_transfer(p)
    if target == "n":
        eq = solve_game(p)
        if not eq.interior:
            raise BoundaryStatics("fertility is clamped at zero at this point")
        return eq.n_star
    raise ValueError(f"target must be 'rho' or 'n', got {target!r}")


def fd_check(
    p: ModelParams, target: str, param: str, h: float | None = None
) -> float:
    """Central finite difference of rho* or n* in one parameter.

    The step defaults to 1e-6 times the parameter value and must stay below
    a tenth of it. For target 'n' the stencil must not cross the
    zero-fertility kink; BoundaryStatics is raised when it does.
    """
    validate_params(p)
    if param not in PARTIAL_KEYS:
        raise ValueError(f"param must be one of {PARTIAL_KEYS}, got {param!r}")
    x = getattr(p, param)
    if h is None:
        h = _FD_RELATIVE_STEP * abs(x)
    if not x > 10.0 * h:
        raise StepTooLarge(f"step {h!r} too large for {param}={x!r}")
    hi = _target_value(replace(p, **{param: x + h}), target)
    lo = _target_value(replace(p, **{param: x - h}), target)
    return (hi - lo) / (2.0 * h)


def sign_regimes(
    p: ModelParams,
) -> tuple[RegimeClassification, RegimeClassification]:
    """Classify the ambiguous fertility partials in delta and gamma.

    For the wife's aversion delta, fertility rises only when the induced
    transfer response ``(a_w/rho*^2) * d rho*/d delta`` outweighs the direct
    preference loss ``gamma/delta^2``. For her consumption taste gamma, it
    rises only when the direct preference gain ``1/delta`` outweighs the
    induced transfer loss ``-(a_w/rho*^2) * d rho*/d gamma``. Each predicted
    sign is checked against the analytic fertility partial before returning.
    """
    d_n = analytic_partials_n(p)
    rho = equilibrium_transfer(p)
    lever = p.a_w / (rho * rho)
    d_rho = analytic_partials_rho(p)

    def classify(param: str, transfer_term: float, preference_term: float,
                 rises_with: str) -> RegimeClassification:
        diff = transfer_term - preference_term
        if diff > 0:
            dominant = "transfer"
        elif diff < 0:
            dominant = "preference"
        else:
            dominant = "balanced"
        if dominant == "balanced":
            predicted = 0
        elif dominant == rises_with:
            predicted = 1
        else:
            predicted = -1
        actual = d_n[param]
        if predicted * actual < 0 or (predicted == 0) != (actual == 0):
            raise RuntimeError(
                f"regime classification for {param} predicts sign {predicted} "
                f"but the analytic partial is {actual!r}"
            )
        return RegimeClassification(
            parameter=param,
            transfer_term=transfer_term,
            preference_term=preference_term,
            dominant=dominant,
            predicted_sign=predicted,
        )

    delta_regime = classify(
        "delta",
        transfer_term=lever * d_rho["delta"],
        preference_term=p.gamma / (p.delta * p.delta),
        rises_with="transfer",
    )
    gamma_regime = classify(
        "gamma",
        transfer_term=-lever * d_rho["gamma"],
        preference_term=1.0 / p.delta,
        rises_with="preference",
    )
    return delta_regime, gamma_regime


def build_report(p: ModelParams) -> StaticsReport:
    """Assemble the full statics report at one interior parameter point."""
    d_rho = analytic_partials_rho(p)
    d_n = analytic_partials_n(p)
    delta_regime, gamma_regime = sign_regimes(p)
    eq = solve_game(p)
    return StaticsReport(
        radicand=transfer_radicand(p),
        rho_star=eq.rho_star,
        n_star=eq.n_star,
        partial_rho=d_rho,
        partial_n=d_n,
        fd_rho={k: fd_check(p, "rho", k) for k in PARTIAL_KEYS},
        fd_n={k: fd_check(p, "n", k) for k in PARTIAL_KEYS},
        delta_regime=delta_regime,
        gamma_regime=gamma_regime,
        ratio_partial=ratio_partial(p),
    )
