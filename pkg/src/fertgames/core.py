"""Household parameters, spousal utility functions, and the pooled-budget solve.

The household consists of a husband who enjoys children and a wife who bears
a net cost from them. Both value their own consumption. Two utility variants
are used across the package:

* log-log utilities, where the child term enters through ``ln(n)``
  (the pooled-budget family problem), and
* log-linear utilities, where the child term is linear in ``n``
  (the transfer game and its extension).

The pooled-budget solve treats the couple as a single decision maker that
maximizes the sum of spousal utilities under one budget, which yields a
Cobb-Douglas allocation in closed form. Its correctness is certified against
the independent grid-search optimizer in :mod:`fertgames.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CostMismatch,
    DomainError,
    NonPositiveParameter,
    PreferenceOrderViolated,
)

# Relative tolerance for the beta = beta_w + beta_m identity.
COST_SPLIT_RTOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Exogenous household parameters.

    alpha:  husband's per-child utility weight
    delta:  wife's per-child disutility weight
    gamma:  wife's consumption utility weight (husband's is normalized to 1)
    beta:   total rearing cost per child, split as beta_w + beta_m
    a_w:    wife's income
    a_m:    husband's income
    beta_w, beta_m: per-spouse rearing costs; omitted values default to an
        even split of ``beta``.
    """

    alpha: float
    delta: float
    gamma: float
    beta: float
    a_w: float
    a_m: float
    beta_w: float | None = None
    beta_m: float | None = None

    def __post_init__(self):
        if self.beta_w is None and self.beta_m is None:
            object.__setattr__(self, "beta_w", 0.5 * self.beta)
            object.__setattr__(self, "beta_m", self.beta - 0.5 * self.beta)
        elif self.beta_w is None:
            object.__setattr__(self, "beta_w", self.beta - self.beta_m)
        elif self.beta_m is None:
            object.__setattr__(self, "beta_m", self.beta - self.beta_w)

    @property
    def total_income(self) -> float:
        return self.a_w + self.a_m

    @property
    def income_ratio(self) -> float:
        """Wife-to-husband income ratio; fertility outcomes depend on it."""
        return self.a_w / self.a_m


@dataclass(frozen=True)
class BenchmarkSolution:
    """Allocation chosen by the pooled-budget household.

    ``wife_utility_delta`` reports the wife's log-utility at the family
    allocation minus her childless consumption utility ``gamma * ln(a_w)``.
    Whether she ends up better or worse off than staying single depends on
    parameter magnitudes, so the sign is reported rather than asserted.
    """

    n_star: float
    c_w: float
    c_m: float
    u_family: float
    wife_utility_delta: float


def validate_params(raw: ModelParams) -> ModelParams:
    """Check positivity and the rearing-cost split; return the params unchanged.

    Raises NonPositiveParameter naming the offending field, or CostMismatch
    when beta does not equal beta_w + beta_m to relative 1e-12.
    """
    for name in ("alpha", "delta", "gamma", "beta", "a_w", "a_m"):
        value = getattr(raw, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise NonPositiveParameter(name, value)
    for name in ("beta_w", "beta_m"):
        value = getattr(raw, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
            raise NonPositiveParameter(name, value, requirement=">= 0")
    if abs(raw.beta - (raw.beta_w + raw.beta_m)) > COST_SPLIT_RTOL * abs(raw.beta):
        raise CostMismatch(
            f"beta={raw.beta!r} but beta_w + beta_m = {raw.beta_w + raw.beta_m!r}"
        )
    return raw


def utility_log_pair(
    p: ModelParams, c_w: float, c_m: float, n: float
) -> tuple[float, float]:
    """Spousal utilities with the child term inside a log.

    Returns ``(u_w, u_m)`` with ``u_w = gamma*ln(c_w) - delta*ln(n)`` and
    ``u_m = ln(c_m) + alpha*ln(n)``. All three arguments must be positive.
    """
    if not (c_w > 0 and c_m > 0 and n > 0):
        raise DomainError(
            f"log utilities need c_w, c_m, n > 0, got ({c_w!r}, {c_m!r}, {n!r})"
        )
    u_w = p.gamma * math.log(c_w) - p.delta * math.log(n)
    u_m = math.log(c_m) + p.alpha * math.log(n)
    return u_w, u_m


def utility_linear_pair(
    p: ModelParams, c_w: float, c_m: float, n: float
) -> tuple[float, float]:
    """Spousal utilities with the child term linear in n.

    Returns ``(u_w, u_m)`` with ``u_w = gamma*ln(c_w) - delta*n`` and
    ``u_m = ln(c_m) + alpha*n``. Consumptions must be positive; n may be 0.
    """
    if not (c_w > 0 and c_m > 0):
        raise DomainError(f"consumptions must be > 0, got ({c_w!r}, {c_m!r})")
    if not n >= 0:
        raise DomainError(f"fertility must be >= 0, got {n!r}")
    u_w = p.gamma * math.log(c_w) - p.delta * n
    u_m = math.log(c_m) + p.alpha * n
    return u_w, u_m


def benchmark_solve(p: ModelParams) -> BenchmarkSolution:
    """Solve the pooled-budget family problem in closed form.

    The household maximizes ``gamma*ln(c_w) + ln(c_m) + (alpha-delta)*ln(n)``
    subject to ``c_w + c_m + beta*n = a_w + a_m``. This is a Cobb-Douglas
    program with expenditure weights ``gamma``, ``1`` and ``alpha - delta``,
    so each claim on the budget receives its weight share:

        c_w = gamma*A/W,  c_m = A/W,  n = (alpha-delta)*A/(beta*W),

    with ``A = a_w + a_m`` and ``W = 1 + gamma + (alpha - delta)``.

    Requires ``alpha > delta``; with the order reversed the child weight is
    non-positive and the supremum degenerates (utility grows without bound
    as n shrinks to zero), so that case is a hard error rather than a clamp.
    """
    validate_params(p)
    if not p.alpha > p.delta:
        raise PreferenceOrderViolated(
            f"alpha={p.alpha!r} must exceed delta={p.delta!r}"
        )
    total = p.total_income
    weight = 1.0 + p.gamma + (p.alpha - p.delta)
    c_w = p.gamma * total / weight
    c_m = total / weight
    n = (p.alpha - p.delta) * total / (p.beta * weight)
    u_family = (
        p.gamma * math.log(c_w)
        + math.log(c_m)
        + (p.alpha - p.delta) * math.log(n)
    )
    u_w, _ = utility_log_pair(p, c_w, c_m, n)
    return BenchmarkSolution(
        n_star=n,
        c_w=c_w,
        c_m=c_m,
        u_family=u_family,
        wife_utility_delta=u_w - p.gamma * math.log(p.a_w),
    )
