"""Leader-follower transfer game between the spouses.

The husband moves first and commits to a per-child transfer ``rho``; the wife
then chooses fertility given her budget ``c_w = a_w + rho*n``. Her optimal
response decomposes into a preference term ``gamma/delta`` and an offsetting
income term ``-a_w/rho``, clamped at zero because bearing no children is
always feasible. Substituting the response into the husband's problem
(budget ``c_m = a_m - rho*n``, rearing costs folded into the transfer) makes
his first-order condition a quadratic in ``rho``:

    rho**2 + alpha*a_w*rho - (alpha*delta/gamma)*a_w*(a_w + a_m) = 0

whose unique positive root is the equilibrium transfer. Fertility is positive
exactly when the wife's income is below the critical level
``alpha*gamma*a_m/delta``; past it she stays childless no matter the offer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import ModelParams, utility_linear_pair, validate_params
from .errors import BracketingFailure, NonPositiveTransfer

# Slack for the weak participation inequalities, so an agent exactly at the
# reservation utility counts as participating.
PARTICIPATION_TOL = 1e-12


@dataclass(frozen=True)
class ReactionDecomposition:
    """Wife's best-response fertility split into its two components."""

    preference_effect: float
    transfer_effect: float
    n: float


@dataclass(frozen=True)
class GameEquilibrium:
    """Equilibrium outcome of the transfer game.

    ``rho_star`` is always the positive root of the husband's first-order
    quadratic. At a corner (``interior`` false) no transfer changes the
    outcome, so the formal root is reported for transparency while the
    allocation is simply the endowment point.
    """

    rho_star: float
    n_star: float
    c_w: float
    c_m: float
    u_w: float
    u_m: float
    wife_participates: bool
    husband_participates: bool
    interior: bool


def wife_reaction(p: ModelParams, rho: float) -> ReactionDecomposition:
    """Wife's optimal fertility given a per-child transfer ``rho > 0``.

    Maximizes ``gamma*ln(a_w + rho*n) - delta*n`` over ``n >= 0``. Interior
    solutions satisfy ``gamma*rho/(a_w + rho*n) = delta``; when the transfer
    is too small to compensate her the response clamps to zero.
    """
    validate_params(p)
    if not (isinstance(rho, (int, float)) and math.isfinite(rho) and rho > 0):
        raise NonPositiveTransfer(f"transfer must be > 0, got {rho!r}")
    preference = p.gamma / p.delta
    transfer = -p.a_w / rho
    return ReactionDecomposition(
        preference_effect=preference,
        transfer_effect=transfer,
        n=max(0.0, preference + transfer),
    )


def equilibrium_transfer(p: ModelParams) -> float:
    """Positive root of the husband's first-order quadratic.

    Evaluated in the cancellation-free form ``q / (alpha*a_w/2 + sqrt(X))``
    with ``q = (alpha*delta/gamma)*a_w*(a_w + a_m)`` and
    ``X = (alpha*a_w/2)**2 + q``, which is exact even when the two terms of
    the textbook expression ``-alpha*a_w/2 + sqrt(X)`` nearly cancel.
    """
    validate_params(p)
    half = 0.5 * p.alpha * p.a_w
    q = (p.alpha * p.delta / p.gamma) * p.a_w * (p.a_w + p.a_m)
    return q / (half + math.sqrt(half * half + q))


def solve_game(p: ModelParams) -> GameEquilibrium:
    """Full equilibrium of the transfer game.

    Computes the optimal transfer, the wife's response to it, budget-exact
    consumptions and both utilities. Participation compares each spouse to
    the no-birth outcome (consuming own income, zero children); both hold
    automatically since refusing is always available to each side.
    """
    rho = equilibrium_transfer(p)
    reaction = wife_reaction(p, rho)
    n = reaction.n
    if n > 0:
        c_w = p.a_w + rho * n
        c_m = p.a_m - rho * n
        interior = True
    else:
        c_w = p.a_w
        c_m = p.a_m
        interior = False
    u_w, u_m = utility_linear_pair(p, c_w, c_m, n)
    reservation_w = p.gamma * math.log(p.a_w)
    reservation_m = math.log(p.a_m)
    return GameEquilibrium(
        rho_star=rho,
        n_star=n,
        c_w=c_w,
        c_m=c_m,
        u_w=u_w,
        u_m=u_m,
        wife_participates=u_w >= reservation_w - PARTICIPATION_TOL,
        husband_participates=u_m >= reservation_m - PARTICIPATION_TOL,
        interior=interior,
    )


def interior_margin(p: ModelParams) -> float:
    """Unclamped fertility at the equilibrium transfer, ``gamma/delta - a_w/rho*``.

    Positive below the fertility threshold, negative above it; used as the
    bracketing function when locating the threshold by bisection.
    """
    rho = equilibrium_transfer(p)
    return p.gamma / p.delta - p.a_w / rho


def fertility_threshold(
    p: ModelParams,
    over: str = "a_w",
    hi: float | None = None,
    rtol: float = 1e-8,
) -> float:
    """Critical wife income at which equilibrium fertility first hits zero.

    Bisects the unclamped fertility margin in ``a_w`` (the clamped n* itself
    has no sign change to track). Closed form, obtained by substituting
    ``rho* = a_w*delta/gamma`` into the husband's quadratic:

        a_w_crit = alpha*gamma*a_m/delta

    The bisection result is cross-checked against it before returning.

    ``hi`` optionally fixes the upper end of the search interval; when the
    margin has no sign change on ``[lo, hi]`` a BracketingFailure is raised.
    By default the interval expands geometrically until it brackets.
    """
    validate_params(p)
    if over != "a_w":
        raise ValueError(f"threshold search only supports 'a_w', got {over!r}")

    def margin(a_w: float) -> float:
        return interior_margin(replace(p, a_w=a_w))

    lo = 1e-12 * p.a_m
    if margin(lo) <= 0:
        raise BracketingFailure(f"fertility margin not positive at a_w={lo!r}")
    if hi is None:
        hi = p.a_m
        for _ in range(1024):
            if margin(hi) < 0:
                break
            hi *= 2.0
        else:  # pragma: no cover - margin provably turns negative
            raise BracketingFailure("fertility margin never became negative")
    elif margin(hi) >= 0:
        raise BracketingFailure(
            f"no sign change of the fertility margin on [{lo!r}, {hi!r}]"
        )

    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if margin(mid) > 0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)

    closed_form = p.alpha * p.gamma * p.a_m / p.delta
    if abs(root - closed_form) > 10.0 * rtol * closed_form:
        raise BracketingFailure(
            f"bisection threshold {root!r} disagrees with the closed form "
            f"{closed_form!r}"
        )
    return root
