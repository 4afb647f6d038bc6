"""Transfer game with an explicit per-child rearing cost on the husband.

Here the husband's budget is ``c_m = a_m - (beta + rho)*n``: he pays the
rearing cost on top of the transfer instead of folding it in. The wife's
response is unchanged, ``n(rho) = G - a_w/rho`` with ``G = gamma/delta``,
and substituting it into his objective turns the first-order condition into
a cubic in the transfer:

    (G/a_w)*rho**3 + alpha*G*rho**2
        + [beta + alpha*beta*G - alpha*(a_m + a_w)]*rho - alpha*beta*a_w = 0.

With all parameters positive the coefficient pattern is (+, +, any, -), which
has exactly one sign variation, so by Descartes' rule the cubic has exactly
one positive root regardless of parameter values. The solver nevertheless
enumerates and classifies every real root, because the admissible set (not
the algebra) is what selects the equilibrium: a root is admissible when it
induces non-negative fertility, positive husband consumption, and is a local
maximum of his utility. Cultural regimes pick the smallest ("low") or largest
("high") admissible root; with a single admissible root both coincide and a
``regime_degenerate`` diagnostic is attached. Empirical root counts are
reported so the one-root structure is visible in output rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ModelParams, utility_linear_pair, validate_params

# Diagnostics attached to ExtendedEquilibrium.
REGIME_DEGENERATE = "regime_degenerate"
NO_INTERIOR_OPTIMUM = "no_interior_optimum"
SINGLE_POSITIVE_ROOT = "single_positive_root"

_DEDUP_RTOL = 1e-9


@dataclass(frozen=True)
class CubicFOC:
    """Cubic stationarity condition of the husband's transfer choice.

    Stores the coefficients of ``c3*x**3 + c2*x**2 + c1*x + c0`` along with
    the wife's preference ratio ``gamma_ratio = gamma/delta`` that produced
    them. For valid parameters ``c3 > 0``, ``c2 > 0`` and ``c0 < 0``.
    """

    c3: float
    c2: float
    c1: float
    c0: float
    gamma_ratio: float

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.c3, self.c2, self.c1, self.c0)

    def value(self, x: float) -> float:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x: float) -> float:
        return (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1

    def residual_scale(self, x: float) -> float:
        """Magnitude of the largest monomial at x, for relative residuals."""
        ax = abs(x)
        return max(
            1.0,
            abs(self.c3) * ax**3,
            abs(self.c2) * ax**2,
            abs(self.c1) * ax,
            abs(self.c0),
        )


@dataclass(frozen=True)
class ExtendedEquilibrium:
    """Root classification and induced allocation of the extended game."""

    foc: CubicFOC
    real_roots: tuple[float, ...]
    positive_roots: tuple[float, ...]
    admissible_roots: tuple[float, ...]
    selected_rho: float | None
    regime: str
    n_star: float
    c_w: float
    c_m: float
    u_w: float
    u_m: float
    wife_participates: bool
    husband_participates: bool
    interior: bool
    diagnostics: tuple[str, ...]


def cubic_coefficients(p: ModelParams) -> CubicFOC:
    """Assemble the husband's first-order cubic from the parameters."""
    validate_params(p)
    ratio = p.gamma / p.delta
    return CubicFOC(
        c3=ratio / p.a_w,
        c2=p.alpha * ratio,
        c1=p.beta + p.alpha * p.beta * ratio - p.alpha * (p.a_m + p.a_w),
        c0=-p.alpha * p.beta * p.a_w,
        gamma_ratio=ratio,
    )


def _newton_polish(foc: CubicFOC, x: float, lo: float, hi: float) -> float:
    for _ in range(8):
        fx = foc.value(x)
        if fx == 0.0:
            return x
        dfx = foc.derivative(x)
        if dfx == 0.0:
            return x
        step = fx / dfx
        nxt = x - step
        if not (lo <= nxt <= hi):
            return x
        if nxt == x:
            return x
        x = nxt
    return x


def _bisect_root(foc: CubicFOC, lo: float, hi: float) -> float:
    flo = foc.value(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = foc.value(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
    return _newton_polish(foc, 0.5 * (lo + hi), lo, hi)


def _discriminant_real_count(foc: CubicFOC) -> int | None:
    """Number of distinct real roots per the cubic discriminant.

    Returns None when the discriminant is too close to zero (relative to its
    constituent terms) to call, which covers repeated-root inputs.
    """
    a, b, c, d = foc.coefficients
    terms = (
        18.0 * a * b * c * d,
        -4.0 * b**3 * d,
        b**2 * c**2,
        -4.0 * a * c**3,
        -27.0 * a**2 * d**2,
    )
    disc = math.fsum(terms)
    scale = max(abs(t) for t in terms)
    if scale == 0.0 or abs(disc) <= 1e-9 * scale:
        return None
    return 3 if disc > 0 else 1


def real_roots(foc: CubicFOC) -> tuple[float, ...]:
    """All real roots of the cubic, ascending, polished to machine residual.

    Splits the root bound interval at the critical points of the cubic so
    every segment is monotone, brackets sign changes, and bisects each
    bracket before a final Newton polish. Tangent (double) roots are caught
    at the critical points directly. The count is cross-checked against the
    discriminant whenever the discriminant is decisively nonzero.
    """
    if foc.c3 == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    bound = 1.0 + (abs(foc.c2) + abs(foc.c1) + abs(foc.c0)) / abs(foc.c3)

    breakpoints = [-bound, bound]
    # Critical points: roots of 3*c3*x^2 + 2*c2*x + c1.
    disc = 4.0 * (foc.c2 * foc.c2 - 3.0 * foc.c3 * foc.c1)
    if disc > 0.0:
        sq = math.sqrt(disc)
        for crit in ((-2.0 * foc.c2 - sq) / (6.0 * foc.c3),
                     (-2.0 * foc.c2 + sq) / (6.0 * foc.c3)):
            if -bound < crit < bound:
                breakpoints.append(crit)
    breakpoints.sort()

    roots: list[float] = []

    def push(x: float) -> None:
        for seen in roots:
            if abs(x - seen) <= _DEDUP_RTOL * max(1.0, abs(x), abs(seen)):
                return
        roots.append(x)

    for i, x in enumerate(breakpoints):
        if abs(foc.value(x)) <= 1e-12 * foc.residual_scale(x):
            push(x)
        if i + 1 < len(breakpoints):
            a, b = x, breakpoints[i + 1]
            fa, fb = foc.value(a), foc.value(b)
            if fa == 0.0 or fb == 0.0:
                continue
            if (fa < 0) != (fb < 0):
                push(_bisect_root(foc, a, b))

    roots.sort()
    expected = _discriminant_real_count(foc)
    if expected is not None and len(roots) != expected:
        raise RuntimeError(
            f"root isolation found {len(roots)} real roots but the "
            f"discriminant implies {expected} for coefficients "
            f"{foc.coefficients!r}"
        )
    return tuple(roots)


def positive_roots(foc: CubicFOC) -> tuple[float, ...]:
    """Strictly positive real roots, ascending."""
    cutoff = _DEDUP_RTOL
    return tuple(r for r in real_roots(foc) if r > cutoff)


def _reaction(p: ModelParams, rho: float) -> float:
    return p.gamma / p.delta - p.a_w / rho


def solve_extended(p: ModelParams, regime: str) -> ExtendedEquilibrium:
    """Equilibrium of the extended game under a cultural regime.

    Admissibility of a positive root requires non-negative induced fertility,
    positive husband consumption, and the second-order condition. Because the
    husband's marginal utility is ``-a_w*f(rho) / (rho**3 * c_m)`` for the
    cubic ``f``, a root is a local maximum exactly when the cubic crosses
    upward through it, so the second-order check is ``f'(rho) > 0``.

    ``regime='low'`` selects the smallest admissible root, ``'high'`` the
    largest. With no admissible root the no-birth corner is returned with a
    ``no_interior_optimum`` diagnostic.
    """
    validate_params(p)
    if regime not in ("low", "high"):
        raise ValueError(f"regime must be 'low' or 'high', got {regime!r}")

    foc = cubic_coefficients(p)
    all_roots = real_roots(foc)
    pos = positive_roots(foc)
    admissible = tuple(
        r
        for r in pos
        if _reaction(p, r) >= 0.0
        and p.a_m - (p.beta + r) * _reaction(p, r) > 0.0
        and foc.derivative(r) > 0.0
    )

    diagnostics: list[str] = []
    if len(pos) == 1:
        diagnostics.append(SINGLE_POSITIVE_ROOT)

    if admissible:
        selected = min(admissible) if regime == "low" else max(admissible)
        if len(admissible) == 1:
            diagnostics.append(REGIME_DEGENERATE)
        n = _reaction(p, selected)
        c_w = p.a_w + selected * n
        c_m = p.a_m - (p.beta + selected) * n
        interior = n > 0
    else:
        selected = None
        n = 0.0
        c_w = p.a_w
        c_m = p.a_m
        interior = False
        diagnostics.append(NO_INTERIOR_OPTIMUM)

    u_w, u_m = utility_linear_pair(p, c_w, c_m, n)
    return ExtendedEquilibrium(
        foc=foc,
        real_roots=all_roots,
        positive_roots=pos,
        admissible_roots=admissible,
        selected_rho=selected,
        regime=regime,
        n_star=n,
        c_w=c_w,
        c_m=c_m,
        u_w=u_w,
        u_m=u_m,
        wife_participates=u_w >= p.gamma * math.log(p.a_w) - 1e-12,
        husband_participates=u_m >= math.log(p.a_m) - 1e-12,
        interior=interior,
        diagnostics=tuple(diagnostics),
    )
