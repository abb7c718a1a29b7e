"""The saddle-point-style equation fixing the tilting parameter delta_n.

    sum_{l=1}^r h_l rho_l delta^(-rho_l-1) + A_0 delta^(-1) + D(-1) = n

has a unique positive solution delta_n for every n > D(-1); z_n = 1/delta_n
is the scale at which the generating function is tilted.  The left side is
strictly decreasing where it matters, so we bracket the root first and run
Newton safeguarded by bisection inside the bracket.
"""

from typing import NamedTuple

from mpmath import mpf

from .errors import (
    DomainError,
    InvalidParametersError,
    NoBracketError,
    NonConvergenceError,
)
from .precision import to_mpf
from .spectrum import SpectralData

MAX_ITER = 200
BRACKET_MIN = mpf("1e-12")
BRACKET_MAX = mpf("1e12")


class KhintchineSolution(NamedTuple):
    delta: mpf
    z: mpf
    residual: mpf
    iterations: int
    bracket: tuple
    newton_steps: int
    bisection_steps: int
    bracket_widths: tuple


def residual_tolerance(n) -> mpf:
    # lhs grows like n, so a pure absolute tolerance is unattainable at
    # large n in fixed precision
    return max(mpf("1e-10") * n, mpf("1e-12"))


def khintchine_lhs(sd: SpectralData, delta) -> mpf:
    """Left side of the equation at a given delta > 0."""
    delta = to_mpf(delta)
    if not delta > 0:
        raise DomainError(f"delta must be positive; got {delta}")
    total = sd.d1() + sd.A0 / delta
    for rho, h in sd.poles:
        total += h * rho * delta ** (-rho - 1)
    return total


def khintchine_lhs_deriv(sd: SpectralData, delta) -> mpf:
    delta = to_mpf(delta)
    total = -sd.A0 / delta**2
    for rho, h in sd.poles:
        total += -h * rho * (rho + 1) * delta ** (-rho - 2)
    return total


def initial_guess(sd: SpectralData, n) -> mpf:
    """Two-term asymptotic expansion of z_n = 1/delta_n, used to seed
    the solver and to cross-check the solved root.

    Leading term (n/(rho_r h_r))^(1/(rho_r+1)); the r >= 2 correction has
    magnitude M (rho_r h_r)^(-e) n^e with e = (rho_{r-1}-rho_r+1)/(rho_r+1)
    and M = rho_{r-1} h_{r-1} / ((rho_r+1) rho_r h_r).  The expansion's
    printed sign does not balance the equation, so the sign is chosen
    adaptively: whichever candidate brings the equation's left side
    closer to n (the numeric solve stays authoritative).
    """
    n = to_mpf(n)
    if not n >= 1:
        raise InvalidParametersError(f"need n >= 1; got {n}")
    rho_r, h_r = sd.poles[-1]
    z0 = (n / (rho_r * h_r)) ** (1 / (rho_r + 1))
    if sd.r == 1:
        return z0
    rho_p, h_p = sd.poles[-2]
    e = (rho_p - rho_r + 1) / (rho_r + 1)
    M = rho_p * h_p / ((rho_r + 1) * rho_r * h_r)
    w = M * (rho_r * h_r) ** (-e) * n**e
    best = z0
    best_err = abs(khintchine_lhs(sd, 1 / z0) - n)
    for cand in (z0 - w, z0 + w):
        if cand <= 0:
            continue
        err = abs(khintchine_lhs(sd, 1 / cand) - n)
        if err < best_err:
            best, best_err = cand, err
    return best


def _bracket(sd: SpectralData, n, d0):
    # geometric expansion from the initial guess until F changes sign;
    # F(delta) = lhs - n is positive left of the root, negative right
    f0 = khintchine_lhs(sd, d0) - n
    if f0 > 0:
        lo, flo = d0, f0
        hi = d0
        while True:
            hi = hi * 2
            if hi > BRACKET_MAX:
                raise NoBracketError(
                    f"no sign change in [{d0}, {BRACKET_MAX}] for n={n}"
                )
            fhi = khintchine_lhs(sd, hi) - n
            if fhi <= 0:
                return lo, hi
            lo, flo = hi, fhi
    lo = d0
    while True:
        lo = lo / 2
        if lo < BRACKET_MIN:
            raise NoBracketError(f"no sign change in [{BRACKET_MIN}, {d0}] for n={n}")
        flo = khintchine_lhs(sd, lo) - n
        if flo >= 0:
            return lo, d0


def solve_delta(sd: SpectralData, n) -> KhintchineSolution:
    """Solve for delta_n to residual max(1e-10*n, 1e-12).

    Newton on F(delta) = lhs(delta) - n; any step leaving the current
    bracket is replaced by bisection, so the bracket width never grows.
    Per-iteration widths are returned for diagnostics.
    """
    n = to_mpf(n)
    if not n >= 1:
        raise InvalidParametersError(f"need n >= 1; got {n}")
    if not n > sd.d1():
        raise InvalidParametersError(
            f"no positive solution: need n > D(-1) = {sd.d1()}; got n={n}"
        )
    tol = residual_tolerance(n)
    d0 = 1 / initial_guess(sd, n)
    f0 = khintchine_lhs(sd, d0) - n
    if abs(f0) <= tol:
        return KhintchineSolution(d0, 1 / d0, f0, 0, (d0 / 2, d0 * 2), 0, 0, ())
    lo, hi = _bracket(sd, n, d0)
    widths = []
    newton_steps = 0
    bisection_steps = 0
    x = (lo + hi) / 2
    for it in range(1, MAX_ITER + 1):
        fx = khintchine_lhs(sd, x) - n
        if abs(fx) <= tol:
            # bracket not updated with x itself, so lo < x < hi strictly
            return KhintchineSolution(
                x, 1 / x, fx, it, (lo, hi), newton_steps, bisection_steps,
                tuple(widths),
            )
        if fx > 0:
            lo = x
        else:
            hi = x
        widths.append(hi - lo)
        step_ok = False
        dfx = khintchine_lhs_deriv(sd, x)
        if dfx != 0:
            x_new = x - fx / dfx
            if lo < x_new < hi:
                step_ok = True
        if step_ok:
            newton_steps += 1
            x = x_new
        else:
            bisection_steps += 1
            x = (lo + hi) / 2
    raise NonConvergenceError(
        f"no convergence after {MAX_ITER} iterations (n={n}, bracket=({lo}, {hi}))"
    )
