"""Special-function values backing the spectral computations.

Riemann/Hurwitz zeta, log-Gamma and the handful of derivative values and
constants (zeta'(0), zeta'(-1), Euler-Mascheroni, Glaisher-Kinkelin) that
the pole/residue derivations need.  Numerical evaluation is delegated to
mpmath at the global working precision; this module adds the domain
contracts, the closed forms, and a uniform return type.

Domains are restricted to what the residue formulas actually consume:
real arguments, zeta on [-20, 40], Hurwitz zeta on [-10, 40] x (0, 1].
"""

from typing import Callable, NamedTuple

from mpmath import mp, mpf, isfinite

from .errors import DomainError, PoleError, UnsupportedPointError
from .precision import extra_precision, to_mpf

POLE_GUARD = mpf("1e-9")

ZETA_MIN, ZETA_MAX = -20, 40
HURWITZ_MIN, HURWITZ_MAX = -10, 40


class RealHP(NamedTuple):
    """A finite high-precision real plus the precision it was computed at."""

    value: mpf
    dps: int

    def __float__(self) -> float:
        return float(self.value)


def _result(value) -> RealHP:
    if not isfinite(value):
        raise DomainError(f"evaluation produced a non-finite value: {value}")
    return RealHP(value, mp.dps)


def riemann_zeta(s) -> RealHP:
    """zeta(s) for real s in [-20, 40], s != 1."""
    s = to_mpf(s)
    if abs(s - 1) < POLE_GUARD:
        raise PoleError(f"zeta has a pole at s=1; got s={s}")
    if not (ZETA_MIN <= s <= ZETA_MAX):
        raise DomainError(f"zeta supported on [{ZETA_MIN}, {ZETA_MAX}]; got s={s}")
    return _result(mp.zeta(s))


def riemann_zeta_deriv(s) -> RealHP:
    """zeta'(s) at the two points with closed forms, s = 0 and s = -1.

    zeta'(0) = -log(2*pi)/2 and zeta'(-1) = 1/12 - log A, with A the
    Glaisher-Kinkelin constant.
    """
    s = to_mpf(s)
    if s == 0:
        return _result(-mp.log(2 * mp.pi) / 2)
    if s == -1:
        return _result(mpf(1) / 12 - mp.log(mp.glaisher))
    raise UnsupportedPointError(f"zeta' available only at s=0 and s=-1; got s={s}")


def hurwitz_zeta(s, q) -> RealHP:
    """zeta(s, q) for real s in [-10, 40], s != 1, and 0 < q <= 1."""
    s = to_mpf(s)
    q = to_mpf(q)
    if abs(s - 1) < POLE_GUARD:
        raise PoleError(f"zeta(s, q) has a pole at s=1; got s={s}")
    if not (HURWITZ_MIN <= s <= HURWITZ_MAX):
        raise DomainError(
            f"zeta(s, q) supported on [{HURWITZ_MIN}, {HURWITZ_MAX}]; got s={s}"
        )
    if not (0 < q <= 1):
        raise DomainError(f"zeta(s, q) requires 0 < q <= 1; got q={q}")
    return _result(mp.zeta(s, q))


def hurwitz_zeta_deriv0(q) -> RealHP:
    """d/ds zeta(s, q) at s = 0, i.e. log Gamma(q) - log(2*pi)/2 (Lerch)."""
    q = to_mpf(q)
    if not (0 < q <= 1):
        raise DomainError(f"requires 0 < q <= 1; got q={q}")
    return _result(mp.loggamma(q) - mp.log(2 * mp.pi) / 2)


def log_gamma(x) -> RealHP:
    """log Gamma(x) for real x > 0."""
    x = to_mpf(x)
    if x <= 0:
        raise DomainError(f"log_gamma requires x > 0; got x={x}")
    return _result(mp.loggamma(x))


def euler_gamma() -> RealHP:
    """Euler-Mascheroni constant, lim (H_n - log n)."""
    return _result(+mp.euler)


def glaisher_log() -> RealHP:
    """log of the Glaisher-Kinkelin constant A, with zeta'(-1) = 1/12 - log A."""
    return _result(mp.log(mp.glaisher))


def central_derivative(f: Callable, x, step=mpf("1e-8")) -> RealHP:
    """Central-difference derivative of a scalar function.

    Fallback for derivative values with no closed form (e.g. a custom
    weight Dirichlet series at 0).  The working precision is doubled
    internally so the subtraction does not cancel, but the truncation
    error of the stencil caps the accuracy near `step`**2; do not expect
    better than ~1e-8 relative with the default step.
    """
    x = to_mpf(x)
    h = to_mpf(step)
    if h <= 0:
        raise DomainError(f"step must be positive; got {h}")
    with extra_precision(mp.dps):
        val = (to_mpf(f(x + h)) - to_mpf(f(x - h))) / (2 * h)
    return _result(val)
