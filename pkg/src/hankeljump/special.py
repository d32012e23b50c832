"""Arbitrary-precision scalar special functions.

Complex log-Gamma, digamma, zeta values, and erfc are delegated to mpmath,
whose implementations satisfy the contracts needed here (``loggamma`` is the
standard branch, continuous off the cut ``(-inf, 0]``; all routines are
correctly rounded to working precision).  The Barnes-G pair
``G(1+b) * G(1-b)`` and the reflection ratio ``f(a) = -Gamma(1-a)/Gamma(a)``
are assembled in this module because their branch and pole conventions are
load-bearing for the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .errors import DomainError, PoleError
from .precision import PrecisionContext


@dataclass(frozen=True)
class GammaRatioValue:
    """Value of -Gamma(1-a)/Gamma(a); zero at the poles of Gamma(a)."""

    value: object


def _nearest_int(z):
    """Nearest integer to Re z, plus the distance of z from it."""
    zc = mp.mpc(z)
    n = int(mp.nint(mp.re(zc)))
    return n, abs(zc - n)


def _is_exact_nonpositive_int(z):
    n, dist = _nearest_int(z)
    return dist == 0 and n <= 0, n


def log_gamma(z, ctx: PrecisionContext):
    """log Gamma(z), continuous off the cut (-inf, 0]; exp of it is Gamma(z)."""
    pole, _ = _is_exact_nonpositive_int(z)
    if pole:
        raise PoleError(f"log_gamma pole at z = {z}")
    with ctx.workprec():
        zc = mp.mpc(z)
        if mp.im(zc) == 0 and mp.re(zc) > 0:
            return mp.loggamma(mp.re(zc))
        return mp.loggamma(zc)


def digamma(z, ctx: PrecisionContext):
    """Gamma'(z)/Gamma(z)."""
    pole, _ = _is_exact_nonpositive_int(z)
    if pole:
        raise PoleError(f"digamma pole at z = {z}")
    with ctx.workprec():
        zc = mp.mpc(z)
        if mp.im(zc) == 0:
            return mp.digamma(mp.re(zc))
        return mp.digamma(zc)


def zeta_int(k: int, ctx: PrecisionContext):
    """Riemann zeta at an integer k >= 2."""
    if k < 2:
        raise DomainError("zeta_int requires k >= 2")
    with ctx.workprec():
        return mp.zeta(k)


def zeta_prime_minus_one(ctx: PrecisionContext):
    """zeta'(-1) = 1/12 - ln A (A the Glaisher constant)."""
    with ctx.workprec():
        return mp.zeta(-1, derivative=1)


def erfc(x, ctx: PrecisionContext):
    """Complementary error function (2/sqrt(pi)) * int_x^inf e^{-t^2} dt."""
    with ctx.workprec():
        return mp.erfc(mp.mpf(x))


def barnes_g_pair(beta, ctx: PrecisionContext):
    """The product G(1+beta) * G(1-beta) of Barnes G-functions, |beta| < 1.

    Evaluated through the Taylor series of ln G(1+z), whose odd terms cancel
    in the pair:

        ln[G(1+b)G(1-b)] = -(1 + euler) b^2 - sum_{j>=2} zeta(2j-1) b^{2j} / j.

    The equivalent Gamma-integral representation is kept as a test oracle
    only: its integrand's log-branch at the origin is ambiguous except along
    purely imaginary paths.

    Returns a real value whenever beta is real or purely imaginary (the pair
    is conjugate-symmetric there).
    """
    with ctx.workprec(64):
        b = mp.mpc(beta)
        if abs(b) >= 1:
            raise DomainError("barnes_g_pair series requires |beta| < 1")
        b2 = b * b
        total = -(1 + mp.euler) * b2
        power = b2
        cutoff = mp.mpf(2) ** (-(ctx.bits + 16))
        j = 2
        while True:
            power *= b2
            term = mp.zeta(2 * j - 1) * power / j
            total += term
            if abs(term) <= cutoff * (1 + abs(total)):
                break
            j += 1
        result = mp.exp(total)
        if mp.im(b2) == 0:
            # real or purely imaginary beta: the pair is real
            return mp.re(result)
        return result


def gamma_ratio_f(a, ctx: PrecisionContext) -> GammaRatioValue:
    """The ratio f(a) = -Gamma(1-a)/Gamma(a).

    Vanishes at a in {0, -1, -2, ...} (pole of Gamma(a) in the denominator);
    positive integers are poles of Gamma(1-a) and raise PoleError.
    """
    n, dist = _nearest_int(a)
    if dist == 0 and n >= 1:
        raise PoleError(f"gamma_ratio_f pole at a = {n}")
    with ctx.workprec():
        ac = mp.mpc(a)
        value = -mp.gamma(1 - ac) * mp.rgamma(ac)
        if mp.im(ac) == 0:
            value = mp.mpc(mp.re(value), 0) if mp.im(value) == 0 else value
        return GammaRatioValue(value)
