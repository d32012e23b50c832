"""Closed-form complex moments of the Gaussian weight with a jump.

The weight is ``w(x) = e^{-x^2} * e^{i*beta*pi}`` for ``x < mu0`` and
``e^{-x^2} * e^{-i*beta*pi}`` for ``x >= mu0`` (the boundary point belongs to
the right branch).  Its moments split into the full-line Gaussian moments
``F_k`` and the half-line tails ``G_k(mu0) = int_mu0^inf x^k e^{-x^2} dx``:

    m_k = e^{i*beta*pi} * F_k - 2i*sin(beta*pi) * G_k(mu0).

Both pieces obey exact integration-by-parts recurrences in k, so the whole
table is produced in one sweep with certified precision; adaptive quadrature
of the defining integral is retained only as the independent test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .errors import DomainError, QuadratureFailure
from .precision import PrecisionContext


@dataclass(frozen=True)
class JumpWeight:
    """Parameters of the jump weight.

    Either ``mu0`` is fixed directly, or the pair ``(lambda0, n_scale)`` is
    set, in which case ``mu0 = lambda0 * sqrt(2 * n_scale)`` is computed at
    use time under the active precision.
    """

    beta: complex
    mu0: float | None = None
    lambda0: float | None = None
    n_scale: int | None = None

    def __post_init__(self):
        has_fixed = self.mu0 is not None
        has_scaled = self.lambda0 is not None or self.n_scale is not None
        if has_fixed == has_scaled:
            raise DomainError("exactly one of mu0 / (lambda0, n_scale) must be set")
        if has_scaled and (self.lambda0 is None or self.n_scale is None or self.n_scale < 1):
            raise DomainError("scaled weights need lambda0 and a positive n_scale")
        re_beta = complex(self.beta).real
        if not (-0.5 < re_beta <= 0.5):
            raise DomainError("Re beta must lie in (-1/2, 1/2]")

    @classmethod
    def fixed(cls, beta, mu0) -> "JumpWeight":
        return cls(beta=beta, mu0=mu0)

    @classmethod
    def scaled(cls, beta, lambda0, n: int) -> "JumpWeight":
        return cls(beta=beta, lambda0=lambda0, n_scale=n)

    def beta_at(self, ctx: PrecisionContext):
        with ctx.workprec():
            return mp.mpc(self.beta)

    def mu0_at(self, ctx: PrecisionContext):
        with ctx.workprec():
            if self.mu0 is not None:
                return mp.mpf(self.mu0)
            return mp.mpf(self.lambda0) * mp.sqrt(2 * self.n_scale)

    def shifted(self, dbeta) -> "JumpWeight":
        """Same jump location, beta moved by dbeta (finite-difference stencils)."""
        if self.mu0 is not None:
            return JumpWeight(beta=complex(self.beta) + complex(dbeta), mu0=self.mu0)
        return JumpWeight(beta=complex(self.beta) + complex(dbeta),
                          lambda0=self.lambda0, n_scale=self.n_scale)


@dataclass(frozen=True)
class MomentTable:
    """Moments m_0 ... m_max_order of a jump weight at fixed precision."""

    weight: JumpWeight
    max_order: int
    m: tuple


def weight_value(w: JumpWeight, x, ctx: PrecisionContext):
    """Pointwise value of the weight; the boundary x = mu0 takes e^{-i*beta*pi}."""
    with ctx.workprec():
        beta = w.beta_at(ctx)
        mu0 = w.mu0_at(ctx)
        xv = mp.mpf(x)
        phase = mp.exp(1j * beta * mp.pi) if xv < mu0 else mp.exp(-1j * beta * mp.pi)
        return mp.exp(-xv * xv) * phase


def half_tail(k: int, mu, ctx: PrecisionContext):
    """G_k(mu) = int_mu^inf x^k e^{-x^2} dx by the exact recurrence.

    G_0 = (sqrt(pi)/2) erfc(mu), G_1 = e^{-mu^2}/2, and
    G_k = ((k-1)/2) G_{k-2} + mu^{k-1} e^{-mu^2}/2 for k >= 2.
    """
    if k < 0:
        raise DomainError("half_tail requires k >= 0")
    with ctx.workprec():
        return _half_tail_table(k, mp.mpf(mu))[k]


def _half_tail_table(kmax, mu):
    g = [mp.mpf(0)] * (kmax + 1)
    e = mp.exp(-mu * mu)
    g[0] = mp.sqrt(mp.pi) / 2 * mp.erfc(mu)
    if kmax >= 1:
        g[1] = e / 2
    mu_pow = mu  # mu^{k-1} for k = 2
    for k in range(2, kmax + 1):
        g[k] = mp.mpf(k - 1) / 2 * g[k - 2] + mu_pow * e / 2
        mu_pow *= mu
    return g


def _gaussian_full_table(kmax):
    # F_k = Gamma((k+1)/2) for even k, 0 for odd k; recurrence F_k = (k-1)/2 * F_{k-2}
    f = [mp.mpf(0)] * (kmax + 1)
    f[0] = mp.sqrt(mp.pi)
    for k in range(2, kmax + 1, 2):
        f[k] = mp.mpf(k - 1) / 2 * f[k - 2]
    return f


def moment(w: JumpWeight, k: int, ctx: PrecisionContext):
    """Closed-form moment m_k = e^{i*beta*pi} F_k - 2i sin(beta*pi) G_k(mu0)."""
    if k < 0:
        raise DomainError("moment requires k >= 0")
    return moment_table(w, k, ctx).m[k]


def moment_table(w: JumpWeight, max_order: int, ctx: PrecisionContext) -> MomentTable:
    """All moments m_0 ... m_max_order from a single recurrence sweep."""
    if max_order < 0:
        raise DomainError("max_order must be >= 0")
    with ctx.workprec():
        beta = w.beta_at(ctx)
        mu0 = w.mu0_at(ctx)
        phase = mp.exp(1j * beta * mp.pi)
        jump = 2j * mp.sin(beta * mp.pi)
        full = _gaussian_full_table(max_order)
        tails = _half_tail_table(max_order, mu0)
        values = tuple(phase * full[k] - jump * tails[k] for k in range(max_order + 1))
    return MomentTable(weight=w, max_order=max_order, m=values)


def quadrature_moment_oracle(w: JumpWeight, k: int, ctx: PrecisionContext):
    """m_k by adaptive quadrature of the defining integral, split at mu0.

    Independent oracle for :func:`moment`; the exponential tails are handled
    by the integrator's infinite-interval transformation.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    with ctx.workprec(64):
        beta = w.beta_at(ctx)
        mu0 = w.mu0_at(ctx)

        def integrand(x):
            return x ** k * mp.exp(-x * x)

        left, err_l = mp.quad(integrand, [mp.mpf("-inf"), mu0], error=True)
        right, err_r = mp.quad(integrand, [mu0, mp.mpf("inf")], error=True)
        value = mp.exp(1j * beta * mp.pi) * left + mp.exp(-1j * beta * mp.pi) * right
        tol = mp.mpf(2) ** (-(ctx.bits // 2)) * (1 + abs(value))
        if err_l + err_r > tol:
            raise QuadratureFailure(
                f"moment quadrature error {mp.nstr(err_l + err_r, 5)} exceeds tolerance")
        return value
