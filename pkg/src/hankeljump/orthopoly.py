"""Exact finite-n orthogonal-polynomial data for the jump weight.

The Hankel matrix ``H_{jk} = m_{j+k}`` of moments is factored as
``H = L D L^T`` with ``L`` unit lower triangular (complex symmetric, no
pivoting: pivoting would destroy the identification of the diagonal with the
polynomial norms).  Then

* ``d_j = h_j`` are the norms of the monic orthogonal polynomials,
* the rows of ``L^{-1}`` are the monic coefficient vectors,
* ``D_n = prod_{j<n} h_j`` is the Hankel determinant.

Degenerate pivots are reported, never regularized: the weight is complex, so
isolated parameter values can kill a low-degree norm (e.g. beta = 1/2 with
mu0 = 0 gives m_0 = 0).  A row-pivoted elimination determinant is kept as an
independent oracle, and the differential identities in beta close the loop
between the determinant and the polynomial data.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

from .errors import DegeneratePivot, DomainError, StencilFailure
from .moments import JumpWeight, MomentTable, moment_table
from .precision import GUARD_BITS, PrecisionContext


@dataclass(frozen=True)
class OPData:
    """Norms, leading coefficients, and monic coefficient vectors up to n_max.

    ``coeffs[k][j]`` is the coefficient of x^j in the monic polynomial of
    degree k (so ``coeffs[k][k] == 1``).  ``beta_sub[k]`` and
    ``gamma_sub[k]`` are the x^{k-1} and x^{k-2} coefficients; slots that do
    not exist (k < 1, resp. k < 2) hold None.  ``kappa[k]`` is the principal
    square root of 1/h_k; every identity implemented here depends on kappa
    only through its square, so the root branch is a recorded convention.
    """

    weight: JumpWeight
    n_max: int
    h: tuple
    kappa: tuple
    coeffs: tuple
    beta_sub: tuple
    gamma_sub: tuple
    gram_residual: object = None


@dataclass(frozen=True)
class RecurrencePair:
    """Coefficients of x p_n = p_{n+1} + A_n p_n + B_n p_{n-1} (monic)."""

    A: object
    B: object


@dataclass(frozen=True)
class YEntries:
    """First-column entries of the orthogonal-polynomial matrix solution.

    y11 = monic p_n(z); y21 = -2*pi*i * p_{n-1}(z) / h_{n-1}.
    """

    y11: object
    y21: object


def _hankel(table: MomentTable, n: int):
    if table.max_order < 2 * n - 2:
        raise DomainError(f"need moments up to order {2 * n - 2}, have {table.max_order}")
    return [[table.m[j + k] for k in range(n)] for j in range(n)]


def ldl_factor(table: MomentTable, n: int, ctx: PrecisionContext):
    """Unpivoted complex-symmetric H = L diag(d) L^T of the n x n Hankel matrix.

    Returns (L, d) with L unit lower triangular (list of row lists) and
    d the pivot sequence, i.e. the norms h_0 ... h_{n-1}.  Raises
    DegeneratePivot(j) when |d_j| falls below the certified rounding floor of
    its own computation.
    """
    with ctx.workprec():
        H = _hankel(table, n)
        floor = mp.mpf(2) ** (-(ctx.bits + GUARD_BITS - 16))
        L = [[mp.mpc(0)] * n for _ in range(n)]
        d = [mp.mpc(0)] * n
        for j in range(n):
            # scale tracks the magnitudes entering the pivot accumulation
            acc = H[j][j]
            scale = abs(acc)
            for k in range(j):
                term = L[j][k] * L[j][k] * d[k]
                acc -= term
                scale = max(scale, abs(term))
            d[j] = acc
            L[j][j] = mp.mpc(1)
            if abs(acc) <= max(scale, mp.mpf(1)) * floor:
                raise DegeneratePivot(j)
            for i in range(j + 1, n):
                s = H[i][j]
                for k in range(j):
                    s -= L[i][k] * L[j][k] * d[k]
                L[i][j] = s / d[j]
        return L, d


def hankel_det(table: MomentTable, n: int, ctx: PrecisionContext):
    """Hankel determinant D_n = prod_{j<n} h_j (D_0 = 1)."""
    if n == 0:
        return mp.mpf(1)
    _, d = ldl_factor(table, n, ctx)
    with ctx.workprec():
        det = mp.mpc(1)
        for dj in d:
            det *= dj
        return det


def hankel_det_pivoted(table: MomentTable, n: int, ctx: PrecisionContext):
    """Row-pivoted elimination determinant of the Hankel matrix (oracle)."""
    if n == 0:
        return mp.mpf(1)
    with ctx.workprec():
        A = _hankel(table, n)
        sign = 1
        det = mp.mpc(1)
        for j in range(n):
            p = max(range(j, n), key=lambda i: abs(A[i][j]))
            if p != j:
                A[j], A[p] = A[p], A[j]
                sign = -sign
            if A[j][j] == 0:
                return mp.mpc(0)
            det *= A[j][j]
            for i in range(j + 1, n):
                f = A[i][j] / A[j][j]
                for k in range(j, n):
                    A[i][k] -= f * A[j][k]
        return sign * det


def log_hankel_det_diff(w: JumpWeight, n: int, dbeta, ctx: PrecisionContext):
    """Branch-safe ln D_n(beta + dbeta) - ln D_n(beta - dbeta).

    Summing principal logs of the pivot ratios h_j(+)/h_j(-) avoids the
    2*pi jumps a single log of the determinant ratio could pick up.
    """
    t_plus = moment_table(w.shifted(dbeta), 2 * n, ctx)
    t_minus = moment_table(w.shifted(-complex(dbeta)), 2 * n, ctx)
    _, d_plus = ldl_factor(t_plus, n, ctx)
    _, d_minus = ldl_factor(t_minus, n, ctx)
    with ctx.workprec():
        return sum((mp.log(p / q) for p, q in zip(d_plus, d_minus)), mp.mpc(0))


def op_data(table: MomentTable, n_max: int, ctx: PrecisionContext,
            check_gram: bool = True) -> OPData:
    """Monic orthogonal-polynomial data for degrees 0 ... n_max.

    Needs moments up to order 2*n_max.  When ``check_gram`` is set, the full
    Gram matrix of the coefficient vectors is recomputed against the moment
    bilinear form and its worst normalized off-diagonal entry stored as
    ``gram_residual``.
    """
    if table.max_order < 2 * n_max:
        raise DomainError(f"need moments to order {2 * n_max}")
    n = n_max + 1
    L, d = ldl_factor(table, n, ctx)
    with ctx.workprec():
        # rows of C = L^{-1} are the monic coefficient vectors
        C = [[mp.mpc(0)] * n for _ in range(n)]
        for k in range(n):
            C[k][k] = mp.mpc(1)
            for j in range(k - 1, -1, -1):
                s = mp.mpc(0)
                for mid in range(j, k):
                    s -= L[k][mid] * C[mid][j]
                C[k][j] = s
        h = tuple(d)
        kappa = tuple(mp.sqrt(1 / hk) for hk in h)
        coeffs = tuple(tuple(C[k][: k + 1]) for k in range(n))
        beta_sub = tuple([None] + [coeffs[k][k - 1] for k in range(1, n)])
        gamma_sub = tuple([None, None] + [coeffs[k][k - 2] for k in range(2, n)])
        gram = None
        if check_gram:
            H = _hankel(table, n)
            worst = mp.mpf(0)
            # G = C H C^T row by row
            for j in range(n):
                row = [sum(C[j][a] * H[a][b] for a in range(j + 1)) for b in range(n)]
                for k in range(n):
                    if k == j:
                        continue
                    g = sum(row[b] * C[k][b] for b in range(k + 1))
                    worst = max(worst, abs(g) / mp.sqrt(abs(h[j] * h[k])))
            gram = worst
    return OPData(weight=table.weight, n_max=n_max, h=h, kappa=kappa,
                  coeffs=coeffs, beta_sub=beta_sub, gamma_sub=gamma_sub,
                  gram_residual=gram)


def op_data_for(w: JumpWeight, n_max: int, ctx: PrecisionContext,
                check_gram: bool = True) -> OPData:
    """Convenience: moment table plus op_data in one call."""
    return op_data(moment_table(w, 2 * n_max, ctx), n_max, ctx, check_gram=check_gram)


def eval_monic(data: OPData, n: int, x, ctx: PrecisionContext):
    """Horner evaluation of the monic polynomial of degree n."""
    if n > data.n_max:
        raise DomainError("degree exceeds stored data")
    with ctx.workprec():
        xv = mp.mpc(x)
        acc = mp.mpc(0)
        for c in reversed(data.coeffs[n]):
            acc = acc * xv + c
        return acc


def eval_monic_deriv(data: OPData, n: int, x, ctx: PrecisionContext):
    """Exact derivative of the monic polynomial of degree n."""
    if n > data.n_max:
        raise DomainError("degree exceeds stored data")
    with ctx.workprec():
        xv = mp.mpc(x)
        acc = mp.mpc(0)
        cs = data.coeffs[n]
        for j in range(n, 0, -1):
            acc = acc * xv + j * cs[j]
        return acc


def recurrence(data: OPData, n: int, ctx: PrecisionContext) -> RecurrencePair:
    """Three-term coefficients A_n = beta_n - beta_{n+1}, B_n = h_n / h_{n-1}.

    A_0 uses the empty-slot convention beta_0 = 0; B_0 is reported as 0
    (p_{-1} = 0 makes it immaterial).
    """
    if n + 1 > data.n_max:
        raise DomainError("need data up to degree n+1")
    with ctx.workprec():
        b_n = mp.mpc(0) if n == 0 else data.beta_sub[n]
        a = b_n - data.beta_sub[n + 1]
        b = mp.mpc(0) if n == 0 else data.h[n] / data.h[n - 1]
        return RecurrencePair(A=a, B=b)


def recurrence_b_coeff_route(data: OPData, n: int, ctx: PrecisionContext):
    """B_n via the coefficient identity gamma_n - gamma_{n+1} - beta_n^2 + beta_n beta_{n+1}."""
    if n + 1 > data.n_max or n < 1:
        raise DomainError("coefficient route needs 1 <= n <= n_max - 1")
    with ctx.workprec():
        g_n = mp.mpc(0) if n == 1 else data.gamma_sub[n]
        return (g_n - data.gamma_sub[n + 1] - data.beta_sub[n] ** 2
                + data.beta_sub[n] * data.beta_sub[n + 1])


def recurrence_A_local(data: OPData, n: int, ctx: PrecisionContext):
    """A_n from the boundary value: -h_n^{-1} p_n(mu0)^2 e^{-mu0^2} sinh(i*pi*beta)."""
    if n > data.n_max:
        raise DomainError("degree exceeds stored data")
    with ctx.workprec():
        beta = data.weight.beta_at(ctx)
        mu0 = data.weight.mu0_at(ctx)
        p = eval_monic(data, n, mu0, ctx)
        return -(p * p) / data.h[n] * mp.exp(-mu0 * mu0) * mp.sinh(1j * mp.pi * beta)


def y_entries(data: OPData, n: int, z, ctx: PrecisionContext) -> YEntries:
    """Entries Y11 = p_n(z) (monic), Y21 = -2*pi*i p_{n-1}(z)/h_{n-1}.

    Both depend on kappa only through kappa^2 = 1/h, hence are invariant
    under the square-root branch choice.
    """
    if n < 1:
        raise DomainError("y_entries needs n >= 1")
    with ctx.workprec():
        y11 = eval_monic(data, n, z, ctx)
        y21 = -2j * mp.pi * eval_monic(data, n - 1, z, ctx) / data.h[n - 1]
        return YEntries(y11=y11, y21=y21)


def christoffel_darboux_residual(data: OPData, n: int, x, ctx: PrecisionContext):
    """|sum_{j<n} p_j^2(x) - (p_n' p_{n-1} - p_n p_{n-1}')(x)/h_{n-1}| (orthonormal p_j)."""
    if n > data.n_max:
        raise DomainError("degree exceeds stored data")
    if n < 1:
        raise DomainError("n >= 1 required")
    with ctx.workprec():
        lhs = mp.mpc(0)
        for j in range(n):
            pj = eval_monic(data, j, x, ctx)
            lhs += pj * pj / data.h[j]
        rhs = (eval_monic_deriv(data, n, x, ctx) * eval_monic(data, n - 1, x, ctx)
               - eval_monic(data, n, x, ctx) * eval_monic_deriv(data, n - 1, x, ctx))
        rhs /= data.h[n - 1]
        return abs(lhs - rhs)


def _bilinear(table: MomentTable, p, q, ctx: PrecisionContext):
    """Moment bilinear form <p, q>_w = sum p_i q_j m_{i+j} on coefficient lists."""
    with ctx.workprec():
        acc = mp.mpc(0)
        for i, pi in enumerate(p):
            if pi == 0:
                continue
            for j, qj in enumerate(q):
                acc += pi * qj * table.m[i + j]
        return acc


def _deriv_coeffs(c):
    return [j * c[j] for j in range(1, len(c))]


def _stencil_data(w: JumpWeight, n_max: int, step, ctx: PrecisionContext):
    try:
        plus = op_data_for(w.shifted(step), n_max, ctx, check_gram=False)
        minus = op_data_for(w.shifted(-complex(step)), n_max, ctx, check_gram=False)
    except DegeneratePivot as exc:
        raise StencilFailure(f"degenerate pivot h_{exc.index} at a stencil point") from exc
    return plus, minus


def diff_identity_residual(w: JumpWeight, n: int, fd_step, ctx: PrecisionContext):
    """Residual of the boundary-value identity for d/dbeta ln D_n.

    The left side is the centered finite difference of ln D_n(beta) (the
    quantities are analytic in beta, so two real-direction evaluations
    suffice).  The right side combines the subleading monic coefficients,
    log-derivatives of the norms, and the two Y-entries at mu0:

        -n (ln k_n k_{n-1})' - (h_n/h_{n-1})' + 2 (gamma_n' - beta_n beta_n')
        + (1/pi) e^{-mu0^2} sin(pi beta) [Y11 Y21' - Y11' Y21
                                          - (ln k_n k_{n-1})' Y11 Y21]

    with all beta-derivatives taken by the same centered stencil.  The
    residual |LHS - RHS| decays as O(fd_step^2).
    """
    if n < 2:
        raise DomainError("identity stated for n > 1")
    h = mp.mpf(fd_step)
    center = op_data_for(w, n, ctx, check_gram=False)
    plus, minus = _stencil_data(w, n, h, ctx)
    with ctx.workprec():
        beta = w.beta_at(ctx)
        mu0 = w.mu0_at(ctx)
        two_h = 2 * h

        lhs = sum((mp.log(p / q) for p, q in
                   zip(plus.h[:n], minus.h[:n])), mp.mpc(0)) / two_h

        # (ln kappa_n kappa_{n-1})' = -(1/2) (ln h_n + ln h_{n-1})'
        dlog_kk = -(mp.log(plus.h[n] / minus.h[n])
                    + mp.log(plus.h[n - 1] / minus.h[n - 1])) / (2 * two_h)
        dB = ((plus.h[n] / plus.h[n - 1]) - (minus.h[n] / minus.h[n - 1])) / two_h
        dgamma = (plus.gamma_sub[n] - minus.gamma_sub[n]) / two_h
        dbeta_n = (plus.beta_sub[n] - minus.beta_sub[n]) / two_h

        y = y_entries(center, n, mu0, ctx)
        y_plus = y_entries(plus, n, mu0, ctx)
        y_minus = y_entries(minus, n, mu0, ctx)
        dy11 = (y_plus.y11 - y_minus.y11) / two_h
        dy21 = (y_plus.y21 - y_minus.y21) / two_h

        rhs = (-n * dlog_kk - dB + 2 * (dgamma - center.beta_sub[n] * dbeta_n)
               + mp.exp(-mu0 * mu0) * mp.sin(mp.pi * beta) / mp.pi
               * (y.y11 * dy21 - dy11 * y.y21 - dlog_kk * y.y11 * y.y21))
        return abs(lhs - rhs)


def d2_identity_residual(w: JumpWeight, n: int, fd_step, ctx: PrecisionContext):
    """Residual of the bilinear-form identity for d/dbeta ln D_n.

    Right side: -n (ln k_{n-1})' + (k_{n-1}/k_n) (J1 - J2) with
    J1 = <d_beta p_n, d_x p_{n-1}>_w and J2 = <d_x p_n, d_beta p_{n-1}>_w on
    orthonormal polynomials.  Expanded over monic data it involves only
    kappa^2 and log-derivatives of h, so no root branch enters; x-derivatives
    are exact coefficient shifts and beta-derivatives centered differences.
    """
    if n < 2:
        raise DomainError("identity stated for n > 1")
    h = mp.mpf(fd_step)
    table = moment_table(w, 2 * n, ctx)
    center = op_data(table, n, ctx, check_gram=False)
    plus, minus = _stencil_data(w, n, h, ctx)
    with ctx.workprec():
        two_h = 2 * h
        lhs = sum((mp.log(p / q) for p, q in
                   zip(plus.h[:n], minus.h[:n])), mp.mpc(0)) / two_h

        dlog_k_nm1 = -mp.log(plus.h[n - 1] / minus.h[n - 1]) / (2 * two_h)
        dlog_k_n = -mp.log(plus.h[n] / minus.h[n]) / (2 * two_h)

        cn = list(center.coeffs[n])
        cnm1 = list(center.coeffs[n - 1])
        dcn = [(p - q) / two_h for p, q in zip(plus.coeffs[n], minus.coeffs[n])]
        dcnm1 = [(p - q) / two_h for p, q in zip(plus.coeffs[n - 1], minus.coeffs[n - 1])]

        j1 = (dlog_k_n * _bilinear(table, cn, _deriv_coeffs(cnm1), ctx)
              + _bilinear(table, dcn, _deriv_coeffs(cnm1), ctx))
        j2 = (dlog_k_nm1 * _bilinear(table, _deriv_coeffs(cn), cnm1, ctx)
              + _bilinear(table, _deriv_coeffs(cn), dcnm1, ctx))
        rhs = -n * dlog_k_nm1 + (j1 - j2) / center.h[n - 1]
        return abs(lhs - rhs)
