"""Confluent hypergeometric functions on the universal covering, and the
2x2 model matrix built from them.

``phi(a, c; z)`` is the regular solution of ``z w'' + (c - z) w' - a w = 0``
(entire, invariant under z -> e^{2*pi*i} z).  ``psi(a, c; z)`` is the
recessive solution fixed by ``psi ~ z^{-a}`` as ``z -> infinity`` in
``|arg z| < 3*pi/2``; it lives on the universal covering.  Three evaluation
routes are implemented:

* ``psi_log_case`` - the Frobenius series of the logarithmic case c = 1,

      psi(a,1;z) = -(1/Gamma(a)) sum_k ((a)_k/(k!)^2) z^k
                       [log z + digamma(a+k) - 2 digamma(1+k)],

  the primary evaluator: it needs no contour bookkeeping on arbitrary
  sheets, the covering enters only through log z.
* ``psi_regular_pair`` - for non-integer c, the connection to two regular
  series, valid on the whole covering through z^{1-c}.
* ``psi_integral`` - adaptive quadrature of the Laplace-type integral along
  a rotated ray (loop variant around the ray for Re a <= 0); the
  independent oracle, valid for |arg z| < 3*pi/2.

On top of these sit the model matrix ``Psi(z)`` (upper/lower half-plane
forms), its sectorwise completion ``Psi_beta``, the six-ray jump residuals,
the large-z expansion, and a registry of eleven monodromy / connection
relations checked numerically by :func:`monodromy_residual`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from mpmath import mp

from .errors import (DivergentTail, DomainError, OnCutError, OutOfSector,
                     PoleError, QuadratureFailure, SectorMismatch,
                     SeriesDivergence)
from .precision import (CoveringPoint, PrecisionContext, cover_log,
                        cover_rotate, cover_shift, cover_value)
from .special import gamma_ratio_f


@dataclass(frozen=True)
class HypParams:
    """Parameter pair (a, c) of the confluent hypergeometric equation."""

    a: complex
    c: complex


@dataclass(frozen=True)
class PsiMatrix:
    """2x2 complex matrix value; entries = ((m11, m12), (m21, m22))."""

    entries: tuple

    def det(self):
        (m11, m12), (m21, m22) = self.entries
        return m11 * m22 - m12 * m21


class Sector(enum.Enum):
    """Sectors between the six rays, counterclockwise from arg = pi/2."""

    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6


class Contour(enum.Enum):
    """The six rays carrying the model-matrix jumps.

    Values are the ray angles in units of pi/4.  UP and DOWN are the images
    of the two halves of the real axis under the local conformal map (which
    turns the real axis into the imaginary axis); the diagonals are the
    images of the lens lips.
    """

    UPPER_RIGHT = 1   # arg = pi/4
    UP = 2            # arg = pi/2
    UPPER_LEFT = 3    # arg = 3*pi/4
    LOWER_LEFT = 5    # arg = 5*pi/4
    DOWN = 6          # arg = 3*pi/2
    LOWER_RIGHT = 7   # arg = 7*pi/4


# rays oriented away from the origin; the remaining three point inward,
# matching the left-to-right flow of the underlying contours
_OUTWARD = {Contour.UP, Contour.UPPER_LEFT, Contour.UPPER_RIGHT}

# closed angular ranges of the sectors, in units of pi/4 (V wraps around 0)
_SECTOR_RANGES = {
    Sector.I: (2, 3),
    Sector.II: (3, 5),
    Sector.III: (5, 6),
    Sector.IV: (6, 7),
    Sector.V: (7, 9),
    Sector.VI: (1, 2),
}


def _mat(m11, m12, m21, m22) -> PsiMatrix:
    return PsiMatrix(((m11, m12), (m21, m22)))


def _mat_mul(x: PsiMatrix, y: PsiMatrix) -> PsiMatrix:
    (a, b), (c, d) = x.entries
    (e, f), (g, h) = y.entries
    return _mat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_sub(x: PsiMatrix, y: PsiMatrix) -> PsiMatrix:
    (a, b), (c, d) = x.entries
    (e, f), (g, h) = y.entries
    return _mat(a - e, b - f, c - g, d - h)


def _mat_norm(x: PsiMatrix):
    return max(abs(v) for row in x.entries for v in row)


def _mat_inv(x: PsiMatrix) -> PsiMatrix:
    (a, b), (c, d) = x.entries
    det = a * d - b * c
    return _mat(d / det, -b / det, -c / det, a / det)


def _exact_nonpositive_int(z):
    zc = mp.mpc(z)
    n = int(mp.nint(mp.re(zc)))
    return (zc == n and n <= 0), n


def phi(p: HypParams, z, ctx: PrecisionContext):
    """Regular solution phi(a, c; z) = sum (a)_k / (c)_k * z^k / k!.

    Entire in z (only the projected value matters), entire in a, defined for
    c away from nonpositive integers.  Working precision is raised by about
    |z| * log2(e) bits to absorb the cancellation of the alternating tail.
    """
    bad_c, _ = _exact_nonpositive_int(p.c)
    if bad_c:
        raise DomainError(f"phi undefined at c = {p.c}")
    zv = mp.mpc(z)
    extra = int(1.4427 * abs(zv)) + 48
    with ctx.workprec(extra):
        a = mp.mpc(p.a)
        c = mp.mpc(p.c)
        zv = mp.mpc(z)
        total = mp.mpc(1)
        term = mp.mpc(1)
        cutoff = mp.mpf(2) ** (-(ctx.bits + 16))
        k = 0
        while True:
            term *= (a + k) / ((c + k) * (k + 1)) * zv
            total += term
            k += 1
            if k > abs(zv) and abs(term) <= cutoff * (1 + abs(total)):
                break
        return total


def _series_radius(bits: int) -> float:
    # the Frobenius series is entire; the radius only caps the term count
    # and the O(sqrt|z|) cancellation guard, and grows with precision
    return max(30.0, 0.7 * bits * 0.6931471805599453)


def psi_log_case(a, zeta: CoveringPoint, ctx: PrecisionContext):
    """psi(a, 1; zeta) on the covering by the logarithmic-case series.

    The k = 0 term is -(1/Gamma(a)) [log zeta + digamma(a) + 2*EulerGamma],
    which is the known behavior at the origin.  Exact nonpositive-integer a
    reduces to the terminating polynomial (-1)^m m! sum_k (-m)_k zeta^k/(k!)^2.
    """
    if zeta.radius > _series_radius(ctx.bits):
        raise SeriesDivergence(
            f"|zeta| = {float(zeta.radius):.3g} beyond series radius at {ctx.bits} bits")
    is_poly, m = _exact_nonpositive_int(a)
    # cancellation across the Bessel-like hump is O(2*sqrt|z|) digits
    extra = int(2.9 * float(mp.sqrt(zeta.radius))) + 64
    with ctx.workprec(extra):
        zv = cover_value(zeta, ctx)
        cutoff = mp.mpf(2) ** (-(ctx.bits + 16))
        if is_poly:
            mm = -m
            total = mp.mpc(1)
            term = mp.mpc(1)
            for k in range(mm):
                term *= (mp.mpc(m) + k) / ((k + 1) ** 2) * zv
                total += term
            sign = 1 if mm % 2 == 0 else -1
            return sign * mp.factorial(mm) * total
        av = mp.mpc(a)
        logz = cover_log(zeta, ctx)
        dig_a = mp.digamma(av)
        dig_k = -mp.euler
        coeff = mp.mpc(1)          # (a)_k z^k / (k!)^2
        total = coeff * (logz + dig_a - 2 * dig_k)
        k = 0
        hump = 2 * mp.sqrt(zeta.radius)
        while True:
            coeff *= (av + k) / mp.mpf((k + 1) ** 2) * zv
            dig_a += 1 / (av + k)
            dig_k += mp.mpf(1) / (k + 1)
            k += 1
            term = coeff * (logz + dig_a - 2 * dig_k)
            total += term
            if k > hump and abs(coeff) * (abs(logz) + abs(dig_a) + 2 * abs(dig_k) + 1) \
                    <= cutoff * (1 + abs(total)):
                break
        return -mp.rgamma(av) * total


def psi_regular_pair(p: HypParams, zeta: CoveringPoint, ctx: PrecisionContext):
    """psi(a, c; zeta) for non-integer c via the pair of regular solutions:

        Gamma(1-c)/Gamma(1+a-c) phi(a,c;z)
        + Gamma(c-1)/Gamma(a) z^{1-c} phi(a-c+1, 2-c; z),

    with z^{1-c} taken through the covering logarithm.  Valid on every sheet.
    """
    with ctx.workprec(64):
        a = mp.mpc(p.a)
        c = mp.mpc(p.c)
        n_c = int(mp.nint(mp.re(c)))
        if mp.im(c) == 0 and abs(c - n_c) < mp.mpf(2) ** (-(ctx.bits // 2)):
            raise PoleError("psi_regular_pair needs c away from the integers")
        zv = cover_value(zeta, ctx)
        term1 = mp.gamma(1 - c) * mp.rgamma(1 + a - c) * phi(p, zv, ctx)
        term2 = (mp.gamma(c - 1) * mp.rgamma(a)
                 * mp.exp((1 - c) * cover_log(zeta, ctx))
                 * phi(HypParams(a - c + 1, 2 - c), zv, ctx))
        return term1 + term2


def psi_value(p: HypParams, zeta: CoveringPoint, ctx: PrecisionContext):
    """psi(a, c; zeta) on the covering: log-case series at c = 1, regular
    pair at non-integer c.  Integer c != 1 is outside scope."""
    with ctx.workprec():
        c = mp.mpc(p.c)
        n_c = int(mp.nint(mp.re(c)))
        near_int = mp.im(c) == 0 and abs(c - n_c) < mp.mpf(2) ** (-(ctx.bits // 2))
    if near_int and n_c == 1:
        return psi_log_case(p.a, zeta, ctx)
    if near_int:
        raise PoleError(f"logarithmic case c = {n_c} not supported (only c = 1)")
    return psi_regular_pair(p, zeta, ctx)


def psi_integral(p: HypParams, zeta: CoveringPoint, ctx: PrecisionContext):
    """psi(a, c; zeta) by adaptive quadrature of the ray integral

        (1/Gamma(a)) int_0^{inf e^{-i alpha}} t^{a-1} (1+t)^{c-a-1} e^{-z t} dt,

    with the ray angle alpha chosen from arg z, or of the loop around the
    ray (with prefactor i/(2 pi) e^{-i pi a} Gamma(1-a)) when Re a <= 0.
    Serves as the independent oracle for the series evaluators on
    |arg z| < 3*pi/2.
    """
    theta = float(zeta.argument)
    margin = 0.35
    alpha = max(-3.141592653589793 + margin, min(3.141592653589793 - margin, theta))
    if abs(theta - alpha) >= 1.5707963267948966 - 0.1:
        raise QuadratureFailure(
            f"arg zeta = {theta:.3f} outside the oracle's reachable range")
    with ctx.workprec(96):
        a = mp.mpc(p.a)
        c = mp.mpc(p.c)
        al = mp.mpf(alpha)
        ray_dir = mp.exp(-1j * al)
        zval = cover_value(zeta, ctx)
        w = zval * ray_dir  # Re w > 0 by the choice of alpha

        def ray_integrand(r):
            if r == 0:
                return mp.mpc(0)
            return (mp.exp((a - 1) * mp.log(r))
                    * mp.exp((c - a - 1) * mp.log(1 + r * ray_dir))
                    * mp.exp(-w * r))

        errs = mp.mpf(0)
        if mp.re(a) > 0.1:
            val, err = mp.quad(ray_integrand, [0, 1, mp.inf], error=True)
            errs += err
            result = mp.rgamma(a) * mp.exp(-1j * a * al) * val
        else:
            # Loop around the ray: in from infinity on the branch
            # arg t = 2*pi - alpha, circle |t| = eps traversed down to
            # arg t = -alpha, back out along the ray.  The two ray pieces
            # combine into (1 - e^{2*pi*i*a}) times the base-branch integral.
            eps = mp.mpf(1) / 2
            two_pi = 2 * mp.pi
            ray_val, err1 = mp.quad(ray_integrand, [eps, 1, mp.inf], error=True)
            ray_part = mp.exp(-1j * a * al) * (1 - mp.exp(2j * mp.pi * a)) * ray_val

            def circle(thet):
                t = eps * mp.exp(1j * thet)
                t_pow = mp.exp((a - 1) * (mp.log(eps) + 1j * thet))
                return (t_pow * mp.exp((c - a - 1) * mp.log(1 + t))
                        * mp.exp(-zval * t) * 1j * t)

            circ_asc, err2 = mp.quad(circle, [-al, mp.pi, two_pi - al], error=True)
            errs = err1 + err2
            loop = ray_part - circ_asc  # circle runs with decreasing argument
            result = (1j / (2 * mp.pi)) * mp.exp(-1j * mp.pi * a) * mp.gamma(1 - a) * loop

        tol = mp.mpf(2) ** (-(ctx.bits // 2)) * (1 + abs(result))
        if errs > tol:
            raise QuadratureFailure(
                f"quadrature error estimate {mp.nstr(errs, 5)} above tolerance")
        return result


def psi_asymptotic(p: HypParams, zeta: CoveringPoint, terms: int, ctx: PrecisionContext):
    """Truncated recessive expansion z^{-a} sum_k (-1)^k (a)_k (1+a-c)_k / (k! z^k).

    Valid for -3*pi/2 < arg z < 3*pi/2 and |z| large enough that the
    truncated tail is still shrinking; otherwise DivergentTail.
    """
    theta = float(zeta.argument)
    if not -4.71238898038469 < theta < 4.71238898038469:
        raise OutOfSector("recessive expansion valid only for |arg z| < 3*pi/2")
    if terms < 1:
        raise DomainError("terms >= 1")
    with ctx.workprec(64):
        a = mp.mpc(p.a)
        c = mp.mpc(p.c)
        zv = cover_value(zeta, ctx)
        total = mp.mpc(1)
        term = mp.mpc(1)
        prev = abs(term)
        for k in range(terms - 1):
            term *= -(a + k) * (1 + a - c + k) / ((k + 1) * zv)
            if abs(term) > prev:
                raise DivergentTail(
                    f"term {k + 1} grows at |z| = {float(zeta.radius):.3g}")
            prev = abs(term)
            total += term
        return mp.exp(-a * cover_log(zeta, ctx)) * total


def _beta_gammas(beta, ctx: PrecisionContext):
    """Prefactors Gamma(1-b)/Gamma(b) and Gamma(1+b)/Gamma(-b), zero at b = 0."""
    with ctx.workprec():
        b = mp.mpc(beta)
        return mp.gamma(1 - b) * mp.rgamma(b), mp.gamma(1 + b) * mp.rgamma(-b)


def psi_matrix(beta, zeta: CoveringPoint, ctx: PrecisionContext) -> PsiMatrix:
    """The piecewise-analytic model matrix Psi(zeta) on the punctured plane.

    Only the projected value of ``zeta`` matters (the matrix lives on the
    punctured plane; the covering enters through the normalized arguments of
    the psi-entries).  For Im z > 0 the entries use arguments in (0, pi):

        [  psi(b,z) e^{2 pi i b} e^{-z/2}    -psi(1-b, e^{-i pi}z) e^{i pi b} e^{z/2} G(1-b)/G(b) ]
        [ -psi(1+b,z) e^{i pi b} e^{-z/2} G(1+b)/G(-b)     psi(-b, e^{-i pi}z) e^{z/2}            ]

    and for Im z < 0 the continuation with arguments in (pi, 2*pi), obtained
    by the deck transformation of the first column:

        11 -> psi(b, e^{-2 pi i}z) e^{-z/2},
        21 -> -psi(1+b, e^{-2 pi i}z) e^{-i pi b} e^{-z/2} G(1+b)/G(-b),

    with the 12 and 22 entries unchanged in form.  Real z raises OnCutError.
    """
    with ctx.workprec():
        v = cover_value(zeta, ctx)
        if mp.im(v) == 0:
            raise OnCutError("Psi is discontinuous across the real axis")
        b = mp.mpc(beta)
        r = zeta.radius
        theta_p = mp.arg(v)  # principal
        g1, g2 = _beta_gammas(b, ctx)
        e_m = mp.exp(-v / 2)
        e_p = mp.exp(v / 2)
        if mp.im(v) > 0:
            base = CoveringPoint(r, theta_p)              # arg in (0, pi)
            down = CoveringPoint(r, theta_p - mp.pi)      # arg in (-pi, 0)
            m11 = psi_log_case(b, base, ctx) * mp.exp(2j * mp.pi * b) * e_m
            m21 = -psi_log_case(1 + b, base, ctx) * mp.exp(1j * mp.pi * b) * e_m * g2
        else:
            # continuation to arg in (pi, 2*pi): the first column is pulled
            # back by a full turn, so its psi-arguments sit in (-pi, 0)
            base = CoveringPoint(r, theta_p)              # arg in (-pi, 0)
            down = CoveringPoint(r, theta_p + mp.pi)      # arg in (0, pi)
            m11 = psi_log_case(b, base, ctx) * e_m
            m21 = -psi_log_case(1 + b, base, ctx) * mp.exp(-1j * mp.pi * b) * e_m * g2
        m12 = -psi_log_case(1 - b, down, ctx) * mp.exp(1j * mp.pi * b) * e_p * g1
        m22 = psi_log_case(-b, down, ctx) * e_p
        return _mat(m11, m12, m21, m22)


def sectors_of(zeta: CoveringPoint, ctx: PrecisionContext) -> tuple:
    """The closed sectors of the six-ray figure containing value(zeta).

    Points on a boundary ray (within 2^-(bits/2 + 20) of it in angle) belong
    to both adjacent sectors.
    """
    with ctx.workprec(64):
        u = mp.fmod(mp.mpf(zeta.argument) / (mp.pi / 4), 8)
        if u < 0:
            u += 8
        tol = mp.mpf(2) ** (-(ctx.bits // 2 + 20))
        out = []
        for sector, (lo, hi) in _SECTOR_RANGES.items():
            if lo - tol <= u <= hi + tol or lo - tol <= u + 8 <= hi + tol:
                out.append(sector)
        return tuple(out)


def _sector_multiplier(sector: Sector, beta, eps_sign: int, ctx: PrecisionContext) -> PsiMatrix:
    with ctx.workprec():
        b = mp.mpc(beta)
        one = mp.mpc(1)
        zero = mp.mpc(0)
        e = mp.exp(1j * mp.pi * b * eps_sign)
        e_inv = mp.exp(-1j * mp.pi * b * eps_sign)
        e_plus = mp.exp(1j * mp.pi * b)
        e_minus = mp.exp(-1j * mp.pi * b)
        if sector in (Sector.I, Sector.III):
            return _mat(one, zero, zero, one)
        if sector is Sector.II:
            return _mat(one, zero, e, one)
        if sector is Sector.IV:
            return _mat(zero, -e_plus, e_minus, zero)
        if sector is Sector.V:
            return _mat(one, -e_inv, e, zero)
        return _mat(zero, -e_minus, e_plus, zero)  # VI


def psi_beta(beta, zeta: CoveringPoint, sector: Sector, ctx: PrecisionContext) -> PsiMatrix:
    """Sectorwise solution: Psi(zeta) times the sector's constant right factor.

    The sign in the Sector II and V factors is eps = sign Im z.  Membership
    of value(zeta) in the (closed) sector is checked.
    """
    if sector not in sectors_of(zeta, ctx):
        raise SectorMismatch(f"value not in sector {sector.name}")
    with ctx.workprec():
        v = cover_value(zeta, ctx)
        eps_sign = 1 if mp.im(v) > 0 else -1
        base = psi_matrix(beta, zeta, ctx)
        return _mat_mul(base, _sector_multiplier(sector, beta, eps_sign, ctx))


def jump_matrix(contour: Contour, beta, ctx: PrecisionContext) -> PsiMatrix:
    """Constant jump matrix carried by each of the six rays."""
    with ctx.workprec():
        b = mp.mpc(beta)
        one = mp.mpc(1)
        zero = mp.mpc(0)
        e_plus = mp.exp(1j * mp.pi * b)
        e_minus = mp.exp(-1j * mp.pi * b)
        if contour is Contour.UP:
            return _mat(zero, e_minus, -e_plus, zero)
        if contour is Contour.DOWN:
            return _mat(zero, e_plus, -e_minus, zero)
        if contour in (Contour.UPPER_LEFT, Contour.UPPER_RIGHT):
            return _mat(one, zero, e_plus, one)
        return _mat(one, zero, e_minus, one)  # LOWER_LEFT, LOWER_RIGHT


# (plus-side, minus-side) sectors of each ray; plus is left of orientation
_CONTOUR_SIDES = {
    Contour.UP: (Sector.I, Sector.VI),
    Contour.UPPER_LEFT: (Sector.II, Sector.I),
    Contour.UPPER_RIGHT: (Sector.VI, Sector.V),
    Contour.LOWER_LEFT: (Sector.II, Sector.III),
    Contour.DOWN: (Sector.III, Sector.IV),
    Contour.LOWER_RIGHT: (Sector.IV, Sector.V),
}


def jump_residual(beta, contour: Contour, t, ctx: PrecisionContext):
    """Normalized jump defect || Psi_+ - Psi_- J || / || Psi_- || at radius t.

    One-sided limits are taken at angular offsets +-delta about the ray,
    with delta = 2^-(bits/2 + 16), and confirmed by halving delta
    (the larger of the two residuals is reported).
    """
    if t <= 0:
        raise DomainError("arclength t must be positive")
    with ctx.workprec():
        base_angle = mp.pi / 4 * contour.value
        delta0 = mp.mpf(2) ** (-(ctx.bits // 2 + 16))
        jmat = jump_matrix(contour, beta, ctx)
        outward = contour in _OUTWARD
        plus_sector, minus_sector = _CONTOUR_SIDES[contour]
        worst = mp.mpf(0)
        for delta in (delta0, delta0 / 2):
            plus_angle = base_angle + delta if outward else base_angle - delta
            minus_angle = base_angle - delta if outward else base_angle + delta
            zp = CoveringPoint(mp.mpf(t), plus_angle)
            zm = CoveringPoint(mp.mpf(t), minus_angle)
            mat_p = psi_beta(beta, zp, plus_sector, ctx)
            mat_m = psi_beta(beta, zm, minus_sector, ctx)
            defect = _mat_sub(mat_p, _mat_mul(mat_m, jmat))
            worst = max(worst, _mat_norm(defect) / _mat_norm(mat_m))
        return worst


def _first_correction(beta, ctx: PrecisionContext) -> PsiMatrix:
    """The 1/z matrix coefficient of the large-z expansion (traceless)."""
    with ctx.workprec():
        b = mp.mpc(beta)
        f_p = gamma_ratio_f(b, ctx).value
        f_m = gamma_ratio_f(-b, ctx).value
        return _mat(-b * b, -f_p * mp.exp(1j * mp.pi * b),
                    f_m * mp.exp(-1j * mp.pi * b), b * b)


def _psi_beta_asymptotic_half(beta, zeta: CoveringPoint, left: bool,
                              ctx: PrecisionContext) -> PsiMatrix:
    with ctx.workprec():
        b = mp.mpc(beta)
        v = cover_value(zeta, ctx)
        logz = cover_log(zeta, ctx)
        z_mb = mp.exp(-b * logz)
        m1 = _first_correction(beta, ctx)
        (a11, a12), (a21, a22) = m1.entries
        pre = _mat(1 + a11 / v, a12 / v, a21 / v, 1 + a22 / v)
        power = _mat(z_mb, mp.mpc(0), mp.mpc(0), 1 / z_mb)
        if left:
            const = _mat(mp.exp(2j * mp.pi * b), mp.mpc(0),
                         mp.mpc(0), mp.exp(-1j * mp.pi * b))
            expo = _mat(mp.exp(-v / 2), mp.mpc(0), mp.mpc(0), mp.exp(v / 2))
        else:
            const = _mat(mp.mpc(0), -mp.exp(1j * mp.pi * b), mp.mpc(1), mp.mpc(0))
            expo = _mat(mp.exp(v / 2), mp.mpc(0), mp.mpc(0), mp.exp(-v / 2))
        return _mat_mul(_mat_mul(_mat_mul(pre, power), const), expo)


def psi_beta_asymptotic(beta, zeta: CoveringPoint, ctx: PrecisionContext) -> PsiMatrix:
    """Large-z model: [I + M1/z] z^{-b sigma3} C_half e^{-+ z sigma3 / 2}.

    The constant factor and the exponential sign differ between the left
    half-plane (covering argument in [pi/2, 3*pi/2], upper half-plane in the
    original variable) and the right one (argument in [-pi/2, pi/2]); z^{-b}
    uses the covering argument as given.  Points on the boundary rays belong
    to both forms; the left one is returned there.
    """
    theta = float(zeta.argument)
    tol = 1e-12
    if not (-1.5707963267948966 - tol <= theta <= 4.71238898038469 + tol):
        raise OutOfSector("argument must lie in [-pi/2, 3*pi/2]")
    with ctx.workprec():
        v = cover_value(zeta, ctx)
        left = mp.re(v) <= 0
    return _psi_beta_asymptotic_half(beta, zeta, left, ctx)


# ---------------------------------------------------------------------------
# Monodromy and connection relations
# ---------------------------------------------------------------------------

def _coeff_2pi(a, c, ctx):
    # 2*pi*i / (Gamma(a) Gamma(1+a-c)) -- entire in both parameters
    return 2j * mp.pi * mp.rgamma(a) * mp.rgamma(1 + a - c)


def _rel_psi_monodromy_up(p, zeta, ctx):
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = psi_value(p, cover_rotate(zeta, 1, ctx), ctx)
    rhs = (mp.exp(-2j * mp.pi * a) * psi_value(p, zeta, ctx)
           + mp.exp(-1j * mp.pi * a) * _coeff_2pi(a, c, ctx)
           * psi_value(HypParams(c - a, c), cover_shift(zeta, 1, ctx), ctx) * mp.exp(v))
    return lhs, rhs


def _rel_psi_monodromy_down(p, zeta, ctx):
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = psi_value(p, cover_rotate(zeta, 1, ctx), ctx)
    rhs = ((1 + mp.exp(-2j * mp.pi * c) - mp.exp(-2j * mp.pi * c + 2j * mp.pi * a))
           * psi_value(p, zeta, ctx)
           + mp.exp(1j * mp.pi * a - 2j * mp.pi * c) * _coeff_2pi(a, c, ctx)
           * psi_value(HypParams(c - a, c), cover_shift(zeta, -1, ctx), ctx) * mp.exp(v))
    return lhs, rhs


def _rel_psi_phi_forward(p, zeta, ctx):
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = psi_value(p, cover_rotate(zeta, 1, ctx), ctx)
    rhs = (mp.exp(-2j * mp.pi * c) * psi_value(p, zeta, ctx)
           + mp.exp(-1j * mp.pi * c) * 2j * mp.pi * mp.rgamma(c) * mp.rgamma(1 + a - c)
           * phi(p, v, ctx))
    return lhs, rhs


def _rel_psi_phi_backward(p, zeta, ctx):
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = psi_value(p, cover_rotate(zeta, -1, ctx), ctx)
    rhs = (mp.exp(2j * mp.pi * c) * psi_value(p, zeta, ctx)
           - mp.exp(1j * mp.pi * c) * 2j * mp.pi * mp.rgamma(c) * mp.rgamma(1 + a - c)
           * phi(p, v, ctx))
    return lhs, rhs


def _phi_connection(p, zeta, ctx, eps: int):
    # phi = G(c)/G(c-a) e^{i pi a eps} psi(a,c;z)
    #       + G(c)/G(a) e^{-i pi (c-a) eps} psi(c-a,c;e^{-i pi eps}z) e^z
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = phi(p, v, ctx)
    rhs = (mp.gamma(c) * mp.rgamma(c - a) * mp.exp(1j * mp.pi * a * eps)
           * psi_value(p, zeta, ctx)
           + mp.gamma(c) * mp.rgamma(a) * mp.exp(-1j * mp.pi * (c - a) * eps)
           * psi_value(HypParams(c - a, c), cover_shift(zeta, -eps, ctx), ctx) * mp.exp(v))
    return lhs, rhs


def _rel_phi_connection_shifted(p, zeta, ctx):
    # the companion with the first argument pulled back by a full turn:
    # phi = G(c)/G(c-a) e^{-i pi a} psi(a,c;e^{-2 pi i}z)
    #       + G(c)/G(a) e^{i pi (c-a)} psi(c-a,c;e^{-i pi}z) e^z
    a, c = mp.mpc(p.a), mp.mpc(p.c)
    v = cover_value(zeta, ctx)
    lhs = phi(p, v, ctx)
    rhs = (mp.gamma(c) * mp.rgamma(c - a) * mp.exp(-1j * mp.pi * a)
           * psi_value(p, cover_rotate(zeta, -1, ctx), ctx)
           + mp.gamma(c) * mp.rgamma(a) * mp.exp(1j * mp.pi * (c - a))
           * psi_value(HypParams(c - a, c), cover_shift(zeta, -1, ctx), ctx) * mp.exp(v))
    return lhs, rhs


def _rel_model_monodromy(p, zeta, ctx):
    # c = 1 case on the log-series route
    a = mp.mpc(p.a)
    v = cover_value(zeta, ctx)
    lhs = psi_log_case(a, cover_rotate(zeta, 1, ctx), ctx)
    rhs = (mp.exp(-2j * mp.pi * a) * psi_log_case(a, zeta, ctx)
           + mp.exp(-1j * mp.pi * a) * 2j * mp.pi * mp.rgamma(a) ** 2
           * psi_log_case(1 - a, cover_shift(zeta, 1, ctx), ctx) * mp.exp(v))
    return lhs, rhs


def _rel_model_monodromy_reflected(p, zeta, ctx):
    a = mp.mpc(p.a)
    v = cover_value(zeta, ctx)
    lhs = psi_log_case(1 - a, cover_shift(zeta, 1, ctx), ctx)
    rhs = (mp.exp(2j * mp.pi * a) * psi_log_case(1 - a, cover_shift(zeta, -1, ctx), ctx)
           - mp.exp(1j * mp.pi * a) * 2j * mp.pi * mp.rgamma(1 - a) ** 2
           * psi_log_case(a, zeta, ctx) * mp.exp(-v))
    return lhs, rhs


RELATIONS = {
    "psi-monodromy-up": _rel_psi_monodromy_up,
    "psi-monodromy-down": _rel_psi_monodromy_down,
    "psi-phi-forward": _rel_psi_phi_forward,
    "psi-phi-backward": _rel_psi_phi_backward,
    "phi-connection-shifted": _rel_phi_connection_shifted,
    "phi-connection-upper": lambda p, z, ctx: _phi_connection(p, z, ctx, -1),
    "phi-connection-lower": lambda p, z, ctx: _phi_connection(p, z, ctx, 1),
    "phi-connection-eps-plus": lambda p, z, ctx: _phi_connection(p, z, ctx, 1),
    "phi-connection-eps-minus": lambda p, z, ctx: _phi_connection(p, z, ctx, -1),
    "model-monodromy": _rel_model_monodromy,
    "model-monodromy-reflected": _rel_model_monodromy_reflected,
}

RELATION_IDS = tuple(RELATIONS)


def monodromy_residual(relation: str, p: HypParams, zeta: CoveringPoint,
                       ctx: PrecisionContext):
    """Normalized defect |LHS - RHS| / (1 + |LHS| + |RHS|) of a relation.

    The two model-monodromy relations use c = 1 (the c field of ``p`` is
    ignored there); the others hold for general parameters away from the
    poles of their Gamma-coefficients.
    """
    if relation not in RELATIONS:
        raise DomainError(f"unknown relation id {relation!r}")
    with ctx.workprec():
        lhs, rhs = RELATIONS[relation](p, zeta, ctx)
        return abs(lhs - rhs) / (1 + abs(lhs) + abs(rhs))
