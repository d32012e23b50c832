"""Precision contexts and points on the universal covering of the punctured plane.

Every numerical operation in this package takes an explicit
:class:`PrecisionContext`.  The context fixes the working mantissa size
(``bits``) and the multiplier used for self-validation reruns
(``verify_factor``): :func:`validated` executes an operation twice, at
``bits`` and at ``bits * verify_factor``, and raises
:class:`~hankeljump.errors.PrecisionValidationError` unless the two runs
agree to ``2**(-bits/2)`` relative error.  This is the global correctness
policy; the Hankel matrices handled here have condition numbers growing
superexponentially in the dimension, so no a-priori error bound is
attempted.

A :class:`CoveringPoint` represents a point of the universal covering of
``C \\ {0}`` as a positive radius together with an unbounded real argument,
so that ``value = radius * exp(i * argument)`` and
``log = ln(radius) + i * argument``.  Deck transformations add multiples of
``2*pi`` to the argument and leave the projected value unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, is_dataclass

from mpmath import mp

from .errors import PrecisionValidationError, ZeroPoint

# Extra mantissa bits used inside every operation so that returned values
# are good to ~2^-bits even after mild cancellation.
GUARD_BITS = 32


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in bits plus the self-validation multiplier."""

    bits: int = 256
    verify_factor: int = 2

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError("bits must be >= 64")
        if self.verify_factor < 2:
            raise ValueError("verify_factor must be >= 2")

    def workprec(self, extra: int = 0):
        """Context manager setting the global mpmath precision."""
        return mp.workprec(self.bits + GUARD_BITS + extra)

    def verification(self) -> "PrecisionContext":
        return PrecisionContext(self.bits * self.verify_factor, self.verify_factor)

    @property
    def agreement_tol(self):
        """Relative tolerance 2^(-bits/2) used by the validation policy."""
        with mp.workprec(64):
            return mp.mpf(2) ** (-self.bits // 2)


@dataclass(frozen=True)
class CoveringPoint:
    """Point of the universal covering: positive radius, unbounded argument."""

    radius: object
    argument: object

    def __post_init__(self):
        if self.radius <= 0:
            raise ZeroPoint("covering points require radius > 0")


def default_bits(n_max: int) -> int:
    """Default mantissa size for an orthogonal-polynomial run of degree n_max.

    Moment-space Gram-Schmidt for Gaussian-type weights loses O(n) digits;
    12 bits per degree survives degree-64 runs with margin, and the doubling
    rerun catches any shortfall.
    """
    return max(256, 12 * n_max)


def cover_point(radius, argument, ctx: PrecisionContext) -> CoveringPoint:
    """Build a covering point from raw reals under the context precision."""
    with ctx.workprec():
        r = mp.mpf(radius)
        a = mp.mpf(argument)
    if r <= 0:
        raise ZeroPoint("radius must be positive")
    return CoveringPoint(r, a)


def cover_from_complex(z, turns: int, ctx: PrecisionContext) -> CoveringPoint:
    """Lift a nonzero complex number to the covering sheet ``turns``.

    The argument is the principal one shifted by ``2*pi*turns``.
    """
    with ctx.workprec():
        zc = mp.mpc(z)
        if zc == 0:
            raise ZeroPoint("cannot lift z = 0 to the covering")
        r = abs(zc)
        a = mp.arg(zc) + 2 * mp.pi * turns
    return CoveringPoint(r, a)


def cover_value(p: CoveringPoint, ctx: PrecisionContext):
    """Project a covering point back to the punctured plane."""
    with ctx.workprec():
        return p.radius * mp.exp(mp.mpc(0, 1) * p.argument)


def cover_log(p: CoveringPoint, ctx: PrecisionContext):
    """Logarithm on the covering: ln(radius) + i*argument, exactly."""
    with ctx.workprec():
        return mp.mpc(mp.log(p.radius), p.argument)


def cover_rotate(p: CoveringPoint, k: int, ctx: PrecisionContext) -> CoveringPoint:
    """Deck transformation: argument increased by 2*pi*k, radius unchanged."""
    with ctx.workprec():
        return CoveringPoint(p.radius, p.argument + 2 * mp.pi * k)


def cover_shift(p: CoveringPoint, half_turns: int, ctx: PrecisionContext) -> CoveringPoint:
    """Multiply by e^{i*pi*half_turns} on the covering (argument + pi*k)."""
    with ctx.workprec():
        return CoveringPoint(p.radius, p.argument + mp.pi * half_turns)


def _leaves(obj):
    if isinstance(obj, (tuple, list)):
        for item in obj:
            yield from _leaves(item)
    elif isinstance(obj, dict):
        for item in obj.values():
            yield from _leaves(item)
    elif is_dataclass(obj) and not isinstance(obj, type):
        for f in fields(obj):
            yield from _leaves(getattr(obj, f.name))
    elif obj is None or isinstance(obj, (str, bool, int)):
        return
    else:
        yield obj


def disagreement(base, check, ctx: PrecisionContext):
    """Max relative difference |a - b| / (1 + |b|) over all numeric leaves."""
    with ctx.workprec():
        worst = mp.mpf(0)
        for a, b in zip(_leaves(base), _leaves(check)):
            d = abs(mp.mpc(a) - mp.mpc(b)) / (1 + abs(mp.mpc(b)))
            if d > worst:
                worst = d
        return worst


def validated(ctx: PrecisionContext, op, label: str = "operation"):
    """Run ``op(ctx)`` at base and verification precision and compare.

    Returns the base-precision result.  Raises PrecisionValidationError when
    the rerun at ``bits * verify_factor`` disagrees by more than
    ``2**(-bits/2)`` in relative terms.
    """
    base = op(ctx)
    check = op(ctx.verification())
    err = disagreement(base, check, ctx.verification())
    if err > ctx.agreement_tol:
        raise PrecisionValidationError(
            f"{label}: base ({ctx.bits} bits) and verification "
            f"({ctx.bits * ctx.verify_factor} bits) runs disagree by {mp.nstr(err, 6)}"
        )
    return base
