"""Pole-free evaluation of the kernel-method closed forms as exact series.

Notation used throughout this module:

    sqrt_disc = sqrt((1-z)(1-2z)(1-3z-2z^2))
    root      = (1 - 3z + sqrt_disc) / 2

``root`` carries the admissible solution of the kernel equation with the
1/z^2 pole already cleared, so every object below is an ordinary power
series and every division is by a unit.  The load-bearing identity is

    (root + z^2)^2 = (1-z)(1-2z) * root

which follows from squaring ``2*(root + z^2) = (1-3z+2z^2) + sqrt_disc``.
Each model's series of paths returning to height 0 is

    (1-z)(1-2z) / (boundary * (root + z^2))

with boundary factor (1-z) for :data:`MODEL_A` and (1-2z) for
:data:`MODEL_B`; the odd-level series are identical in both models.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidModel
from .paths import MODEL_A, MODEL_B, StepModel
from .series import Poly, Series

_PLIN = Poly([1, -3, 2])  # (1-z)(1-2z)
_QUAD = Poly([1, -3, -2])  # 1 - 3z - 2z^2
_DISC = _PLIN * _QUAD  # 1 - 6z + 9z^2 - 4z^4
_Z2 = Poly([0, 0, 1])


@dataclass(frozen=True, slots=True)
class KernelContext:
    """Shared series data for closed-form evaluation at a fixed order."""

    order: int
    sqrt_disc: Series
    root: Series
    plin: Poly
    quad: Poly


def kernel_context(order: int) -> KernelContext:
    if order < 1:
        raise ValueError("order must be at least 1")
    sqrt_disc = Series.from_poly(_DISC, order).sqrt()
    root = (Series.from_poly(Poly([1, -3]), order) + sqrt_disc) * Fraction(1, 2)
    return KernelContext(order, sqrt_disc, root, _PLIN, _QUAD)


def _boundary(model: StepModel) -> Poly:
    if model == MODEL_A:
        return Poly([1, -1])
    if model == MODEL_B:
        return Poly([1, -2])
    raise InvalidModel(
        f"closed forms cover only the two named parity models, got {model}"
    )


def _root_plus_z2(ctx: KernelContext) -> Series:
    return ctx.root + Series.from_poly(_Z2, ctx.order)


def f0_series(model: StepModel, order: int) -> Series:
    """Series of weighted paths returning to height 0.

    Evaluates (1-z)(1-2z) / (boundary * (root + z^2)), which by the kernel
    identity equals (1-2z)/(root+z^2) for model A and (1-z)/(root+z^2) for
    model B.
    """
    boundary = _boundary(model)
    ctx = kernel_context(order)
    numer = Series.from_poly(ctx.plin, order)
    return numer / (Series.from_poly(boundary, order) * _root_plus_z2(ctx))


def even_level_series(model: StepModel, k: int, order: int) -> Series:
    """Series of paths ending at height 2k:
    z^(2k) * (root + z^2) / (boundary * root^(k+1))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    boundary = _boundary(model)
    ctx = kernel_context(order)
    numer = _root_plus_z2(ctx).shift_up(2 * k)
    return numer / (Series.from_poly(boundary, order) * ctx.root ** (k + 1))


def odd_level_series(k: int, order: int) -> Series:
    """Series of paths ending at height 2k+1: z^(2k+1) / root^(k+1).

    The odd-level series do not depend on the model; swapping the parity
    roles leaves them unchanged.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = kernel_context(order)
    return Series.one(order).shift_up(2 * k + 1) / ctx.root ** (k + 1)


def open_series(model: StepModel, order: int) -> Series:
    """Series of paths ending at any height.

    Sums the even- and odd-level families in closed form:

        sqrt_disc / (boundary * quad)  +  (sqrt_disc - quad) / (2z * quad)

    with quad = 1 - 3z - 2z^2.  The numerator of the second part has zero
    constant and z^1 coefficients, so the division by z is exact; the
    context is built one order higher to absorb the shift.
    """
    boundary = _boundary(model)
    ctx = kernel_context(order + 1)
    quad_wide = Series.from_poly(ctx.quad, order + 1)
    even_part = ctx.sqrt_disc / (Series.from_poly(boundary, order + 1) * quad_wide)
    odd_part = (ctx.sqrt_disc - quad_wide).shift_down(1) / (
        Series.from_poly(ctx.quad, order) * 2
    )
    return even_part.truncate(order) + odd_part
