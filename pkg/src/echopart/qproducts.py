"""Builders turning closed-form q-product expressions into truncated series.

Two shapes cover everything the counting families need:

* :class:`PochhammerSpec` -- a product, over j >= 0, of binomial factors
  (1 - sign*q^(offset + j*step)), one factor list entry per parameter of a
  multi-parameter symbol.  With sign=-1 a factor contributes (1 + q^...).
  Offsets and steps are >= 1, so only finitely many binomials reach
  exponents <= N and the truncated product is exact.
* :class:`GeometricSpec` -- the comb q^k / (1 - q^d), i.e. coefficient 1 at
  every exponent k, k+d, k+2d, ...

Infinite products with |q| < 1 make sense here only as formal series; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .series import TruncatedSeries


class PochhammerFactor(NamedTuple):
    sign: int    # +1 gives (1 - q^e) factors, -1 gives (1 + q^e)
    offset: int  # first exponent, >= 1
    step: int    # exponent increment, >= 1


@dataclass(frozen=True)
class PochhammerSpec:
    """Factor list for a (possibly multi-parameter) infinite q-product."""

    factors: tuple[PochhammerFactor, ...]

    def __post_init__(self) -> None:
        normalized = tuple(PochhammerFactor(*f) for f in self.factors)
        for f in normalized:
            if f.sign not in (1, -1):
                raise ValueError(f"factor sign must be +1 or -1, got {f.sign}")
            if f.offset < 1:
                raise ValueError(f"factor offset must be >= 1, got {f.offset}")
            if f.step < 1:
                raise ValueError(f"factor step must be >= 1, got {f.step}")
        object.__setattr__(self, "factors", normalized)


@dataclass(frozen=True)
class GeometricSpec:
    """q^numerator / (1 - q^period)."""

    numerator: int
    period: int

    def __post_init__(self) -> None:
        if self.numerator < 0:
            raise ValueError(f"numerator exponent must be >= 0, got {self.numerator}")
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    """Expand the truncated product of all factors reaching exponents <= order.

    A factor whose lowest exponent already exceeds the order contributes
    nothing and is skipped; an empty factor list gives the constant 1.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for sign, offset, step in spec.factors:
        e = offset
        while e <= order:
            # multiply in place by (1 - sign*q^e); descending k keeps the
            # untouched low coefficients available as the pre-update values
            for k in range(order, e - 1, -1):
                c = coeffs[k - e]
                if c != 0:
                    coeffs[k] -= sign * c
            e += step
    return TruncatedSeries(tuple(coeffs))


def geometric(spec: GeometricSpec, order: int) -> TruncatedSeries:
    """Expand q^k/(1-q^d): ones at exponents k, k+d, k+2d, ... up to the order."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    for e in range(spec.numerator, order + 1, spec.period):
        coeffs[e] = 1
    return TruncatedSeries(tuple(coeffs))
