"""Exact truncated formal power series in one variable q over the integers.

Everything is arithmetic modulo q^(N+1), where N is the truncation order.
Coefficients are Python ints, so results are exact at any magnitude and can
never wrap.  Mixing series of different orders is an error, never an
implicit re-truncation; use :meth:`TruncatedSeries.truncate` to drop the
order on purpose.

Values are immutable and all operations are pure, so series can be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class TruncatedSeries:
    """A dense series c0 + c1*q + ... + cN*q^N.

    ``coeffs[k]`` is the coefficient of q^k; the order N is
    ``len(coeffs) - 1``.  Construct via :func:`monomial`, :func:`one`,
    :func:`zero` or by passing an explicit coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """The coefficient of q^k; k must lie in [0, order]."""
        if not 0 <= k <= self.order:
            raise IndexError(f"exponent {k} out of range [0, {self.order}]")
        return self.coeffs[k]

    def truncate(self, new_order: int) -> TruncatedSeries:
        """Drop to a lower (or equal) order, discarding the tail."""
        if not 0 <= new_order <= self.order:
            raise ValueError(
                f"cannot truncate order-{self.order} series to order {new_order}"
            )
        return TruncatedSeries(self.coeffs[: new_order + 1])

    # -- ring operations ------------------------------------------------

    def _coerced(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return monomial(other, 0, self.order)
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return other
        raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")

    def __add__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        other = self._coerced(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return self + (-self._coerced(other))

    def __rsub__(self, other: int) -> TruncatedSeries:
        return self._coerced(other) - self

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        other = self._coerced(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse modulo q^(order+1).

        Over the integers this exists exactly when the constant term is a
        unit (+1 or -1).  Uses the standard recurrence
        r[0] = 1/a[0], r[k] = -(sum_{i=1..k} a[i]*r[k-i]) / a[0].
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"constant term must be +1 or -1 to invert over the integers, got {c0}"
            )
        n = self.order
        inv = [0] * (n + 1)
        inv[0] = c0  # 1/c0 equals c0 for a unit of Z
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if a != 0:
                    acc += a * inv[k - i]
            inv[k] = -acc * c0  # dividing by c0 is multiplying by it
        return TruncatedSeries(tuple(inv))

    # -- presentation ---------------------------------------------------

    def __str__(self) -> str:
        terms: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "q" if k == 1 else f"q^{k}"
                if not terms:
                    sign = "-" if c < 0 else ""
                    terms.append(f"{sign}{mag}{var}")
                else:
                    terms.append(f"{'-' if c < 0 else '+'} {mag}{var}")
        body = " ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def monomial(c: int, k: int, order: int) -> TruncatedSeries:
    """The series c*q^k at the given order; exponents beyond the order drop."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    coeffs = [0] * (order + 1)
    if k <= order:
        coeffs[k] = c
    return TruncatedSeries(tuple(coeffs))


def zero(order: int) -> TruncatedSeries:
    return monomial(0, 0, order)


def one(order: int) -> TruncatedSeries:
    return monomial(1, 0, order)
