"""The six counting families of partitions with a self-repeating largest part.

The objects counted here are partitions whose largest part appears exactly
once and whose remaining parts form a partition of that largest part, so
the total is always even (2*largest).  Six families restrict the remaining
parts: unrestricted, distinct, odd, odd+distinct, distinct with parts
= +-1 (mod 3), and parts = +-1 (mod 6).

Every family's counting sequence is computed two independent ways:

* :func:`direct_count` / :func:`direct_counts_upto` -- combinatorial route:
  count partitions of the largest part under the family's constraint,
  minus one when the single-part partition would qualify (it would repeat
  the largest part).
* :func:`genfun_series` -- closed-form route: expand the family's
  generating function, assembled only from q-products and series algebra.

:func:`verify` compares the two routes coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from . import partitions
from .partitions import DEFAULT_ENUMERATION_CAP, Constraint, Partition
from .qproducts import GeometricSpec, PochhammerSpec, geometric, pochhammer
from .series import TruncatedSeries


class Family(Enum):
    """Tags for the six families; values are the CLI/JSON tokens."""

    PLAIN = "plain"
    DISTINCT = "distinct"
    ODD = "odd"
    ODD_DISTINCT = "odd-distinct"
    MOD3 = "mod3"
    MOD6 = "mod6"

    @classmethod
    def from_token(cls, text: str) -> Family:
        token = text.strip().lower().replace("_", "-")
        for family in cls:
            if family.value == token:
                return family
        known = ", ".join(f.value for f in cls)
        raise ValueError(f"unknown family {text!r} (expected one of: {known})")


@dataclass(frozen=True)
class SeriesRecipe:
    """Closed form: [1/]product + sum of signed geometric combs + constant."""

    product: PochhammerSpec
    inverted: bool
    corrections: tuple[tuple[int, GeometricSpec], ...] = ()
    constant: int = 0

    def expand(self, order: int) -> TruncatedSeries:
        base = pochhammer(self.product, order)
        if self.inverted:
            base = base.invert()
        result = base
        for sign, spec in self.corrections:
            comb = geometric(spec, order)
            result = result + comb if sign > 0 else result - comb
        if self.constant != 0:
            result = result + self.constant
        return result


CONSTRAINTS: Mapping[Family, Constraint] = {
    Family.PLAIN: partitions.UNRESTRICTED,
    Family.DISTINCT: partitions.DISTINCT,
    Family.ODD: partitions.ODD,
    Family.ODD_DISTINCT: partitions.ODD_DISTINCT,
    Family.MOD3: partitions.MOD3_DISTINCT,
    Family.MOD6: partitions.MOD6,
}

RECIPES: Mapping[Family, SeriesRecipe] = {
    # 1/(q^2;q^2) - 1/(1-q^2)
    Family.PLAIN: SeriesRecipe(
        product=PochhammerSpec(((1, 2, 2),)),
        inverted=True,
        corrections=((-1, GeometricSpec(0, 2)),),
    ),
    # (-q^2;q^2) - 1/(1-q^2)
    Family.DISTINCT: SeriesRecipe(
        product=PochhammerSpec(((-1, 2, 2),)),
        inverted=False,
        corrections=((-1, GeometricSpec(0, 2)),),
    ),
    # 1/(q^2;q^4) - q^2/(1-q^4) - 1
    Family.ODD: SeriesRecipe(
        product=PochhammerSpec(((1, 2, 4),)),
        inverted=True,
        corrections=((-1, GeometricSpec(2, 4)),),
        constant=-1,
    ),
    # (-q^2;q^4) - q^2/(1-q^4) - 1
    Family.ODD_DISTINCT: SeriesRecipe(
        product=PochhammerSpec(((-1, 2, 4),)),
        inverted=False,
        corrections=((-1, GeometricSpec(2, 4)),),
        constant=-1,
    ),
    # (-q^2,-q^4;q^6) - 1 - q^2/(1-q^2) + q^6/(1-q^6); the -1 removes the
    # product's empty-partition term so the constant coefficient is 0
    Family.MOD3: SeriesRecipe(
        product=PochhammerSpec(((-1, 2, 6), (-1, 4, 6))),
        inverted=False,
        corrections=((-1, GeometricSpec(2, 2)), (1, GeometricSpec(6, 6))),
        constant=-1,
    ),
    # 1/(q^2,q^10;q^12) - 1 - q^2/(1-q^12) - q^10/(1-q^12); -1 as above
    Family.MOD6: SeriesRecipe(
        product=PochhammerSpec(((1, 2, 12), (1, 10, 12))),
        inverted=True,
        corrections=((-1, GeometricSpec(2, 12)), (-1, GeometricSpec(10, 12))),
        constant=-1,
    ),
}


def constraint_for(family: Family) -> Constraint:
    return CONSTRAINTS[family]


def singleton_allowed(family: Family, largest: int) -> bool:
    """Whether the one-part partition {largest} satisfies the family's constraint.

    Distinctness never disqualifies a single part, so this reduces to the
    residue test: always true for plain/distinct, odd largest for the odd
    families, largest not divisible by 3 for mod3, largest = +-1 (mod 6)
    for mod6.
    """
    return constraint_for(family).allows(largest)


def direct_count(family: Family, n: int) -> int:
    """Count the family's partitions of n by the combinatorial definition.

    Zero for odd n and for n = 0 (the total is always twice the largest
    part).  For n = 2*largest: partitions of the largest part under the
    family constraint, minus the single-part one when it qualifies.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0 or n % 2 == 1:
        return 0
    largest = n // 2
    total = partitions.count(largest, constraint_for(family))
    return total - (1 if singleton_allowed(family, largest) else 0)


def direct_counts_upto(family: Family, limit: int) -> list[int]:
    """direct_count(family, n) for n = 0..limit via a single DP pass."""
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    constraint = constraint_for(family)
    table = partitions.count_upto(limit // 2, constraint)
    out = [0] * (limit + 1)
    for largest in range(1, limit // 2 + 1):
        out[2 * largest] = table[largest] - (1 if constraint.allows(largest) else 0)
    return out


def genfun_series(family: Family, order: int) -> TruncatedSeries:
    """Expand the family's closed-form generating function to the given order."""
    return RECIPES[family].expand(order)


def list_partitions(
    family: Family, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Partition]:
    """The family's partitions of even n, largest part first.

    Each is (largest,) followed by a constrained partition of the largest
    part other than the single-part one.  Lexicographically decreasing;
    the length equals direct_count(family, n).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n % 2 == 1:
        raise ValueError(f"totals are always even; no partitions of n={n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    if n == 0:
        return []
    largest = n // 2
    rest = partitions.enumerate_partitions(largest, constraint_for(family), cap=cap)
    return [(largest,) + p for p in rest if p != (largest,)]


@dataclass(frozen=True)
class CoefficientRecord:
    """One compared index: closed-form value vs direct combinatorial value."""

    n: int
    genfun: int
    direct: int

    @property
    def equal(self) -> bool:
        return self.genfun == self.direct


@dataclass(frozen=True)
class VerificationReport:
    """Per-coefficient comparison of the two routes for one family."""

    family: Family
    order: int
    records: tuple[CoefficientRecord, ...]

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.records)

    @property
    def mismatches(self) -> tuple[CoefficientRecord, ...]:
        return tuple(r for r in self.records if not r.equal)

    def first_mismatch(self) -> CoefficientRecord | None:
        for r in self.records:
            if not r.equal:
                return r
        return None

    def to_json_dict(self) -> dict:
        return {
            "variant": self.family.value,
            "order": self.order,
            "records": [
                {"n": r.n, "genfun": r.genfun, "direct": r.direct, "equal": r.equal}
                for r in self.records
            ],
            "all_equal": self.all_equal,
        }


def verify(family: Family, order: int) -> VerificationReport:
    """Compare closed-form coefficients with direct counts for 0 <= n <= order."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    expansion = genfun_series(family, order)
    direct = direct_counts_upto(family, order)
    records = tuple(
        CoefficientRecord(n, expansion.coefficient(n), direct[n])
        for n in range(order + 1)
    )
    return VerificationReport(family=family, order=order, records=records)
