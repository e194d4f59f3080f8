"""Counting and enumeration of constrained integer partitions.

This is the ground-truth side of the library: a dynamic-programming
counter and a recursive-descent enumerator that know nothing about power
series.  A partition is a weakly decreasing tuple of positive ints; the
empty tuple is the one partition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import TruncatedSeries

Partition = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 120


@dataclass(frozen=True)
class Constraint:
    """Declarative restriction on the parts of a partition.

    distinct           -- no repeated part values.
    modulus, residues  -- parts must be congruent to an allowed residue;
                          both given together or not at all.
    min_part, max_part -- inclusive bounds on part values.  max_part is
                          general-oracle utility; the family definitions
                          never need it.
    """

    distinct: bool = False
    modulus: int | None = None
    residues: frozenset[int] | None = None
    min_part: int = 1
    max_part: int | None = None

    def __post_init__(self) -> None:
        if (self.modulus is None) != (self.residues is None):
            raise ValueError("modulus and residues must be given together")
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError(f"modulus must be >= 1, got {self.modulus}")
            residues = frozenset(self.residues)
            if not residues:
                raise ValueError("residue set must be non-empty")
            if any(not 0 <= r < self.modulus for r in residues):
                raise ValueError(
                    f"residues must lie in [0, {self.modulus}), got {sorted(residues)}"
                )
            object.__setattr__(self, "residues", residues)
        if self.min_part < 1:
            raise ValueError(f"min_part must be >= 1, got {self.min_part}")
        if self.max_part is not None and self.max_part < 1:
            raise ValueError(f"max_part must be >= 1, got {self.max_part}")

    def allows(self, part: int) -> bool:
        """Whether a single part value passes the bound and residue tests."""
        if part < self.min_part:
            return False
        if self.max_part is not None and part > self.max_part:
            return False
        if self.modulus is not None and part % self.modulus not in self.residues:
            return False
        return True


UNRESTRICTED = Constraint()
DISTINCT = Constraint(distinct=True)
ODD = Constraint(modulus=2, residues=frozenset({1}))
ODD_DISTINCT = Constraint(distinct=True, modulus=2, residues=frozenset({1}))
MOD3_DISTINCT = Constraint(distinct=True, modulus=3, residues=frozenset({1, 2}))
MOD6 = Constraint(modulus=6, residues=frozenset({1, 5}))


def count_upto(limit: int, constraint: Constraint) -> list[int]:
    """Counts of constrained partitions of 0..limit, one DP pass.

    Each allowed part value is processed once: bounded 0/1 when the
    constraint is distinct, to saturation otherwise.  O(limit) memory.
    """
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    counts = [0] * (limit + 1)
    counts[0] = 1
    top = limit if constraint.max_part is None else min(limit, constraint.max_part)
    for part in range(constraint.min_part, top + 1):
        if not constraint.allows(part):
            continue
        if constraint.distinct:
            for total in range(limit, part - 1, -1):
                counts[total] += counts[total - part]
        else:
            for total in range(part, limit + 1):
                counts[total] += counts[total - part]
    return counts


def count(n: int, constraint: Constraint) -> int:
    """Number of partitions of n all of whose parts satisfy the constraint."""
    return count_upto(n, constraint)[n]


def enumerate_partitions(
    n: int, constraint: Constraint, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Partition]:
    """All constrained partitions of n, in lexicographically decreasing order.

    The ordering is part of the contract (stable golden output).  Refuses
    n beyond the cap, which exists only to bound output size.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    first_max = n if constraint.max_part is None else min(n, constraint.max_part)
    out: list[Partition] = []
    _descend(n, first_max, constraint, (), out)
    return out


def _descend(
    remaining: int,
    max_allowed: int,
    constraint: Constraint,
    prefix: Partition,
    out: list[Partition],
) -> None:
    if remaining == 0:
        out.append(prefix)
        return
    for part in range(min(remaining, max_allowed), constraint.min_part - 1, -1):
        if not constraint.allows(part):
            continue
        next_max = part - 1 if constraint.distinct else part
        _descend(remaining - part, next_max, constraint, prefix + (part,), out)


def count_series(
    constraint: Constraint, order: int, exponent_scale: int = 1
) -> TruncatedSeries:
    """Series whose coefficient of q^(scale*n) is count(n, constraint).

    Scale 2 realizes the reindexing q -> q^2 that the family closed forms
    live in; all other exponents are zero.
    """
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if exponent_scale < 1:
        raise ValueError(f"exponent_scale must be >= 1, got {exponent_scale}")
    counts = count_upto(order // exponent_scale, constraint)
    coeffs = [0] * (order + 1)
    for i, c in enumerate(counts):
        coeffs[i * exponent_scale] = c
    return TruncatedSeries(tuple(coeffs))
