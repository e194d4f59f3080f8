"""
Constrained partition counting and enumeration
==============================================

A Constraint restricts which part values may appear (residues, bounds,
distinctness); counting uses one dynamic-programming pass and
enumeration uses recursive descent in decreasing lexicographic order.
"""

from echopart import (
    DISTINCT,
    MOD3_DISTINCT,
    MOD6,
    ODD,
    UNRESTRICTED,
    Constraint,
    count,
    count_upto,
    enumerate_partitions,
)

print("p(n) for n = 0..12:", count_upto(12, UNRESTRICTED))

print("\nthe partitions of 6:")
for parts in enumerate_partitions(6, UNRESTRICTED):
    print("  ", parts)

print("\npartitions of 6 into distinct parts:")
for parts in enumerate_partitions(6, DISTINCT):
    print("  ", parts)

# Euler: distinct parts and odd parts are equinumerous at every n.
print("\ndistinct:", count_upto(14, DISTINCT))
print("odd:     ", count_upto(14, ODD))

# Schur: distinct parts prime to 3 match parts congruent to 1 or 5 mod 6.
print("\ndistinct, parts = 1,2 (mod 3):", count_upto(14, MOD3_DISTINCT))
print("parts = 1,5 (mod 6):          ", count_upto(14, MOD6))

# Constraints compose residue tests with per-part bounds.
small_even = Constraint(modulus=2, residues={0}, max_part=6)
print("\npartitions of 12 into even parts at most 6:", count(12, small_even))
for parts in enumerate_partitions(12, small_even):
    print("  ", parts)
