"""
Six families, two independent routes
====================================

The library counts partitions whose unique largest part equals the sum
of the remaining parts.  Every family is computed both from a closed-form
generating function and by direct combinatorics, and the two are compared
coefficient by coefficient.
"""

from echopart import Family, direct_count, genfun_series, list_partitions, verify

# The witnesses for the plain family at n = 10: largest part 5, remainder
# any partition of 5 other than the bare 5 itself.
print("the relevant partitions of 10:")
for parts in list_partitions(Family.PLAIN, 10):
    print("  ", "+".join(map(str, parts)))

print("\ncounts at n = 8:")
for family in Family:
    witnesses = list_partitions(family, 8)
    shown = ", ".join("+".join(map(str, p)) for p in witnesses) or "-"
    print(f"  {family.value:<13} {direct_count(family, 8)}   {shown}")

# The closed form for each family, expanded as a series.
print("\nclosed-form expansions to order 20:")
for family in Family:
    print(f"  {family.value:<13} {genfun_series(family, 20)}")

# verify() runs both routes and compares every coefficient exactly.
print("\nverification at order 200:")
for family in Family:
    report = verify(family, 200)
    status = "ok" if report.all_equal else f"MISMATCH at n={report.first_mismatch().n}"
    print(f"  {family.value:<13} {status}")
