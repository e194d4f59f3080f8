"""
Exact truncated power series
============================

All arithmetic in this library happens modulo q^(N+1) with plain Python
integers, so nothing ever overflows or rounds.
"""

from echopart import TruncatedSeries, monomial, one

# A series is just its coefficient tuple; index k is the coefficient of q^k.
a = TruncatedSeries((1, 2, 0, -1, 5))
print("a      =", a)
print("order  =", a.order)
print("a[3]   =", a.coefficient(3))

# Ring operations return new series of the same order.
b = monomial(3, 2, 4)  # 3*q^2 at order 4
print("b      =", b)
print("a + b  =", a + b)
print("a * b  =", a * b)
print("a - 1  =", a - 1)

# Series with a unit constant term are invertible over the integers.
g = one(8) - monomial(1, 1, 8)
print("\n1 - q        =", g)
print("1/(1 - q)    =", g.invert())
print("check        =", g * g.invert())

# Exactness: coefficients can be astronomically large.
big = monomial(10**30, 1, 3)
print("\n(10^30 q)^3  =", (big * big * big).coefficient(3))
