"""
q-Pochhammer products and geometric combs
=========================================

The generating functions in this library are assembled from two kinds of
building blocks: infinite products over arithmetic progressions of
exponents, and single geometric series q^a/(1-q^d).
"""

from echopart import GeometricSpec, PochhammerSpec, geometric, pochhammer

N = 16

# (q;q)_inf = (1-q)(1-q^2)(1-q^3)...  Each factor is (sign, offset, step):
# the product runs over exponents offset, offset+step, offset+2*step, ...
euler = PochhammerSpec(((1, 1, 1),))
print("(q;q)_inf     =", pochhammer(euler, N))

# Its reciprocal generates the partition numbers 1, 1, 2, 3, 5, 7, 11, ...
print("1/(q;q)_inf   =", pochhammer(euler, N).invert())

# sign -1 flips a factor to (1 + q^e): distinct-part generating functions.
distinct = PochhammerSpec(((-1, 1, 1),))
print("(-q;q)_inf    =", pochhammer(distinct, N))

# Several factors interleave progressions, here exponents 2, 4, 8, 10, ...
two_track = PochhammerSpec(((-1, 2, 6), (-1, 4, 6)))
print("(-q^2,-q^4;q^6)_inf =", pochhammer(two_track, N))

# A geometric comb puts a 1 on every multiple of the period, shifted.
print("q^2/(1-q^4)   =", geometric(GeometricSpec(2, 4), N))
print("1/(1-q^3)     =", geometric(GeometricSpec(0, 3), N))
