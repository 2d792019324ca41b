#!/usr/bin/env python3
"""Gauss polynomials as partition counters.

The (n, m) q-binomial is an integer polynomial whose q^N coefficient counts
partitions of N into at most m parts, each at most n - m.  This script prints
a small table of coefficients next to brute-force partition counts, then
walks through the classical identities the polynomials satisfy.
"""

import math

from qdeform import QPoly, gauss_binomial, gauss_generating, partition_count, q_number

print("The (4, 2) q-binomial:")
poly = gauss_binomial(4, 2)
print(f"  {poly}   coefficients {list(poly.coeffs)}, degree {poly.degree}")
print()

print("Each coefficient is a restricted partition count (parts <= 2, at most 2 parts):")
for target in range(poly.degree + 1):
    count = partition_count(target, 2, 2)
    print(f"  N = {target}:  coefficient {poly.coefficient(target)},  enumeration {count}")
print()

print("Summing coefficients (q = 1) recovers the ordinary binomial:")
for n in range(6):
    row = [gauss_binomial(n, m)(1) for m in range(n + 1)]
    pascal = [math.comb(n, m) for m in range(n + 1)]
    print(f"  n = {n}: {row}  ==  {pascal}")
print()

print("Symmetry and the two recurrences (exact polynomial identities):")
n, m = 7, 3
print(f"  [{n} over {m}] == [{n} over {n - m}]:",
      gauss_binomial(n, m) == gauss_binomial(n, n - m))
lhs = gauss_binomial(n, m)
rhs1 = gauss_binomial(n - 1, m) + QPoly.monomial(n - m) * gauss_binomial(n - 1, m - 1)
rhs2 = gauss_binomial(n - 1, m - 1) + QPoly.monomial(m) * gauss_binomial(n - 1, m)
print(f"  top recurrence holds: {lhs == rhs1}")
print(f"  bottom recurrence holds: {lhs == rhs2}")
print()

print("Deformed integers {n}_q = 1 + q + ... + q^(n-1):")
for n in range(5):
    print(f"  {{{n}}}_q = {q_number(n)}    (at q = 1: {q_number(n)(1)})")
print()

print("The generating polynomial comes from an exact division, never a numeric ratio:")
print(f"  G(2, 2) = {gauss_generating(2, 2)}")
