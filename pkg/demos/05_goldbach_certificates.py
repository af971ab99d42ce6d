"""
Almost-equal prime decompositions with re-checkable certificates
================================================================

Each search returns a certificate storing the parts, the achieved
deviation max |m*q - N| as an exact integer, and the claimed bound.
validate() re-derives everything from the sieve.
"""

from fractions import Fraction

from primefrob import binary_decomp, build_table, decompose_m, ternary_decomp

table = build_table(200_000)

# two primes, as close to N/2 as the window allows
print("binary 100 =", binary_decomp(table, 100, window=20))
print("binary 100, window 2 =", binary_decomp(table, 100, window=2))  # no pair that close

# three primes within floor(N^0.6) of N/3
cert = ternary_decomp(table, 10001)
print("\nternary 10001:", cert.parts)
print("  max |3q - N| =", cert.max_deviation, " allowed <=", cert.bound_limit)
print("  revalidates:", cert.validate(table))

# m parts within a relative deviation delta of N/m; strict bound
cert = decompose_m(table, 100_000, m=4, delta=Fraction(1, 20))
print("\nfour parts of 100000:", cert.parts)
print("  max |4q - N| =", cert.max_deviation, " allowed <", cert.bound_limit)
print("  revalidates:", cert.validate(table))

cert = decompose_m(table, 99_999, m=7, delta=Fraction(1, 50))
print("\nseven parts of 99999:", cert.parts)
print("  revalidates:", cert.validate(table))
