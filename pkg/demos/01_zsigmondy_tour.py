"""A tour of the Zsigmondy machinery.

For a > 1 and n > 1, a Zsigmondy prime for (a, n) divides a^n - 1 but no
a^k - 1 with k < n.  These primes drive all the generation arguments in
the package: an element whose order is a Zsigmondy prime power acts
irreducibly enough to pin down the groups containing it.

Run:  python demos/01_zsigmondy_tour.py
"""

from beauville import Classification, cyclotomic_value, factorize, zsigmondy

print("The primitive part of a^n - 1 lives inside the cyclotomic value:")
for a, n in [(2, 11), (3, 5), (2, 6), (7, 2), (2, 4)]:
    r = zsigmondy(a, n)
    print(f"  a={a:>2} n={n:>2}: Phi_{n}({a}) = {cyclotomic_value(n, a):>6}, "
          f"zeta = {str(r.zeta):>4}, lambda = {str(r.lam):>4}, "
          f"{r.classification.value}")

print()
print("The two exception families with no Zsigmondy prime at all:")
print("  (2, 6):", zsigmondy(2, 6).zeta, "- but lambda is 9 by convention")
print("  (a, 2) with a + 1 a power of two, e.g. (7, 2):", zsigmondy(7, 2).zeta)

print()
print("Small cases (no large Zsigmondy prime) in 2 <= a <= 12, 2 <= n <= 20:")
for a in range(2, 13):
    for n in range(2, 21):
        r = zsigmondy(a, n)
        if r.classification is Classification.SMALL:
            print(f"  ({a}, {n}): zeta = lambda = {r.zeta} = n + 1")

print()
print("Factored group-order bookkeeping keeps every lambda reachable:")
f = factorize(2 ** 36 - 1)
print(f"  2^36 - 1 = {f.value} = ",
      " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.factors))
