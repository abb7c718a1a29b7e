"""Count weighted partitions three independent ways and cross-check.

The generating function is a product over part sizes j, so the counts
can be computed by (a) the log-derivative recurrence, (b) direct
polynomial multiplication of the product, and (c) for the plain
partition function, Euler's pentagonal recurrence.  All three must
agree exactly; they are integer computations with no rounding anywhere.
"""

import time

from subexp import exact_coefficients, make_preset, pentagonal_oracle, product_dp

N = 300

for kind in ("standard", "roots"):
    model = make_preset(kind)
    t0 = time.perf_counter()
    rec = exact_coefficients(model, N)
    t1 = time.perf_counter()
    dp = product_dp(model, N)
    t2 = time.perf_counter()
    assert rec.coeffs == dp.coeffs
    print(f"{kind}: recurrence {t1 - t0:.3f}s, product {t2 - t1:.3f}s, "
          f"c_{N} has {len(str(rec[N]))} digits")

pent = pentagonal_oracle(N)
assert pent.coeffs == exact_coefficients(make_preset("standard"), N).coeffs
print("pentagonal recurrence agrees with both on the standard model")

# parts restricted to 1 mod 2 gives Euler's odd/distinct correspondence:
# the counts match partitions into distinct parts
odd = exact_coefficients(make_preset("congruent", 2, 1), 20)
print("odd-part counts:", list(odd.coeffs[:15]))

print()
print("n, p(n) for small n:")
std = exact_coefficients(make_preset("standard"), 100)
for n in (1, 5, 10, 25, 50, 100):
    print(f"  p({n}) = {std[n]}")
