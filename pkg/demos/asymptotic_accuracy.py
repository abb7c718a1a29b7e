"""Measure how fast the two growth formulas approach the exact counts.

Both estimates target log c_n.  The implicit form re-solves the saddle
equation at each n; the explicit form is a closed expression in n alone
(power of n, log n, constant).  The ratio exact/estimate tends to 1,
and the two formulas agree with each other to O(n^{-epsilon}).
"""

from mpmath import mp

from subexp import (
    derive_spectrum,
    exact_coefficients,
    log_estimate_explicit,
    log_estimate_khintchine,
    make_preset,
)

model = make_preset("standard")
sd = derive_spectrum(model)
series = exact_coefficients(model, 1600)

print("standard model, ratio exact/estimate:")
print(f"{'n':>6} {'khintchine':>12} {'explicit':>12}")
for n in (100, 200, 400, 800, 1600):
    le = mp.log(mp.mpf(series[n]))
    rk = mp.exp(le - log_estimate_khintchine(sd, n).log_value)
    rx = mp.exp(le - log_estimate_explicit(sd, n).log_value)
    print(f"{n:>6} {mp.nstr(rk, 8):>12} {mp.nstr(rx, 8):>12}")

# closed form for the standard model is the classical leading term
# exp(pi sqrt(2n/3)) / (4 n sqrt 3); check the explicit estimate hits it
n = 1000
hr = -mp.log(4 * mp.sqrt(3)) - mp.log(n) + mp.pi * mp.sqrt(mp.mpf(2 * n) / 3)
print()
print("explicit log-estimate at n=1000:", mp.nstr(log_estimate_explicit(sd, n).log_value, 20))
print("classical closed form:          ", mp.nstr(hr, 20))

# term-by-term breakdown of one estimate
est = log_estimate_explicit(sd, 100)
print()
print("n=100 explicit breakdown:")
for key, val in est.terms.items():
    print(f"  {key:>13} = {mp.nstr(val, 12)}")
print(f"  {'total':>13} = {mp.nstr(est.log_value, 12)}")

# formula agreement improves like a power of n
print()
print("|explicit - khintchine| on the roots model:")
sd2 = derive_spectrum(make_preset("roots"))
for k in (2, 3, 4, 5, 6):
    n = 10**k
    gap = abs(log_estimate_explicit(sd2, n).log_value
              - log_estimate_khintchine(sd2, n).log_value)
    print(f"  n=1e{k}: {mp.nstr(gap, 4)}")
