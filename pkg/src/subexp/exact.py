"""Exact computation of the coefficients c_0..c_N.

Primary algorithm: the log-derivative recurrence

    n c_n = sum_{k=1}^n (k Lambda_k) c_{n-k},   c_0 = 1,

which serves every base function uniformly through the Lambda_k and is
carried in exact rational arithmetic (pure int when every k*Lambda_k is
an integer, which covers the integer-weight multiset presets).

Two independent verifiers back it: the classical pentagonal-number
recurrence (ordinary partitions only) and a direct truncated-product
evaluation (integer-weight multiset models).  Redundancy is the test
strategy for exact counting; none of the three shares code.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParametersError, UnsupportedModelError
from .model import MULTISET, ModelSpec, lambda_coeffs


@dataclass(frozen=True)
class ExactSeries:
    """Coefficients c_0..c_N, exact (ints, or Fractions when needed)."""

    model_kind: str
    N: int
    coeffs: tuple

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)


def _recurrence_int(k_lambda: list, N: int):
    # all k*Lambda_k integral; falls back (returns None) on the first
    # non-exact division, which cannot happen for integer-coefficient f
    c = [0] * (N + 1)
    c[0] = 1
    for n in range(1, N + 1):
        total = 0
        for k in range(1, n + 1):
            kl = k_lambda[k - 1]
            if kl:
                total += kl * c[n - k]
        q, rem = divmod(total, n)
        if rem:
            return None
        c[n] = q
    return c


def _recurrence_frac(k_lambda: list, N: int):
    c = [Fraction(0)] * (N + 1)
    c[0] = Fraction(1)
    for n in range(1, N + 1):
        total = Fraction(0)
        for k in range(1, n + 1):
            kl = k_lambda[k - 1]
            if kl:
                total += kl * c[n - k]
        c[n] = total / n
    return c


def exact_coefficients(model: ModelSpec, N: int) -> ExactSeries:
    """c_0..c_N by the log-derivative recurrence, exact.

    O(N^2) big-number operations.  Requires the model's Lambda_k to be
    rational (true for all presets); irrational models have no exact
    coefficient series.
    """
    if N < 0:
        raise InvalidParametersError(f"need N >= 0; got N={N}")
    if N == 0:
        return ExactSeries(model.kind, 0, (1,))
    lam = lambda_coeffs(model, N)
    kl = [lam.k_lambda(k) for k in range(1, N + 1)]
    if all(x.denominator == 1 for x in map(Fraction, kl)):
        ints = [int(x) for x in kl]
        c = _recurrence_int(ints, N)
        if c is not None:
            return ExactSeries(model.kind, N, tuple(c))
        kl = ints
    c = _recurrence_frac([Fraction(x) for x in kl], N)
    if all(x.denominator == 1 for x in c):
        c = [int(x) for x in c]
    return ExactSeries(model.kind, N, tuple(c))


def pentagonal_oracle(N: int) -> ExactSeries:
    """Ordinary partition numbers p(0..N) via Euler's recurrence.

    p(n) = sum_{k>=1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    Independent of the Lambda machinery; standard model only.
    """
    if N < 0:
        raise InvalidParametersError(f"need N >= 0; got N={N}")
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return ExactSeries("standard", N, tuple(p))


def product_dp(model: ModelSpec, N: int) -> ExactSeries:
    """c_0..c_N by direct truncated-product evaluation.

    Multiplies out prod_j (1 - z^j)^(-b_j) term by term; each factor
    1/(1-z^j) is one stride-j prefix-sum pass over the coefficient
    array.  Only integer-weight multiset models with a_j = 1 qualify;
    exists purely as an independent verifier for exact_coefficients.
    """
    if N < 0:
        raise InvalidParametersError(f"need N >= 0; got N={N}")
    if model.base is not MULTISET:
        raise UnsupportedModelError(
            f"product evaluation needs the multiset base; model has {model.base.name}"
        )
    if not model.unit_scale:
        raise UnsupportedModelError("product evaluation needs a_j = 1")
    c = [0] * (N + 1)
    c[0] = 1
    for j in range(1, N + 1):
        bj = model.b(j)
        if bj.denominator != 1:
            raise UnsupportedModelError(
                f"product evaluation needs integer weights; b_{j} = {bj}"
            )
        for _ in range(int(bj)):
            for i in range(j, N + 1):
                c[i] += c[i - j]
    return ExactSeries(model.kind, N, tuple(c))
