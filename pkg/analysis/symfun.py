"""Binomials and Wronski (complete homogeneous symmetric) functions, exact integers only.

W_delta(x_1..x_k) is the sum of all degree-delta monomials in x_1..x_k.
Every function here is pure; no floats anywhere.
"""

import logging
from itertools import combinations_with_replacement
from math import prod

from scipy.special import comb

logger = logging.getLogger(__name__)


def binomial(n: int, m: int) -> int:
    """C(n, m), zero outside 0 <= m <= n. Negative n is never extrapolated."""
    if n < 0 or m < 0 or m > n:
        return 0
    return int(comb(n, m, exact=True))


def _as_vector(xs) -> tuple[int, ...]:
    xs = tuple(int(x) for x in xs)
    if not xs:
        raise ValueError("Wronski function needs at least one variable (k >= 1)")
    if any(x < 0 for x in xs):
        raise ValueError(f"Wronski arguments must be nonnegative, got {xs}")
    return xs


def wronski_sequence(max_delta: int, xs) -> list[int]:
    """[W_0, ..., W_max_delta] of xs via W_j^(k) = W_{j-1}^(k) * x_k + W_j^(k-1)."""
    xs = _as_vector(xs)
    if max_delta < 0:
        return []
    # zero variables: W_0 = 1, everything else 0
    row = [1] + [0] * max_delta
    for x in xs:
        new = [1] + [0] * max_delta
        for j in range(1, max_delta + 1):
            new[j] = new[j - 1] * x + row[j]
        row = new
    return row


def wronski(delta: int, xs) -> int:
    xs = _as_vector(xs)
    if delta < 0:
        return 0
    return wronski_sequence(delta, xs)[delta]


def wronski_bruteforce(delta: int, xs) -> int:
    """W_delta by enumerating every degree-delta monomial (oracle for the recurrence)."""
    xs = _as_vector(xs)
    if delta < 0:
        return 0
    return sum(
        prod(xs[i] for i in picks)
        for picks in combinations_with_replacement(range(len(xs)), delta)
    )


def wronski_shifted_via_todd(p: int, ds) -> int:
    """W_p(d_1-1, ..., d_k-1) evaluated from unshifted values:

        sum_{i=0}^{p} (-1)^(p-i) C(k+p-1, p-i) W_i(d_1, ..., d_k)
    """
    ds = _as_vector(ds)
    if any(d == 0 for d in ds):
        raise ValueError(f"shifted Wronski needs every entry >= 1, got {ds}")
    if p < 0:
        return 0
    k = len(ds)
    w = wronski_sequence(p, ds)
    return sum((-1) ** (p - i) * binomial(k + p - 1, p - i) * w[i] for i in range(p + 1))


def alternating_wronski_sum(j: int, xs) -> int:
    if j < 0:
        raise ValueError(f"alternating sum needs j >= 0, got {j}")
    w = wronski_sequence(j, xs)
    return sum((-1) ** delta * w[delta] for delta in range(j + 1))


def shifted_alternating_sum_check(j: int, ds) -> bool:
    """sum_delta (-1)^delta W_delta(ds - 1) == sum_delta (-1)^delta C(k+j, j-delta) W_delta(ds)."""
    ds = _as_vector(ds)
    if any(d == 0 for d in ds):
        raise ValueError(f"shifted Wronski needs every entry >= 1, got {ds}")
    k = len(ds)
    lhs = alternating_wronski_sum(j, [d - 1 for d in ds])
    w = wronski_sequence(j, ds)
    rhs = sum((-1) ** delta * binomial(k + j, j - delta) * w[delta] for delta in range(j + 1))
    return lhs == rhs


def reduction_identity_check(delta: int, xs_plus) -> bool:
    """W_delta^(k)(x_1..x_k) == W_delta^(k+1)(x) - x_{k+1} W_{delta-1}^(k+1)(x)."""
    xs_plus = _as_vector(xs_plus)
    if len(xs_plus) < 2:
        raise ValueError("reduction identity needs at least two variables")
    lhs = wronski(delta, xs_plus[:-1])
    rhs = wronski(delta, xs_plus) - xs_plus[-1] * wronski(delta - 1, xs_plus)
    return lhs == rhs


def stifel_check(m: int, l: int) -> bool:
    return binomial(m + 1, l) == binomial(m, l) + binomial(m, l - 1)


def lemma1_check(delta: int, xs) -> bool:
    """W_1 W_{delta-1} - W_delta >= W_1 W_{delta-2} - W_{delta-1} >= 0 for delta >= 2."""
    if delta < 2:
        raise ValueError(f"difference inequality needs delta >= 2, got {delta}")
    w = wronski_sequence(delta, xs)
    left = w[1] * w[delta - 1] - w[delta]
    right = w[1] * w[delta - 2] - w[delta - 1]
    return left >= right >= 0


def log_concavity_check(j: int, xs) -> bool:
    """W_j^2 >= W_{j-1} W_{j+1}, j >= 1."""
    if j < 1:
        raise ValueError(f"log-concavity needs j >= 1, got {j}")
    w = wronski_sequence(j + 1, xs)
    return w[j] ** 2 >= w[j - 1] * w[j + 1]


def ratio_chain_check(max_j: int, xs) -> bool:
    """W_1/W_0 >= W_2/W_1 >= ... >= W_max_j/W_{max_j-1}, compared by cross-multiplication.

    Pairs whose denominators vanish (all x_i = 0) compare as 0 >= 0.
    """
    w = wronski_sequence(max_j, xs)
    for j in range(1, max_j):
        # W_j/W_{j-1} >= W_{j+1}/W_j  <=>  W_j^2 >= W_{j-1} W_{j+1}  (all terms >= 0)
        if w[j] * w[j] < w[j + 1] * w[j - 1]:
            logger.debug(f"ratio chain broken at j={j} for xs={tuple(xs)}")
            return False
    return True
