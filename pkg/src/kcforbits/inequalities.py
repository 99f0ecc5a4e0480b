"""Integer-sequence inequalities behind the codimension monotonicity argument.

Two elementary facts are exposed as executable checkers so that property
tests can exercise them directly: an Abel-summation bound for weighted
sums with prefix-nonnegative weights, and the square/product sum bounds
between a sequence and one that dominates it prefix-wise.  Both return
the quantities on each side rather than a bare boolean, so failures are
diagnosable and the equality characterizations can be asserted.

Inputs outside the stated hypotheses raise
:class:`~kcforbits.errors.PreconditionViolatedError`; the statements say
nothing there.
"""

from dataclasses import dataclass
from itertools import accumulate

from .core import is_weakly_decreasing
from .errors import PreconditionViolatedError

__all__ = ["abel_sum_bound", "dominated_power_sums", "PowerSumComparison"]


def abel_sum_bound(d, delta) -> tuple:
    """Weighted sum d_1*delta_1 + ... + d_k*delta_k, guaranteed >= 0.

    Hypotheses: (a) delta is non-increasing and non-negative; (b) every
    prefix sum of d is >= 0.  Both lists share a length k >= 1.

    Returns ``(total, equality_condition_ok)`` where the flag is true iff
    the total is positive, or it is zero and for every j either the j-th
    prefix sum of d vanishes or delta_j = delta_{j+1} (with
    delta_{k+1} = 0).
    """
    d = tuple(int(x) for x in d)
    delta = tuple(int(x) for x in delta)
    if len(d) != len(delta) or not d:
        raise PreconditionViolatedError(
            "a", f"need two lists of equal length k >= 1, got {len(d)} and {len(delta)}"
        )
    if not is_weakly_decreasing(delta) or delta[-1] < 0:
        raise PreconditionViolatedError("a", f"delta must be non-increasing and >= 0: {delta}")
    prefixes = tuple(accumulate(d))
    if min(prefixes) < 0:
        raise PreconditionViolatedError("b", f"d has a negative prefix sum: {d}")
    total = sum(x * y for x, y in zip(d, delta))
    k = len(d)
    if total > 0:
        equality_ok = True
    else:
        extended = delta + (0,)
        equality_ok = all(
            prefixes[j] == 0 or extended[j] == extended[j + 1] for j in range(k)
        )
    return total, equality_ok


@dataclass(frozen=True)
class PowerSumComparison:
    """Both sides of the square-sum and product-sum inequalities."""

    squares: tuple
    products: tuple
    equality_iff_equal_ok: bool


def dominated_power_sums(p: int, alpha, beta) -> PowerSumComparison:
    """Square and consecutive-product sums of prefix-dominated sequences.

    Hypotheses: (i) alpha and beta are non-increasing with entries in
    [0, p]; (ii) every prefix sum of alpha is <= the matching prefix sum
    of beta.  Then sum alpha_i^2 <= sum beta_i^2 and
    p*alpha_1 + sum alpha_i*alpha_{i+1} <= p*beta_1 + sum beta_i*beta_{i+1},
    with equality (in either) exactly when alpha = beta.

    The returned flag reports whether that equality characterization
    holds for both inequalities on this input.
    """
    p = int(p)
    alpha = tuple(int(x) for x in alpha)
    beta = tuple(int(x) for x in beta)
    if p < 0:
        raise PreconditionViolatedError("i", f"p must be >= 0, got {p}")
    if len(alpha) != len(beta) or not alpha:
        raise PreconditionViolatedError(
            "i", f"need two lists of equal length k >= 1, got {len(alpha)} and {len(beta)}"
        )
    for name, seq in (("alpha", alpha), ("beta", beta)):
        if not is_weakly_decreasing(seq) or seq[-1] < 0 or seq[0] > p:
            raise PreconditionViolatedError(
                "i", f"{name} must be non-increasing with entries in [0, {p}]: {seq}"
            )
    sum_a = sum_b = 0
    for a, b in zip(alpha, beta):
        sum_a += a
        sum_b += b
        if sum_a > sum_b:
            raise PreconditionViolatedError(
                "ii", f"prefix sums of {alpha} exceed those of {beta}"
            )
    squares = (sum(a * a for a in alpha), sum(b * b for b in beta))
    products = (
        p * alpha[0] + sum(alpha[i] * alpha[i + 1] for i in range(len(alpha) - 1)),
        p * beta[0] + sum(beta[i] * beta[i + 1] for i in range(len(beta) - 1)),
    )
    equal = alpha == beta
    ok = ((squares[0] == squares[1]) == equal) and ((products[0] == products[1]) == equal)
    return PowerSumComparison(squares=squares, products=products, equality_iff_equal_ok=ok)
