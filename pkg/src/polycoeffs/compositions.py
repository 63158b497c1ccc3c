"""Counting and listing integer compositions with k parts from {a, ..., b}."""

from .coeffs import ResourceLimitError, coefficient

DEFAULT_MAX_RESULTS = 1_000_000


def _check_query(n: int, k: int, a: int, b: int) -> None:
    if n < 0:
        raise ValueError(f"target sum must be nonnegative, got n={n}")
    if k < 0:
        raise ValueError(f"part count must be nonnegative, got k={k}")
    if not 0 <= a <= b:
        raise ValueError(f"part bounds must satisfy 0 <= a <= b, got a={a}, b={b}")


def count_compositions(n: int, k: int, a: int, b: int) -> int:
    """Number of tuples (p_1, ..., p_k) with every part in {a, ..., b} and sum n.

    Shifting each part down by a leaves k parts in {0, ..., b-a} summing to
    n - k*a, so the count is the coefficient of x^(n - k*a) in
    (1 + x + ... + x^(b-a))^k; sums outside [k*a, k*b] count zero.
    """
    _check_query(n, k, a, b)
    return coefficient(k, n - k * a, b - a)


def enumerate_compositions(
    n: int, k: int, a: int, b: int, max_results: int = DEFAULT_MAX_RESULTS
) -> list[tuple[int, ...]]:
    """All compositions of n into k parts from {a, ..., b}, lexicographic.

    The result count is checked against max_results up front (via
    count_compositions) so oversized enumerations fail before any work.
    """
    _check_query(n, k, a, b)
    total = count_compositions(n, k, a, b)
    if total > max_results:
        raise ResourceLimitError(
            f"{total} compositions exceed the enumeration bound of {max_results}"
        )
    out: list[tuple[int, ...]] = []
    parts = [0] * k

    def fill(i: int, remaining: int) -> None:
        if i == k:
            if remaining == 0:
                out.append(tuple(parts))
            return
        later = k - i - 1
        # Bound the current part so the remaining slots can still reach the sum.
        lo = max(a, remaining - b * later)
        hi = min(b, remaining - a * later)
        for p in range(lo, hi + 1):
            parts[i] = p
            fill(i + 1, remaining - p)

    fill(0, n)
    return out
