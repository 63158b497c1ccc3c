"""Exact rows of (l+1)-nomial triangles: the coefficients of (1 + x + ... + x^l)^k.

All arithmetic here is arbitrary-precision integer. Row sizes grow as k*l + 1
and the central entry grows like (l+1)^k, so there is no floating-point
fallback anywhere in this module.
"""

import math
from dataclasses import dataclass

DEFAULT_MAX_ROW_ENTRIES = 10_000_000
DEFAULT_ORACLE_NODE_BUDGET = 1_000_000


class ResourceLimitError(Exception):
    """A computation would exceed its configured memory or work budget."""


@dataclass(frozen=True)
class TriangleRow:
    """Row k of the (l+1)-nomial triangle: k*l + 1 exact integer entries."""

    k: int
    l: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


def _check_domain(k: int, l: int) -> None:
    if k < 0:
        raise ValueError(f"row index must be nonnegative, got k={k}")
    if l < 0:
        raise ValueError(f"part bound must be nonnegative, got l={l}")


def _check_row_budget(k: int, l: int, max_entries: int) -> None:
    entries = k * l + 1
    if entries > max_entries:
        raise ResourceLimitError(
            f"row k={k}, l={l} holds {entries} entries, over the budget of {max_entries}"
        )


def triangle_row(k: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES) -> TriangleRow:
    """Compute row k of the (l+1)-nomial triangle exactly.

    Entry n is the coefficient of x^n in (1 + x + ... + x^l)^k, equivalently
    the sum of the l+1 overlying entries of the previous row. Each row is
    produced with a sliding-window update (add the entering entry, subtract
    the leaving one), so building row k costs O(k*l) big-integer additions
    per row instead of O(k*l*l).
    """
    _check_domain(k, l)
    _check_row_budget(k, l, max_entries)
    prev = [1]
    for j in range(1, k + 1):
        cur = []
        window = 0
        prev_len = (j - 1) * l + 1
        for n in range(j * l + 1):
            if n < prev_len:
                window += prev[n]
            drop = n - l - 1  # always < prev_len when n <= j*l
            if drop >= 0:
                window -= prev[drop]
            cur.append(window)
        prev = cur
    return TriangleRow(k=k, l=l, values=tuple(prev))


def coefficient(k: int, n: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES) -> int:
    """The coefficient of x^n in (1 + x + ... + x^l)^k; zero outside 0 <= n <= k*l."""
    _check_domain(k, l)
    if n < 0 or n > k * l:
        return 0
    return triangle_row(k, l, max_entries=max_entries).values[n]


def central_coefficient(m: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES) -> int:
    """The row maximum, taken at index floor(m*l/2)."""
    _check_domain(m, l)
    return coefficient(m, (m * l) // 2, l, max_entries=max_entries)


def poly_power_oracle(k: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES) -> TriangleRow:
    """Expand (1 + x + ... + x^l)^k by naive repeated convolution.

    Independent verification path for triangle_row; quadratic in the row
    length, so keep it to small instances.
    """
    _check_domain(k, l)
    _check_row_budget(k, l, max_entries)
    row = [1]
    for _ in range(k):
        out = [0] * (len(row) + l)
        for i, c in enumerate(row):
            for j in range(l + 1):
                out[i + j] += c
        row = out
    return TriangleRow(k=k, l=l, values=tuple(row))


def coefficient_multinomial_oracle(
    k: int, n: int, l: int, max_nodes: int = DEFAULT_ORACLE_NODE_BUDGET
) -> int:
    """Sum k!/(k_0! * ... * k_l!) over all part-count vectors (k_0, ..., k_l)
    with k_0 + ... + k_l = k and 0*k_0 + 1*k_1 + ... + l*k_l = n.

    Enumerates the count vectors by recursive descent from the heaviest part
    value down, bounding the remaining weight so dead branches are never
    entered. Exponential in l; raises ResourceLimitError once the recursion
    visits more than max_nodes states.
    """
    _check_domain(k, l)
    if n < 0 or n > k * l:
        return 0
    k_factorial = math.factorial(k)
    nodes = 0

    def descend(value: int, parts_left: int, weight_left: int, denom: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                f"multinomial-sum oracle visited more than {max_nodes} states"
            )
        if value == 0:
            # Pruning guarantees weight_left == 0 here; k_0 takes the rest.
            return k_factorial // (denom * math.factorial(parts_left))
        total = 0
        # Need weight_left - c*value <= (value-1) * (parts_left - c), i.e.
        # c >= weight_left - (value-1)*parts_left, for the remaining values
        # to be able to absorb the leftover weight.
        c_min = max(0, weight_left - (value - 1) * parts_left)
        c_max = min(parts_left, weight_left // value)
        for c in range(c_min, c_max + 1):
            total += descend(
                value - 1, parts_left - c, weight_left - c * value,
                denom * math.factorial(c),
            )
        return total

    return descend(l, k, n, 1)
