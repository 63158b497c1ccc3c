"""Relative-error sweeps of the normal estimates against exact coefficients.

Exact coefficients run to thousands of digits, so the comparison happens
entirely in log space: the relative error is exp(approx_log - exact_log) - 1
and the exact value never passes through floating point directly.
"""

import csv
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .approx import central_approx, pointwise_approx
from .coeffs import DEFAULT_MAX_ROW_ENTRIES, triangle_row

_LN2 = math.log(2.0)

CSV_HEADER = ("m", "l", "n", "exact_log", "approx_log", "rel_error")


@dataclass(frozen=True)
class ErrorRecord:
    """One comparison point: logs of the exact and estimated values plus |ratio - 1|."""

    m: int
    l: int
    n: int
    exact_log: float
    approx_log: float
    rel_error: float


def log_of_big_integer(x: int) -> float:
    """Natural log of a positive integer of any size.

    Values wider than 64 bits are reduced to their leading 64 bits plus a
    power of two, keeping the relative error below 2**-50 without ever
    converting the full integer to a float.
    """
    if x <= 0:
        raise ValueError("log is defined for positive integers only")
    nbits = x.bit_length()
    if nbits <= 64:
        return math.log(x)
    shift = nbits - 64
    return math.log(x >> shift) + shift * _LN2


def _record(m: int, l: int, n: int, exact_log: float, approx_log: float) -> ErrorRecord:
    try:
        rel_error = abs(math.expm1(approx_log - exact_log))
    except OverflowError:
        # The ratio itself leaves double range; inf is the honest reading.
        rel_error = math.inf
    return ErrorRecord(
        m=m, l=l, n=n, exact_log=exact_log, approx_log=approx_log, rel_error=rel_error
    )


def error_sweep(
    m: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES
) -> list[ErrorRecord]:
    """One record per index n in 0..m*l, pointwise estimate vs exact value."""
    row = triangle_row(m, l, max_entries=max_entries)
    return [
        _record(m, l, n, log_of_big_integer(v), pointwise_approx(m, n, l).log_value)
        for n, v in enumerate(row.values)
    ]


def central_error_curve(
    l: int, m_values: Sequence[int], max_entries: int = DEFAULT_MAX_ROW_ENTRIES
) -> list[ErrorRecord]:
    """Central-coefficient records, one per m, using the rectangle estimate."""
    out = []
    for m in m_values:
        n = (m * l) // 2
        exact = triangle_row(m, l, max_entries=max_entries).values[n]
        out.append(_record(m, l, n, log_of_big_integer(exact), central_approx(m, l).log_value))
    return out


def write_error_records(records: Iterable[ErrorRecord], path: str) -> None:
    """Write records as UTF-8 CSV, reals printed as shortest round-trip decimals."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow(
                [r.m, r.l, r.n, repr(r.exact_log), repr(r.approx_log), repr(r.rel_error)]
            )
