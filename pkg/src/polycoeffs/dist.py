"""Distribution of the sum of m i.i.d. uniform draws from {0, ..., l}.

The exact side works in rational arithmetic (numerators are triangle
coefficients, the denominator is (l+1)^m), so normalization and moment
identities can be asserted with zero tolerance. The sampler provides an
independent stochastic check.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffs import DEFAULT_MAX_ROW_ENTRIES, ResourceLimitError, triangle_row

DEFAULT_MAX_DRAWS = 100_000_000


@dataclass(frozen=True)
class Moments:
    """Exact mean and variance of the sum, as rationals."""

    m: int
    l: int
    mean: Fraction
    variance: Fraction


@dataclass(frozen=True)
class ExactPmf:
    """probs[n] = P[sum = n] for n in 0..m*l, as exact rationals."""

    m: int
    l: int
    probs: tuple[Fraction, ...]


@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic Monte Carlo run: (m, l) plus sample count and seed."""

    m: int
    l: int
    sample_count: int
    seed: int


def _check_ml(m: int, l: int) -> None:
    if m < 1:
        raise ValueError(f"need at least one summand, got m={m}")
    if l < 0:
        raise ValueError(f"part bound must be nonnegative, got l={l}")


def moments(m: int, l: int) -> Moments:
    """Exact mean m*l/2 and variance m*((l+1)^2 - 1)/12."""
    _check_ml(m, l)
    return Moments(
        m=m,
        l=l,
        mean=Fraction(m * l, 2),
        variance=Fraction(m * ((l + 1) ** 2 - 1), 12),
    )


def exact_pmf(m: int, l: int, max_entries: int = DEFAULT_MAX_ROW_ENTRIES) -> ExactPmf:
    """P[sum = n] as the exact rational coefficient(m, n, l) / (l+1)^m."""
    _check_ml(m, l)
    row = triangle_row(m, l, max_entries=max_entries)
    denom = (l + 1) ** m
    return ExactPmf(m=m, l=l, probs=tuple(Fraction(v, denom) for v in row.values))


def _uniform_draws(bitgen: np.random.PCG64, total: int, l: int) -> np.ndarray:
    """total draws uniform on {0, ..., l} by rejection sampling.

    Each 64-bit word from the generator is split into floor(64/b) chunks of
    b = bit_length(l) bits, low bits first; chunks larger than l are
    rejected. No modulo reduction, so no bias.
    """
    bits = l.bit_length()
    mask = np.uint64((1 << bits) - 1)
    per_word = 64 // bits
    accept_rate = (l + 1) / (1 << bits)
    out = np.empty(total, dtype=np.int64)
    filled = 0
    while filled < total:
        need = total - filled
        n_words = int(need / (per_word * accept_rate)) + 8
        words = bitgen.random_raw(n_words)
        chunks = np.empty(n_words * per_word, dtype=np.uint64)
        for j in range(per_word):
            chunks[j::per_word] = (words >> np.uint64(j * bits)) & mask
        accepted = chunks[chunks <= l]
        take = min(accepted.size, need)
        out[filled:filled + take] = accepted[:take].astype(np.int64)
        filled += take
    return out


def sample_sums(cfg: SamplerConfig, max_draws: int = DEFAULT_MAX_DRAWS) -> list[int]:
    """Frequency table over {0, ..., m*l} of sample_count simulated sums.

    Deterministic: identical configs give identical tables. Randomness comes
    from NumPy's PCG64 raw 64-bit stream seeded with cfg.seed, consumed by
    the rejection sampler in _uniform_draws.
    """
    _check_ml(cfg.m, cfg.l)
    if cfg.sample_count < 1:
        raise ValueError(f"sample_count must be positive, got {cfg.sample_count}")
    if not 0 <= cfg.seed < 2 ** 64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {cfg.seed}")
    total = cfg.m * cfg.sample_count
    if total > max_draws:
        raise ResourceLimitError(
            f"{total} uniform draws exceed the budget of {max_draws}"
        )
    size = cfg.m * cfg.l + 1
    if size > DEFAULT_MAX_ROW_ENTRIES:
        raise ResourceLimitError(
            f"outcome table with {size} cells exceeds the budget of {DEFAULT_MAX_ROW_ENTRIES}"
        )
    if cfg.l == 0:
        table = [0] * size
        table[0] = cfg.sample_count
        return table
    draws = _uniform_draws(np.random.PCG64(cfg.seed), total, cfg.l)
    sums = draws.reshape(cfg.sample_count, cfg.m).sum(axis=1)
    counts = np.bincount(sums, minlength=size)
    return [int(c) for c in counts]
