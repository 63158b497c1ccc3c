"""Acceptance suite: every criterion prints one pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete; without -s they still appear in captured output on failure.
"""

import csv
import math
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from polycoeffs import (
    SamplerConfig,
    central_approx,
    central_error_curve,
    coefficient_multinomial_oracle,
    count_compositions,
    enumerate_compositions,
    error_sweep,
    exact_pmf,
    poly_power_oracle,
    sample_sums,
    std_normal_cdf,
    triangle_row,
)

PHI_REFERENCE = Path(__file__).parent / "data" / "phi_reference.csv"


@contextmanager
def criterion(name, budget_seconds=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"{name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if budget_seconds is not None and elapsed > budget_seconds:
        print(f"{name}: FAIL (took {elapsed:.2f}s, budget {budget_seconds:.0f}s)")
        raise AssertionError(f"{name} exceeded its runtime budget: {elapsed:.2f}s")
    print(f"{name}: PASS ({elapsed:.2f}s)")


def test_criterion_1_golden_triangles():
    tables = {
        0: [[1], [1], [1], [1]],
        1: [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1]],
        2: [[1], [1, 1, 1], [1, 2, 3, 2, 1], [1, 3, 6, 7, 6, 3, 1]],
        3: [[1], [1, 1, 1, 1], [1, 2, 3, 4, 3, 2, 1],
            [1, 3, 6, 10, 12, 12, 10, 6, 3, 1]],
    }
    with criterion("criterion 1 (golden triangle rows 0-3)", budget_seconds=1.0):
        for l, rows in tables.items():
            for k, expected in enumerate(rows):
                assert list(triangle_row(k, l).values) == expected


def test_criterion_2_cross_oracle_equivalence():
    with criterion("criterion 2 (three methods agree, k<=8, l<=4)", budget_seconds=30.0):
        for l in range(5):
            for k in range(9):
                dp = triangle_row(k, l).values
                assert poly_power_oracle(k, l).values == dp
                for n in range(k * l + 1):
                    assert coefficient_multinomial_oracle(k, n, l) == dp[n]


def test_criterion_3_exact_invariants():
    with criterion("criterion 3 (exact row and pmf identities, m<=30, l<=6)"):
        for l in range(7):
            for k in range(31):
                values = triangle_row(k, l).values
                assert sum(values) == (l + 1) ** k
                assert values == values[::-1]
            for m in range(1, 31):
                pmf = exact_pmf(m, l)
                assert sum(pmf.probs) == 1
                mean = sum(n * p for n, p in enumerate(pmf.probs))
                second = sum(n * n * p for n, p in enumerate(pmf.probs))
                assert mean == Fraction(m * l, 2)
                assert second - mean * mean == Fraction(m * ((l + 1) ** 2 - 1), 12)


def test_criterion_4_specialization_identities():
    with criterion("criterion 4 (closed-form central approximations, m in 2..200)"):
        for m in range(2, 201):
            closed = {
                1: (m + 1) * math.log(2) - 0.5 * math.log(2 * math.pi * m),
                2: m * math.log(3) - 0.5 * math.log((4.0 / 3.0) * math.pi * m),
                3: m * math.log(4) - 0.5 * math.log((5.0 / 2.0) * math.pi * m),
                4: m * math.log(5) - math.log(2 * math.sqrt(math.pi * m)),
            }
            for l, expected in closed.items():
                assert abs(central_approx(m, l).log_value - expected) <= 1e-12


def test_criterion_5_central_error_decay():
    m_values = [10, 20, 40, 80, 160, 320]
    with criterion("criterion 5 (central error decay and m=320 thresholds)",
                   budget_seconds=60.0):
        for l in (1, 2, 3, 4):
            rels = [r.rel_error for r in central_error_curve(l, m_values)]
            assert all(a > b for a, b in zip(rels, rels[1:]))
            assert rels[-1] < (0.001 if l == 1 else 0.01)


def test_criterion_6_error_sweep_shape():
    with criterion("criterion 6 (sweep symmetry and boundary growth)"):
        for m in (100, 200):
            for l in (3, 4):
                records = error_sweep(m, l)
                centre = (m * l) // 2
                for n in range(m * l + 1):
                    a = records[n].rel_error
                    b = records[m * l - n].rel_error
                    assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)
                assert records[(m * l) // 10].rel_error > records[centre].rel_error


def test_criterion_7_monte_carlo_goodness_of_fit():
    n_samples = 10 ** 6
    with criterion("criterion 7 (sampled pmf within 5 sigma, N=10^6)",
                   budget_seconds=30.0):
        table = sample_sums(SamplerConfig(m=10, l=4, sample_count=n_samples, seed=7))
        pmf = exact_pmf(10, 4)
        assert sum(table) == n_samples
        for count, prob in zip(table, pmf.probs):
            p = float(prob)
            bound = 5 * math.sqrt(p * (1 - p) / n_samples)
            assert abs(count / n_samples - p) <= bound


def test_criterion_8_phi_accuracy():
    with criterion("criterion 8 (Phi within 1e-9 of the quadrature grid)"):
        with open(PHI_REFERENCE, newline="") as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 1601
        for row in rows:
            assert abs(std_normal_cdf(float(row["z"])) - float(row["phi"])) <= 1e-9


def test_criterion_9_composition_counts():
    with criterion("criterion 9 (counts match enumeration, n<=20, k<=6)",
                   budget_seconds=10.0):
        assert count_compositions(5, 3, 1, 3) == 6
        for k in range(7):
            for a in range(6):
                for b in range(a, 6):
                    for n in range(21):
                        expected = count_compositions(n, k, a, b)
                        assert len(enumerate_compositions(n, k, a, b)) == expected
