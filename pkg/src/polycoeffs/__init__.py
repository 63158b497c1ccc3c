"""Exact (l+1)-nomial triangle coefficients, the distribution of sums of
discrete uniform variables, and log-space normal approximations to both."""

from .analysis import (
    ErrorRecord,
    central_error_curve,
    error_sweep,
    log_of_big_integer,
    write_error_records,
)
from .approx import (
    LogApprox,
    cc_phi_approx,
    central_approx,
    clt_limit_variance,
    pointwise_approx,
    std_normal_cdf,
    std_normal_pdf,
)
from .coeffs import (
    ResourceLimitError,
    TriangleRow,
    central_coefficient,
    coefficient,
    coefficient_multinomial_oracle,
    poly_power_oracle,
    triangle_row,
)
from .compositions import count_compositions, enumerate_compositions
from .dist import ExactPmf, Moments, SamplerConfig, exact_pmf, moments, sample_sums

__version__ = "0.1.0"

__all__ = [
    "ErrorRecord",
    "ExactPmf",
    "LogApprox",
    "Moments",
    "ResourceLimitError",
    "SamplerConfig",
    "TriangleRow",
    "cc_phi_approx",
    "central_approx",
    "central_coefficient",
    "central_error_curve",
    "clt_limit_variance",
    "coefficient",
    "coefficient_multinomial_oracle",
    "count_compositions",
    "enumerate_compositions",
    "error_sweep",
    "exact_pmf",
    "log_of_big_integer",
    "moments",
    "poly_power_oracle",
    "sample_sums",
    "std_normal_cdf",
    "std_normal_pdf",
    "triangle_row",
    "write_error_records",
]
