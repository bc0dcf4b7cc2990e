"""Beta-distribution helpers used by Thompson sampling."""

import numpy as np


def _check_shape(alpha: float, beta_param: float) -> None:
    if alpha <= 0 or beta_param <= 0:
        raise ValueError(f"beta shape parameters must be positive, got ({alpha}, {beta_param})")


def beta_mean(alpha: float, beta_param: float) -> float:
    """Mean of Beta(alpha, beta_param): alpha / (alpha + beta)."""
    _check_shape(alpha, beta_param)
    return alpha / (alpha + beta_param)


def beta_variance(alpha: float, beta_param: float) -> float:
    """Variance of Beta(alpha, beta_param): ab / ((a+b)^2 (a+b+1))."""
    _check_shape(alpha, beta_param)
    total = alpha + beta_param
    return alpha * beta_param / (total * total * (total + 1.0))


def sample_beta(alpha: float, beta_param: float, rng: np.random.Generator) -> float:
    """One Beta(alpha, beta_param) variate drawn from `rng`."""
    _check_shape(alpha, beta_param)
    return float(rng.beta(alpha, beta_param))
