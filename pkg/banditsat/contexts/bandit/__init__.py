"""
Bandit Context

Responsibilities:
- Two-arm policies over {Restart, Reset}: baseline, fixed probability, Thompson
  sampling (with or without shape-parameter decay), sliding-window UCB
- Beta-distribution math used by Thompson sampling
- Synthetic Bernoulli environment and recovery metric for policy tests

Owns: policy state (posteriors, UCB window)
Never: Touches solver state (the reset context translates arms into actions)
"""

from banditsat.contexts.bandit.beta import beta_mean, beta_variance, sample_beta
from banditsat.contexts.bandit.policies import (
    ARMS,
    Arm,
    BanditPolicy,
    BaselinePolicy,
    BetaArm,
    FixedProbabilityPolicy,
    SWUCBPolicy,
    ThompsonPolicy,
    pick_larger,
)
from banditsat.contexts.bandit.simulation import (
    SimulationResult,
    simulate_bernoulli_env,
    steps_to_recover,
)

__all__ = [
    # Arms and policies
    "Arm",
    "ARMS",
    "BanditPolicy",
    "BaselinePolicy",
    "FixedProbabilityPolicy",
    "ThompsonPolicy",
    "SWUCBPolicy",
    "BetaArm",
    "pick_larger",
    # Beta math
    "beta_mean",
    "beta_variance",
    "sample_beta",
    # Simulation
    "simulate_bernoulli_env",
    "steps_to_recover",
    "SimulationResult",
]
