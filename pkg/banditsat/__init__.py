"""
banditsat - CDCL SAT solving with adaptive reset policies

At every restart boundary a two-arm bandit decides between a traditional
restart (keep variable activities) and a reset (randomize them, fully or
keeping the top-k order), rewarded by the learning rate of the window that
follows.

Architecture:
- Formula Context: CNF data model, DIMACS I/O, model checking, brute-force oracle
- Engine Context: the CDCL search loop and its configuration
- Bandit Context: fixed-probability, Thompson and sliding-window UCB policies
- Reset Context: restart-boundary orchestration and activity resets
- Benchmarking Context: batch runs, cactus data, summaries
"""

__version__ = "0.1.0"
