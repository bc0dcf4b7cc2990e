"""
Benchmark instance generators.

Every generator is a pure function of its arguments and a numpy Generator, so a
family written with a given seed is reproducible byte for byte.

Families:
- random_kcnf / random_3cnf: uniform random k-CNF (phase transition near 4.26 for k=3)
- pigeonhole: PHP(p, h), UNSAT whenever p > h
- parity_instance: random XOR systems over a hidden solution, Tseitin-encoded to
  3-CNF with shuffled variable names (the "crypto-like" family)
- counter_reachability: unrolled binary counter asked to reach a target value
  (the "structured verification-like" family, strong locality)
- tseitin_parity: parity constraints on the vertices of a random regular graph
  with odd total charge, always UNSAT and hard for resolution
- backdoor_parity / guarded_counter: the two families of the restart/reset
  comparison. Each has a guard variable numbered 1, which the default branching
  order decides first and negatively:
  - backdoor_parity relaxes every clause of a tseitin_parity core with the guard,
    so the default branch grinds on the core while any assignment that reaches
    a violated core clause before the guard propagates it True and finishes.
  - guarded_counter puts an input-driven counter behind the default polarity and
    a pigeonhole core behind the other, so the default branch only ever sees the
    satisfiable counter and wandering off it costs conflicts.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from banditsat.contexts.formula.cnf import Formula


@dataclass
class _CnfBuilder:
    num_vars: int = 0
    clauses: list[list[int]] = field(default_factory=list)
    guard: int = 0

    def new_var(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def add(self, *lits: int) -> None:
        self.clauses.append([*lits, self.guard] if self.guard else list(lits))

    @contextmanager
    def guarded(self, lit: int) -> Iterator[None]:
        """Append `lit` to every clause added inside the block."""
        self.guard = lit
        try:
            yield
        finally:
            self.guard = 0

    def xor_gate(self, out: int, x: int, y: int) -> None:
        """out <-> x XOR y"""
        self.add(-out, x, y)
        self.add(-out, -x, -y)
        self.add(out, -x, y)
        self.add(out, x, -y)

    def and_gate(self, out: int, x: int, y: int) -> None:
        """out <-> x AND y"""
        self.add(-out, x)
        self.add(-out, y)
        self.add(out, -x, -y)

    def build(self, rng: np.random.Generator | None = None, keep: int = 0) -> Formula:
        """Variables 1..keep keep their indices when rng shuffles the rest."""
        clauses = self.clauses
        if rng is not None:
            # Rename variables so encoding structure is not visible in the indices
            perm = np.concatenate([np.arange(keep), keep + rng.permutation(self.num_vars - keep)]) + 1
            clauses = [[int(np.sign(l)) * int(perm[abs(l) - 1]) for l in c] for c in clauses]
            order = rng.permutation(len(clauses))
            clauses = [clauses[i] for i in order]
        return Formula.from_lists(self.num_vars, clauses)

def random_kcnf(num_vars: int, num_clauses: int, k: int, rng: np.random.Generator) -> Formula:
    """Uniform random k-CNF: k distinct variables per clause, fair random signs."""
    if k > num_vars:
        raise ValueError(f"clause width {k} exceeds variable count {num_vars}")
    clauses = []
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=k, replace=False) + 1
        signs = rng.integers(0, 2, size=k) * 2 - 1
        clauses.append([int(v * s) for v, s in zip(variables, signs)])
    return Formula.from_lists(num_vars, clauses)


def random_3cnf(num_vars: int, ratio: float, rng: np.random.Generator) -> Formula:
    """Random 3-CNF with round(ratio * num_vars) clauses."""
    return random_kcnf(num_vars, int(round(ratio * num_vars)), 3, rng)


def _add_pigeonhole(builder: _CnfBuilder, pigeons: int, holes: int) -> None:
    var = [[builder.new_var() for _ in range(holes)] for _ in range(pigeons)]
    for row in var:
        builder.add(*row)
    for h in range(holes):
        for p in range(pigeons):
            for q in range(p + 1, pigeons):
                builder.add(-var[p][h], -var[q][h])


def pigeonhole(pigeons: int, holes: int) -> Formula:
    """PHP(pigeons, holes): every pigeon in a hole, no hole shared."""
    builder = _CnfBuilder()
    _add_pigeonhole(builder, pigeons, holes)
    return builder.build()


def parity_instance(
    num_vars: int,
    num_equations: int,
    width: int,
    rng: np.random.Generator,
    satisfiable: bool = True,
) -> Formula:
    """
    Random XOR system encoded as 3-CNF.

    Each equation XORs `width` distinct base variables. With satisfiable=True the
    right-hand sides come from a hidden random solution; otherwise they are fair
    coin flips (usually UNSAT once num_equations > num_vars).
    """
    if width < 2 or width > num_vars:
        raise ValueError(f"width must be in [2, {num_vars}], got {width}")
    builder = _CnfBuilder(num_vars=num_vars)
    hidden = rng.integers(0, 2, size=num_vars).astype(bool)

    for _ in range(num_equations):
        members = rng.choice(num_vars, size=width, replace=False)
        rhs = bool(np.logical_xor.reduce(hidden[members])) if satisfiable else bool(rng.integers(0, 2))
        acc = int(members[0]) + 1
        for m in members[1:]:
            out = builder.new_var()
            builder.xor_gate(out, acc, int(m) + 1)
            acc = out
        builder.add(acc if rhs else -acc)

    return builder.build(rng)


def _add_counter(builder: _CnfBuilder, bits: int, steps: int, target: int, driven: bool) -> None:
    if not 0 <= target < (1 << bits):
        raise ValueError(f"target {target} does not fit in {bits} bits")
    states = [[builder.new_var() for _ in range(bits)] for _ in range(steps + 1)]

    for b in states[0]:
        builder.add(-b)

    for t in range(steps):
        carry = builder.new_var() if driven else None
        for i in range(bits):
            cur, nxt = states[t][i], states[t + 1][i]
            if carry is None:
                # Bit 0 always toggles
                builder.add(nxt, cur)
                builder.add(-nxt, -cur)
                carry = cur
                continue
            builder.xor_gate(nxt, cur, carry)
            if i < bits - 1:
                new_carry = builder.new_var()
                builder.and_gate(new_carry, cur, carry)
                carry = new_carry

    hits = []
    for t in range(steps + 1):
        hit = builder.new_var()
        for i, b in enumerate(states[t]):
            builder.add(-hit, b if (target >> i) & 1 else -b)
        hits.append(hit)
    builder.add(*hits)


def counter_reachability(bits: int, steps: int, target: int, driven: bool = False) -> Formula:
    """
    Unrolled `bits`-wide binary counter starting at 0.

    The formula asks whether the counter equals `target` at some step 0..steps,
    so it is SAT exactly when target <= steps (and target < 2**bits). A plain
    counter increments every step and unit propagation alone decides it. With
    driven=True each step adds a free input bit instead of 1, so the solver has
    to choose which steps count.
    """
    builder = _CnfBuilder()
    _add_counter(builder, bits, steps, target, driven)
    return builder.build()


def regular_graph(num_vertices: int, degree: int, rng: np.random.Generator, max_tries: int = 1000) -> list[tuple[int, int]]:
    """
    Random simple `degree`-regular graph on vertices 0..num_vertices-1.

    Pairs up vertex stubs uniformly and retries until the pairing has no loops
    or parallel edges.
    """
    if degree < 1 or degree >= num_vertices or (num_vertices * degree) % 2:
        raise ValueError(f"no simple {degree}-regular graph on {num_vertices} vertices")
    stubs = np.repeat(np.arange(num_vertices), degree)
    for _ in range(max_tries):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        edges = [(int(min(u, v)), int(max(u, v))) for u, v in pairs]
        if len(set(edges)) == len(edges):
            return edges
    raise ValueError(f"no simple {degree}-regular graph found in {max_tries} tries")


def _add_tseitin(builder: _CnfBuilder, num_vertices: int, degree: int, rng: np.random.Generator) -> None:
    edges = regular_graph(num_vertices, degree, rng)
    edge_vars = [builder.new_var() for _ in edges]
    charges = rng.integers(0, 2, size=num_vertices).astype(bool)
    if not np.logical_xor.reduce(charges):
        charges[0] = not charges[0]

    incident: list[list[int]] = [[] for _ in range(num_vertices)]
    for var, (u, v) in zip(edge_vars, edges):
        incident[u].append(var)
        incident[v].append(var)

    for vertex, members in enumerate(incident):
        acc = members[0]
        for m in members[1:]:
            out = builder.new_var()
            builder.xor_gate(out, acc, m)
            acc = out
        builder.add(acc if charges[vertex] else -acc)


def tseitin_parity(num_vertices: int, rng: np.random.Generator, degree: int = 4) -> Formula:
    """
    Edge variables of a random regular graph, one XOR constraint per vertex.

    Vertex charges sum to an odd number while every edge is counted twice, so
    the system is always UNSAT. Resolution refutations grow exponentially with
    the graph's expansion.
    """
    builder = _CnfBuilder()
    _add_tseitin(builder, num_vertices, degree, rng)
    return builder.build(rng)


def backdoor_parity(num_vertices: int, rng: np.random.Generator, degree: int = 4) -> Formula:
    """
    A tseitin_parity core with variable 1 added to every clause.

    SAT, and variable 1 = True satisfies everything. Variable 1 is the lowest
    index and occurs in every learnt clause, so a solver that always starts a
    descent from the top of its activity order keeps setting it False and has
    to refute the core. Any descent that falsifies a core clause before it
    reaches variable 1 propagates it True.
    """
    builder = _CnfBuilder()
    backdoor = builder.new_var()
    with builder.guarded(backdoor):
        _add_tseitin(builder, num_vertices, degree, rng)
    return builder.build(rng, keep=1)


def guarded_counter(bits: int, steps: int, target: int, pigeons: int, rng: np.random.Generator) -> Formula:
    """
    An input-driven counter under selector = False, PHP(pigeons, pigeons-1) under selector = True.

    The selector is variable 1. SAT exactly when the counter can reach `target`,
    and every satisfying assignment sets the selector False. Counter conflicts
    all involve the selector, which keeps it on top of the activity order with
    its saved phase pointing into the counter.
    """
    if pigeons < 2:
        raise ValueError(f"pigeon core needs at least 2 pigeons, got {pigeons}")
    builder = _CnfBuilder()
    selector = builder.new_var()
    with builder.guarded(selector):
        _add_counter(builder, bits, steps, target, driven=True)
    with builder.guarded(-selector):
        _add_pigeonhole(builder, pigeons, pigeons - 1)
    return builder.build(rng, keep=1)
