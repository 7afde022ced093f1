"""
Kernelizing an Independent Set instance
=======================================

Start from a graph with a small vertex set X whose removal leaves a
pseudoforest. The reduction rules shrink the instance to a size that
depends only on |X|, logging each step so a solution of the small
instance can be turned back into one for the original.
"""

import random

from pfkernel.generators import triple_heavy_instance
from pfkernel.kernel import kernelize, lift_solution, verify_all_bounds
from pfkernel.oracle import OracleBudget, alpha_exact, max_independent_set

budget = OracleBudget(max_vertices=120)

inst = triple_heavy_instance(random.Random(4))
alpha = alpha_exact(inst.graph, budget)
inst = inst.evolve(k=alpha)
print(f"original: {len(inst.graph)} vertices, {inst.graph.num_edges()} edges, "
      f"|X| = {len(inst.modulator)}, k = {inst.k}")

reduced, trace = kernelize(inst)
print(f"reduced:  {len(reduced.graph)} vertices, |X'| = {len(reduced.modulator)}, k' = {reduced.k}")

# The trace is plain text, one rule application per line (1-based ids).
print(trace.to_text())

# Size guarantees, stage by stage. The final-stage bound needs a full
# feedback-vertex-set kernel plugged in, so here it is reported as skipped.
for check in verify_all_bounds(inst, trace):
    print("  ", check.line())

# Solve the kernel exactly and carry the answer back.
kernel_solution = max_independent_set(reduced.graph, budget)
I = lift_solution(inst, trace, kernel_solution)
print(f"kernel solution of size {len(kernel_solution)} lifts to {len(I)} "
      f"(need {inst.k}); independent: {inst.graph.is_independent(I)}")
