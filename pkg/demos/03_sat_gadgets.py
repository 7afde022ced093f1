"""
From CNF formulas to Independent Set
====================================

Every clause becomes a chain of triangles (a clause gadget), every variable
becomes an edge t_i - f_i. The variable vertices form the modulator, and
what remains is a mock forest: cycles never share a vertex. The formula is
satisfiable exactly when the graph has an independent set of size k.
"""

from pfkernel.gadgets import clause_gadget, cnf_to_ismfm, parse_dimacs_cnf, spikes
from pfkernel.oracle import OracleBudget, alpha_exact, has_independent_set
from pfkernel.properties import all_maximum_independent_sets

budget = OracleBudget(max_vertices=120)

# One gadget first: k triangles, each with a spike, on a path r0 ... l_{k+1}.
G, labels = clause_gadget(3)
print("gadget with 3 triangles:", len(G), "vertices, alpha =", alpha_exact(G))
S = set(spikes(labels))
for I in all_maximum_independent_sets(G):
    print("  maximum set:", sorted(labels[v] for v in I), " spikes used:", len(I & S))

# Now a formula. (x1 or not x2) and (x2 or x3) and (not x1 or not x3)
F = parse_dimacs_cnf("p cnf 3 3\n1 -2 0\n2 3 0\n-1 -3 0\n")
gi = cnf_to_ismfm(F)
print(f"\nformula: n={F.num_vars}, m={len(F.clauses)}; graph: {len(gi.graph)} vertices, "
      f"|X| = {len(gi.modulator)}, k = {gi.k}")
print("satisfiable:", F.brute_force_sat(),
      " independent set of size k:", has_independent_set(gi.graph, gi.k, budget))

# (x1 or x2) and (not x1) and (not x2) has no satisfying assignment.
F2 = parse_dimacs_cnf("p cnf 2 3\n1 2 0\n-1 0\n-2 0\n")
gi2 = cnf_to_ismfm(F2)
print("satisfiable:", F2.brute_force_sat(),
      " independent set of size k:", has_independent_set(gi2.graph, gi2.k, budget))
