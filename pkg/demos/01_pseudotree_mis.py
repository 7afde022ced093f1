"""
Independence numbers of pseudotrees
===================================

A pseudotree is a connected graph with exactly one cycle. Its independence
number can be computed greedily: solve the trees hanging off the cycle by
dynamic programming, then solve what is left of the cycle as paths.
"""

from pfkernel.graph import Graph
from pfkernel.mis import alpha_pseudotree, alpha_tree, find_small_obstruction
from pfkernel.oracle import alpha_exact
from pfkernel.pseudoforest import decompose_pseudotree

# a 5-cycle 0..4 with a pendant path 5-6 on vertex 0 and a leaf 7 on vertex 2
P = Graph(range(8), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (2, 7)])

d = decompose_pseudotree(P)
print("cycle:", d.cycle)
for t in d.attached:
    print(f"  tree rooted at {t.root}, attached to cycle vertex {t.attachment}")

# Each attached tree gets an include/exclude table. A root is "critical"
# when every maximum independent set of its tree uses it; then its
# attachment point on the cycle is better left out.
for t in d.attached:
    a, table = alpha_tree(t.tree)
    print(f"  tree at {t.root}: alpha={a}, root critical={table[t.root].critical}")

print("alpha(P) =", alpha_pseudotree(P), " oracle:", alpha_exact(P))

# Forbidding vertices (Z) works the same way: they simply may not be chosen.
Z = {5, 7}
print("alpha(P - Z) =", alpha_pseudotree(P, Z), " oracle:", alpha_exact(P.delete(Z)))

# When deleting Z costs something, a handful of Z's vertices already do:
# on a pseudotree three (possibly repeated) suffice.
w = find_small_obstruction(P, Z)
print("small witness inside Z:", w, " alpha(P - w) =", alpha_exact(P.delete(w)))
