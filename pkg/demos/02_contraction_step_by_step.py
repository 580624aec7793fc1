# What node contraction actually does, one step at a time.

from agglorank import contract, from_edge_list, phi, to_edge_list

# A 6-node path: 0 - 1 - 2 - 3 - 4 - 5
g = from_edge_list([(i, i + 1) for i in range(5)])
print("start:")
print(to_edge_list(g))
print(f"phi = {phi(g)}")

# Contract the middle node 2.  It disappears together with its neighbors
# 1 and 3; one merged node takes their place and inherits their outside
# edges (to 0 and to 4).  Survivors are renumbered in ascending order and
# the merged node always gets the largest id.
result = contract(g, 2)
print("\nafter contracting node 2:")
print(to_edge_list(result.graph))
print(f"merged node id: {result.merged_into}")
print(f"surviving ids:  {result.old_to_new}")
print(f"phi = {phi(result.graph)}")

# The 6-node path became a 4-node path: order drops by deg(v), always.
assert result.graph.n == g.n - 2

# Contracting an end node only swallows one neighbor.
end = contract(g, 0)
print("\nafter contracting node 0 instead:")
print(to_edge_list(end.graph))
print(f"phi = {phi(end.graph)}")

# phi grew more for the middle node, which is exactly why the importance
# score 1 - phi(G)/phi(G') ranks inner path nodes above the ends.
