# Rank an arbitrary connected graph: a small barbell -- two triangles
# joined through a bridge node.
#
#     0         5
#     | \       | \
#     |  2 - 3 - 4 |
#     | /       | /
#     1         6

from agglorank import from_edge_list, imc_all, to_edge_list

barbell = from_edge_list([
    (0, 1), (0, 2), (1, 2),   # left triangle
    (2, 3), (3, 4),           # bridge
    (4, 5), (4, 6), (5, 6),   # right triangle
])
print(to_edge_list(barbell))

report = imc_all(barbell)
print(f"phi = {report.phi},  L = {report.avg_path_length}")
for entry in report.entries:
    print(f"  node {entry.node}: imc = {entry.imc} "
          f"(contracting it leaves {entry.contracted_order} nodes)")

# The triangle corners that touch the bridge (2 and 4) win: contracting one
# swallows its whole triangle plus the bridge node, leaving just 4 nodes.
# The bridge node 3 itself only absorbs its two endpoints and comes second.
# Degree and position both matter.
assert [e.node for e in report.entries[:3]] == [2, 4, 3]

# Exactness matters for ties: 2 and 4 are mirror images and score literally
# the same rational, not floats that happen to be close.
assert report.entries[0].imc == report.entries[1].imc
