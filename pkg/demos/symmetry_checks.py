"""
The symmetry group and its graph model
======================================

An order-5040 group of integer matrices permutes the parameter vectors
without changing the underlying linear form (up to an explicit ratio of
factorials).  The same group appears a second time as the stabilizer of
a vertex class in a 28-vertex graph, which is where the bound 5040
really comes from.
"""

from zetaforms import (
    Q_from_sum,
    a_to_pq,
    automorphism_order,
    build_G8,
    factorial_ratio,
    full_group,
    generators,
    hyperplane_values,
    orbit,
    pair_graph,
    stabilizer_check,
)

# Five involutions generate the group.
gens = generators()
print("generators:", len(gens), " group order:", len(full_group()))

# Orbits of parameter vectors.  The symmetric point is fixed; generic
# vectors have the full orbit.
for a in ((1,) * 8, (1, 2, 1, 1, 2, 1, 1, 1), (8, 16, 10, 15, 12, 16, 18, 13)):
    print("orbit size of %s: %d" % (a, orbit(a).size))

# The leading coefficient transforms by a ratio of factorials of the
# hyperplane values.  Transporting along a generator and correcting by
# that ratio lands exactly on the original integer.
a = (2, 1, 1, 1, 1, 1, 1, 2)
g = gens[2]
moved = g.apply(a)
ratio = factorial_ratio(g, a)
assert Q_from_sum(a_to_pq(moved)) == Q_from_sum(a_to_pq(a)) * ratio
print("factorial transport checks out on", a)

# The 28 hyperplane forms label the edges of the complete graph on 8
# letters, so pairs of letters form a 12-regular graph on 28 vertices.
g8 = build_G8()
print("graph: %d vertices, %d edges" % (g8.n_vertices, g8.n_edges))

# Automorphism counts for the small members of the family, by honest
# backtracking, and the stabilizer correspondence for the big one.
for n in (4, 5):
    print("automorphisms of the %d-letter graph: %d"
          % (n, automorphism_order(pair_graph(n))))
rep = stabilizer_check()
print("stabilizer correspondence ok:", rep.ok,
      " image order:", rep.image_order)

# hyperplane_values(a).h is the vector the factorials are taken from.
hv = hyperplane_values((1,) * 8)
print("h at the symmetric point:", sorted(hv.h))
