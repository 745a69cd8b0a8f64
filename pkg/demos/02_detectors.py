# # Finding small trees inside linear hypergraphs
#
# Patterns are r-expansions of graph trees: each graph edge gets r-2 new
# vertices.  The crown is the odd one out (a base edge with three disjoint arms).

# In[1]:

from hyperturan import construct_sts, construct_affine_plane, disjoint_union
from hyperturan import star, path, broom, crown, contains, contains_pattern_generic
from hyperturan import find_crown_with_base

P4 = path(4, 3)
print(P4, P4.hypergraph.n, P4.roles)

# AG(2,3) has 9 points, so a linear P_4 (needs 9 vertices, connected) could
# fit in principle.  It does not:

# In[2]:

ag = construct_affine_plane(3)
print(contains(ag, P4))
print(contains(ag, broom(3)))

# STS(13) is larger and contains everything we ask for.

# In[3]:

H = construct_sts(13)
for P in (star(4, 3), path(4, 3), broom(3), crown(3)):
    emb = contains(H, P)
    print(P, emb.host_edges, emb.is_valid(P, H))

# The specialized detectors are cross-checked against a plain backtracking
# embedder; the two agree on whether a copy exists.

# In[4]:

two = disjoint_union([ag, ag])
for P in (star(4, 3), path(4, 3), broom(3), crown(3)):
    print(P, contains(two, P) is not None, contains_pattern_generic(two, P) is not None)

# With high enough degrees a crown on a given base is found greedily.

# In[5]:

emb = find_crown_with_base(H, H.edges[0])
print(emb.route, emb.host_edges)
