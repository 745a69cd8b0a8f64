# # Upper bounds and matching constructions

# In[1]:

from hyperturan import upper_bound, tree_lower_construction, p4_lower_construction
from hyperturan import verify_b4_extremal, edge_weight_diagnostics, construct_affine_plane, disjoint_union

# All values are exact fractions; `floor` gives the integer bound.

# In[2]:

for kind, k in [("star", 4), ("b4", None), ("crown4", None), ("path", 3), ("p2", None)]:
    rep = upper_bound(kind, 18, 3, k)
    print(kind, rep.statement, rep.value, rep.floor)

# Disjoint copies of S(2, r, (r-1)(k-1)+1) avoid every k-edge tree: each
# component is too small to hold one.

# In[3]:

rep = tree_lower_construction(14, 3, 4)
print(rep.value, rep.witness.m, rep.assumptions)

# For P_4 the block is S(2, r, r^2), giving (r+1)n/r edges.

# In[4]:

rep = p4_lower_construction(18, 3)
print(rep.value, rep.witness.m)

# The same witness meets the B_4 bound with equality, and the certificate
# checker confirms its structure.  Removing one edge breaks clause b.

# In[5]:

W = disjoint_union([construct_affine_plane(3)] * 2)
print(verify_b4_extremal(W))
print(verify_b4_extremal(W.without_edges([W.edges[0]])))

# Edge weights s(e) = sum of degrees on e.

# In[6]:

d = edge_weight_diagnostics(W)
print(d.A, d.B, sum(d.s), sum(x * x for x in W.degrees))
