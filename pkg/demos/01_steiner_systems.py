# # Steiner systems as extremal building blocks
#
# Most lower bounds here come from disjoint copies of a Steiner system
# S(2, r, t): every pair of points lies in exactly one block.  We build a
# few and look at them.

# In[1]:

from hyperturan import construct_sts, construct_affine_plane, construct_projective_plane
from hyperturan import steiner_counts, verify_steiner, degree_profile
from hyperturan.designs import design_spec, parallel_classes

# The Fano plane is STS(7) and also PG(2,2).

# In[2]:

fano = construct_projective_plane(2)
print(fano.edges)
print(verify_steiner(fano), degree_profile(fano).degrees)

# Counts follow from double counting: t(t-1)/(r(r-1)) blocks, (t-1)/(r-1) through each point.

# In[3]:

for t, r in [(7, 3), (9, 3), (13, 3), (25, 5), (13, 4)]:
    print(t, r, steiner_counts(t, r))

# An affine plane AG(2,q) splits into q+1 parallel classes.

# In[4]:

ag = construct_affine_plane(3)
for cls in parallel_classes(ag):
    print([ag.edges[i] for i in cls])

# Triple systems exist for n = 1, 3 mod 6.

# In[5]:

for n in (13, 15, 19, 21):
    H = construct_sts(n)
    print(n, H.m, verify_steiner(H))

# The lookup table knows which designs we can build and which cannot exist.

# In[6]:

for r, t in [(3, 9), (4, 13), (5, 25), (6, 36), (7, 43), (4, 28)]:
    print(r, t, design_spec(r, t).status)
