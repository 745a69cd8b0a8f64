# # Probing the P_4 ceiling
#
# Disjoint affine planes give (r+1)n/r edges without a linear P_4; it is open
# whether this is best possible.  The probe runs the exact search and
# compares against that ceiling.

# In[1]:

from hyperturan import SearchConfig, conjecture_probe

# In[2]:

for n in range(6, 12):
    pr = conjecture_probe(n, 3, SearchConfig(time_budget=120))
    print(n, pr.result.value, pr.ceiling, pr.status, pr.result.status)

# At n=9 the extremal system should be AG(2,3) itself.

# In[3]:

pr = conjecture_probe(9, 3)
print(pr.shape_checked, pr.shape)
