# # Exact values for small n
#
# A branch and bound over r-subsets with isomorph rejection near the root.
# The bounds from the previous demo are never used for pruning, so the
# search is an independent check on them.

# In[1]:

from hyperturan import SearchConfig, exact_linear_turan, max_linear_system, upper_bound
from hyperturan import path, star, broom, crown

# In[2]:

for P in (path(2, 3), path(3, 3), star(3, 3), star(4, 3), broom(3), crown(3), path(4, 3)):
    res = exact_linear_turan(9, 3, [P])
    print(f"{str(P):10s} ex = {res.value:3d}  {res.status}  nodes={res.nodes}")

# B_4 at n=9: the search hits (r+1)n/r = 12 exactly, and the witness is AG(2,3).

# In[3]:

res = exact_linear_turan(9, 3, [broom(3)])
print(res.value, upper_bound("b4", 9, 3).value, res.witness.edges)

# Without forbidden patterns this is a maximum packing.

# In[4]:

for n in range(5, 11):
    print(n, max_linear_system(n, 3).value)

# Budgets make long runs stop cleanly with the best system found so far.

# In[5]:

res = exact_linear_turan(10, 3, [crown(3)], SearchConfig(node_budget=2000))
print(res.value, res.status)
