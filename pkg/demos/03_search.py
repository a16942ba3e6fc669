# %% [markdown]
# Exhaustive search: the fewest messages for a safe protocol on (3,3,1).

# %%
from cardcodes import Signature
from cardcodes.search import (Constraints, class_size_profiles, find_coloring, max_class_size, min_class_size,
                              uniform_profiles)

sig = Signature(3, 3, 1, 0)

# %%
# five messages never suffice, six do
for k in (5, 6):
    res = find_coloring(sig, Constraints("proper", "safe", k=k))
    print(k, res.outcome, res.nodes_explored, f"{res.elapsed:.3f}s")

# %%
# with only minimal informativeness two messages are enough
res = find_coloring(sig, Constraints("min_informative", "safe", k=2))
print(res.outcome, sorted(res.coloring.class_sizes()))

# %%
# class sizes of a safe six-coloring lie between these bounds
low, high = min_class_size(sig), max_class_size(sig)
profiles = class_size_profiles(35, 6, low, high)
print(low, high, profiles)
print("uniform:", uniform_profiles(profiles, high))

# %%
# the uniform profiles have no safe realization (takes several seconds each)
for p in uniform_profiles(profiles, high):
    res = find_coloring(sig, Constraints("proper", "safe", k=6, size_profile=p))
    print(p, res.outcome, res.nodes_explored, f"{res.elapsed:.1f}s")
