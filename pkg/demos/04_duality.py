# %% [markdown]
# Complementing every hand swaps the roles of A and B. Informativeness survives;
# safety does not, at least for (4,2,1).

# %%
from cardcodes import Signature
from cardcodes.protocols import dual_protocol, modn_coloring
from cardcodes.search import Constraints, find_coloring
from cardcodes.verify import check_informative, check_safe

sig = Signature(3, 3, 1, 0)
dual, dsig = dual_protocol(modn_coloring(sig), sig)
print(dsig, check_informative(dual, dsig).verdict, check_safe(dual, dsig).verdict)

# %%
rep = check_safe(dual, dsig, all_witnesses=True)
print(len(rep.witnesses), "violations, e.g.")
for w in rep.witnesses[:3]:
    print(" ", w.line())

# %%
# no informative safe coloring exists for (4,2,1) with any number of messages
for k in (6, 7, 10, 35):
    print(k, find_coloring(dsig, Constraints("proper", "safe", k=k)).outcome)

# %%
# the weak eavesdropper version does carry over
wsig = Signature(3, 3, 0, 1)
wdual, wdsig = dual_protocol(modn_coloring(wsig), wsig)
print(wdsig, check_informative(wdual, wdsig).verdict, check_safe(wdual, wdsig).verdict)
