# %% [markdown]
# The modular protocol on seven cards: announce the card sum mod 7.

# %%
from cardcodes import Hand, Signature
from cardcodes.decode import decode_full, decode_min
from cardcodes.protocols import modn_coloring, reduce_protocol
from cardcodes.verify import check_informative, check_min_informative, check_safe

sig = Signature(3, 3, 1, 0)
col = modn_coloring(sig)
print(sig, col.message_count, sorted(col.class_sizes()))

# %%
# both properties hold
print("informative", check_informative(col, sig).verdict)
print("safe", check_safe(col, sig).verdict)

# %%
# B holds 4,5,6 and hears 4
b = Hand.of([4, 5, 6], 7)
print("A holds", decode_full(b, 4, col, sig))

# %%
# merging sums by residue gives three messages; B now learns only C's card
red = reduce_protocol(col, sig)
print(red.message_count, check_min_informative(red, sig).verdict, check_safe(red, sig).verdict)
for msg in red.messages:
    try:
        print(msg, "->", decode_min(b, msg, red, sig))
    except Exception as exc:  # message impossible for this hand
        print(msg, "->", type(exc).__name__)
