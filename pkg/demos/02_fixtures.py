# %% [markdown]
# The tabulated six-message colorings and what the checkers say about them.

# %%
from cardcodes import Signature
from cardcodes.fixtures import FIXTURE_NAMES, builtin_fixture
from cardcodes.verify import check_ca2_ca3, check_informative, check_safe

strong, weak = Signature(3, 3, 1, 0), Signature(3, 3, 0, 1)

# %%
for name in FIXTURE_NAMES:
    col, sig = builtin_fixture(name)
    print(f"{name:12s} sig={sig} sizes={sorted(col.class_sizes())}")

# %%
# each six-message table against both eavesdropper models
for name in ("six_chi", "six_chi1", "six_chi2"):
    col, _ = builtin_fixture(name)
    print(name,
          "informative", check_informative(col, strong).verdict,
          "weak", check_safe(col, weak).verdict,
          "strong", check_safe(col, strong).verdict)

# %%
# first witnesses, as printed by the CLI
col, _ = builtin_fixture("six_chi")
for w in check_ca2_ca3(col, weak).witnesses:
    print(w.line())
col, _ = builtin_fixture("six_chi1")
for w in check_safe(col, strong).witnesses[:5]:
    print(w.line())
