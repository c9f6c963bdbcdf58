"""
Parallel composition: a commutative monoid of focused gates
===========================================================

Gates acting on disjoint wires commute, so "apply all of these side by side"
should not care about ordering.  FocusedGate makes that algebra explicit:
combining two focused gates merges their supports when disjoint and
collapses to an absorbing error element when they overlap.
"""

import numpy as np

from qlens import (
    cnot,
    combine,
    combine_all,
    compose_actions,
    focused,
    hadamard,
    identity_focused,
    ket,
    lens_pair,
    lens_single,
    random_state,
    swap,
)

n = 6
h_on_0 = focused(lens_single(n, 0), hadamard())
cnot_on_24 = focused(lens_pair(n, 2, 4), cnot())
h_on_5 = focused(lens_single(n, 5), hadamard())

# Disjoint supports combine into one focused gate on the union.
both = combine(h_on_0, cnot_on_24)
print("combined support:", both.support)

# Order never matters; overlapping supports collapse to the error element.
assert combine(h_on_0, cnot_on_24).isclose(combine(cnot_on_24, h_on_0))
clash = combine(cnot_on_24, focused(lens_pair(n, 4, 5), cnot()))
print("overlapping combine is the error element:", clash.is_err)

# The unit element has empty support and changes nothing.
unit = identity_focused(n)
assert combine(unit, h_on_5).isclose(h_on_5)

# Folding a disjoint family gives the same action as applying the gates
# one after another.
family = [h_on_0, cnot_on_24, h_on_5]
folded = combine_all(n, family)
sequential = compose_actions([fg.apply for fg in family])
s = random_state(n, 2, np.random.default_rng(3))
print("fold vs sequential deviation:",
      folded.apply(s).max_dev(sequential(s)))

# The reversal circuit is the fold of its swap family.
swaps = [focused(lens_pair(n, i, n - 1 - i), swap()) for i in range(n // 2)]
reverse_all = combine_all(n, swaps)
out = reverse_all.apply(ket((1, 1, 1, 0, 0, 0)))
print("|111000> reversed via the monoid:",
      [t for t, a in out.decompose() if abs(a) > 1e-12])
