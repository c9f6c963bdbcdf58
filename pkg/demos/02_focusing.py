"""
Focusing: applying a small gate inside a big state
==================================================

Currying a state along a lens reshapes it so the selected wires index the
rows and the untouched wires index the columns.  A gate then acts as one
small matrix product on the rows; no padded 2^n x 2^n operator is ever built.
"""

import numpy as np

from qlens import (
    Lens,
    cnot,
    curry,
    focus_apply,
    focus_apply_reference,
    hadamard,
    ket,
    random_state,
    state_to_text,
    uncurry,
)

# Start with a 3-wire basis state |1 0 1>.
s = ket((1, 0, 1))
lens = Lens(3, (0, 1))  # the gate will sit on wires 0 and 1

# Currying exposes the selected wires: block (v0, v1) holds the amplitudes of
# the untouched wire for that setting of the selected ones.
view = curry(lens, s)
print("block table shape:", view.blocks.shape)  # (4 outer, 2 inner)
print("block at (1,0):", view.block((1, 0)))

# Round trip is exact: uncurry(curry(s)) == s.
assert np.array_equal(uncurry(lens, view).amps, s.amps)

# Focusing = curry, act, uncurry.  A CNOT on wires (0,1) of |1 0 1>:
out = focus_apply(lens, cnot(), s)
print("cnot on wires (0,1) of |101>:")
print(state_to_text(out))

# The production path is a strided reshape + one gemm; the reference path
# materializes the blocks and loops.  They agree to machine precision.
rng = np.random.default_rng(0)
big = random_state(10, 2, rng)
wide = Lens(10, (7, 2))
fast = focus_apply(wide, cnot(), big)
slow = focus_apply_reference(wide, cnot(), big)
print("fast vs reference deviation:", fast.max_dev(slow))

# A Hadamard focused on the middle wire spreads a basis state into two terms.
h_out = focus_apply(Lens(3, (1,)), hadamard(), ket((1, 0, 1)))
print("hadamard on wire 1 of |101>:")
print(state_to_text(h_out))
