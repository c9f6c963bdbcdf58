"""
Example circuits: GHZ preparation, wire reversal, the nine-wire code
====================================================================

Circuits are flat lists of (lens, gate) steps.  Components stay reusable:
the nine-wire encoder embeds the three-wire encoders through lenses instead
of flattening anything into one big matrix.
"""

from qlens import (
    ghz_circuit,
    ghz_state,
    ket,
    lens_single,
    marginal,
    random_state,
    reversal_circuit,
    shor_components,
    state_to_text,
)
import numpy as np

# --- GHZ ladder -----------------------------------------------------------
# One Hadamard, then a chain of CNOTs, each shifted one wire down.
for wires in (2, 5, 12):
    circ = ghz_circuit(wires - 1)
    out = circ.run(ket((0,) * wires))
    print(f"ghz on {wires} wires: {len(circ.steps)} steps, "
          f"deviation from closed form {out.max_dev(ghz_state(wires)):.2e}")

print()
print("the 3-wire ghz state:")
print(state_to_text(ghz_circuit(2).run(ket((0, 0, 0)))))

# --- Reversal -------------------------------------------------------------
# floor(n/2) swaps reverse the wire order of any basis state.
rev = reversal_circuit(5)
print()
print("reversal steps:", [s.lens.idx for s in rev.steps])
out = rev.run(ket((1, 1, 0, 0, 0)))
print("|11000> reversed:", [t for t, a in out.decompose() if a != 0])

# Marginals confirm the reversal on superpositions as well: the weight on
# wire i moves to wire n-1-i.
s = random_state(5, 2, np.random.default_rng(7))
rs = rev.run(s)
for i in range(5):
    before = marginal(lens_single(5, i), s)
    after = marginal(lens_single(5, 4 - i), rs)
    assert np.allclose(before, after, atol=1e-12)
print("marginals migrate wire i -> wire n-1-i: ok")

# --- The nine-wire code ---------------------------------------------------
# Encoder and decoder are built from three-wire pieces embedded by lenses.
comps = shor_components()
print()
print("encoder steps:", len(comps["shor_enc"].steps),
      "decoder steps:", len(comps["shor_dec"].steps))

for i in (0, 1):
    inp = ket((i,) + (0,) * 8)
    out = comps["shor_dec"].run(comps["shor_enc"].run(inp))
    print(f"decode(encode(|{i}00000000>)) deviation: {out.max_dev(inp):.2e}")

# The encoded logical zero is a superposition of 8 basis states.
encoded = comps["shor_enc"].run(ket((0,) * 9))
support = [t for t, a in encoded.decompose() if abs(a) > 1e-12]
print("encoded |0...0> spreads over", len(support), "basis states")
