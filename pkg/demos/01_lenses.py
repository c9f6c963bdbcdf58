"""
Lenses: the wiring combinatorics
================================

A lens records which wires of a large circuit a component sits on.
Everything below is pure index bookkeeping; no amplitudes are involved yet.
"""

from qlens import Lens, lens_pair, lens_single

# A lens embeds 2 source wires into a 3-wire system: source wire 0 rides on
# target wire 0, source wire 1 rides on target wire 2.
lens = Lens(3, (0, 2))
print("lens:", lens)
print("selects", lens.m, "of", lens.n, "wires")

# extract is the get: project a full tuple onto the selected wires.
t = ("a", "b", "c")
print("extract", t, "->", lens.extract(t))

# The complement lens covers the untouched wires, always sorted.
print("complement:", lens.complement)
print("complement view:", lens.complement.extract(t))

# merge is the put: rebuild the full tuple from both views.
print("merge back:", lens.merge(("a", "c"), ("b",)))
assert lens.merge(lens.extract(t), lens.complement.extract(t)) == t

# Lenses compose: select along one, then along another.
outer = Lens(5, (4, 0, 2))
inner = Lens(3, (2, 0))
print("composition:", outer.compose(inner))  # picks wires (2, 4)

# Any lens factors into a sorted basis and a permutation.
crossed = Lens(4, (3, 1, 0))
basis, perm = crossed.factorize()
print("factorize", crossed, "->", basis, "then", perm)
assert basis.compose(perm).idx == crossed.idx

# Convenience constructors mirror common wiring patterns.
print("pair:", lens_pair(6, 2, 5))
print("single:", lens_single(6, 3))
print("disjoint?", lens_pair(6, 0, 1).disjoint(lens_pair(6, 4, 5)))
