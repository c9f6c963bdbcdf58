"""Example circuits: the nine-wire repetition code, GHZ preparation, reversal.

A circuit is a flat list of (lens, gate) steps applied left to right; larger
circuits are assembled by composing each sub-step's lens with the embedding
lens, so subcircuits stay reusable components instead of flattened matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch
from .focus import curry, focus_apply
from .gates import Gate, cnot, hadamard, swap, toffoli
from .lens import Lens, lens_pair, lens_single
from .oracle import check_dense_size
from .state import State, all_basis_tuples, ket, zero_state


@dataclass(frozen=True)
class Step:
    lens: Lens
    gate: Gate
    name: str | None = None


@dataclass(frozen=True)
class Circuit:
    """An n-wire circuit as an ordered sequence of focused gate applications."""

    n: int
    steps: tuple[Step, ...]
    q: int = 2

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for k, step in enumerate(self.steps):
            if step.lens.n != self.n:
                raise ShapeMismatch(f"step {k}: lens targets {step.lens.n} of {self.n} wires")
            if not step.gate.is_square or step.gate.wires_in != step.lens.m:
                raise ShapeMismatch(
                    f"step {k}: gate arity {step.gate.wires_in} != lens arity {step.lens.m}"
                )
            if step.gate.q != self.q:
                raise ShapeMismatch(f"step {k}: gate q={step.gate.q}, circuit q={self.q}")

    def run(self, state: State, workers: int | None = None) -> State:
        if state.n != self.n or state.q != self.q:
            raise ShapeMismatch(
                f"circuit on ({self.n}, q={self.q}) run on ({state.n}, q={state.q})"
            )
        for step in self.steps:
            state = focus_apply(step.lens, step.gate, state, workers)
        return state

    def embedded(self, lens: Lens) -> Circuit:
        """Reinterpret this circuit as steps of a larger one along a lens."""
        if lens.m != self.n:
            raise ShapeMismatch(f"embedding lens selects {lens.m} wires, circuit has {self.n}")
        steps = tuple(Step(lens.compose(s.lens), s.gate, s.name) for s in self.steps)
        return Circuit(lens.n, steps, self.q)

    def to_gate(self, max_bits: int | None = None) -> Gate:
        """Collapse to a dense gate (guarded; intended for small circuits only)."""
        check_dense_size(self.n, self.q, max_bits)
        cols = [self.run(ket(v, self.q)).amps for v in all_basis_tuples(self.n, self.q)]
        return Gate(np.column_stack(cols), self.n, self.n, self.q)


def bit_flip_encoder() -> Circuit:
    """Copy wire 0 onto wires 1 and 2: |i,j,k> -> |i, i+j, i+k>."""
    cn = cnot()
    return Circuit(3, (
        Step(Lens(3, (0, 1)), cn, "cnot"),
        Step(Lens(3, (0, 2)), cn, "cnot"),
    ))


def bit_flip_decoder() -> Circuit:
    """Undo the copies, then majority-correct wire 0 from the syndrome wires."""
    enc = bit_flip_encoder()
    return Circuit(3, enc.steps + (Step(Lens(3, (1, 2, 0)), toffoli(), "toffoli"),))


def hadamard_layer() -> Circuit:
    """A Hadamard on each of the three wires."""
    h = hadamard()
    return Circuit(3, tuple(Step(lens_single(3, i), h, "hadamard") for i in range(3)))


def sign_flip_encoder() -> Circuit:
    enc, layer = bit_flip_encoder(), hadamard_layer()
    return Circuit(3, enc.steps + layer.steps)


def sign_flip_decoder() -> Circuit:
    layer, dec = hadamard_layer(), bit_flip_decoder()
    return Circuit(3, layer.steps + dec.steps)


def shor_encoder() -> Circuit:
    """Sign-flip encode across wires 0,3,6, then bit-flip encode each triple."""
    sfe, bfe = sign_flip_encoder(), bit_flip_encoder()
    steps = sfe.embedded(Lens(9, (0, 3, 6))).steps
    for triple in ((6, 7, 8), (3, 4, 5), (0, 1, 2)):
        steps += bfe.embedded(Lens(9, triple)).steps
    return Circuit(9, steps)


def shor_decoder() -> Circuit:
    """Mirror of the encoder: bit-flip decode the triples, then sign-flip decode."""
    bfd, sfd = bit_flip_decoder(), sign_flip_decoder()
    steps: tuple[Step, ...] = ()
    for triple in ((0, 1, 2), (3, 4, 5), (6, 7, 8)):
        steps += bfd.embedded(Lens(9, triple)).steps
    steps += sfd.embedded(Lens(9, (0, 3, 6))).steps
    return Circuit(9, steps)


def shor_components() -> dict[str, Circuit]:
    """All building blocks of the nine-wire code, keyed by conventional names."""
    return {
        "bit_flip_enc": bit_flip_encoder(),
        "bit_flip_dec": bit_flip_decoder(),
        "hadamard3": hadamard_layer(),
        "sign_flip_enc": sign_flip_encoder(),
        "sign_flip_dec": sign_flip_decoder(),
        "shor_enc": shor_encoder(),
        "shor_dec": shor_decoder(),
    }


def ghz_circuit(depth: int) -> Circuit:
    """Entangler on depth+1 wires: Hadamard on wire 0, then a CNOT ladder.

    Defined recursively: the depth-d circuit is the depth-(d-1) circuit on
    the first d wires followed by a CNOT on the pair (d-1, d).
    """
    if depth < 0:
        raise ShapeMismatch(f"depth must be >= 0, got {depth}")
    if depth == 0:
        return Circuit(1, (Step(lens_single(1, 0), hadamard(), "hadamard"),))
    inner = ghz_circuit(depth - 1)
    embedding = lens_single(depth + 1, depth).complement
    steps = inner.embedded(embedding).steps
    steps += (Step(lens_pair(depth + 1, depth - 1, depth), cnot(), "cnot"),)
    return Circuit(depth + 1, steps)


def ghz_state(wires: int) -> State:
    """(|0..0> + |1..1>)/sqrt(2) on the given number of wires."""
    if wires < 1:
        raise ShapeMismatch(f"need at least one wire, got {wires}")
    s = zero_state(wires)
    amps = s.amps.copy()
    amps[0] = amps[-1] = math.sqrt(0.5)
    return State(wires, 2, amps, _trusted=True)


def reversal_circuit(n: int) -> Circuit:
    """floor(n/2) swaps pairing wire i with wire n-1-i; reverses basis tuples."""
    if n < 0:
        raise ShapeMismatch(f"wire count must be >= 0, got {n}")
    sw = swap()
    steps = tuple(
        Step(lens_pair(n, i, n - 1 - i), sw, "swap") for i in range(n // 2)
    )
    return Circuit(n, steps)


def marginal(lens: Lens, state: State) -> np.ndarray:
    """Block-norm table over the lens wires: entry v is the l2 norm of block v.

    Independent of the complement ordering, so it serves as the observable
    marginal of the selected wires.
    """
    view = curry(lens, state)
    return np.linalg.norm(view.blocks, axis=1)
