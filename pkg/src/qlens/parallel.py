"""Commutative monoid of focused gates: parallel composition without Kronecker products.

A FocusedGate packages a square gate with the sorted lens giving its support
inside an ambient n-wire circuit.  Combining two of them succeeds when the
supports are disjoint (the gates then act side by side) and collapses to the
absorbing error element when they overlap, which is what makes the operation
commutative and associative.
"""

from __future__ import annotations

from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .errors import ShapeMismatch
from .focus import focus_apply, focus_as_gate
from .gates import Gate, identity, null
from .lens import Lens, lens_empty, lens_id, lens_left, lens_right
from .state import State, all_basis_tuples, ket


class FocusedGate:
    """A square gate together with its strictly ascending support lens."""

    __slots__ = ("n", "lens", "gate", "is_err")

    def __init__(self, n: int, lens: Lens, gate: Gate, is_err: bool = False):
        if lens.n != n:
            raise ShapeMismatch(f"lens codomain {lens.n} != ambient {n}")
        if not lens.is_sorted():
            raise ShapeMismatch(f"support lens must be sorted, got {list(lens.idx)}")
        if not gate.is_square or gate.wires_in != lens.m:
            raise ShapeMismatch(
                f"need a square gate on {lens.m} wires, got "
                f"{gate.wires_in}->{gate.wires_out}"
            )
        self.n = n
        self.lens = lens
        self.gate = gate
        self.is_err = is_err

    @property
    def q(self) -> int:
        return self.gate.q

    @property
    def support(self) -> tuple[int, ...]:
        return self.lens.idx

    def apply(self, state: State) -> State:
        """Act on an ambient state by focusing the stored gate at the stored lens."""
        return focus_apply(self.lens, self.gate, state)

    def isclose(self, other: FocusedGate, tol: float = 1e-12) -> bool:
        """Value equality: flag, ambient size, support, gate matrix within tol."""
        return (
            self.is_err == other.is_err
            and self.n == other.n
            and self.q == other.q
            and self.lens.idx == other.lens.idx
            and self.gate.mat.shape == other.gate.mat.shape
            and float(np.max(np.abs(self.gate.mat - other.gate.mat))) <= tol
        )

    def __repr__(self) -> str:
        tag = ", err" if self.is_err else ""
        return f"FocusedGate(n={self.n}, support={list(self.lens.idx)}{tag})"


def focused(lens: Lens, gate: Gate) -> FocusedGate:
    """Smart constructor from an arbitrarily ordered lens.

    Factorizes the lens into sorted basis and permutation; the permutation is
    absorbed into the stored gate so that apply() equals focusing the original
    gate at the original lens.
    """
    basis, perm = lens.factorize()
    if perm.idx == tuple(range(perm.n)):
        inner = gate
    else:
        inner = focus_as_gate(perm, gate)
    return FocusedGate(lens.n, basis, inner)


def identity_focused(n: int, q: int = 2) -> FocusedGate:
    """Unit element: empty support, zero-wire identity."""
    return FocusedGate(n, lens_empty(n), identity(0, q))


def error_focused(n: int, q: int = 2) -> FocusedGate:
    """Absorbing element: full support, zero gate; maps every state to zero."""
    return FocusedGate(n, lens_id(n), null(n, q), is_err=True)


def parallel_gate(f: Gate, g: Gate) -> Gate:
    """Side-by-side gate on f.wires + g.wires wires, built by focusing, not kron."""
    if f.q != g.q:
        raise ShapeMismatch(f"alphabet mismatch: q={f.q} vs q={g.q}")
    p, s = f.wires, g.wires
    left, right = lens_left(p, s), lens_right(p, s)
    q = f.q
    cols = []
    for v in all_basis_tuples(p + s, q):
        st = focus_apply(right, g, ket(v, q))
        st = focus_apply(left, f, st)
        cols.append(st.amps)
    return Gate(np.column_stack(cols), p + s, p + s, q)


def combine(a: FocusedGate, b: FocusedGate) -> FocusedGate:
    """Commutative composition: side-by-side on disjoint supports, error otherwise."""
    if a.n != b.n or a.q != b.q:
        raise ShapeMismatch(
            f"ambient mismatch: (n={a.n}, q={a.q}) vs (n={b.n}, q={b.q})"
        )
    if a.is_err or b.is_err:
        return error_focused(a.n, a.q)
    if not a.lens.disjoint(b.lens):
        return error_focused(a.n, a.q)
    joined = Lens(a.n, a.lens.idx + b.lens.idx)
    return focused(joined, parallel_gate(a.gate, b.gate))


def combine_all(n: int, items: Sequence[FocusedGate],
                pred: Callable[[int], bool] | None = None,
                q: int = 2) -> FocusedGate:
    """Fold combine over the selected indices in ascending order, from the unit."""
    chosen = [fg for i, fg in enumerate(items) if pred is None or pred(i)]
    return reduce(combine, chosen, identity_focused(n, q))


def compose_actions(actions: Sequence[Callable[[State], State]],
                    pred: Callable[[int], bool] | None = None,
                    ) -> Callable[[State], State]:
    """Sequential composition of state actions, folded over ascending indices.

    Matches the composition convention where the right operand acts first, so
    the highest selected index is applied to the state before the others.
    """
    chosen = [a for i, a in enumerate(actions) if pred is None or pred(i)]

    def composed(state: State) -> State:
        for action in reversed(chosen):
            state = action(state)
        return state

    return composed
