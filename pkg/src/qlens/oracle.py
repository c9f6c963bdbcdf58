"""Dense differential-testing oracle: Kronecker padding plus wire permutation.

This module rebuilds a focused gate as an explicit q**n x q**n matrix the
textbook way — pad the gate with an identity Kronecker factor, then conjugate
with the permutation that routes the selected wires to the front.  It is
deliberately naive and allocation-heavy; its only job is to catch bugs in the
focusing fast path, so it never shares code with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidPermutation, ShapeMismatch, SizeGuardExceeded
from .gates import Gate
from .lens import Lens
from .state import State, random_state

# Dense operators are capped at n*log2(q) <= 14 wire-bits by default.
MAX_DENSE_BITS = 14


def check_dense_size(n: int, q: int, max_bits: int | None = None) -> int:
    limit = MAX_DENSE_BITS if max_bits is None else max_bits
    dim = q**n
    if dim > 2**limit:
        raise SizeGuardExceeded(
            f"dense operator on {n} wires (dim {dim}) exceeds 2**{limit} guard"
        )
    return dim


@dataclass(frozen=True)
class DenseOperator:
    """A full q**n x q**n matrix acting on n-wire states."""

    n: int
    q: int
    mat: np.ndarray

    def __post_init__(self):
        dim = self.q**self.n
        if self.mat.shape != (dim, dim):
            raise ShapeMismatch(f"expected {dim}x{dim} matrix, got {self.mat.shape}")

    def apply(self, state: State) -> State:
        if state.n != self.n or state.q != self.q:
            raise ShapeMismatch(
                f"operator on ({self.n}, q={self.q}) applied to ({state.n}, q={state.q})"
            )
        return State(self.n, self.q, self.mat @ state.amps, _trusted=True)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the left factor acts on the more significant wires."""
    return np.kron(np.asarray(a), np.asarray(b))


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    return tuple(inv)


def perm_matrix(n: int, perm: Sequence[int], q: int = 2,
                max_bits: int | None = None) -> DenseOperator:
    """Matrix sending ket(t) to ket(t') with t'[j] = t[perm[j]].

    perm must be a bijection of [0, n); the result is a 0/1 unitary.
    """
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(n)):
        raise InvalidPermutation(f"{list(perm)} is not a permutation of [0, {n})")
    dim = check_dense_size(n, q, max_bits)
    # Digit-shuffle every column index at once instead of looping kets.
    digits = np.empty((n, dim), dtype=np.int64)
    idx = np.arange(dim)
    for k in range(n - 1, -1, -1):
        idx, digits[k] = np.divmod(idx, q)
    rows = np.zeros(dim, dtype=np.int64)
    for j in range(n):
        rows = rows * q + digits[perm[j]]
    mat = np.zeros((dim, dim), dtype=np.complex128)
    mat[rows, np.arange(dim)] = 1.0
    return DenseOperator(n, q, mat)


def build_full_matrix(lens: Lens, gate: Gate,
                      max_bits: int | None = None) -> DenseOperator:
    """Dense matrix of a gate focused at a lens: U(rho)^-1 (M ⊗ I) U(rho).

    rho routes the lens wires to the leading positions (complement wires keep
    their sorted order behind them).  Built from kron and permutation
    conjugation only — independent of the focusing implementation.
    """
    if not gate.is_square:
        raise ShapeMismatch("only square gates have a focused dense form")
    if gate.wires_in != lens.m:
        raise ShapeMismatch(f"gate acts on {gate.wires_in} wires, lens selects {lens.m}")
    n, q = lens.n, gate.q
    dim = check_dense_size(n, q, max_bits)
    rho = lens.idx + lens.complement.idx
    gather = perm_matrix(n, rho, q, max_bits)
    scatter = perm_matrix(n, inverse_permutation(rho), q, max_bits)
    padded = kron(gate.mat, np.eye(q ** (n - lens.m), dtype=np.complex128))
    return DenseOperator(n, q, scatter.mat @ padded @ gather.mat)


def random_unitary(dim: int, rng: np.random.Generator | None = None) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    rng = np.random.default_rng() if rng is None else rng
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    qmat, r = np.linalg.qr(z)
    # Fix the phase ambiguity so the distribution is Haar.
    return qmat * (np.diag(r) / np.abs(np.diag(r)))


def assert_equiv(lens: Lens, gate: Gate, trials: int = 20,
                 rng: np.random.Generator | None = None,
                 max_bits: int | None = None) -> float:
    """Max deviation between the dense operator and focus_apply on random states."""
    from .focus import focus_apply

    rng = np.random.default_rng() if rng is None else rng
    dense = build_full_matrix(lens, gate, max_bits)
    worst = 0.0
    for _ in range(trials):
        s = random_state(lens.n, gate.q, rng)
        got = focus_apply(lens, gate, s)
        want = dense.apply(s)
        worst = max(worst, got.max_dev(want))
    return worst
