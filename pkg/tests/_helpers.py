"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np

from qlens import Gate, Lens, random_unitary


def random_lens(n: int, m: int, rng: np.random.Generator) -> Lens:
    return Lens(n, tuple(int(i) for i in rng.permutation(n)[:m]))


def random_gate(m: int, rng: np.random.Generator, q: int = 2) -> Gate:
    return Gate(random_unitary(q**m, rng), m, m, q)


def max_entry(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0))
