"""Quantum states as dense complex amplitude tables indexed by wire tuples.

Storage convention: the amplitude of tuple (i0, .., i(n-1)) sits at flat
position sum(ik * q**(n-1-k)) — wire 0 is most significant.  This is the
C-order ravel of a (q,)*n array and matches the lexicographic ordering of the
computational basis.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IndexOutOfRange, ParseError, ShapeMismatch, SizeGuardExceeded

# Desk-scale ceiling for dense state allocation (number of amplitudes).
MAX_STATE_ENTRIES = 2**30

# Default absolute tolerance for state comparison; double precision stands in
# for exact complex scalars, so comparisons always carry a tolerance.
DEFAULT_TOL = 1e-9

BasisTuple = tuple[int, ...]


def check_allocation(n: int, q: int, max_entries: int | None = None) -> int:
    """Validate that a q**n amplitude table fits the guard; returns q**n."""
    if n < 0:
        raise IndexOutOfRange(f"negative wire count {n}")
    if q < 1:
        raise IndexOutOfRange(f"alphabet size must be positive, got {q}")
    limit = MAX_STATE_ENTRIES if max_entries is None else max_entries
    dim = q**n
    if dim > limit:
        raise SizeGuardExceeded(f"{q}**{n} = {dim} amplitudes exceeds guard {limit}")
    return dim


def tuple_to_index(v: Sequence[int], q: int) -> int:
    """Flat position of a basis tuple under the big-endian encoding."""
    pos = 0
    for x in v:
        if not 0 <= x < q:
            raise IndexOutOfRange(f"symbol {x} outside [0, {q})")
        pos = pos * q + x
    return pos


def index_to_tuple(pos: int, n: int, q: int) -> BasisTuple:
    """Inverse of tuple_to_index."""
    out = [0] * n
    for k in range(n - 1, -1, -1):
        pos, out[k] = divmod(pos, q)
    return tuple(out)


def all_basis_tuples(n: int, q: int = 2) -> Iterator[BasisTuple]:
    """All q**n tuples in lexicographic (= flat index) order."""
    return product(range(q), repeat=n)


class State:
    """Immutable dense state of ``n`` wires over the alphabet {0..q-1}."""

    __slots__ = ("n", "q", "amps")

    def __init__(self, n: int, q: int, amps: np.ndarray, *, _trusted: bool = False):
        dim = check_allocation(n, q)
        if _trusted:
            a = amps
        else:
            a = np.ascontiguousarray(amps, dtype=np.complex128)
            if a.shape != (dim,):
                raise ShapeMismatch(f"expected {dim} amplitudes, got shape {a.shape}")
            if not np.all(np.isfinite(a.view(np.float64))):
                raise ShapeMismatch("amplitudes must be finite")
            if a is amps:
                a = a.copy()
        a.setflags(write=False)
        self.n = n
        self.q = q
        self.amps = a

    def amplitude(self, v: Sequence[int]) -> complex:
        if len(v) != self.n:
            raise ShapeMismatch(f"expected arity {self.n}, got {len(v)}")
        return complex(self.amps[tuple_to_index(v, self.q)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def is_unit(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= tol

    def inner(self, other: State) -> complex:
        """Inner product, conjugate-linear in self."""
        self._check_compatible(other)
        return complex(np.vdot(self.amps, other.amps))

    def decompose(self) -> list[tuple[BasisTuple, complex]]:
        """All (basis tuple, amplitude) pairs; re-summing them rebuilds the state exactly."""
        return [
            (index_to_tuple(i, self.n, self.q), complex(a))
            for i, a in enumerate(self.amps)
        ]

    def allclose(self, other: State, tol: float = DEFAULT_TOL) -> bool:
        self._check_compatible(other)
        return bool(np.max(np.abs(self.amps - other.amps), initial=0.0) <= tol)

    def max_dev(self, other: State) -> float:
        self._check_compatible(other)
        return float(np.max(np.abs(self.amps - other.amps), initial=0.0))

    def _check_compatible(self, other: State) -> None:
        if not isinstance(other, State):
            raise ShapeMismatch(f"expected State, got {type(other).__name__}")
        if other.n != self.n or other.q != self.q:
            raise ShapeMismatch(
                f"state shapes differ: ({self.n} wires, q={self.q}) vs ({other.n}, q={other.q})"
            )

    def __add__(self, other: State) -> State:
        self._check_compatible(other)
        return State(self.n, self.q, self.amps + other.amps, _trusted=True)

    def __sub__(self, other: State) -> State:
        self._check_compatible(other)
        return State(self.n, self.q, self.amps - other.amps, _trusted=True)

    def __mul__(self, scalar: complex) -> State:
        return State(self.n, self.q, self.amps * complex(scalar), _trusted=True)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"State(n={self.n}, q={self.q})"


def ket(v: Sequence[int], q: int = 2) -> State:
    """Basis state with amplitude 1 at tuple v."""
    n = len(v)
    dim = check_allocation(n, q)
    amps = np.zeros(dim, dtype=np.complex128)
    amps[tuple_to_index(v, q)] = 1.0
    return State(n, q, amps, _trusted=True)


def zero_state(n: int, q: int = 2) -> State:
    """State with every amplitude zero."""
    dim = check_allocation(n, q)
    return State(n, q, np.zeros(dim, dtype=np.complex128), _trusted=True)


def from_amplitudes(amps: Iterable[complex], q: int = 2) -> State:
    """Build a state from a flat amplitude list whose length must be q**n."""
    a = np.ascontiguousarray(list(amps) if not isinstance(amps, np.ndarray) else amps,
                             dtype=np.complex128)
    n = 0
    dim = 1
    while dim < a.size and q > 1:
        dim *= q
        n += 1
    if dim != a.size:
        raise ShapeMismatch(f"{a.size} amplitudes is not a power of q={q}")
    return State(n, q, a)


def random_state(n: int, q: int = 2, rng: np.random.Generator | None = None) -> State:
    """Haar-ish random unit state (normalized complex Gaussian)."""
    rng = np.random.default_rng() if rng is None else rng
    dim = check_allocation(n, q)
    a = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    a /= np.linalg.norm(a)
    return State(n, q, a, _trusted=True)


def state_to_text(state: State, threshold: float = 0.0) -> str:
    """Serialize to the line format ``<digits> <re> <im>``.

    Entries that are exactly zero or below the magnitude threshold are
    omitted; omitted entries read back as zero.  Amplitudes are printed with
    shortest round-trip precision, so parsing the text recovers the state
    bit-exactly.  Requires q <= 10 (single-character digits).
    """
    if state.q > 10:
        raise ShapeMismatch(f"text format supports q <= 10, got q={state.q}")
    lines = []
    for i, a in enumerate(state.amps):
        mag = abs(a)
        if mag == 0.0 or mag < threshold:
            continue
        digits = "".join(str(d) for d in index_to_tuple(i, state.n, state.q))
        lines.append(f"{digits} {float(a.real)!r} {float(a.imag)!r}")
    return "\n".join(lines)


def state_from_text(text: str, q: int = 2, n: int | None = None) -> State:
    """Parse the ``<digits> <re> <im>`` line format back into a state."""
    amps: dict[int, complex] = {}
    arity = n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected '<digits> <re> <im>', got {raw!r}")
        digits, re_s, im_s = parts
        if arity is None:
            arity = len(digits)
        if len(digits) != arity:
            raise ParseError(f"line {lineno}: arity {len(digits)} != {arity}")
        try:
            v = tuple(int(c) for c in digits)
        except ValueError:
            raise ParseError(f"line {lineno}: bad digit string {digits!r}") from None
        try:
            pos = tuple_to_index(v, q)
        except IndexOutOfRange as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        try:
            amps[pos] = complex(float(re_s), float(im_s))
        except ValueError:
            raise ParseError(f"line {lineno}: bad amplitude {re_s!r} {im_s!r}") from None
    if arity is None:
        raise ParseError("state file contains no entries and no arity was given")
    dim = check_allocation(arity, q)
    a = np.zeros(dim, dtype=np.complex128)
    for pos, val in amps.items():
        a[pos] = val
    return State(arity, q, a, _trusted=True)
