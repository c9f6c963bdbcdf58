"""Runnable verification suites behind `qlens check`.

Each suite replays a family of laws either exhaustively (lens combinatorics)
or on seeded random instances (everything touching amplitudes) and reports
one result per law with the worst deviation observed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import circuits
from .focus import (
    curry,
    focus_apply,
    focus_apply_reference,
    focus_as_gate,
    focus_on_basis,
    map_blocks,
    uncurry,
)
from .gates import (
    Gate,
    apply_to_blocks,
    builtin,
    cnot,
    compose,
    hadamard,
    identity,
    swap,
    toffoli,
    unitarity_defect,
)
from .lens import Lens, all_lenses, lens_pair, lens_single
from .oracle import assert_equiv, random_unitary
from .parallel import (
    FocusedGate,
    combine,
    combine_all,
    compose_actions,
    error_focused,
    focused,
    identity_focused,
)
from .state import all_basis_tuples, ket, random_state


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_dev: float
    tol: float
    detail: str = ""


class _Law:
    """Accumulates the worst deviation seen for one law."""

    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.max_dev = 0.0
        self.detail = ""

    def see(self, dev: float, detail: str = "") -> None:
        if dev > self.max_dev:
            self.max_dev = dev
            if dev > self.tol:
                self.detail = detail

    def see_bool(self, ok: bool, detail: str = "") -> None:
        self.see(0.0 if ok else 1.0, detail)

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.max_dev <= self.tol,
                           self.max_dev, self.tol, self.detail)


def _random_lens(n: int, m: int, rng: np.random.Generator) -> Lens:
    return Lens(n, tuple(int(i) for i in rng.permutation(n)[:m]))


def _random_gate(m: int, q: int, rng: np.random.Generator) -> Gate:
    return Gate(random_unitary(q**m, rng), m, m, q)


def lens_laws(max_wires: int = 5, q: int = 2) -> list[CheckResult]:
    """Exhaustive get/put, positional, membership, and factorization laws."""
    get_put = _Law("merge_extract", 0.0)
    put_get = _Law("extract_merge", 0.0)
    put_get_c = _Law("extractC_merge", 0.0)
    positional = _Law("tnth_merge/mergeC/extract", 0.0)
    membership = _Law("mem_lensC", 0.0)
    factor = _Law("basis_perm_factorization", 0.0)
    double_comp = _Law("double_complement", 0.0)
    assoc = _Law("lens_comp_associativity", 0.0)

    for n in range(max_wires + 1):
        tuples = list(all_basis_tuples(n, q))
        for lens in all_lenses(n):
            comp = lens.complement
            where = f"n={n} lens={list(lens.idx)}"
            for t in tuples:
                v, c = lens.extract(t), comp.extract(t)
                get_put.see_bool(lens.merge(v, c) == t, where)
            for t in tuples:
                v, c = lens.extract(t), comp.extract(t)
                merged = lens.merge(v, c)
                put_get.see_bool(lens.extract(merged) == v, where)
                put_get_c.see_bool(comp.extract(merged) == c, where)
                for i in range(n):
                    if lens.contains(i):
                        positional.see_bool(merged[i] == v[lens.position(i)], where)
                    else:
                        positional.see_bool(merged[i] == c[comp.position(i)], where)
                for j in range(lens.m):
                    positional.see_bool(v[j] == t[lens.idx[j]], where)
            for i in range(n):
                membership.see_bool(comp.contains(i) == (not lens.contains(i)), where)
            basis, perm = lens.factorize()
            factor.see_bool(basis.is_sorted(), where)
            factor.see_bool(sorted(basis.idx) == sorted(lens.idx), where)
            factor.see_bool(basis.compose(perm).idx == lens.idx, where)
            if lens.is_sorted():
                double_comp.see_bool(comp.complement.idx == lens.idx, where)

    for n in range(min(max_wires, 4) + 1):
        for outer in all_lenses(n):
            for mid in all_lenses(outer.m):
                for inner in all_lenses(mid.m):
                    lhs = outer.compose(mid).compose(inner)
                    rhs = outer.compose(mid.compose(inner))
                    assoc.see_bool(lhs.idx == rhs.idx,
                                   f"{list(outer.idx)}∘{list(mid.idx)}∘{list(inner.idx)}")

    return [law.result() for law in
            (get_put, put_get, put_get_c, positional, membership,
             factor, double_comp, assoc)]


def focus_laws(seed: int = 0, max_wires: int = 6, trials: int = 20,
               q: int = 2) -> list[CheckResult]:
    """Randomized algebra of focusing: cancellation, composition, naturality."""
    rng = np.random.default_rng(seed)
    cancel = _Law("curry_uncurry_cancellation", 0.0)
    fast_ref = _Law("fast_vs_reference", 1e-12)
    basis_step = _Law("focus_on_basis_step", 1e-12)
    comp = _Law("focus_comp", 1e-10)
    comp_lens = _Law("focus_lens_comp", 1e-10)
    comm = _Law("focus_disjoint_commute", 1e-10)
    uni = _Law("unitary_focus", 1e-10)
    natural = _Law("block_naturality", 1e-12)
    classical = _Law("classical_permutation_focus", 0.0)

    for _ in range(trials):
        n = int(rng.integers(1, max_wires + 1))
        m = int(rng.integers(0, min(3, n) + 1))
        lens = _random_lens(n, m, rng)
        where = f"n={n} lens={list(lens.idx)}"
        s = random_state(n, q, rng)

        view = curry(lens, s)
        cancel.see(uncurry(lens, view).max_dev(s), where)
        reblocks = curry(lens, uncurry(lens, view)).blocks
        cancel.see(float(np.max(np.abs(reblocks - view.blocks), initial=0.0)), where)

        g = _random_gate(m, q, rng)
        fast_ref.see(focus_apply(lens, g, s).max_dev(focus_apply_reference(lens, g, s)),
                     where)

        v = tuple(int(x) for x in rng.integers(0, q, size=n))
        basis_step.see(focus_on_basis(lens, g, v).max_dev(focus_apply(lens, g, ket(v, q))),
                       where)

        f = _random_gate(m, q, rng)
        lhs = focus_apply(lens, compose(f, g), s)
        rhs = focus_apply(lens, f, focus_apply(lens, g, s))
        comp.see(lhs.max_dev(rhs), where)

        p = int(rng.integers(0, m + 1))
        inner = _random_lens(m, p, rng)
        gp = _random_gate(p, q, rng)
        lhs = focus_apply(lens.compose(inner), gp, s)
        rhs = focus_apply(lens, focus_as_gate(inner, gp), s)
        comp_lens.see(lhs.max_dev(rhs), f"{where} inner={list(inner.idx)}")

        rest = [i for i in range(n) if not lens.contains(i)]
        m2 = int(rng.integers(0, min(2, len(rest)) + 1))
        other = Lens(n, tuple(rest[:m2]))
        g2 = _random_gate(m2, q, rng)
        lhs = focus_apply(other, g2, focus_apply(lens, g, s))
        rhs = focus_apply(lens, g, focus_apply(other, g2, s))
        comm.see(lhs.max_dev(rhs), f"{where} other={list(other.idx)}")

        t = random_state(n, q, rng)
        uni.see(abs(focus_apply(lens, g, s).inner(focus_apply(lens, g, t)) - s.inner(t)),
                where)

        d1, d2 = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        blocks = rng.standard_normal((q**m, d1)) + 1j * rng.standard_normal((q**m, d1))
        phi_mat = rng.standard_normal((d2, d1)) + 1j * rng.standard_normal((d2, d1))
        phi = lambda b: phi_mat @ b  # noqa: E731
        lhs_b = map_blocks(phi, apply_to_blocks(g, blocks))
        rhs_b = apply_to_blocks(g, map_blocks(phi, blocks))
        natural.see(float(np.max(np.abs(lhs_b - rhs_b), initial=0.0)), where)

        perm = rng.permutation(q**m)
        pmat = np.zeros((q**m, q**m))
        pmat[perm, np.arange(q**m)] = 1.0
        pgate = Gate(pmat, m, m, q)
        got = focus_apply(lens, pgate, ket(v, q))
        from .state import index_to_tuple, tuple_to_index

        local = lens.extract(v)
        image = index_to_tuple(int(perm[tuple_to_index(local, q)]), m, q)
        want = ket(lens.merge(image, lens.complement.extract(v)), q)
        classical.see(got.max_dev(want), where)

    return [law.result() for law in
            (cancel, fast_ref, basis_step, comp, comp_lens, comm, uni,
             natural, classical)]


def unitarity(seed: int = 0, trials: int = 10) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    builtins = _Law("builtin_unitarity", 1e-12)
    for name in ("hadamard", "cnot", "toffoli", "swap", "identity(2)"):
        builtins.see(unitarity_defect(builtin(name)), name)

    rand = _Law("random_unitary", 1e-12)
    comp = _Law("unitary_composition", 1e-10)
    focus_uni = _Law("focused_unitarity", 1e-10)
    for _ in range(trials):
        m = int(rng.integers(1, 4))
        f, g = _random_gate(m, 2, rng), _random_gate(m, 2, rng)
        rand.see(unitarity_defect(f), f"m={m}")
        comp.see(unitarity_defect(compose(f, g)), f"m={m}")
        n = m + int(rng.integers(0, 3))
        lens = _random_lens(n, m, rng)
        focus_uni.see(unitarity_defect(focus_as_gate(lens, f)),
                      f"n={n} lens={list(lens.idx)}")
    return [builtins.result(), rand.result(), comp.result(), focus_uni.result()]


def oracle_suite(seed: int = 0, trials: int = 200, max_wires: int = 6,
                 max_support: int = 3) -> list[CheckResult]:
    """Differential test of focusing against the dense kron+permutation build."""
    rng = np.random.default_rng(seed)
    fixed = _Law("oracle_builtin_gates", 1e-12)
    named = {1: [hadamard(), identity()], 2: [cnot(), swap()], 3: [toffoli()]}
    for n in range(1, 5):
        for m, gs in named.items():
            if m > n:
                continue
            for lens in all_lenses(n, m):
                for g in gs:
                    fixed.see(assert_equiv(lens, g, trials=2, rng=rng),
                              f"n={n} lens={list(lens.idx)}")

    rand = _Law("oracle_random_unitaries", 1e-10)
    for _ in range(trials):
        n = int(rng.integers(1, max_wires + 1))
        m = int(rng.integers(1, min(max_support, n) + 1))
        lens = _random_lens(n, m, rng)
        g = _random_gate(m, 2, rng)
        rand.see(assert_equiv(lens, g, trials=1, rng=rng),
                 f"n={n} lens={list(lens.idx)}")
    return [fixed.result(), rand.result()]


def _monoid_pool(n: int = 4) -> list[FocusedGate]:
    pool = [focused(lens_single(n, i), hadamard()) for i in range(n)]
    pool += [
        focused(lens_pair(n, i, j), cnot())
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return pool


def monoid(seed: int = 0, max_wires: int = 6, trials: int = 20) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    n = 4
    pool = _monoid_pool(n)

    commut = _Law("combine_commutativity", 1e-12)
    for a in pool:
        for b in pool:
            commut.see_bool(combine(a, b).isclose(combine(b, a), 1e-12),
                            f"{a.support} vs {b.support}")

    assoc = _Law("combine_associativity", 1e-12)
    for a in pool:
        for b in pool:
            ab = combine(a, b)
            for c in pool:
                assoc.see_bool(combine(ab, c).isclose(combine(a, combine(b, c)), 1e-12),
                               f"{a.support},{b.support},{c.support}")

    unit = _Law("unit_and_absorption", 0.0)
    one = identity_focused(n)
    err = error_focused(n)
    for a in pool:
        unit.see_bool(combine(one, a).isclose(a, 0.0), f"{a.support}")
        unit.see_bool(combine(a, one).isclose(a, 0.0), f"{a.support}")
        unit.see_bool(combine(err, a).is_err and combine(a, err).is_err, f"{a.support}")

    disj = _Law("sequential_vs_parallel_fold", 1e-10)
    for _ in range(trials):
        nn = int(rng.integers(2, max_wires + 1))
        wires = list(rng.permutation(nn))
        family = []
        while wires:
            take = int(rng.integers(1, min(2, len(wires)) + 1))
            support, wires = wires[:take], wires[take:]
            family.append(focused(Lens(nn, tuple(int(w) for w in support)),
                                  _random_gate(take, 2, rng)))
            if rng.random() < 0.3:
                break
        seq = compose_actions([fg.apply for fg in family])
        par = combine_all(nn, family)
        s = random_state(nn, 2, rng)
        disj.see(seq(s).max_dev(par.apply(s)), f"n={nn} k={len(family)}")

    return [commut.result(), assoc.result(), unit.result(), disj.result()]


def example_suite(seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    comps = circuits.shor_components()

    bfe_law = _Law("bit_flip_encoding", 1e-12)
    for (i, j, k) in all_basis_tuples(3):
        got = comps["bit_flip_enc"].run(ket((i, j, k)))
        bfe_law.see(got.max_dev(ket((i, (i + j) % 2, (i + k) % 2))), f"{(i, j, k)}")

    bft = _Law("bit_flip_majority_vote", 1e-10)
    maj = focus_as_gate(Lens(3, (1, 2, 0)), toffoli())
    for v in all_basis_tuples(3):
        roundtrip = comps["bit_flip_dec"].run(comps["bit_flip_enc"].run(ket(v)))
        bft.see(roundtrip.max_dev(maj.apply(ket(v))), f"{v}")

    sft = _Law("sign_flip_majority_vote", 1e-9)
    for _ in range(10):
        s = random_state(3, 2, rng)
        roundtrip = comps["sign_flip_dec"].run(comps["sign_flip_enc"].run(s))
        sft.see(roundtrip.max_dev(maj.apply(s)))

    invol = _Law("hadamard_layer_involution", 1e-10)
    for _ in range(10):
        s = random_state(3, 2, rng)
        invol.see(comps["hadamard3"].run(comps["hadamard3"].run(s)).max_dev(s))

    shor = _Law("shor_roundtrip_identity", 1e-9)
    for i in (0, 1):
        inp = ket((i,) + (0,) * 8)
        out = comps["shor_dec"].run(comps["shor_enc"].run(inp))
        shor.see(out.max_dev(inp), f"i={i}")

    ghz = _Law("ghz_preparation", 1e-9)
    for wires in range(1, 17):
        got = circuits.ghz_circuit(wires - 1).run(ket((0,) * wires))
        ghz.see(got.max_dev(circuits.ghz_state(wires)), f"wires={wires}")

    rev = _Law("reversal_on_basis", 1e-9)
    for n in range(9):
        circ = circuits.reversal_circuit(n)
        for v in all_basis_tuples(n):
            rev.see(circ.run(ket(v)).max_dev(ket(v[::-1])), f"n={n} v={v}")

    marg = _Law("reversal_marginal_invariance", 1e-10)
    for n in range(1, 7):
        circ = circuits.reversal_circuit(n)
        for _ in range(5):
            s = random_state(n, 2, rng)
            rs = circ.run(s)
            for i in range(n):
                want = circuits.marginal(lens_single(n, i), s)
                got = circuits.marginal(lens_single(n, n - 1 - i), rs)
                marg.see(float(np.max(np.abs(got - want), initial=0.0)), f"n={n} i={i}")

    return [law.result() for law in
            (bfe_law, bft, sft, invol, shor, ghz, rev, marg)]


SCOPES = {
    "lens-laws": lambda seed, trials, max_wires: lens_laws(max_wires or 5),
    "focus-laws": lambda seed, trials, max_wires: focus_laws(seed, max_wires or 6,
                                                             max(trials, 20)),
    "unitarity": lambda seed, trials, max_wires: unitarity(seed),
    "oracle": lambda seed, trials, max_wires: oracle_suite(seed, trials,
                                                           max_wires or 6),
    "monoid": lambda seed, trials, max_wires: monoid(seed, max_wires or 6),
    "examples": lambda seed, trials, max_wires: example_suite(seed),
}


def run_scope(scope: str, seed: int = 0, trials: int = 200,
              max_wires: int | None = None) -> list[CheckResult]:
    if scope == "all":
        out: list[CheckResult] = []
        for name in SCOPES:
            out.extend(SCOPES[name](seed, trials, max_wires))
        return out
    return SCOPES[scope](seed, trials, max_wires)
