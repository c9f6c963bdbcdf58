"""Command-line front end: run circuit files, verification suites, examples.

Circuit file format (JSON):

    {
      "qudit_dim": 2,                      # optional, default 2
      "wires": 3,
      "gates": [                           # optional custom gates
        {"name": "u", "wires": 1, "matrix": [[re, im], ...]}   # column-major
      ],
      "ops": [
        {"gate": "cnot", "lens": [0, 1]}
      ]
    }

Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import checks, circuits
from .errors import (
    ArityMismatch,
    ParseError,
    QLensError,
    UnknownExample,
    UnknownGate,
)
from .gates import Gate, builtin
from .lens import Lens
from .state import State, ket, state_from_text, state_to_text


def parse_circuit(path: str | Path) -> circuits.Circuit:
    """Load and validate a circuit file; error messages carry field locations."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return circuit_from_spec(doc, where=str(path))


def circuit_from_spec(doc: object, where: str = "circuit") -> circuits.Circuit:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: top level must be an object")
    q = doc.get("qudit_dim", 2)
    if not isinstance(q, int) or q < 2:
        raise ParseError(f"{where}.qudit_dim: expected an integer >= 2, got {q!r}")
    wires = doc.get("wires")
    if not isinstance(wires, int) or wires < 1:
        raise ParseError(f"{where}.wires: expected a positive integer, got {wires!r}")

    table: dict[str, Gate] = {}
    raw_gates = doc.get("gates", [])
    if not isinstance(raw_gates, list):
        raise ParseError(f"{where}.gates: expected a list")
    for gi, entry in enumerate(raw_gates):
        loc = f"{where}.gates[{gi}]"
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise ParseError(f"{loc}: expected an object with a string 'name'")
        table[entry["name"]] = _parse_custom_gate(entry, q, loc)

    raw_ops = doc.get("ops")
    if not isinstance(raw_ops, list):
        raise ParseError(f"{where}.ops: expected a list")
    steps = []
    for oi, op in enumerate(raw_ops):
        loc = f"{where}.ops[{oi}]"
        if not isinstance(op, dict):
            raise ParseError(f"{loc}: expected an object")
        name = op.get("gate")
        if not isinstance(name, str):
            raise ParseError(f"{loc}.gate: expected a gate name")
        raw_lens = op.get("lens")
        if not isinstance(raw_lens, list) or not all(isinstance(i, int) for i in raw_lens):
            raise ParseError(f"{loc}.lens: expected an integer array")
        try:
            lens = Lens(wires, tuple(raw_lens))
        except QLensError as exc:
            raise type(exc)(f"{loc}.lens: {exc}") from None
        if name in table:
            gate = table[name]
        else:
            try:
                gate = builtin(name, q)
            except UnknownGate:
                raise UnknownGate(f"{loc}.gate: unknown gate {name!r}") from None
        if gate.wires_in != lens.m:
            raise ArityMismatch(
                f"{loc}: gate {name!r} acts on {gate.wires_in} wires, lens has {lens.m}"
            )
        steps.append(circuits.Step(lens, gate, name))
    return circuits.Circuit(wires, tuple(steps), q)


def _parse_custom_gate(entry: dict, q: int, loc: str) -> Gate:
    wires = entry.get("wires")
    if not isinstance(wires, int) or wires < 0:
        raise ParseError(f"{loc}.wires: expected a non-negative integer")
    flat = entry.get("matrix")
    dim = q**wires
    if not isinstance(flat, list) or len(flat) != dim * dim:
        raise ParseError(f"{loc}.matrix: expected {dim * dim} [re, im] pairs")
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for k, pair in enumerate(flat):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) for x in pair)):
            raise ParseError(f"{loc}.matrix[{k}]: expected [re, im]")
        col, row = divmod(k, dim)  # column-major flattening
        mat[row, col] = complex(pair[0], pair[1])
    return Gate(mat, wires, wires, q)


def circuit_to_spec(circ: circuits.Circuit) -> dict:
    """Inverse of circuit_from_spec for circuits whose steps carry names."""
    ops = []
    for step in circ.steps:
        if step.name is None:
            raise ParseError("circuit step has no gate name; cannot serialize")
        ops.append({"gate": step.name, "lens": list(step.lens.idx)})
    return {"qudit_dim": circ.q, "wires": circ.n, "ops": ops}


def _load_input(value: str, circ: circuits.Circuit) -> State:
    symbols = set("0123456789"[: circ.q])
    if len(value) == circ.n and set(value) <= symbols:
        return ket(tuple(int(c) for c in value), circ.q)
    if os.path.exists(value):
        state = state_from_text(Path(value).read_text(), circ.q)
        if state.n != circ.n:
            raise ParseError(
                f"state file has {state.n} wires, circuit has {circ.n}"
            )
        return state
    raise ParseError(
        f"--input {value!r} is neither a basis string of {circ.n} digits < {circ.q} "
        f"nor a readable state file"
    )


def _cmd_run(args: argparse.Namespace) -> int:
    circ = parse_circuit(args.circuit)
    state = _load_input(args.input, circ)
    workers = os.cpu_count() if args.parallel else None
    final = circ.run(state, workers=workers)
    text = state_to_text(final, threshold=args.threshold)
    if text:
        print(text)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    print(f"seed: {args.seed}")
    scopes = [args.scope]
    if args.oracle and args.scope not in ("oracle", "all"):
        scopes.append("oracle")
    results = []
    for scope in scopes:
        results.extend(
            checks.run_scope(scope, seed=args.seed, trials=args.trials,
                             max_wires=args.max_wires)
        )
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name:32s} max_dev={r.max_dev:.3e}  tol={r.tol:.1e}"
        if not r.passed and r.detail:
            line += f"  ({r.detail})"
        print(line)
        failed += 0 if r.passed else 1
    print(f"{len(results)} checks, {len(results) - failed} passed, {failed} failed")
    return 1 if failed else 0


def example_circuit(name: str, n: int | None) -> circuits.Circuit:
    if name == "shor":
        comps = circuits.shor_components()
        return circuits.Circuit(9, comps["shor_enc"].steps + comps["shor_dec"].steps)
    if name == "ghz":
        return circuits.ghz_circuit(2 if n is None else n)
    if name == "reverse":
        return circuits.reversal_circuit(5 if n is None else n)
    raise UnknownExample(f"unknown example {name!r}; choose shor, ghz, or reverse")


def _cmd_examples(args: argparse.Namespace) -> int:
    circ = example_circuit(args.name, args.n)
    doc = json.dumps(circuit_to_spec(circ), indent=2)
    if args.out:
        Path(args.out).write_text(doc + "\n")
    else:
        print(doc)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlens",
        description="Lens-focused statevector circuit simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a circuit file on an input state")
    run.add_argument("circuit", help="path to a circuit JSON file")
    run.add_argument("--input", required=True,
                     help="basis digit string or state file path")
    run.add_argument("--threshold", type=float, default=0.0,
                     help="suppress amplitudes below this magnitude")
    run.add_argument("--parallel", action="store_true",
                     help="split gate application across CPU threads")
    run.set_defaults(func=_cmd_run)

    check = sub.add_parser("check", help="run a verification suite")
    check.add_argument("scope", choices=sorted(checks.SCOPES) + ["all"])
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--max-wires", type=int, default=None)
    check.add_argument("--oracle", action="store_true",
                       help="also run the dense-oracle differential suite")
    check.set_defaults(func=_cmd_check)

    ex = sub.add_parser("examples", help="emit a named example circuit file")
    ex.add_argument("name", help="shor | ghz | reverse")
    ex.add_argument("--n", type=int, default=None,
                    help="ghz recursion depth / reverse wire count")
    ex.add_argument("--out", default=None, help="write to a file instead of stdout")
    ex.set_defaults(func=_cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except QLensError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
