import json

import numpy as np
import pytest

from qlens import (
    ArityMismatch,
    DuplicateIndex,
    IndexOutOfRange,
    ParseError,
    UnknownGate,
    ket,
    state_to_text,
)
from qlens.cli import circuit_to_spec, example_circuit, main, parse_circuit

BIT_FLIP_ENC = {
    "wires": 3,
    "ops": [
        {"gate": "cnot", "lens": [0, 1]},
        {"gate": "cnot", "lens": [0, 2]},
    ],
}


@pytest.fixture
def circuit_file(tmp_path):
    def write(doc, name="circuit.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return write


class TestParseCircuit:
    def test_bit_flip_file(self, circuit_file):
        circ = parse_circuit(circuit_file(BIT_FLIP_ENC))
        assert circ.n == 3
        assert [s.name for s in circ.steps] == ["cnot", "cnot"]
        assert [s.lens.idx for s in circ.steps] == [(0, 1), (0, 2)]
        out = circ.run(ket((1, 0, 0)))
        assert np.array_equal(out.amps, ket((1, 1, 1)).amps)

    def test_duplicate_lens_entry(self, circuit_file):
        doc = {"wires": 3, "ops": [{"gate": "cnot", "lens": [0, 0]}]}
        with pytest.raises(DuplicateIndex, match=r"ops\[0\]"):
            parse_circuit(circuit_file(doc))

    def test_lens_out_of_range(self, circuit_file):
        doc = {"wires": 2, "ops": [{"gate": "hadamard", "lens": [2]}]}
        with pytest.raises(IndexOutOfRange, match=r"ops\[0\]"):
            parse_circuit(circuit_file(doc))

    def test_gate_lens_arity_mismatch(self, circuit_file):
        doc = {"wires": 3, "ops": [{"gate": "cnot", "lens": [0]}]}
        with pytest.raises(ArityMismatch, match=r"ops\[0\]"):
            parse_circuit(circuit_file(doc))

    def test_unknown_gate(self, circuit_file):
        doc = {"wires": 2, "ops": [{"gate": "nope", "lens": [0]}]}
        with pytest.raises(UnknownGate, match="nope"):
            parse_circuit(circuit_file(doc))

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            parse_circuit(str(path))

    def test_missing_file(self):
        with pytest.raises(ParseError):
            parse_circuit("/nonexistent/circuit.json")

    @pytest.mark.parametrize(
        "doc",
        [
            [],
            {"ops": []},
            {"wires": 0, "ops": []},
            {"wires": 2, "ops": {}},
            {"wires": 2, "ops": [{"gate": "cnot"}]},
            {"wires": 2, "ops": [{"gate": "cnot", "lens": "01"}]},
            {"wires": 2, "qudit_dim": 1, "ops": []},
        ],
    )
    def test_structural_errors(self, circuit_file, doc):
        with pytest.raises(ParseError):
            parse_circuit(circuit_file(doc))

    def test_custom_gate_column_major(self, circuit_file):
        # column 0 holds the image of |0>: matrix maps |0> -> |1>, kills |1>
        doc = {
            "wires": 1,
            "gates": [
                {"name": "lower", "wires": 1,
                 "matrix": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}
            ],
            "ops": [{"gate": "lower", "lens": [0]}],
        }
        circ = parse_circuit(circuit_file(doc))
        out = circ.run(ket((0,)))
        assert out.amplitude((1,)) == 1.0
        assert not circ.run(ket((1,))).amps.any()

    def test_custom_gate_bad_matrix_length(self, circuit_file):
        doc = {
            "wires": 1,
            "gates": [{"name": "u", "wires": 1, "matrix": [[0.0, 0.0]]}],
            "ops": [],
        }
        with pytest.raises(ParseError, match=r"gates\[0\]"):
            parse_circuit(circuit_file(doc))


class TestRunCommand:
    def test_bit_flip_instance(self, circuit_file, capsys):
        path = circuit_file(BIT_FLIP_ENC)
        assert main(["run", path, "--input", "100"]) == 0
        assert capsys.readouterr().out.strip() == "111 1.0 0.0"

    def test_ghz_amplitudes(self, tmp_path, capsys):
        ghz_path = str(tmp_path / "ghz.json")
        assert main(["examples", "ghz", "--n", "2", "--out", ghz_path]) == 0
        capsys.readouterr()
        assert main(["run", ghz_path, "--input", "000"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == [
            "000 0.7071067811865476 0.0",
            "111 0.7071067811865476 0.0",
        ]

    def test_threshold_suppression(self, tmp_path, capsys):
        ghz_path = str(tmp_path / "ghz.json")
        main(["examples", "ghz", "--n", "2", "--out", ghz_path])
        capsys.readouterr()
        assert main(["run", ghz_path, "--input", "000", "--threshold", "0.9"]) == 0
        assert capsys.readouterr().out.strip() == ""

    def test_state_file_input(self, circuit_file, tmp_path, capsys):
        path = circuit_file(BIT_FLIP_ENC)
        state_path = tmp_path / "input.state"
        state_path.write_text(state_to_text(ket((1, 0, 0))))
        assert main(["run", path, "--input", str(state_path)]) == 0
        assert capsys.readouterr().out.strip() == "111 1.0 0.0"

    def test_input_arity_mismatch(self, circuit_file, capsys):
        path = circuit_file(BIT_FLIP_ENC)
        assert main(["run", path, "--input", "10"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_parse_failure_exit_code(self, circuit_file, capsys):
        path = circuit_file({"wires": 3, "ops": [{"gate": "cnot", "lens": [0, 0]}]})
        assert main(["run", path, "--input", "000"]) == 2

    def test_parallel_flag(self, circuit_file, capsys):
        path = circuit_file(BIT_FLIP_ENC)
        assert main(["run", path, "--input", "100", "--parallel"]) == 0
        assert capsys.readouterr().out.strip() == "111 1.0 0.0"


class TestExamplesCommand:
    def test_ghz_structure(self):
        circ = example_circuit("ghz", 4)
        assert circ.n == 5
        names = [s.name for s in circ.steps]
        assert names.count("hadamard") == 1
        assert names.count("cnot") == 4

    def test_reverse_structure(self):
        circ = example_circuit("reverse", 5)
        assert [s.lens.idx for s in circ.steps] == [(0, 4), (1, 3)]
        assert all(s.name == "swap" for s in circ.steps)

    def test_shor_structure(self):
        circ = example_circuit("shor", None)
        assert circ.n == 9
        assert len(circ.steps) == 26

    def test_roundtrip_through_file(self, tmp_path):
        for name, n in (("ghz", 3), ("reverse", 6), ("shor", None)):
            out = tmp_path / f"{name}.json"
            args = ["examples", name, "--out", str(out)]
            if n is not None:
                args += ["--n", str(n)]
            assert main(args) == 0
            circ = example_circuit(name, n)
            reparsed = parse_circuit(str(out))
            assert circuit_to_spec(reparsed) == circuit_to_spec(circ)

    def test_unknown_example(self, capsys):
        assert main(["examples", "teleport"]) == 2
        assert "teleport" in capsys.readouterr().err

    def test_stdout_emission(self, capsys):
        assert main(["examples", "ghz", "--n", "1"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["wires"] == 2


class TestCheckCommand:
    def test_passing_scope_exit_zero(self, capsys):
        assert main(["check", "unitarity", "--seed", "11"]) == 0
        out = capsys.readouterr().out
        assert "seed: 11" in out
        assert "FAIL" not in out

    def test_deterministic_given_seed(self, capsys):
        main(["check", "focus-laws", "--seed", "4", "--trials", "5"])
        first = capsys.readouterr().out
        main(["check", "focus-laws", "--seed", "4", "--trials", "5"])
        second = capsys.readouterr().out
        assert first == second

    def test_oracle_flag_appends_suite(self, capsys):
        assert main(["check", "unitarity", "--seed", "3", "--trials", "5",
                     "--max-wires", "4", "--oracle"]) == 0
        out = capsys.readouterr().out
        assert "oracle_random_unitaries" in out

    def test_usage_error_exit_code(self, capsys):
        assert main(["check", "not-a-scope"]) == 2
