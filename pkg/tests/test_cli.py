import json

import pytest

from helpers import GOLDEN_TREE, P13, triple_of
from markoff.cli import main
from markoff.triples import MarkoffTriple


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestVerify:
    def test_golden_root(self, capsys):
        code, obj = run_json(
            capsys, "verify", "--p", "13", "--A", "1",
            "--triple", "(t; t+2*i; t^2+2*i*t-2)",
        )
        assert code == 0
        assert obj == {
            "solution": True, "signature": [1, 1, 2], "height": 2, "fundamental": False,
        }

    def test_fundamental_with_null_signature(self, capsys):
        code, obj = run_json(
            capsys, "verify", "--p", "5", "--A", "t", "--triple", "(0; 2*t; t)"
        )
        assert code == 0
        assert obj["fundamental"] is True
        assert obj["signature"] == [None, 1, 1]

    def test_false_verification_exits_one(self, capsys):
        code, obj = run_json(
            capsys, "verify", "--p", "13", "--A", "1", "--triple", "(1; 1; 1)"
        )
        assert code == 1 and obj == {"solution": False}

    def test_parse_failure_exits_two(self, capsys):
        code = main(["verify", "--p", "13", "--A", "1", "--triple", "(t; t+; 1)"])
        assert code == 2

    def test_bad_prime_exits_two(self, capsys):
        code = main(["verify", "--p", "9", "--A", "1", "--triple", "(1; 1; 1)"])
        assert code == 2

    def test_zero_A_exits_two(self, capsys):
        code = main(["verify", "--p", "13", "--A", "0", "--triple", "(1; 1; 1)"])
        assert code == 2


class TestTree:
    ROOT_ARGS = ("tree", "--p", "13", "--A", "1", "--root", "(t; t+2*i; t^2+2*i*t-2)")

    def test_text_has_golden_triples(self, capsys):
        code, out = run(capsys, *self.ROOT_ARGS, "--depth", "2", "--format", "text")
        assert code == 0
        lines = [line.strip() for line in out.strip().splitlines()]
        assert len(lines) == 7
        rendered = {line.split(" ", 1)[1] if line.startswith("s") else line for line in lines}
        expected = {triple_of(s, P13).render("with_i") for s in GOLDEN_TREE}
        assert rendered == expected

    def test_json_roundtrip(self, capsys):
        code, obj = run_json(capsys, *self.ROOT_ARGS, "--depth", "1", "--format", "json")
        assert code == 0
        assert MarkoffTriple.from_json(obj["triple"]) == triple_of(GOLDEN_TREE[0], P13)
        children = {MarkoffTriple.from_json(c["triple"]) for c in obj["children"]}
        assert children == {triple_of(GOLDEN_TREE[1], P13), triple_of(GOLDEN_TREE[2], P13)}

    def test_dot_output(self, capsys):
        code, out = run(capsys, *self.ROOT_ARGS, "--depth", "1", "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert '[label="s1"]' in out and '[label="s2"]' in out
        assert "(t, t+2*i, t^2+2*i*t-2)" in out

    def test_budget_exits_three(self, capsys):
        code = main([*self.ROOT_ARGS, "--depth", "3", "--budget", "2"])
        assert code == 3

    def test_env_budget_overrides_flag(self, capsys, monkeypatch):
        monkeypatch.setenv("MARKOFF_BUDGET", "1")
        code = main([*self.ROOT_ARGS, "--depth", "2", "--budget", "10"])
        assert code == 3


class TestDescend:
    def test_example(self, capsys):
        code, obj = run_json(
            capsys, "descend", "--p", "13", "--A", "1",
            "--triple", "(t+2*i; t^2+2*i*t-2; t^3+4*i*t^2-7*t-4*i)",
        )
        assert code == 0
        fund = MarkoffTriple.from_json(obj["fundamental"])
        assert fund.canonical_key() == triple_of("(2; t; t+2*i)", P13).canonical_key()
        assert obj["form"]["family"] == "constant"
        assert obj["form"]["a"] == 1 and obj["form"]["sign"] == 1
        assert obj["word"].count("rho") == 2

    def test_constant_orbit_exits_two(self, capsys):
        code = main(["descend", "--p", "5", "--A", "t", "--triple", "(1; 2; 2*t)"])
        assert code == 2


class TestEuclid:
    def test_unit_tree_layers(self, capsys):
        code, obj = run_json(capsys, "euclid", "--alpha", "1", "--beta", "0", "--depth", "2")
        assert code == 0
        layers = {entry["j"]: entry["triples"] for entry in obj["layers"]}
        assert layers[0] == [[1, 1, 2]]
        assert layers[1] == [[1, 2, 3]]
        assert layers[2] == [[1, 3, 4], [2, 3, 5]]

    def test_text_format(self, capsys):
        code, out = run(capsys, "euclid", "--alpha", "1", "--beta", "0",
                        "--depth", "2", "--format", "text")
        assert code == 0
        assert out.splitlines() == ["L0: (1,1,2)", "L1: (1,2,3)", "L2: (1,3,4) (2,3,5)"]

    def test_budget_exits_three(self, capsys):
        code = main(["euclid", "--alpha", "1", "--beta", "0", "--depth", "9", "--budget", "8"])
        assert code == 3


class TestCountSignatures:
    def test_cumulative(self, capsys):
        code, obj = run_json(capsys, "count", "signatures", "--beta", "0", "--H", "4")
        assert code == 0
        assert obj["total"] == 12 and obj["lower"] == "9" and obj["upper"] == "13"

    def test_exact_height(self, capsys):
        code, obj = run_json(capsys, "count", "signatures", "--beta", "1", "--n", "3")
        assert code == 0
        assert obj["C_beta"] == 2 and obj["C_A"] == 2
        assert [t["d"] for t in obj["terms"]] == [1, 2]

    def test_constant_a_plus_one(self, capsys):
        code, obj = run_json(capsys, "count", "signatures", "--beta", "0", "--n", "4")
        assert code == 0
        assert obj["C_beta"] == 3 and obj["C_A"] == 4

    def test_cumulative_nonconstant_exits_two(self, capsys):
        code = main(["count", "signatures", "--beta", "1", "--H", "4"])
        assert code == 2


class TestCountSolutions:
    def test_formula(self, capsys):
        code, obj = run_json(capsys, "count", "solutions", "--q", "5", "--A", "t", "--n", "1")
        assert code == 0
        assert obj["value"] == 80 and obj["beta"] == 1

    def test_brute_census(self, capsys):
        code, obj = run_json(
            capsys, "count", "solutions", "--q", "5", "--A", "t", "--n", "1",
            "--brute", "--convention", "degree_sorted",
        )
        assert code == 0
        assert obj["formula"]["value"] == 80
        assert obj["fundamental_count"] == 40
        assert obj["fundamental_ratio"] == "1/2"
        assert obj["constant_orbit_count"] == 8

    def test_constant_a_formula_exits_two(self, capsys):
        code = main(["count", "solutions", "--q", "5", "--A", "1", "--n", "1"])
        assert code == 2

    def test_budget_exits_three(self, capsys):
        code = main(["count", "solutions", "--q", "5", "--A", "t", "--n", "3",
                     "--brute", "--budget", "1000"])
        assert code == 3

    def test_empty_field_formula(self, capsys):
        code, obj = run_json(capsys, "count", "solutions", "--q", "7", "--A", "t", "--n", "2")
        assert code == 0
        assert obj["value"] == 0 and obj["empty_field"] is True

    def test_solutions_jsonl_stream(self, capsys, tmp_path):
        path = tmp_path / "sols.jsonl"
        code, obj = run_json(
            capsys, "count", "solutions", "--q", "5", "--A", "t", "--n", "1",
            "--brute", "--solutions-out", str(path),
        )
        assert code == 0
        lines = path.read_text().splitlines()
        assert len(lines) == obj["total"] == 48
        triples = [MarkoffTriple.from_json(json.loads(line)) for line in lines]
        assert all(t.x.modulus.p == 5 for t in triples)
