import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbreak import cli
from symbreak.errors import InputError, InvariantViolation
from symbreak.formats import format_edge_list, parse_coloring, parse_edge_list, parse_graph_spec, parse_range
from symbreak.graph import ProductGraph, cycle, is_isomorphic, path


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSpecParsing:
    def test_family(self):
        assert parse_graph_spec("path:5") == path(5)
        assert parse_graph_spec("kbipartite:2,3").m == 6

    def test_product(self):
        p = parse_graph_spec("path:4 x path:5")
        assert isinstance(p, ProductGraph) and len(p.factors) == 2 and p.n == 20

    def test_grid_and_hypercube_keep_factors(self):
        assert parse_graph_spec("grid:4x5").shape == (4, 5)
        assert parse_graph_spec("hypercube:3").shape == (2, 2, 2)

    def test_three_factors_flatten(self):
        assert parse_graph_spec("path:2 x cycle:3 x path:2").shape == (2, 3, 2)

    def test_file(self, tmp_path):
        f = tmp_path / "tri.el"
        f.write_text("3 3\n0 1\n1 2\n2 0\n")
        assert parse_graph_spec(f"file:{f}") == cycle(3)

    def test_missing_file(self):
        with pytest.raises(InputError, match="cannot read"):
            parse_graph_spec("file:/nonexistent/graph.el")

    @pytest.mark.parametrize("text,pos", [("", 0), ("path4", 0), ("path:4 x star:3", 9),
                                          ("path:4 x cycle:a", 15)])
    def test_syntax_errors_report_position(self, text, pos):
        with pytest.raises(InputError, match=f"position {pos}"):
            parse_graph_spec(text)

    @pytest.mark.parametrize("spec", ["path:1", "path:6", "cycle:7", "complete:4", "kbipartite:2,4",
                                      "hypercube:3", "grid:3x4", "path:3 x cycle:4"])
    def test_round_trip(self, spec):
        g = parse_graph_spec(spec)
        h = parse_edge_list(format_edge_list(g))
        assert is_isomorphic(g, h)

    def test_ranges(self):
        assert parse_range("3") == [3]
        assert parse_range("2..4") == [2, 3, 4]
        assert parse_range("2,5") == [2, 5]
        with pytest.raises(InputError):
            parse_range("a..b")

    def test_red_sugar(self):
        p = parse_graph_spec("grid:4x5")
        cols = parse_coloring("red=(2,2),(3,4)", p)
        assert cols.count(2) == 2 and cols[p.index((1, 1))] == 2 and cols[p.index((2, 3))] == 2

    def test_coloring_errors(self):
        with pytest.raises(InputError):
            parse_coloring("1,2", path(3))
        with pytest.raises(InputError):
            parse_coloring("red=(1,1)", path(3))

    @settings(max_examples=30)
    @given(st.integers(1, 9), st.sampled_from(["path", "cycle", "complete"]))
    def test_family_round_trip_property(self, n, kind):
        if kind == "cycle" and n < 3:
            return
        g = parse_graph_spec(f"{kind}:{n}")
        assert parse_edge_list(format_edge_list(g)) == g


class TestVerbs:
    def test_theta_grid(self, capsys):
        assert run(capsys, "theta", "grid:4x5") == (0, "13\n", "")

    def test_phi(self, capsys):
        code, out, _ = run(capsys, "phi", "--k", "2", "grid:2x3")
        assert code == 0 and out.strip() == "10"

    def test_phi_range_json_csv(self, capsys):
        code, out, _ = run(capsys, "phi", "--k", "1..3", "--json", "path:4")
        assert code == 0 and json.loads(out) == [{"k": 1, "phi": 0}, {"k": 2, "phi": 6}, {"k": 3, "phi": 36}]
        code, out, _ = run(capsys, "varphi", "--k", "2..3", "--csv", "path:4")
        assert list(csv.reader(io.StringIO(out))) == [["k", "varphi"], ["2", "6"], ["3", "18"]]

    def test_phi_methods(self, capsys):
        outs = {m: run(capsys, "phi", "--k", "3", "--method", m, "grid:3x3")[1] for m in ("brute", "moebius")}
        assert outs["brute"] == outs["moebius"] == "2106\n"

    def test_aut(self, capsys):
        code, out, _ = run(capsys, "aut", "cycle:5")
        assert code == 0 and out.splitlines()[0] == "order 10"
        code, out, _ = run(capsys, "aut", "--json", "--elements", "path:3")
        d = json.loads(out)
        assert d["order"] == 2 and len(d["elements"]) == 2

    def test_dnum(self, capsys):
        code, out, _ = run(capsys, "dnum", "--json", "cycle:5")
        d = json.loads(out)
        assert code == 0 and d["D"] == 3 and len(d["certificate"]) == 5

    def test_indices(self, capsys):
        code, out, _ = run(capsys, "indices", "--k", "2..3", "--json", "path:4")
        d = json.loads(out)
        assert code == 0 and d["theta"] == 3 and d["phi"] == {"2": 6, "3": 36}
        code, out, _ = run(capsys, "indices", "--k", "2", "--csv", "path:4")
        assert out.splitlines()[1] == "path:4,4,2,2,3,4,6,6"
        code, out, _ = run(capsys, "indices", "path:4")
        assert code == 0 and "theta" in out.splitlines()[0]

    @pytest.mark.parametrize("coloring,expected", [
        ("red=(2,2),(3,4)", "false"), ("red=(2,4),(3,2),(3,3)", "true"),
    ])
    @pytest.mark.parametrize("mode", ["direct", "full", "aut_f"])
    def test_check_examples(self, capsys, coloring, expected, mode):
        code, out, _ = run(capsys, "check", "--mode", mode, "grid:4x5", coloring)
        assert code == 0 and out.splitlines()[0] == expected

    def test_check_example_p5p6(self, capsys):
        code, out, _ = run(capsys, "check", "--json", "grid:5x6", "red=(2,2),(2,3),(2,4),(4,5)")
        assert json.loads(out) == {"distinguishing": True, "witness": None}

    def test_check_witness(self, capsys):
        code, out, _ = run(capsys, "check", "--json", "--mode", "direct", "path:3", "1,2,1")
        assert json.loads(out)["witness"] == {"automorphism": "(0 2)"}

    def test_product_theta(self, capsys):
        assert run(capsys, "product-theta", "grid:4x5")[1] == "13\n"
        assert run(capsys, "product-theta", "hypercube:3")[1] == "7\n"
        code, out, _ = run(capsys, "product-theta", "--json", "path:2 x path:2 x path:3")
        d = json.loads(out)
        assert d["theta"] == 10 == d["cycle_count_oracle"] and d["rule"] == "general" and d["note"]

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "grids", "--m", "2..4", "--n", "2..4", "--k", "2..3")
        assert code == 0 and out and all(line.startswith("PASS") for line in out.splitlines())

    def test_verify_deterministic(self, capsys):
        first = run(capsys, "verify", "saturation", "--seed", "5")
        assert first == run(capsys, "verify", "saturation", "--seed", "5") and first[0] == 0

    def test_verify_failure_exit_1(self, capsys, monkeypatch):
        from symbreak import verify
        monkeypatch.setitem(verify.TARGETS, "motion",
                            lambda a: [verify.Check("forced", False, "demo")])
        code, out, err = run(capsys, "verify", "motion")
        assert code == 1 and "counterexample" in err and "forced" in err


class TestExitCodes:
    def test_input_error(self, capsys):
        code, _, err = run(capsys, "theta", "cycle:2")
        assert code == 2 and err.startswith("error:")

    def test_bad_syntax(self, capsys):
        assert run(capsys, "theta", "wheel:5")[0] == 2

    def test_argparse_error(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_capacity(self, capsys):
        code, _, err = run(capsys, "phi", "--k", "3", "--method", "brute", "--budget", "100", "path:8")
        assert code == 3 and "budget" in err

    def test_budget_env(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMBREAK_BUDGET", "50")
        assert run(capsys, "phi", "--k", "2", "--method", "brute", "path:8")[0] == 3

    def test_product_only_mode(self, capsys):
        assert run(capsys, "check", "path:3", "1,1,2")[0] == 2

    def test_invariant(self, capsys, monkeypatch):
        def boom(*a, **k):
            raise InvariantViolation("demo")
        monkeypatch.setattr(cli, "threshold", boom)
        assert run(capsys, "theta", "path:3")[0] == 4

    def test_threads_flag(self, capsys, monkeypatch):
        monkeypatch.setenv("SYMBREAK_THREADS", "1")  # restored after the CLI overwrites it
        assert run(capsys, "phi", "--k", "2", "--method", "brute", "--threads", "2", "grid:3x3")[1] == "36\n"


def test_console_entry_points():
    out = subprocess.run([sys.executable, "-m", "symbreak", "theta", "cycle:6"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "5\n"
