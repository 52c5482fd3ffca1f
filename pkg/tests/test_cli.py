import json

from graphirr.canon import canonical_code
from graphirr.cli import main
from graphirr.families import named, wheel
from graphirr.io import format_edge_list, parse_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_grotzsch_edge_list(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        p.write_text(format_edge_list(named("grotzsch")))
        code, out, _ = run(capsys, "compute", str(p))
        assert code == 0
        assert "two_walk: a=1 b=10" in out
        assert "Var=50/121" in out

    def test_tripartite_graph6(self, tmp_path, capsys):
        from graphirr.families import complete_multipartite

        p = tmp_path / "g.g6"
        p.write_text(to_graph6(complete_multipartite([2, 3, 5])) + "\n")
        code, out, _ = run(capsys, "compute", str(p))
        assert code == 0
        assert "S=12" in out
        assert "Omega=13/100" in out

    def test_regular_cycle(self, tmp_path, capsys):
        from graphirr.families import cycle

        p = tmp_path / "c5.g6"
        p.write_text(to_graph6(cycle(5)))
        code, out, _ = run(capsys, "compute", str(p))
        assert code == 0
        assert "regular" in out
        assert "S=0" in out
        assert "Omega: undefined" in out

    def test_json_mode(self, tmp_path, capsys):
        p = tmp_path / "w.g6"
        p.write_text(to_graph6(wheel(5)))
        code, out, _ = run(capsys, "compute", "--json", str(p))
        assert code == 0
        doc = json.loads(out)
        assert doc["measures"]["s"] == {"num": 8, "den": 5, "decimal": "1.6"}
        assert doc["two_walk"]["a"] == 2 and doc["two_walk"]["b"] == 4

    def test_parse_failure_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("not a graph\n")
        code, _, err = run(capsys, "compute", str(p))
        assert code == 2 and "error" in err

    def test_stdin_dash(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(wheel(5)) + "\n"))
        code, out, _ = run(capsys, "compute", "-")
        assert code == 0 and "S=8/5" in out


class TestGen:
    def test_wheel(self, capsys):
        code, out, _ = run(capsys, "gen", "wheel", "6")
        assert code == 0
        g = parse_graph6(out.strip())
        assert g.n == 6 and g.m == 10

    def test_split(self, capsys):
        code, out, _ = run(capsys, "gen", "cs", "7", "2")
        g = parse_graph6(out.strip())
        assert g.n == 7 and g.m == 11

    def test_named_diamond_edges(self, capsys):
        code, out, _ = run(capsys, "gen", "named", "diamond", "--edges")
        assert code == 0
        assert out.splitlines()[0] == "4 5"

    def test_round_trip_canonical(self, capsys):
        code, out, _ = run(capsys, "gen", "multipartite", "2", "3", "5")
        g = parse_graph6(out.strip())
        from graphirr.families import complete_multipartite

        assert canonical_code(g) == canonical_code(complete_multipartite([2, 3, 5]))

    def test_bad_params_exit_2(self, capsys):
        code, _, err = run(capsys, "gen", "wheel", "3")
        assert code == 2
        code, _, err = run(capsys, "gen", "cs", "5")
        assert code == 2
        code, _, err = run(capsys, "gen", "named", "petersen")
        assert code == 2


class TestEnum:
    def test_count_table_slice(self, capsys):
        code, out, _ = run(
            capsys,
            "enum", "--n", "6", "--m", "12", "--connected", "--irregular", "--count",
        )
        assert code == 0 and out.strip() == "4"

    def test_tree_count(self, capsys):
        code, out, _ = run(capsys, "enum", "--trees", "--n", "4", "--count")
        assert code == 0 and out.strip() == "2"

    def test_stream_parses(self, capsys):
        code, out, _ = run(capsys, "enum", "--n", "5", "--connected")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 21
        for line in lines:
            parse_graph6(line)

    def test_cap_exit_3(self, capsys):
        code, _, err = run(capsys, "enum", "--n", "9", "--count")
        assert code == 3 and "capability" in err

    def test_workers_flag(self, capsys):
        code, out, _ = run(
            capsys, "enum", "--n", "5", "--connected", "--workers", "2", "--count"
        )
        assert code == 0 and out.strip() == "21"

    def test_unicyclic_population(self, capsys):
        code, out, _ = run(capsys, "enum", "--unicyclic", "--n", "6", "--count")
        assert code == 0 and out.strip() == "13"

    def test_cached_rerun(self, capsys, tmp_path):
        argv = ["enum", "--n", "5", "--count", "--cache-dir", str(tmp_path)]
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[:2] == second[:2] == (0, "34\n")

    def test_bad_m_exit_2(self, capsys):
        code, _, _ = run(capsys, "enum", "--n", "4", "--m", "99", "--count")
        assert code == 2


class TestVerify:
    def test_all_suites_n4(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        csv_file = tmp_path / "summary.csv"
        code, out, _ = run(
            capsys,
            "verify", "--suite", "all", "--max-n", "4",
            "--out", str(out_file), "--csv", str(csv_file),
        )
        assert code == 0
        docs = json.loads(out_file.read_text())
        assert {d["suite_id"] for d in docs} >= {"bounds", "trees", "omega"}
        assert all(not d["violations"] for d in docs)
        header = csv_file.read_text().splitlines()[0]
        assert header.startswith("suite,checked")

    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bounds", "--max-n", "4")
        assert code == 0 and "suite=bounds" in out

    def test_tree_population(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--suite", "trees", "--max-n", "7", "--population", "trees",
        )
        assert code == 0

    def test_unknown_suite_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "bogus", "--max-n", "4")
        assert code == 2

    def test_cap_exit_3(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "bounds", "--max-n", "20")
        assert code == 3


class TestConjecturesCmd:
    def test_scan_n5(self, capsys):
        code, out, _ = run(
            capsys, "conjectures", "--max-n", "5", "--include-disconnected"
        )
        assert code == 0
        assert "conjecture-ird" in out and "conjecture-omega" in out


class TestExtremalCmd:
    def test_6_12(self, capsys):
        code, out, _ = run(capsys, "extremal", "--n", "6", "--m", "12")
        assert code == 0
        assert "coincide: true" in out
        assert "max S = 6" in out

    def test_empty_slice_exit_2(self, capsys):
        code, _, _ = run(capsys, "extremal", "--n", "6", "--m", "2")
        assert code == 2


class TestSplitKCmd:
    def test_rule(self, capsys):
        code, out, _ = run(capsys, "split-k", "--n", "12")
        assert code == 0 and "[4]" in out


class TestExitContract:
    def test_violations_exit_1(self, capsys):
        from graphirr.cli import RunConfig, _emit_reports
        from graphirr.verify import VerificationReport, Violation

        bad = VerificationReport(
            suite_id="bounds",
            population="doctored",
            graphs_checked=1,
            violations=(Violation("@", "s_le_irr", "2", "1"),),
            findings=(),
            equalities=(),
            elapsed=0.0,
        )
        assert _emit_reports([bad], RunConfig()) == 1
        out = capsys.readouterr().out
        assert "VIOLATION" in out
