import json

import pytest

from circuitcover.cli import main
from circuitcover.generators import ladder
from circuitcover.graphio import format_graph, parse_graph, read_instance, write_instance
from circuitcover.errors import ParseError

from conftest import cycle_graph


@pytest.fixture
def c6_file(tmp_path):
    path = tmp_path / "c6.graph"
    path.write_text(format_graph(cycle_graph(6)))
    return path


@pytest.fixture
def ladder4_file(tmp_path):
    path = tmp_path / "ladder-4.graph"
    path.write_text(format_graph(ladder(4).graph))
    return path


class TestGraphFormat:
    def test_round_trip(self):
        g = ladder(5).graph
        assert parse_graph(format_graph(g)) == g

    def test_comments_and_blanks(self):
        g = parse_graph("# a square\n4 4\n0 1\n1 2\n\n2 3 # last rail\n3 0\n")
        assert g.n == 4 and g.m == 4

    def test_parse_error_carries_line(self):
        with pytest.raises(ParseError) as exc:
            parse_graph("3 2\n0 1\n0 x\n")
        assert exc.value.line == 3

    def test_instance_sidecar_round_trip(self, tmp_path):
        inst = ladder(4)
        write_instance(inst, tmp_path)
        back = read_instance(tmp_path / "ladder-4.graph")
        assert back.graph == inst.graph
        assert back.prescribed == inst.prescribed


class TestCheck:
    def test_even_graph_universal(self, c6_file, capsys):
        code = main(["check", str(c6_file), "--k", "100"])
        out = capsys.readouterr().out
        assert code == 0 and "none" in out

    def test_ladder_k3_fails(self, ladder4_file, capsys):
        code = main(["check", str(ladder4_file), "--k", "3", "--json"])
        report = json.loads(capsys.readouterr().out)
        assert code == 2
        assert report["min_odd_cut"]["size"] == 3
        assert report["verdicts"]["universal_up_to_k"] is False

    def test_ladder_k2_holds(self, ladder4_file):
        assert main(["check", str(ladder4_file), "--k", "2", "--quiet"]) == 0


class TestFind:
    def test_circuit_json_and_exit_code(self, c6_file, capsys):
        code = main(["find", str(c6_file), "--edges", "0,3", "--certify"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["status"] == "circuit" and payload["certified"] is True

    def test_certificate_with_oracle_fallback(self, ladder4_file, capsys):
        code = main(
            ["find", str(ladder4_file), "--edges", "0,1,2", "--oracle-fallback"]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 2
        assert payload["status"] == "odd-cut" and payload["size"] == 3
        assert payload["oracle_feasible"] is False

    def test_bad_edge_id(self, c6_file, capsys):
        assert main(["find", str(c6_file), "--edges", "99"]) == 1
        assert "error" in capsys.readouterr().err


class TestOracleAndVerify:
    def test_oracle_feasible(self, c6_file, capsys):
        code = main(["oracle", str(c6_file), "--edges", "0,3"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0 and payload["method"] == "oracle"

    def test_oracle_infeasible(self, ladder4_file, capsys):
        code = main(["oracle", str(ladder4_file), "--edges", "0,1,2"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 2 and payload["status"] == "infeasible"

    def test_find_then_verify_round_trip(self, c6_file, tmp_path, capsys):
        main(["find", str(c6_file), "--edges", "1,4"])
        result = tmp_path / "result.json"
        result.write_text(capsys.readouterr().out)
        code = main(
            ["verify", str(c6_file), "--edges", "1,4", "--result", str(result)]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 0 and payload["verified"] is True

    def test_verify_rejects_tampered_walk(self, c6_file, tmp_path, capsys):
        result = tmp_path / "bad.json"
        result.write_text(
            json.dumps({"status": "circuit", "walk": [0, 1, 0], "edge_walk": [0, 0]})
        )
        code = main(["verify", str(c6_file), "--result", str(result)])
        payload = json.loads(capsys.readouterr().out)
        assert code == 2 and payload["verified"] is False


class TestGenerate:
    def test_ladder_files_are_byte_stable(self, tmp_path, capsys):
        code = main(["generate", "ladder", "4", "--out", str(tmp_path), "--quiet"])
        assert code == 0
        text = (tmp_path / "ladder-4.graph").read_text()
        assert text.startswith("8 10\n0 4\n1 5\n2 6\n3 7\n")
        sidecar = json.loads((tmp_path / "ladder-4.json").read_text())
        assert sidecar == {"label": "ladder-4", "prescribed": [1, 2]}
        # regenerating produces identical bytes
        main(["generate", "ladder", "4", "--out", str(tmp_path), "--quiet"])
        assert (tmp_path / "ladder-4.graph").read_text() == text

    def test_random_requires_seed(self, tmp_path, capsys):
        code = main(["generate", "random", "8", "12", "--out", str(tmp_path)])
        assert code == 1
        assert "seed" in capsys.readouterr().err

    def test_random_with_seed(self, tmp_path, capsys):
        code = main(
            [
                "generate", "random", "8", "12",
                "--seed", "5", "--out", str(tmp_path), "--quiet",
            ]
        )
        assert code == 0
        assert (tmp_path / "random-n8-m12-c1-s5.graph").exists()


class TestExperiments:
    def test_gk_witness(self, capsys):
        code = main(["experiment", "gk-witness", "--json"])
        report = json.loads(capsys.readouterr().out)
        assert code == 0
        assert report["verdicts"]["failures"] == 0
        for name in ("g(2)>1", "g(3)>2", "g(4)>3"):
            assert report["verdicts"][name]["confirmed"] is True

    def test_ladder_experiment_small(self, capsys):
        code = main(["experiment", "ladder", "--r", "4", "--json"])
        report = json.loads(capsys.readouterr().out)
        assert code == 0 and report["verdicts"]["failures"] == 0

    def test_corollary_experiment(self, tmp_path, capsys):
        paths = []
        for n in (5, 6):
            p = tmp_path / f"c{n}.graph"
            p.write_text(format_graph(cycle_graph(n)))
            paths.append(str(p))
        code = main(["experiment", "corollary", "--graphs", *paths, "--json"])
        report = json.loads(capsys.readouterr().out)
        assert code == 0 and report["verdicts"]["failures"] == 0
