"""End-to-end checks of the command line interface."""

import json

import pytest

from fcdiag.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMul:
    def test_worked_product(self, capsys):
        code, out, _ = run(capsys, "mul", "n=4:[1,4]", "n=4:[4,4][3,3][1,1]")
        assert code == 0
        assert out == "delta^1 * n=4:[3,3][1,1]\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "mul", "--json", "n=4:[4,4][3,3][1,1]", "n=4:[1,4]")
        assert code == 0
        assert json.loads(out) == {
            "delta_exponent": 1,
            "result": {"n": 4, "pairs": [[4, 4], [1, 1]]},
        }

    def test_rank_mismatch_is_domain_error(self, capsys):
        code, _, err = run(capsys, "mul", "n=3:[]", "n=4:[]")
        assert code == 1
        assert "rank" in err


class TestCount:
    def test_narayana_row(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "4", "--narayana")
        assert code == 0
        assert out == "1 10 20 10 1\n"

    def test_catalan_default(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "8")
        assert (code, out) == (0, "4862\n")


class TestConversions:
    def test_to_fc(self, capsys):
        code, out, _ = run(capsys, "to-fc", "strings=2;1-2,1'-2'")
        assert (code, out) == (0, "n=1:[1,1]\n")

    def test_to_diagram(self, capsys):
        code, out, _ = run(capsys, "to-diagram", "n=5:[4,5][3,3][1,1]")
        assert (code, out) == (0, "strings=6;1-2,3-6,4-5,1'-2',3'-4',5'-6'\n")

    def test_to_diagram_trace(self, capsys):
        code, out, _ = run(capsys, "to-diagram", "--trace", "--json", "n=3:[2,2][1,1]")
        assert code == 0
        payload = json.loads(out)
        assert payload["trace"]["positive_pairs"] == [[2, 1]]

    def test_convert_fc_to_ballot(self, capsys):
        code, out, _ = run(
            capsys, "convert", "--from", "fc", "--to", "ballot", "n=5:[4,5][3,3][1,1]"
        )
        assert (code, out) == (0, "+-++--++-+--\n")

    def test_convert_ballot_to_fc(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "ballot", "--to", "fc", "+-++--++-+--")
        assert (code, out) == (0, "n=5:[4,5][3,3][1,1]\n")

    def test_convert_diagram_to_ballot_uses_tail_head_reading(self, capsys):
        code, out, _ = run(
            capsys,
            "convert",
            "--from",
            "diagram",
            "--to",
            "ballot",
            "strings=6;1-2,3-6,4-5,1'-2',3'-4',5'-6'",
        )
        assert (code, out) == (0, "+-++--+-+-+-\n")

    def test_convert_ballot_to_diagram_unsupported(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "convert", "--from", "ballot", "--to", "diagram", "+-")
        assert exc.value.code == 2

    def test_convert_dyck_roundtrip(self, capsys):
        code, out, _ = run(capsys, "convert", "--from", "fc", "--to", "dyck", "n=1:[1,1]")
        assert (code, out) == (0, "RURU\n")
        code, out, _ = run(capsys, "convert", "--from", "dyck", "--to", "fc", "RURU")
        assert (code, out) == (0, "n=1:[1,1]\n")


class TestEnumAndTable:
    def test_enum_count_and_determinism(self, capsys):
        code, out1, _ = run(capsys, "enum", "--n", "3")
        assert code == 0
        assert len(out1.splitlines()) == 14
        _, out2, _ = run(capsys, "enum", "--n", "3")
        assert out1 == out2

    def test_enum_size_filter(self, capsys):
        code, out, _ = run(capsys, "enum", "--n", "4", "--size", "2")
        assert code == 0
        assert len(out.splitlines()) == 20

    def test_table_csv(self, capsys):
        code, out, _ = run(capsys, "table", "narayana", "--n", "4", "--format", "csv")
        assert code == 0
        assert out.splitlines()[-1] == "4,1,10,20,10,1"

    def test_table_start_end_flags_enumerated_cells(self, capsys):
        code, out, _ = run(capsys, "table", "start-end", "--n", "5")
        assert code == 0
        assert "*" in out

    def test_table_json(self, capsys):
        code, out, _ = run(capsys, "table", "triangle", "--n", "3", "--format", "json")
        payload = json.loads(out)
        assert payload["rows"][-1] == ["3", "1", "3", "5", "5"]


class TestCensusCommand:
    def test_rank_two(self, capsys):
        code, out, _ = run(capsys, "census", "--n", "2", "--p", "1")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 3
        assert all(line.endswith("\t1") for line in lines)


class TestRender:
    def test_writes_svg(self, capsys, tmp_path):
        target = tmp_path / "out.svg"
        code, out, _ = run(capsys, "render", "n=2:[1,2]", "--svg", str(target))
        assert code == 0
        assert out.strip() == str(target)
        assert target.read_text().startswith("<svg")


class TestVerifyCommand:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "lattice", "--max-n", "3")
        assert code == 0
        assert "FAIL" not in out
        assert out.strip().splitlines()[-1].endswith("checks passed")


class TestErrorPaths:
    def test_bad_canonical_form(self, capsys):
        code, _, err = run(capsys, "to-diagram", "n=5:[3,3][4,5]")
        assert code == 1
        assert "strictly decrease" in err

    def test_crossing_diagram(self, capsys):
        code, _, err = run(capsys, "to-fc", "strings=2;1-2',2-1'")
        assert code == 1
        assert "cross" in err

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["count"])
        assert exc.value.code == 2
