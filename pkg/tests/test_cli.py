import json

from chordgenus import __version__
from chordgenus.cli import main
from chordgenus.errors import VerificationFailedError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


class TestRangeCommand:
    def test_high_genus_word(self, capsys):
        code, out, _ = run_cli(capsys, "range", "12312345674675")
        assert code == 0
        assert "gr = [2, 4]" in out

    def test_profile(self, capsys):
        code, out, _ = run_cli(capsys, "range", "11", "--profile")
        assert code == 0
        assert "genus 0: 2 attachments" in out
        assert "genus 1: 2 attachments" in out

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "range", "1213")
        assert code == 2
        assert "twice" in err

    def test_budget_exit_3(self, capsys):
        code, _, err = run_cli(
            capsys, "range", ",".join(str(x) for x in range(1, 14) for _ in (0, 1)))
        assert code == 3

    def test_json_envelope(self, capsys):
        doc = run_json(capsys, "range", "1212")
        assert doc["command"] == "range"
        assert doc["version"] == __version__
        assert doc["results"]["range"] == [0, 1]
        assert "timing_seconds" in doc


class TestTraceCommand:
    def test_all_in(self, capsys):
        code, out, _ = run_cli(capsys, "trace", "1212", "--attach", "all-in")
        assert code == 0
        assert "b = 2" in out and "genus = 1" in out

    def test_mixed(self, capsys):
        code, out, _ = run_cli(capsys, "trace", "11", "--attach", "io")
        assert code == 0
        assert "b = 1" in out and "end edge single" in out

    def test_flag_mismatch_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "trace", "11", "--attach", "iii")
        assert code == 2
        assert "endpoints" in err

    def test_json_faces(self, capsys):
        doc = run_json(capsys, "trace", "11", "--attach", "all-in")
        assert doc["results"]["b"] == 3
        assert len(doc["results"]["faces"]) == 3


class TestTableCommand:
    def test_small_table(self, capsys):
        code, out, _ = run_cli(capsys, "table", "3", "--jobs", "1")
        assert code == 0
        assert "5 classes" in out
        assert "[0, 2]: 3 classes" in out

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "table", "2", "--jobs", "1", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["word,lo,hi", "1122,0,1", "1212,0,1"]

    def test_force_required_for_8(self, capsys):
        code, _, err = run_cli(capsys, "table", "8", "--jobs", "1")
        assert code == 3

    def test_jobs_do_not_change_results(self, capsys):
        doc1 = run_json(capsys, "table", "4", "--jobs", "1")
        doc2 = run_json(capsys, "table", "4", "--jobs", "2")
        assert doc1["results"] == doc2["results"]

    def test_cache_round_trip(self, capsys, tmp_path):
        cache = tmp_path / "cache"
        doc1 = run_json(capsys, "table", "4", "--jobs", "1", "--cache", str(cache))
        path = cache / "table-n4-v1.json"
        assert path.exists()
        first_bytes = path.read_bytes()
        doc2 = run_json(capsys, "table", "4", "--jobs", "1", "--cache", str(cache))
        assert doc1["results"] == doc2["results"]
        assert path.read_bytes() == first_bytes
        # a fresh recomputation serializes to the same bytes
        path.unlink()
        run_json(capsys, "table", "4", "--jobs", "1", "--cache", str(cache))
        assert path.read_bytes() == first_bytes

    def test_cache_env_var(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CHORDGENUS_CACHE", str(tmp_path / "envcache"))
        run_json(capsys, "table", "3", "--jobs", "1")
        assert (tmp_path / "envcache" / "table-n3-v1.json").exists()


class TestConjecturesCommand:
    def test_n4(self, capsys):
        code, out, _ = run_cli(capsys, "conjectures", "4", "--jobs", "1")
        assert code == 0
        assert out.count("holds") == 3
        assert "FAILS" not in out


class TestWitnessCommand:
    def test_verified(self, capsys):
        code, out, _ = run_cli(capsys, "witness", "7", "2", "4")
        assert code == 0
        assert "12341342567567" in out and "verified" in out

    def test_not_guaranteed_exit_4(self, capsys):
        code, _, err = run_cli(capsys, "witness", "6", "2", "3")
        assert code == 4

    def test_verification_failure_exit_5(self, capsys, monkeypatch):
        import chordgenus.cli as cli_mod

        def broken(*a, **k):
            raise VerificationFailedError("boom")
        monkeypatch.setattr(cli_mod.ranges, "witness", broken)
        code, _, err = run_cli(capsys, "witness", "7", "2", "4")
        assert code == 5


class TestChartCommand:
    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "chart", "3", "--jobs", "1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "a,b,status"
        assert "1,2,realized" in lines
        assert "1,1,impossible" in lines

    def test_svg(self, capsys, tmp_path):
        out_file = tmp_path / "chart.svg"
        code, out, _ = run_cli(capsys, "chart", "3", "--jobs", "1",
                               "--format", "svg", "--output", str(out_file))
        assert code == 0
        svg = out_file.read_text()
        assert svg.startswith("<svg") and "</svg>" in svg

    def test_svg_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "chart", "2", "--jobs", "1", "--format", "svg")
        assert code == 0
        assert out.startswith("<svg")


class TestClassifyCommand:
    def test_interleaved_triple(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "123123")
        assert code == 0
        assert "E(min,1), A(max,1)" in out

    def test_json_conditions(self, capsys):
        doc = run_json(capsys, "classify", "11")
        cond = doc["results"]["conditions"]
        assert cond["A(min,2)"] is True
        assert cond["A(max,1)"] is True
        assert cond["E(min,1)"] is False


class TestEnumerateCommand:
    def test_lists_classes(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "3")
        assert code == 0
        assert "5 equivalence classes" in out

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "2", "--format", "csv")
        assert out.splitlines() == ["word", "1122", "1212"]

    def test_limit_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "9")
        assert code == 3
