import io
import json
import pathlib
import subprocess
import sys

import pytest

from nakayama.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    return [json.loads(line) for line in out.splitlines()]


class TestAnalyze:
    def test_2_3_3(self):
        (rep,) = run_json("analyze", "2,3,3")
        assert rep["decisions"] == {"finite_global_dimension": False, "gorenstein": False}
        cyc = rep["resolution_quiver"]["cycles"]
        assert [(c["vertices"], c["weight"], c["black"]) for c in cyc] == [([2], 1, True), ([3], 1, False)]

    def test_2_3_oracle(self):
        (rep,) = run_json("analyze", "2,3", "--oracle")
        assert rep["decisions"]["finite_global_dimension"] is True
        assert rep["oracle"]["global_dimension"] == 2

    def test_simple(self):
        (rep,) = run_json("analyze", "1")
        assert rep["decisions"] == {"finite_global_dimension": True, "gorenstein": True}
        assert rep["shape"] == "linear"

    def test_spaces_as_separate_arguments(self):
        assert run_json("analyze", "2", "3", "3") == run_json("analyze", "2,3,3")

    def test_structured_is_json(self):
        assert run("analyze", "2,3", "--format", "structured") == run("analyze", "2,3", "--format", "json")

    def test_key_order_is_fixed(self):
        (rep,) = run_json("analyze", "2,3", "--oracle", "--cartan", "--retract")
        assert list(rep) == [
            "input", "series", "n", "shape", "normalized", "selfinjective",
            "resolution_quiver", "decisions", "oracle", "cartan", "retraction",
        ]

    @pytest.mark.parametrize("cmd,section", [("cartan", "cartan"), ("retract", "retraction"), ("oracle", "oracle")])
    def test_subcommands_add_their_section(self, cmd, section):
        (rep,) = run_json(cmd, "2,3,3,3")
        assert section in rep

    @pytest.mark.parametrize("text", ["3,1,2", "2,0", "", "2,1,2,1", "2,3,4"])
    def test_invalid_input_exits_2(self, text):
        code, out, err = run("analyze", text)
        assert code == 2 and out == "" and err.startswith("error:")

    def test_invalid_message_names_entry(self):
        _, _, err = run("analyze", "3,1,2")
        assert "2" in err

    def test_missing_sequence(self):
        assert run("analyze")[0] == 2

    def test_file_mode(self, tmp_path):
        f = tmp_path / "in.txt"
        f.write_text("2,3,3\n# comment\n\n2 3\n4,4,4\n")
        reps = run_json("analyze", "--file", str(f))
        assert [r["series"] for r in reps] == [[2, 3, 3], [2, 3], [4, 4, 4]]

    def test_file_mode_bad_line(self, tmp_path):
        f = tmp_path / "in.txt"
        f.write_text("2,3\n3,1,2\n2,2\n")
        code, out, err = run("analyze", "--file", str(f), "--format", "json")
        assert code == 2 and len(out.splitlines()) == 2 and "3,1,2" in err


def _text_fields(text):
    fields = {}
    for line in text.splitlines():
        key, _, value = line.partition("  ")
        fields[key.strip()] = value.strip()
    return fields


@pytest.mark.parametrize("series", ["2,3,3", "2,3,3,3", "2,3", "2,2", "1", "3,2,1", "4,4,4"])
def test_text_and_structured_agree(series):
    (rep,) = run_json("analyze", series, "--oracle")
    _, text, _ = run("analyze", series, "--oracle")
    fields = _text_fields(text)
    word = {True: "true", False: "false"}
    assert fields["finite gldim"] == word[rep["decisions"]["finite_global_dimension"]]
    assert fields["gorenstein"] == word[rep["decisions"]["gorenstein"]]
    assert fields["oracle gldim"] == str(rep["oracle"]["global_dimension"])
    assert fields["components"].split()[0] == str(rep["resolution_quiver"]["component_count"])


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("analyze_*.json")), ids=lambda p: p.stem)
def test_golden(path):
    series = path.stem.removeprefix("analyze_").replace("_", ",")
    code, out, _ = run("analyze", series, "--oracle", "--cartan", "--retract", "--format", "json")
    assert code == 0
    assert out == path.read_text()


class TestCensusCommand:
    def test_small_run_exits_0(self):
        code, out, _ = run("census", "--n-max", "3", "--c-max", "4", "--format", "json")
        assert code == 0 and json.loads(out)["failures"] == 0

    @pytest.mark.parametrize("argv", [["--n-max", "0"], ["--c-max", "0"], ["--checks", "bogus"], ["--jobs", "0"]])
    def test_invalid_exits_2(self, argv):
        assert run("census", *argv)[0] == 2

    def test_single_size(self):
        code, out, _ = run("census", "--n-min", "2", "--n-max", "2", "--c-max", "2", "--format", "json")
        assert json.loads(out)["algebras_checked"] == 2

    def test_cumulative_bound(self):
        _, out, _ = run("census", "--n-max", "2", "--c-max", "2", "--format", "json")
        # (1), (2) for n = 1 and (2,2), (2,1) for n = 2
        assert json.loads(out)["algebras_checked"] == 4

    def test_no_timing_is_byte_stable(self):
        a = run("census", "--n-max", "3", "--c-max", "4", "--no-timing", "--format", "json")
        b = run("census", "--n-max", "3", "--c-max", "4", "--no-timing", "--format", "json", "--jobs", "2")
        assert a == b and "elapsed" not in a[1]

    def test_text_lists_skips(self):
        code, out, _ = run("census", "--n-max", "3", "--c-max", "4", "--budget", "0", "--no-timing")
        assert code == 0 and "skip" in out

    def test_list_checks(self):
        code, out, _ = run("census", "--list-checks")
        assert code == 0 and "snf_shape" in out.split()

    def test_checks_subset(self):
        _, out, _ = run("census", "--n-max", "2", "--c-max", "3", "--checks", "snf_shape", "--format", "json")
        assert list(json.loads(out)["checks"]) == ["snf_shape"]

    def test_jobs_env(self, monkeypatch):
        monkeypatch.setenv("ANALYZER_JOBS", "2")
        code, out, _ = run("census", "--n-max", "3", "--c-max", "3", "--no-timing", "--format", "json")
        assert code == 0
        monkeypatch.delenv("ANALYZER_JOBS")
        assert run("census", "--n-max", "3", "--c-max", "3", "--no-timing", "--format", "json")[1] == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama", "analyze", "2,3,3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["decisions"]["gorenstein"] is False
