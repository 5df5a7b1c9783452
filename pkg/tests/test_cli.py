import json
import shutil
import subprocess

import pytest

from bicm import ComplexError, canonical_form, from_facets, parse_complex, rp2_six, serialize_complex, skeleton_complex
from bicm.cli import main
from corpus import fixtures


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def rp2_file(tmp_path):
    path = tmp_path / "rp2.txt"
    path.write_text("# six-vertex projective plane\n" + serialize_complex(rp2_six()))
    return str(path)


class TestComplexFile:
    def test_serialize(self):
        assert serialize_complex(from_facets(3, [(2, 3), (1,)])) == "n 3\n1\n2 3\n"

    def test_empty_facet(self):
        text = serialize_complex(from_facets(3, [()]))
        assert text == "n 3\nempty\n"
        assert parse_complex(text) == from_facets(3, [()])

    @pytest.mark.parametrize("name", list(fixtures()))
    def test_round_trip(self, name):
        cx = fixtures()[name]
        assert parse_complex(serialize_complex(cx)) == cx
        assert serialize_complex(parse_complex(serialize_complex(cx))) == serialize_complex(cx)

    def test_comments_and_blanks(self):
        cx = parse_complex("# hi\n\nn 4\n# inner\n3 1\n 2 4 \n")
        assert cx.facets == ((1, 3), (2, 4))

    @pytest.mark.parametrize("text", [
        "1 2\n",
        "n x\n1 2\n",
        "n 3\n1 a\n",
        "n 3\n1 1\n",
        "n 3\n1 4\n",
        "",
        "n 3\n",
    ])
    def test_parse_errors(self, text):
        with pytest.raises(ComplexError):
            parse_complex(text)


class TestAnalyze:
    def test_rp2(self, capsys, rp2_file):
        code, out, _ = run(capsys, "analyze", rp2_file, "--char", "0,2,3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "bicm-report/1"
        assert doc["type"] == [6, 2, 5]
        assert doc["characteristics"]["0"]["bicm"] is True
        assert doc["characteristics"]["3"]["bicm"] is True
        assert doc["characteristics"]["2"]["bicm"] is False

    def test_text_and_json_agree(self, capsys, rp2_file):
        _, text, _ = run(capsys, "analyze", rp2_file)
        _, js, _ = run(capsys, "analyze", rp2_file, "--json")
        doc = json.loads(js)
        assert f"f: {doc['f']}" in text
        assert f"h: {doc['h']}" in text
        assert f"cone bound: {doc['cone_bound']}" in text
        assert f"hilbert series: {doc['hilbert_series']}" in text

    def test_jobs(self, capsys, rp2_file):
        _, a, _ = run(capsys, "analyze", rp2_file, "--json")
        _, b, _ = run(capsys, "analyze", rp2_file, "--json", "--jobs", "2")
        assert a == b

    def test_skeleton(self, capsys, tmp_path):
        path = tmp_path / "k.txt"
        path.write_text(serialize_complex(skeleton_complex(4, 2)))
        doc = json.loads(run(capsys, "analyze", str(path), "--json")[1])
        assert doc["h"] == [1, 2, 3] and doc["cone_apexes"] == []

    def test_cone(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text(serialize_complex(fixtures()["cone_K4"]))
        doc = json.loads(run(capsys, "analyze", str(path), "--json")[1])
        assert doc["cone_apexes"] == [5]

    def test_full_simplex(self, capsys, tmp_path):
        path = tmp_path / "f.txt"
        path.write_text("n 2\n1 2\n")
        doc = json.loads(run(capsys, "analyze", str(path), "--json")[1])
        assert doc["dual_facets"] is None and doc["cone_bound"] is None

    def test_parse_error_exit(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("n 2\n1 7\n")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 1 and "error" in err

    def test_guard_exit(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "big.txt"
        path.write_text(serialize_complex(skeleton_complex(10, 5)))
        monkeypatch.setenv("BICM_FACE_GUARD", "50")
        code, _, err = run(capsys, "analyze", str(path))
        assert code == 2 and "guard" in err

    def test_usage_error_exit(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze"])
        assert exc.value.code == 1


class TestOtherCommands:
    def test_generate_pathmatrix_then_analyze(self, capsys, tmp_path):
        out = tmp_path / "x.txt"
        assert run(capsys, "generate", "pathmatrix", "--p", "3", "--q", "2", "-o", str(out))[0] == 0
        doc = json.loads(run(capsys, "analyze", str(out), "--json")[1])
        assert doc["type"] == [6, 2, 4]

    def test_generate_full_identification(self, capsys):
        _, out, _ = run(capsys, "generate", "pathmatrix", "--p", "2", "--q", "3", "--identify", "full")
        assert parse_complex(out) == skeleton_complex(4, 1)

    def test_generate_tree_reproducible(self, capsys):
        a = run(capsys, "generate", "tree", "--d", "3", "--attach", "4", "--seed", "9")[1]
        b = run(capsys, "generate", "tree", "--d", "3", "--attach", "4", "--seed", "9")[1]
        assert a == b and parse_complex(a).n == 7

    def test_generate_noncone(self, capsys):
        code, out, _ = run(capsys, "generate", "noncone", "--n", "5", "--c", "2", "--s", "4", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["n"] == 5 and doc["identification"]

    def test_generate_bad_range(self, capsys):
        assert run(capsys, "generate", "noncone", "--n", "9", "--c", "2", "--s", "4")[0] == 1

    def test_generate_missing_arg(self, capsys):
        assert run(capsys, "generate", "skeleton", "--s", "4")[0] == 1

    def test_dual(self, capsys, rp2_file, tmp_path):
        out = tmp_path / "d.txt"
        assert run(capsys, "dual", rp2_file, "-o", str(out))[0] == 0
        assert parse_complex(out.read_text()).facets != ()

    def test_betti(self, capsys, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text(serialize_complex(fixtures()["C4"]))
        code, text, _ = run(capsys, "betti", str(path), "--char", "2")
        assert code == 0 and "total:" in text
        doc = json.loads(run(capsys, "betti", str(path), "--json")[1])
        assert [1, 2, 2] in doc["entries"] and [2, 4, 1] in doc["entries"]

    def test_hilbert(self, capsys, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("n 3\n1\n2\n3\n")
        doc = json.loads(run(capsys, "hilbert", str(path), "--kmax", "4", "--json")[1])
        assert doc["coefficients"] == [0, 0, 3, 8, 15]

    def test_shelling(self, capsys, rp2_file):
        doc = json.loads(run(capsys, "shelling", rp2_file, "--json")[1])
        assert doc["search"] is None
        doc = json.loads(run(capsys, "shelling", rp2_file, "--order", "1,2,3,4,5,6,7,8,9,10", "--json")[1])
        assert doc["is_shelling"] is False and "search" not in doc

    def test_dichotomy_empty(self, capsys):
        code, out, _ = run(capsys, "dichotomy", "--p", "2", "--q", "2", "--cells", "")
        assert code == 0 and out.startswith("vertical path in the complement")

    def test_dichotomy_json(self, capsys):
        doc = json.loads(run(capsys, "dichotomy", "--p", "2", "--q", "2", "--cells", "1,1 1,2", "--json")[1])
        assert doc["alternative"] == "horizontal" and doc["values"] == [1, 1]

    def test_dichotomy_bad_cell(self, capsys):
        assert run(capsys, "dichotomy", "--p", "2", "--q", "2", "--cells", "3,1")[0] == 1

    def test_search(self, capsys):
        doc = json.loads(run(capsys, "search", "--n", "4", "--c", "1", "--s", "3", "--exhaustive", "--json")[1])
        assert doc["noncones"] == 1 and doc["bicm"] == doc["cones"] + doc["noncones"]

    def test_search_guard(self, capsys):
        assert run(capsys, "search", "--n", "8", "--c", "2", "--s", "5")[0] == 2

    def test_search_sampled(self, capsys):
        a = run(capsys, "search", "--n", "8", "--c", "1", "--s", "4", "--samples", "5", "--seed", "3", "--json")[1]
        b = run(capsys, "search", "--n", "8", "--c", "1", "--s", "4", "--samples", "5", "--seed", "3", "--json")[1]
        assert a == b and json.loads(a)["seed"] == 3


def test_search_reports_rp2(capsys):
    doc = json.loads(run(capsys, "search", "--n", "6", "--c", "2", "--s", "5", "--exhaustive", "--json")[1])
    rp2 = [list(f) for f in canonical_form(rp2_six()).facets]
    assert [e["facets"] for e in doc["char_dependent"]] == [rp2]
    assert doc["char_dependent"][0]["characteristics"] == [0, 3, 5]


def test_console_script(tmp_path):
    exe = shutil.which("bicm")
    if exe is None:
        pytest.skip("console script not installed")
    res = subprocess.run([exe, "dichotomy", "--p", "2", "--q", "2", "--cells", ""],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "vertical" in res.stdout
