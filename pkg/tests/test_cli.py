import json
import subprocess
import sys

import pytest

from keypoly.cli import main
from keypoly.compositions import contains_pattern, parse_composition
from keypoly.polynomial import Polynomial, parse_plain


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestExpand:
    def test_demazure(self, capsys):
        code, out = run(capsys, "expand", "0,1,1", "--model", "demazure")
        assert code == 0
        assert out.splitlines() == ["1 * x1^1 x2^1", "1 * x1^1 x3^1", "1 * x2^1 x3^1"]

    def test_kohnert(self, capsys):
        _, out = run(capsys, "expand", "0,2,1,2", "--model", "kohnert")
        lines = out.splitlines()
        assert len(lines) == 14
        assert sum(line.startswith("2 * ") for line in lines) == 2

    def test_quasikey(self, capsys):
        _, out = run(capsys, "expand", "2,1", "--model", "quasikey")
        assert out.strip() == "1 * x1^2 x2^1"

    @pytest.mark.parametrize("model", ["demazure", "kohnert", "quasikey"])
    def test_plain_and_structured_agree(self, capsys, model):
        _, plain = run(capsys, "expand", "[1,0,2,1]", "--model", model)
        _, structured = run(capsys, "expand", "1,0,2,1", "--model", model, "--format", "structured")
        records = json.loads(structured)
        assert Polynomial.from_records(4, records) == parse_plain(plain, 4)
        assert [r["exponents"] for r in records] == sorted(r["exponents"] for r in records)

    def test_bad_composition(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["expand", "0,x,2"])
        assert exc.value.code == 2
        assert "position 3" in capsys.readouterr().err

    def test_bad_model(self):
        with pytest.raises(SystemExit) as exc:
            main(["expand", "0,1", "--model", "schubert"])
        assert exc.value.code == 2


class TestClassify:
    def test_free(self, capsys):
        assert run(capsys, "classify", "0,1,1") == (0, "multiplicity-free\n")
        assert run(capsys, "classify", "5") == (0, "multiplicity-free\n")

    def test_witness(self, capsys):
        _, out = run(capsys, "classify", "0,2,1,2")
        assert out.strip() == "has multiplicity: contains 0,1,2 at positions 1,3,4"

    @pytest.mark.parametrize("text", ["0,2,1,2", "1,0,3,2", "2,0,0,3,3", "3,1,4,4,0"])
    def test_witness_round_trip(self, capsys, text):
        _, out = run(capsys, "classify", text, "--format", "structured")
        doc = json.loads(out)
        alpha = parse_composition(text)
        sub = tuple(alpha[j - 1] for j in doc["positions"])
        assert contains_pattern(sub, doc["pattern"])
        assert contains_pattern(alpha, doc["pattern"])


class TestTableaux:
    def test_paper_example(self, capsys):
        _, out = run(capsys, "tableaux", "3,2,1,3,2")
        blocks = out.strip().split("\n\n")
        assert blocks[0] == "#qKT(3,2,1,3,2) = 2"
        assert blocks[1:] == ["5 5\n4 4 3\n3\n2 2\n1 1 1", "5 5\n4 4 4\n3\n2 2\n1 1 1"]

    def test_counts(self, capsys):
        assert run(capsys, "tableaux", "1,0")[1].startswith("#qKT(1,0) = 1")
        assert run(capsys, "tableaux", "0,0")[1].startswith("#qKT(0,0) = 1")


class TestVerify:
    def test_classification(self, capsys):
        code, out = run(capsys, "verify", "--n", "3", "--max-part", "2", "--suite", "classification")
        doc = json.loads(out)
        assert code == 0 and doc["checked"] == 27 and doc["mismatches"] == []
        assert doc["grid"] == {"n": 3, "max_part": 2}

    def test_models(self, capsys):
        code, out = run(capsys, "verify", "--n", "4", "--max-part", "3", "--suite", "models", "--jobs", "2")
        doc = json.loads(out)
        assert code == 0 and doc["checked"] == 256 and doc["mismatches"] == []

    def test_lemmas(self, capsys):
        code, out = run(capsys, "verify", "--n", "2", "--max-part", "1", "--suite", "lemmas", "--format", "plain")
        assert code == 0 and "0 mismatches" in out

    def test_conjecture_never_fails(self, capsys):
        code, _ = run(capsys, "verify", "--n", "3", "--max-part", "2", "--suite", "conjecture")
        assert code == 0

    def test_counterexample_exit_status(self, capsys, monkeypatch):
        import keypoly.classify as classify

        monkeypatch.setattr(classify, "avoids_km", lambda alpha: True)
        code, _ = run(capsys, "verify", "--n", "3", "--max-part", "2")
        assert code == 1

    def test_budget(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--n", "7", "--max-part", "9"])
        assert exc.value.code == 2
        assert "--force" in capsys.readouterr().err

    def test_budget_override(self, capsys):
        code, out = run(capsys, "verify", "--n", "2", "--max-part", "3", "--max-grid", "4", "--force")
        assert code == 0 and json.loads(out)["checked"] == 16


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "keypoly", "classify", "0,2,1,2"], capture_output=True, text=True, check=True
    )
    assert proc.stdout.startswith("has multiplicity")
