import json
import subprocess
import sys

import pytest

from sturm import words
from sturm.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize(
    "directive, length, expected",
    [("1,(1)", "21", "abaababaabaababaababa"), ("2,2,1,(1)", "15", "aabaabaaabaabaa"), ("3", "3", "aaa")],
)
def test_generate(capsys, directive, length, expected):
    status, out, _ = run(capsys, "generate", "--directive", directive, "--length", length)
    assert status == 0
    assert out.strip() == expected


def test_generate_formats(capsys):
    _, out, _ = run(capsys, "generate", "--directive", "3", "--length", "3", "--format", "json")
    assert json.loads(out) == {"directive": "3", "length": 3, "word": "aaa"}
    _, out, _ = run(capsys, "generate", "--directive", "3", "--length", "3", "--format", "csv")
    assert out.splitlines() == ["directive,length,word", "3,3,aaa"]


@pytest.mark.parametrize("argv", [
    ["generate", "--directive", "2,x", "--length", "3"],
    ["generate", "--directive", "0,1", "--length", "3"],
    ["generate", "--directive", "2,2", "--length", "40"],
    ["generate", "--length", "4"],
])
def test_generate_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 2


def test_oc_word(capsys):
    status, out, _ = run(capsys, "oc", "abaaab")
    assert status == 0
    assert "101001" in out


def test_oc_directive_match(capsys):
    status, out, _ = run(capsys, "oc", "--directive", "2,2,1,(1)", "--length", "15", "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert data["oc"] == "110011110000111"
    assert data["predicted_k"] == [2, 4, 3]
    assert data["verdict"] == "MATCH"
    assert data["runs"] == [[1, 2], [0, 2], [1, 4], [0, 4], [1, 3]]


def test_oc_directive_text(capsys):
    status, out, _ = run(capsys, "oc", "--directive", "2,2,1,(1)", "--length", "15")
    assert status == 0
    assert "110011110000111" in out and "[2, 4, 3]" in out and "MATCH" in out


def test_oc_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(words, "oc_sequence", lambda w: "1" * len(w))
    status, out, _ = run(capsys, "oc", "--directive", "2,(1)", "--length", "10")
    assert status == 1
    assert "MISMATCH" in out


def test_oc_empty_word(capsys):
    status, out, _ = run(capsys, "oc", "")
    assert status == 0
    assert out == ""


def test_oc_rejects_digits_as_letters(capsys):
    status, _, err = run(capsys, "oc", "0101")
    assert status == 2
    assert "outside" in err


def test_oc_json_round_trip(capsys):
    _, out, _ = run(capsys, "oc", "--directive", "1,(1)", "--length", "30", "--format", "json")
    assert json.dumps(json.loads(out), indent=2) == out.rstrip("\n")


def test_classify_table_rows(capsys):
    status, out, _ = run(capsys, "classify", "--directive", "2,2,1,(1)", "--length", "14", "--format", "json")
    assert status == 0
    rows = {r["prefix"]: r["class"] for r in json.loads(out)["rows"]}
    assert rows["aaba"] == "open"
    assert rows["aabaa"] == "closed"
    assert rows["aabaab"] == "closed"
    assert rows["aabaabaa"] == "closed"
    assert rows["aabaabaaa"] == "open"
    assert rows["aabaabaaab"] == "open"
    assert rows["aabaabaaabaa"] == "open"
    assert rows["aabaabaaabaab"] == "closed"


def test_classify_text_layout(capsys):
    status, out, _ = run(capsys, "classify", "--directive", "2,2,1,(1)", "--length", "14")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 16
    assert "aaba " in lines[5] and "open" in lines[5] and "semicentral" in lines[5]


def test_classify_fibonacci_two_flips(capsys):
    _, out, _ = run(capsys, "classify", "--directive", "1,(1)", "--length", "3", "--format", "csv")
    rows = out.splitlines()[1:]
    assert sum(1 for r in rows if r.split(",")[3]) == 2


def test_classify_single_row(capsys):
    _, out, _ = run(capsys, "classify", "--directive", "4", "--length", "1", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows == [{"length": 1, "prefix": "a", "class": "closed", "event": "", "n": None}]


def test_factorize_fibonacci(capsys):
    status, out, _ = run(capsys, "factorize", "--directive", "1,(1)", "--count", "5", "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert [f["factor"] for f in data["factors"]] == ["b", "a", "ba", "aba", "baaba"]
    assert all(f["verified"] for f in data["factors"])


def test_factorize_text(capsys):
    status, out, _ = run(capsys, "factorize", "--directive", "2,2,1,(1)", "--count", "2")
    assert status == 0
    assert "ba" in out and "abaa" in out and "FAILED" not in out
    assert out.count("VERIFIED") == 2


def test_factorize_zero_count_exit_2(capsys):
    status, out, _ = run(capsys, "factorize", "--directive", "1,(1)", "--count", "0")
    assert status == 2
    assert out == ""


@pytest.mark.parametrize("bits, expected", [("101001", "abaaab"), ("1", "a"), ("100", "abb")])
def test_reconstruct(capsys, bits, expected):
    status, out, _ = run(capsys, "reconstruct", bits)
    assert status == 0
    assert out.strip() == expected


@pytest.mark.parametrize("bits", ["1101", "0"])
def test_reconstruct_inconsistent_exit_1(capsys, bits):
    status, _, err = run(capsys, "reconstruct", bits)
    assert status == 1
    assert "Oc" in err


def test_reconstruct_bad_chars_exit_2(capsys):
    status, _, _ = run(capsys, "reconstruct", "10a")
    assert status == 2


def test_verify_small_passes(capsys):
    status, out, _ = run(capsys, "verify", "--max-word-len", "8", "--max-terms", "2", "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert data["passed"]
    assert len(data["suites"]) == 13


def test_verify_reports_injected_fault(capsys, monkeypatch):
    real = words.is_closed
    monkeypatch.setattr(words, "is_closed", lambda w: real(w) if w != "abaa" else True)
    status, out, _ = run(capsys, "verify", "--max-word-len", "6", "--max-terms", "1")
    assert status == 1
    assert "FAIL  closed_oracle_equivalence" in out
    assert "verification FAILED" in out


def test_commands_are_deterministic(capsys):
    outs = [run(capsys, "classify", "--directive", "1,2,(3)", "--length", "40")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sturm", "generate", "--directive", "1,(1)", "--length", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "abaababa"
