import csv
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newtonbez import DenseMatrix, ParseError, PreconditionError, random_instance
from newtonbez.bench import CSV_HEADER
from newtonbez.cli import main
from newtonbez.io import dumps_instance, dumps_matrix, loads_instance, loads_matrix

EXAMPLE1 = {"field": "rational", "nodes": ["-1", "0", "2"], "F": ["1", "2", "3", "4"], "G": ["5", "6", "7"]}


@pytest.fixture
def write_json(tmp_path):
    def write(doc, name="inst.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return write


def read_matrix(path):
    doc = json.loads(open(path).read())
    n = doc["cols"]
    return [doc["entries"][i * n:(i + 1) * n] for i in range(doc["rows"])]


@settings(max_examples=30)
@given(st.integers(1, 9), st.data())
def test_instance_round_trip(n, data):
    m = data.draw(st.integers(1, n))
    inst = random_instance(n, m, data.draw(st.integers(0, 999)))
    assert loads_instance(dumps_instance(inst)) == (inst, "rational")


def test_f64_instance_round_trip():
    inst = random_instance(4, 2, 3, "f64")
    assert loads_instance(dumps_instance(inst, "f64")) == (inst, "f64")


def test_matrix_round_trip():
    text = dumps_matrix(DenseMatrix([[Fraction(1, 2), 2], [3, -4]]))
    assert loads_matrix(text).tolist() == [[Fraction(1, 2), 2], [3, -4]]
    with pytest.raises(ParseError):
        loads_matrix('{"rows": 2, "cols": 2, "entries": ["1"]}')


@pytest.mark.parametrize(
    "doc, exc",
    [
        ("not json", ParseError),
        ({"nodes": ["1"], "F": ["1", "x"], "G": ["1"]}, ParseError),
        ({"nodes": ["1"], "F": ["1"], "G": ["1"]}, ParseError),
        ({"nodes": ["1"], "F": ["1", "2"], "G": ["1", "2", "3"]}, PreconditionError),
        ({"nodes": ["1"], "F": ["1", "0"], "G": ["1"]}, PreconditionError),
        ({"field": "gf2", "nodes": ["1"], "F": ["1", "2"], "G": ["1"]}, ParseError),
    ],
)
def test_instance_errors(doc, exc):
    with pytest.raises(exc):
        loads_instance(doc if isinstance(doc, str) else json.dumps(doc))


def test_bezout_command_modes(write_json, tmp_path):
    path = write_json(EXAMPLE1)
    outputs = {}
    for mode in ("preserving", "transform", "oracle"):
        out = tmp_path / f"{mode}.json"
        assert main(["bezout", path, "--mode", mode, "-o", str(out)]) == 0
        outputs[mode] = out.read_bytes()
    assert outputs["preserving"] == outputs["transform"] == outputs["oracle"]
    assert read_matrix(tmp_path / "preserving.json") == [["28", "24", "20"], ["24", "-24", "-52"], ["20", "-52", "56"]]


def test_bezout_command_monomial_basis(write_json, tmp_path):
    path = write_json(EXAMPLE1)
    for mode in ("preserving", "oracle"):
        out = tmp_path / f"m_{mode}.json"
        assert main(["bezout", path, "--basis", "monomial", "--mode", mode, "-o", str(out)]) == 0
        assert read_matrix(out) == [["28", "52", "44"], ["52", "52", "-32"], ["44", "-32", "-72"]]


def test_bezout_command_stdout(write_json, capsys):
    assert main(["bezout", write_json(EXAMPLE1)]) == 0
    assert json.loads(capsys.readouterr().out)["rows"] == 3


def test_bezout_command_g_too_long(write_json, capsys):
    doc = dict(EXAMPLE1, G=["1", "2", "3", "4", "5"])
    assert main(["bezout", write_json(doc)]) == 3
    assert "m > n" in capsys.readouterr().err


def test_bezout_command_missing_file(tmp_path):
    assert main(["bezout", str(tmp_path / "nope.json")]) == 2


def test_confederate_command(write_json, tmp_path):
    one = dict(EXAMPLE1, G=["1"])
    path = write_json(one)
    for approach in "abc":
        out = tmp_path / f"{approach}.json"
        assert main(["confederate", path, "--approach", approach, "-o", str(out)]) == 0
        assert read_matrix(out) == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

    path = write_json(EXAMPLE1, "ex1.json")
    assert main(["confederate", path, "--approach", "a", "-o", str(tmp_path / "A.json")]) == 0
    assert main(["confederate", path, "--approach", "c", "-o", str(tmp_path / "C.json")]) == 0
    assert (tmp_path / "A.json").read_bytes() == (tmp_path / "C.json").read_bytes()


def test_confederate_command_bad_scalar(write_json):
    assert main(["confederate", write_json(dict(EXAMPLE1, F=["1", "2", "3", "4/0"]))]) == 2


def test_verify_random(capsys):
    assert main(["verify", "--random", "8", "6", "42", "25"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 8 and all(l.startswith("PASS") for l in lines)


def test_verify_file_with_g_equal_f(write_json, capsys):
    doc = dict(EXAMPLE1, G=EXAMPLE1["F"])
    assert main(["verify", write_json(doc)]) == 0
    assert "zero matrix" in capsys.readouterr().out


def test_verify_injected_fault(tmp_path, capsys):
    ce = tmp_path / "ce.json"
    rc = main(["verify", "--random", "4", "2", "1", "2", "--inject-fault", "--counterexample", str(ce)])
    assert rc == 1
    assert "FAIL" in capsys.readouterr().out
    inst, _ = loads_instance(ce.read_text())
    assert inst == random_instance(4, 2, 1)


def test_verify_usage():
    assert main(["verify"]) == 2
    assert main(["verify", "--random", "2", "5", "1", "1"]) == 3


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["gen", "3", "2", "7", "-o", str(a)]) == 0
    assert main(["gen", "3", "2", "7", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert loads_instance(a.read_text())[0] == random_instance(3, 2, 7)


def test_gen_rejects_m_above_n():
    assert main(["gen", "2", "5", "1"]) == 3


def test_unknown_command():
    assert main(["frobnicate"]) == 2


def test_bench_rational_counts(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "4", "--field", "rational", "--repeats", "1", "--csv", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 3
    for row in rows[1:]:
        rec = dict(zip(CSV_HEADER, row))
        assert (rec["mults"], rec["adds"]) == ("26", "28")
        assert float(rec["ratio"]) == pytest.approx(float(rec["t_trans"]) / float(rec["t_preserving"]), rel=1e-4)
    assert [r[:2] for r in rows[1:]] == [["4", "4"], ["4", "2"]]


def test_bench_f64_blank_counts(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "2,3", "--repeats", "1", "--csv", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert [(r["n"], r["m"]) for r in rows] == [("2", "2"), ("3", "3"), ("3", "1")]
    assert all(r["mults"] == "" and r["adds"] == "" for r in rows)


def test_bench_usage():
    assert main(["bench"]) == 2
    assert main(["bench", "1"]) == 2


def test_bench_paper_degrees_csv(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "50,100,150,200", "--repeats", "1", "--csv", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 8
    assert all(float(r["ratio"]) > 1 for r in rows)
    assert rows[0]["size"] == "50x50"
