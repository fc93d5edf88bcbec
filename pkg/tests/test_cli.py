import pytest

from hamcircuit.circuit import Mode
from hamcircuit.cli import main
from hamcircuit.compiler import compile_graph
from hamcircuit.netlist import emit_netlist, parse_netlist

from conftest import PENTAGON_CHORD_TEXT, K4_TEXT


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "k4": K4_TEXT,
        "b1a": PENTAGON_CHORD_TEXT,
        "tri": "3 3\n1 2\n2 3\n3 1\n",
        "empty": "4 0\n",
        "bad": "3 1\n2 2\n",
        "big": "9 0\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def summary(out):
    return dict(line.split(": ") for line in out.splitlines() if ": " in line)


def test_find_k4(files, capsys):
    assert main(["find", files["k4"]]) == 0
    out = capsys.readouterr().out
    assert summary(out) == {"registers tested": "6", "flagged": "6", "distinct cycles": "3"}
    for cycle in ("1-2-3-4-1", "1-2-4-3-1", "1-3-2-4-1", "1-4-3-2-1"):
        assert cycle in out.splitlines()


def test_find_fixture(files, capsys):
    assert main(["find", files["b1a"]]) == 0
    out = capsys.readouterr().out
    assert summary(out)["flagged"] == "2" and summary(out)["distinct cycles"] == "1"
    assert "1-2-3-4-5-1" in out.splitlines()


def test_find_edgeless(files, capsys):
    assert main(["find", files["empty"]]) == 0
    out = capsys.readouterr().out
    assert summary(out)["flagged"] == "0"
    assert "no Hamiltonian circuit" in out


def test_find_csv_and_limit(files, capsys):
    main(["find", files["k4"], "--format", "csv", "--limit", "2"])
    assert capsys.readouterr().out.splitlines() == ["rank,cycle", "0,1-2-3-4-1", "1,1-2-4-3-1"]


def test_find_full_codes(files, capsys):
    assert main(["find", files["k4"], "--full-codes"]) == 0
    assert summary(capsys.readouterr().out)["flagged"] == "24"
    assert main(["find", files["k4"], "--full-codes", "--mode", "cmos-reduced"]) == 2
    assert main(["find", files["big"], "--full-codes"]) == 3


def test_find_workers_byte_identical(files, capsys):
    outputs = []
    for w in ("1", "2", "3"):
        main(["find", files["b1a"], "--workers", w])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_find_parse_error_exit_2(files, capsys):
    assert main(["find", files["bad"]]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["find", files["k4"] + ".missing"]) == 2


def test_compile_triangle(files, capsys):
    assert main(["compile", files["tri"]]) == 0
    text = capsys.readouterr().out
    assert sum(line.startswith("# segment ") for line in text.splitlines()) == 4
    assert "MCN" not in text


def test_compile_no_lower(files, capsys):
    main(["compile", files["k4"], "--no-lower", "--mode", "reversible-full"])
    text = capsys.readouterr().out
    assert any(line.startswith("MCN ") for line in text.splitlines())
    assert parse_netlist(text).mode is Mode.REVERSIBLE_FULL


def test_compile_bad_file(files):
    assert main(["compile", files["bad"]]) == 2


def test_resources_range(files, capsys):
    assert main(["resources", "--n-range", "2..10"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 10
    assert rows[-1] == "10,4,362880,59,14515200"
    assert main(["resources", "--n-range", "5..2"]) == 2


def test_resources_graph(files, capsys):
    assert main(["resources", files["k4"]]) == 0
    out = capsys.readouterr().out
    assert "registers (n-1)!" in out and out.split("registers (n-1)!")[1].split()[0] == "6"
    main(["resources", files["k4"], "--format", "csv"])
    assert "num_registers,6" in capsys.readouterr().out


def test_verify_k4(files, capsys):
    assert main(["verify", files["k4"]]) == 0
    assert "ok" in capsys.readouterr().out


def test_verify_random_reproducible(capsys):
    args = ["verify", "--random", "20", "--n", "5", "--edge-prob", "0.5", "--seed", "7"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert "20/20" in first


def test_verify_corrupted_netlist(files, tmp_path, capsys):
    from hamcircuit.graph import parse_graph

    c = compile_graph(parse_graph(K4_TEXT))
    lines = emit_netlist(c).splitlines()
    # flip a workspace bit midway through the gate list
    corrupted = tmp_path / "bad.net"
    body = [l for l in lines if not l.startswith("#")]
    target = len(lines) - len(body) + len(body) // 2
    lines[target] = "NOT 0"
    corrupted.write_text("\n".join(lines) + "\n")
    assert main(["verify", files["k4"], "--netlist", str(corrupted)]) == 1
    out = capsys.readouterr().out
    assert "MISMATCH" in out and "first rank" in out

    clean = tmp_path / "good.net"
    clean.write_text(emit_netlist(c))
    assert main(["verify", files["k4"], "--netlist", str(clean)]) == 0
