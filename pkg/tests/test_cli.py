import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from picloc.cli import main
from picloc.picard import CohomologyReport

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_binoid_x_plus_y_equals_2z(capsys):
    code, out, _ = run(capsys, "binoid", SAMPLES / "x+y=2z.json")
    assert code == 0
    d = json.loads(out)
    assert d["degrees"][1]["torsion"] == [2] and d["degrees"][1]["free_rank"] == 0
    code, out, _ = run(capsys, "binoid", SAMPLES / "x+y=2z.json", "--cover", "extremal")
    assert json.loads(out)["chain_ranks"] == [2, 2]


def test_binoid_semifree_and_rejections(capsys):
    code, out, _ = run(capsys, "binoid", SAMPLES / "two-points.json")
    assert code == 0 and json.loads(out)["degrees"][0]["free_rank"] == 2
    code, _, err = run(capsys, "binoid", SAMPLES / "picardnot00.json")
    assert code == 1 and "TorsionDetected" in err and "2e=e" in err


def test_stanley_reisner_and_graph(capsys):
    code, out, _ = run(capsys, "stanley-reisner", SAMPLES / "triangle.facets", "--field", "q=7")
    d = json.loads(out)
    assert code == 0 and d["degrees"][1]["free_rank"] == 3 and d["degrees"][1]["torsion"] == [6]
    assert CohomologyReport.from_dict(d).to_dict() == d
    code, out, _ = run(capsys, "graph", SAMPLES / "triangle.facets")
    d = json.loads(out)
    assert (d["s"], d["r"]) == (0, 3) and d["graded"]["ranks"] == [1, 3, 3, 1]


def test_simplicial_methods_and_crosscheck(capsys):
    outs = []
    for args in (["simplicial"], ["simplicial", "--method", "formula"], ["crosscheck"]):
        code, out, _ = run(capsys, *args, SAMPLES / "prism.facets")
        assert code == 0
        outs.append([e["free_rank"] for e in json.loads(out)["degrees"]])
    assert outs[0] == outs[1] == outs[2]


def test_monomial(capsys):
    code, out, _ = run(capsys, "monomial", SAMPLES / "x2.ideal", "--field", "Q")
    d = json.loads(out)
    assert code == 0 and d["excluded_vertices"] == ["x"]
    nz = {k: v for k, v in d["nilpotent"]["table"].items() if any(v)}
    assert nz == {f"1,{b}": [1, 0] for b in range(-2, 3)}
    code, _, err = run(capsys, "monomial", SAMPLES / "x2.ideal", "--field", "q=5")
    assert code == 1 and "CharPUnsupported" in err


def test_pretty_output(capsys):
    code, out, _ = run(capsys, "stanley-reisner", SAMPLES / "triangle.facets",
                       "--field", "symbolic", "--pretty")
    assert code == 0 and "Z^3 + K*" in out
    assert all(line == line.rstrip() for line in out.splitlines())


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "simplicial", tmp_path / "missing.facets")
    assert code == 2 and "ParseError" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "binoid", bad)[0] == 2
    mixed = tmp_path / "mixed.json"
    mixed.write_text('{"generators": ["x","y"], "congruences": [[[2,0],[0,2]]], '
                     '"infinities": [[1,1]]}')
    code, _, err = run(capsys, "binoid", mixed)
    assert code == 1 and "MixedPresentation" in err
    code, _, err = run(capsys, "graph", SAMPLES / "two-triangles.facets")
    assert code == 1 and "NotAGraph" in err
    with pytest.raises(SystemExit) as exc:
        main(["stanley-reisner", str(SAMPLES / "triangle.facets")])
    assert exc.value.code == 2
    capsys.readouterr()


def test_determinism_and_jobs():
    def call(*args):
        return subprocess.run([sys.executable, "-m", "picloc", *map(str, args)],
                              capture_output=True, check=True, env=dict(os.environ)).stdout
    a = call("monomial", SAMPLES / "x2y-xy2.ideal", "--field", "Q")
    assert a == call("monomial", SAMPLES / "x2y-xy2.ideal", "--field", "Q", "--jobs", "2")
    b = call("binoid", SAMPLES / "x+y=z+w.json")
    assert b == call("binoid", SAMPLES / "x+y=z+w.json")
    assert json.loads(b)["chain_ranks"] == [4, 14, 12, 3]
