import json
import subprocess
import sys

import pytest

from tverberg.cli import dump_complex, load_file, main, parse_complex
from tverberg.errors import ParseError
from tverberg.generators import cross_polytope_boundary, minimal_cw_sphere, simplex, y_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return _write


def betti(hom):
    return [d["betti"] for d in hom["degrees"]]


def run_json(capsys, argv):
    capsys.readouterr()
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "name,param",
    [("simplex", 3), ("boundary-simplex", 2), ("cross-polytope", 2), ("minimal-cw-sphere", 2),
     ("cycle", 4), ("path", 3), ("y", None)],
)
def test_gen_round_trip(tmp_path, capsys, name, param):
    out = str(tmp_path / "x.json")
    argv = ["gen", name] + ([] if param is None else [str(param)]) + ["--out", out]
    assert main(argv) == 0
    obj, digest = load_file(out)
    assert digest.startswith("sha256:")
    assert parse_complex(dump_complex(obj)) == obj
    assert dump_complex(obj) == json.loads(open(out).read())


def test_gen_suspend(tmp_path, capsys):
    out = str(tmp_path / "s.json")
    assert main(["gen", "boundary-simplex", "1", "--suspend", "2", "--out", out]) == 0
    code, rep = run_json(capsys, ["homology", out])
    assert code == 0 and betti(rep["result"]) == [0, 0, 1]
    assert main(["gen", "y", "--suspend", "1", "--out", out]) == 2


def test_json_output_is_byte_identical(write, capsys):
    f = write("y.json", dump_complex(y_graph()))
    outputs = []
    for _ in range(2):
        main(["certify", f, "--d", "1", "--r", "2", "--json"])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    rep = json.loads(outputs[0])
    assert set(rep) == {"tool", "version", "command", "input_digest", "result"}


def test_certify_exit_codes(write, capsys):
    d2 = write("d2.json", dump_complex(simplex(2)))
    y = write("y.json", dump_complex(y_graph()))
    assert main(["certify", d2, "--d", "1", "--r", "2"]) == 0

    code, rep = run_json(capsys, ["certify", y, "--d", "1", "--r", "2", "--method", "complementary"])
    assert code == 1
    assert rep["result"]["verdict"] == "inconclusive"
    assert "v0" in rep["result"]["reason"]

    code, rep = run_json(capsys, ["certify", y, "--d", "1", "--r", "2", "--method", "deleted-product"])
    assert code == 0 and rep["result"]["method"] == "deleted_product"

    code, rep = run_json(capsys, ["certify", d2, "--d", "1", "--r", "6"])
    assert code == 1 and rep["result"]["reason_code"] == "NotPrimePower"

    code, rep = run_json(capsys, ["certify", d2, "--d", "1", "--r", "2", "--max-cells", "3",
                                  "--method", "deleted-product"])
    assert code == 2 and rep["error"]["kind"] == "SizeLimitExceeded"


def test_text_output(write, capsys):
    y = write("y.json", dump_complex(y_graph()))
    assert main(["certify", y, "--d", "1", "--r", "2", "--method", "complementary"]) == 1
    out = capsys.readouterr().out
    assert "inconclusive" in out and "v0" in out


def test_homology_and_acyclic(write, capsys):
    f = write("s2.json", dump_complex(minimal_cw_sphere(2)))
    code, rep = run_json(capsys, ["homology", f])
    assert code == 0 and betti(rep["result"]) == [0, 0, 1]
    assert main(["acyclic", f, "--n", "1"]) == 0
    code, rep = run_json(capsys, ["acyclic", f, "--n", "2"])
    assert code == 1 and rep["result"]["witness_degree"] == 2


def test_complementary_and_conf(write, capsys):
    f = write("s2.json", dump_complex(minimal_cw_sphere(2)))
    code, rep = run_json(capsys, ["complementary", f, "--k", "1", "--n", "0", "--all"])
    assert code == 1 and len(rep["result"]["failures"]) == 2
    o = write("o.json", dump_complex(cross_polytope_boundary(2)))
    assert main(["complementary", o, "--k", "2", "--n", "0"]) == 0
    d3 = write("d3.json", dump_complex(simplex(3)))
    code, rep = run_json(capsys, ["conf", d3, "--r", "2", "--homology"])
    assert code == 0
    assert rep["result"]["census"] == [12, 24, 14]
    assert betti(rep["result"]["homology"]) == [0, 0, 1]


def test_graph_commands(write, capsys):
    y = write("y.json", {"type": "graph", "vertices": 4, "edges": [[0, 1], [0, 2], [0, 3]]})
    p = write("p.json", {"type": "graph", "vertices": 3, "edges": [[0, 1], [1, 2]]})
    assert main(["graph", "classify", y]) == 0
    assert main(["graph", "classify", p]) == 1
    d2 = write("d2.json", dump_complex(simplex(2)))
    assert main(["graph", "classify", d2]) == 2
    code, rep = run_json(capsys, ["graph", "corpus", "--max-edges", "4"])
    assert code == 0
    assert rep["result"]["graphs"] == 1 + 2 + 5 + 12
    assert rep["result"]["violations"] == 0
    assert main(["graph", "corpus", "--max-edges", "7"]) == 2


def test_flags_before_or_after_subcommand(write, capsys):
    f = write("d2.json", dump_complex(simplex(2)))
    main(["--json", "homology", f])
    a = json.loads(capsys.readouterr().out)
    main(["homology", f, "--json"])
    b = json.loads(capsys.readouterr().out)
    assert a["result"] == b["result"] and a["input_digest"] == b["input_digest"]


def test_strict_mode(write, capsys):
    # a 2-cell glued to a single vertex is not regular; its boundary is not a circle
    doc = {"type": "cw", "cells": [
        {"id": "a", "dim": 0, "boundary": []},
        {"id": "b", "dim": 0, "boundary": []},
        {"id": "e", "dim": 1, "boundary": ["a", "b"]},
        {"id": "f", "dim": 2, "boundary": ["e"]},
    ]}
    f = write("bad.json", doc)
    assert main(["homology", f]) == 0
    capsys.readouterr()
    assert main(["homology", f, "--strict"]) == 2
    assert "not a homology 1-sphere" in capsys.readouterr().err
    ok = write("s2.json", dump_complex(minimal_cw_sphere(2)))
    assert main(["--strict", "homology", ok]) == 0


@pytest.mark.parametrize(
    "doc,fragment",
    [
        ("{not json", "line 1"),
        ({"type": "sheaf"}, "unknown type"),
        ({"type": "simplicial", "facets": [[0, 1], [2, "x"]]}, "facets[1]"),
        ({"type": "simplicial", "facets": [[0], []]}, "facets"),
        ({"type": "cw", "cells": [{"id": "a"}]}, "cells[0]"),
        ({"type": "cw", "cells": [{"id": "e", "dim": 1, "boundary": ["zz"]}]}, "zz"),
        ({"type": "graph", "vertices": 2, "edges": [[0, 0]]}, "edges"),
        ({"type": "graph", "vertices": 2, "edges": [[0]]}, "edges[0]"),
    ],
)
def test_parse_errors_have_context(write, capsys, doc, fragment):
    f = write("bad.json", doc)
    assert main(["homology", f]) == 2
    err = capsys.readouterr().err
    assert fragment in err and "bad.json" in err


def test_parse_complex_rejects_non_object():
    with pytest.raises(ParseError):
        parse_complex([1, 2])


def test_missing_file(capsys, tmp_path):
    code, rep = run_json(capsys, ["homology", str(tmp_path / "nope.json")])
    assert code == 2 and rep["error"]["kind"] == "FileNotFoundError"


def test_module_entry_point(write):
    f = write("d2.json", dump_complex(simplex(2)))
    proc = subprocess.run([sys.executable, "-m", "tverberg", "homology", f], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "H~0: 0" in proc.stdout
