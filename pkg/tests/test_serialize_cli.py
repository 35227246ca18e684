import json
import subprocess
import sys

import pytest

from braidpbw.cli import main
from braidpbw.corpus import sweedler_h4, taft3
from braidpbw.filtration import subspace_from_indices
from braidpbw.findim_hopf import run_all_checks
from braidpbw.multilinear import vec_equal
from braidpbw.serialize import (
    InputError,
    bialgebra_from_json,
    bialgebra_to_json,
    braided_basis_from_json,
    dumps_canonical,
    subspace_from_json,
    subspace_to_json,
)


SUPER_BASIS = {
    "group": {"factors": [2]},
    "bichar": [["-1"]],
    "basis": [{"name": "x", "deg": [0]}, {"name": "th", "deg": [1]}],
}


def test_bialgebra_roundtrip(h4, taft):
    for h in (h4, taft):
        doc = bialgebra_to_json(h)
        back = bialgebra_from_json(json.loads(json.dumps(doc)))
        assert back.names == h.names
        for i in range(h.dim):
            for j in range(h.dim):
                assert vec_equal(back.mult[i][j], h.mult[i][j])
            assert vec_equal(back.comult[i], h.comult[i])
            assert vec_equal(back.antipode[i], h.antipode[i])
        assert all(r.ok for r in run_all_checks(back).values())


def test_trunc_grading_roundtrip(corpus):
    from braidpbw.filtration import associated_graded, hopf_filtration

    h = corpus["solvable_pair"]
    yidx = tuple(i for i, nm in enumerate(h.names)
                 if nm == "1" or (nm.startswith("y") and "x" not in nm))
    gr = associated_graded(h, hopf_filtration(h, subspace_from_indices(h, yidx))).algebra
    doc = bialgebra_to_json(gr)
    assert "trunc_grading" in doc
    back = bialgebra_from_json(doc)
    assert back.trunc_grading == gr.trunc_grading
    assert all(r.ok for r in run_all_checks(back).values())


def test_subspace_roundtrip(h4):
    sub = subspace_from_indices(h4, (0, 1))
    doc = subspace_to_json(sub)
    back = subspace_from_json(doc, h4)
    assert back == sub


def test_subspace_dim_mismatch(h4):
    with pytest.raises(InputError):
        subspace_from_json({"rows": [["1", "0"]]}, h4)


def test_braided_basis_parse():
    group, chi, basis = braided_basis_from_json(SUPER_BASIS)
    assert group.invariant_factors == (2,)
    assert basis.names == ("x", "th")
    assert chi.value((1,), (1,)) == -1


def test_malformed_documents():
    with pytest.raises(InputError):
        bialgebra_from_json({"dim": 2})
    with pytest.raises(InputError):
        braided_basis_from_json({"group": {}, "bichar": [], "basis": []})


def test_dumps_canonical_sorted():
    text = dumps_canonical({"b": 1, "a": 2})
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("\n")


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dumps_canonical(doc) if isinstance(doc, dict) else doc)
    return str(path)


def test_cli_check_ok(tmp_path, capsys):
    path = _write(tmp_path, "h4.json", bialgebra_to_json(sweedler_h4()))
    assert main(["check", "--input", path]) == 0
    out = capsys.readouterr().out
    assert "algebra: ok" in out


def test_cli_check_corrupted_is_exit_1(tmp_path, capsys):
    doc = bialgebra_to_json(sweedler_h4())
    doc["mult"][2][1] = doc["mult"][1][2]  # force x*g = g*x
    path = _write(tmp_path, "bad.json", doc)
    assert main(["check", "--input", path]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_check_malformed_is_exit_2(tmp_path, capsys):
    path = _write(tmp_path, "junk.json", "{not json")
    assert main(["check", "--input", path]) == 2
    assert "input error" in capsys.readouterr().err


def test_cli_pipeline_h4(tmp_path, capsys):
    h = sweedler_h4()
    hpath = _write(tmp_path, "h4.json", bialgebra_to_json(h))
    kpath = _write(tmp_path, "k.json", subspace_to_json(subspace_from_indices(h, (0, 1))))
    rpath = str(tmp_path / "report.json")
    code = main(["pipeline", "--input", hpath, "--sub", kpath,
                 "--degree", "3", "--report", rpath])
    assert code == 0
    report = json.loads(open(rpath).read())
    assert report["filtration"]["dims"] == [2, 4]
    assert report["R"]["dim"] == 2
    assert report["R"]["c_r_first"] == "-1"
    assert report["bosonization"]["bijective"] is True
    assert report["pbw"]["verdict"] == "PBW_TYPE_TRUE"


def test_cli_pipeline_rejects_bad_subalgebra(tmp_path, capsys):
    h = sweedler_h4()
    hpath = _write(tmp_path, "h4.json", bialgebra_to_json(h))
    kpath = _write(tmp_path, "k.json",
                   subspace_to_json(subspace_from_indices(h, (0, 2))))
    assert main(["pipeline", "--input", hpath, "--sub", kpath, "--degree", "2"]) == 1
    assert "error" in capsys.readouterr().err


def test_cli_grk_coinv_pbw_chain(tmp_path, capsys):
    h = taft3()
    hpath = _write(tmp_path, "taft.json", bialgebra_to_json(h))
    kpath = _write(tmp_path, "k.json", subspace_to_json(subspace_from_indices(h, (0, 1, 2))))
    grpath = str(tmp_path / "gr.json")
    assert main(["grk", "--input", hpath, "--sub", kpath, "--out", grpath]) == 0
    rpath = str(tmp_path / "r.json")
    assert main(["coinv", "--input", grpath, "--out", rpath]) == 0
    rdoc = json.loads(open(rpath).read())
    assert rdoc["algebra"]["dim"] == 3
    assert {"algebra", "inclusion", "action", "coaction", "k_indices"} <= set(rdoc)
    ralg = _write(tmp_path, "ralg.json", rdoc["algebra"])
    pbwpath = str(tmp_path / "pbw.json")
    assert main(["pbw", "--input", ralg, "--degree", "3", "--report", pbwpath]) == 0
    pdoc = json.loads(open(pbwpath).read())
    assert pdoc["verdict"] == "PBW_TYPE_FALSE"
    assert pdoc["first_failure_degree"] == 2


def test_cli_word_commands(tmp_path, capsys):
    path = _write(tmp_path, "basis.json", SUPER_BASIS)
    assert main(["nf", "--input", path, "th", "x", "th"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["nf", "--input", path, "x x th"]) == 0
    assert capsys.readouterr().out.strip() == "x^2*th"
    assert main(["hilbert", "--input", path, "--degree", "5"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 2 2 2 2"
    assert main(["commutator", "--input", path, "--left", "th", "--right", "th"]) == 0
    assert capsys.readouterr().out.strip() == "(2)*th*th"
    # distinct letters do not commute in the free algebra, only in the quotient
    assert main(["commutator", "--input", path, "--left", "x", "--right", "th"]) == 0
    assert capsys.readouterr().out.strip() == "x*th + (-1)*th*x"


def test_cli_nf_unknown_generator(tmp_path, capsys):
    path = _write(tmp_path, "basis.json", SUPER_BASIS)
    assert main(["nf", "--input", path, "zz"]) == 2


def test_cli_corpus_single_entry(capsys):
    assert main(["corpus", "--entry", "sweedler_h4"]) == 0
    assert "ok" in capsys.readouterr().out


def test_cli_corpus_unknown_entry(capsys):
    assert main(["corpus", "--entry", "nonsense"]) == 2
    assert "unknown corpus entry" in capsys.readouterr().err


def test_cli_corpus_dir_roundtrip(tmp_path, capsys):
    cdir = str(tmp_path / "corpus")
    for name in ("kc2", "sweedler_h4", "taft3"):
        assert main(["corpus", "--entry", name, "--write-dir", cdir]) == 0
    capsys.readouterr()
    assert main(["corpus", "--dir", cdir]) == 0
    out = capsys.readouterr().out
    assert "sweedler_h4" in out and "taft3" in out and "FAIL" not in out


def test_cli_corpus_edited_expectation_fails(tmp_path, capsys):
    cdir = tmp_path / "corpus"
    assert main(["corpus", "--entry", "sweedler_h4", "--write-dir", str(cdir)]) == 0
    capsys.readouterr()
    doc = json.loads((cdir / "sweedler_h4.json").read_text())
    doc["expect"]["r_dim"] = 5
    (cdir / "sweedler_h4.json").write_text(dumps_canonical(doc))
    assert main(["corpus", "--dir", str(cdir)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_cli_corpus_empty_dir_exit_2(tmp_path, capsys):
    empty = tmp_path / "nothing"
    empty.mkdir()
    assert main(["corpus", "--dir", str(empty)]) == 2


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "braidpbw.cli", "corpus", "--entry", "kc2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "kc2" in proc.stdout
