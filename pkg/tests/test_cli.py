import json

import pytest

from chordhom.chordio import validate_result
from chordhom.cli import main
from chordhom.fixtures import names


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology_dow(capsys):
    code, out, _ = run(capsys, "homology", "--dow", "1 2 1 2")
    assert code == 0
    assert out.strip() == "degree 0: rank 1"


def test_kh_pretzel(capsys):
    code, out, _ = run(capsys, "kh", "--pretzel", "3,4,5,-5")
    assert code == 0
    assert out.strip() == "j_min = -5; Kh^{-5,-5} = Z"


def test_reduce_dprime(capsys):
    code, out, _ = run(capsys, "reduce", "--graph", "star4+tree13")
    assert code == 0
    assert out.strip() == "S(4)"


def test_jmin(capsys):
    code, out, _ = run(capsys, "jmin", "--pretzel", "3,4,5,-5")
    assert out.splitlines() == ["p = 12, n = 5, k = 7", "j_min = -5"]


def test_rp2_torsion(capsys):
    code, out, _ = run(capsys, "homology", "--fixture", "rp2")
    assert out.strip() == "degree 1: rank 0, torsion [2]"


def test_pd_file(capsys, tmp_path):
    p = tmp_path / "t.pd"
    p.write_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n")
    code, out, _ = run(capsys, "kh", "--pd-file", str(p))
    assert out.strip() == "j_min = -9; Kh^{-3,-9} = Z"


def _inputs():
    cases = [("--dow", "1 2 3 1 2 3"), ("--pretzel", "2,-3,3"), ("--pd", "X(1,1,2,2)")]
    cases += [("--fixture", n) for n in sorted({f.rsplit(".", 1)[0] for f in names()})]
    return cases


LINK_ONLY = {"jmin", "kh", "pretzel"}


@pytest.mark.parametrize("cmd", ["graph", "complex", "homology", "jmin", "kh", "pretzel", "reduce"])
@pytest.mark.parametrize("flag, value", _inputs())
def test_json_validates_and_matches_text(capsys, cmd, flag, value):
    code, text, err = run(capsys, cmd, flag, value)
    is_link = flag in ("--pretzel", "--pd") or value in ("trefoil", "kink", "pretzel_3_4_5_-5")
    if cmd in LINK_ONLY and not is_link:
        assert code == 2 and "not a link diagram" in err
        return
    if cmd in ("graph", "reduce") and value == "rp2":
        assert code == 2
        return
    assert code == 0, err
    code, out, _ = run(capsys, cmd, flag, value, "--json")
    assert code == 0
    record = json.loads(out)
    validate_result(record)
    if record["jmin"] is not None:
        assert f"j_min = {record['jmin']}" in text
    if record["certificate"] is not None:
        assert text.splitlines()[0] == record["certificate"]
    if cmd in ("homology", "graph", "complex"):
        for row in record["homology"]:
            line = f"degree {row['degree']}: rank {row['rank']}"
            if row["torsion"]:
                line += f", torsion {row['torsion']}"
            assert line in text.splitlines()
    if cmd in ("kh", "pretzel"):
        for row in record["homology"]:
            assert f"Kh^{{{row['degree']},{record['jmin']}}}" in text


def test_search_text_and_json(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "search", "--task", "s0", "--max-chords", "4", "--shards", "4", "--json", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    assert f"examined: {data['counters']['examined']}" in out
    assert data["counterexamples"] == []
    assert "no homological obstruction found" in out


def test_search_single_shard(capsys):
    code, out, _ = run(capsys, "search", "--task", "torsion", "--max-chords", "3", "--shards", "2", "--shard", "1")
    assert code == 0
    # per chord count, shard 1 of 2 takes the odd positions: 0 + 0 + 1 + 7
    assert "examined: 8" in out


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "kh")[0] == 2
    assert run(capsys, "kh", "--pretzel", "3,x")[0] == 2
    assert run(capsys, "homology", "--dow", "1 2", "--pd", "")[0] == 2
    assert run(capsys, "search", "--task", "s0", "--max-chords", "2", "--shards", "2", "--shard", "5")[0] == 2
    assert run(capsys, "homology", "--fixture", "nope")[0] == 2


def test_computation_errors(capsys):
    code, _, err = run(capsys, "homology", "--dow", "1 2 1")
    assert code == 1 and "error" in err
    assert run(capsys, "kh", "--pd", "X(1,2,3)")[0] == 1
    assert run(capsys, "kh", "--pd", "X(1,2,3,4) X(1,2,5,6) X(3,4,5,6)")[0] == 1
    assert run(capsys, "kh", "--pretzel", "3,0")[0] == 1
