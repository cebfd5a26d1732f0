import json

from oddbouquet.cli import canonical_json, main, sweep_compositions, _METHODS
from oddbouquet.polyarith import IntPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sweep_enumeration():
    comps = sweep_compositions(1, 1)
    assert [c.k for c in comps] == [(1,)]
    comps = sweep_compositions(3, 5)
    ks = [c.k for c in comps]
    assert len(ks) == len(set(ks))
    assert all(len(k) <= 3 and sum(k) <= 5 for k in ks)
    assert all(tuple(sorted(k, reverse=True)) == k for k in ks)
    assert (3, 2) in ks and (1, 1, 1) in ks and (5,) in ks
    # count agrees with a direct filter over all descending tuples
    direct = {
        k
        for n in range(1, 4)
        for k in _descending_tuples(n, 5)
    }
    assert set(ks) == direct


def _descending_tuples(length, max_sum):
    if length == 0:
        return {()}
    out = set()
    for rest in _descending_tuples(length - 1, max_sum):
        first = rest[0] if rest else max_sum
        for v in range(1, first + 1):
            cand = (v,) + rest
            if sum(cand) <= max_sum:
                out.add(tuple(sorted(cand, reverse=True)))
    return out


def test_hvec_all_methods(capsys):
    code, out, _ = run(capsys, "hvec", "--r", "1,1,1", "--method", "all")
    assert code == 0
    assert "agree = true" in out
    assert "(1, 2, 3, 4, 4, 3, 1)" in out


def test_hvec_single_methods(capsys):
    code, out, _ = run(capsys, "hvec", "--k", "3", "--method", "formula")
    assert code == 0
    assert "h[formula] = (1)" in out
    code, out, _ = run(capsys, "hvec", "--r", "3", "--method", "complex")
    assert code == 0
    assert "h[complex] = (1, 2, 3, 1)" in out


def test_hvec_json_round_trip(capsys):
    code, out, _ = run(capsys, "hvec", "--r", "1,1,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["h"] == [1, 2, 3, 4, 4, 3, 1]
    assert payload["r"] == [1, 1, 1]
    assert payload["n"] == 3 and payload["N"] == 6 and payload["s"] == 6
    assert payload["facets"] == 18
    assert payload["methods_agree"] is True
    assert canonical_json(payload) == out.strip()
    assert set(payload) == {
        "r", "n", "N", "h", "s", "facets", "type", "e_tilde",
        "gorenstein", "almost_gorenstein", "methods_agree",
    }


def test_hvec_disagreement_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(_METHODS, "formula", lambda c: IntPoly.of(9))
    code, out, _ = run(capsys, "hvec", "--r", "3", "--method", "all")
    assert code == 1
    assert "agree = false" in out


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "--r", "3")
    assert code == 0
    assert "almost_gorenstein = true" in out
    assert "gorenstein = false" in out

    code, out, _ = run(capsys, "classify", "--r", "1,1,1")
    assert code == 0
    assert "type = 2" in out and "e_tilde = 6" in out
    assert "almost_gorenstein = false" in out

    code, out, _ = run(capsys, "classify", "--k", "1,1")
    assert code == 0
    assert "gorenstein = true" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--k", "1,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gorenstein"] is True and payload["almost_gorenstein"] is True
    assert payload["h"] == [1, 1, 1]
    assert canonical_json(payload) == out.strip()


def test_facets_listing(capsys):
    code, out, _ = run(capsys, "facets", "--k", "1,1")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.startswith("x")]
    assert len(lines) == 3
    assert all(len(line.split()) == 5 for line in lines)
    assert "x1,1 x1,2 x1,3 x2,1 x2,3" in lines
    assert "total 3 facets of size 5" in out


def test_facets_golden_listing(capsys):
    # hand-derived facet lines for a 5-cycle plus a triangle
    code, out, _ = run(capsys, "facets", "--k", "2,1")
    assert code == 0
    assert out.splitlines()[:4] == [
        "x1,1 x1,2 x1,3 x1,4 x1,5 x2,1 x2,3",
        "x1,1 x1,2 x1,3 x1,4 x2,1 x2,2 x2,3",
        "x1,1 x1,2 x1,4 x1,5 x2,1 x2,2 x2,3",
        "x1,2 x1,3 x1,4 x1,5 x2,1 x2,2 x2,3",
    ]


def test_facets_brute_matches_closed(capsys):
    code_a, out_a, _ = run(capsys, "facets", "--k", "2,1")
    code_b, out_b, _ = run(capsys, "facets", "--k", "2,1", "--method", "brute")
    assert code_a == code_b == 0
    assert out_a == out_b


def test_gens_output(capsys):
    code, out, _ = run(capsys, "gens", "--k", "1,1")
    assert code == 0
    assert "x1,1*x1,3*x2,2 - x1,2*x2,1*x2,3" in out
    code, out, _ = run(capsys, "gens", "--k", "2")
    assert code == 0
    assert "no generators" in out


def test_gens_json(capsys):
    code, out, _ = run(capsys, "gens", "--k", "3,2,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    gens = payload["generators"]
    assert len(gens) == 3
    assert gens[1]["plus"] == ["x1,1", "x1,3", "x1,5", "x1,7", "x3,2"]
    assert gens[1]["leading"] == gens[1]["plus"]


def test_verify_small_sweeps(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-N", "5")
    assert code == 0
    assert "all checks passed" in out
    code, out, _ = run(capsys, "verify", "--max-n", "1", "--max-N", "4")
    assert code == 0
    assert "all checks passed" in out


def test_verify_reports_failures(capsys, monkeypatch):
    # break one route: the matrix must flag h3way and exit 1 listing (k, check)
    monkeypatch.setattr("oddbouquet.cli.h_recursive", lambda c: IntPoly.of(5))
    code, out, _ = run(capsys, "verify", "--max-n", "1", "--max-N", "2",
                       "--no-buchberger", "--no-bruteforce")
    assert code == 1
    assert "FAILURES:" in out
    assert "k=(1,): h3way" in out
    assert "k=(2,): h3way" in out


def test_verify_hilbert_degree_flag(capsys):
    code, out, _ = run(
        capsys, "verify", "--max-n", "2", "--max-N", "4", "--hilbert-degree", "3",
        "--no-bruteforce",
    )
    assert code == 0
    assert "skip" in out  # bruteface column skipped


def test_table(tmp_path, capsys):
    out_path = tmp_path / "summary.csv"
    code, out, _ = run(capsys, "table", "--max-n", "3", "--max-N", "5",
                       "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    header, rows = lines[0], lines[1:]
    assert header == "r,n,N,h,s,facets,type,e_tilde,gorenstein,almost_gorenstein"
    assert len(rows) == len(sweep_compositions(3, 5))
    triangle_rows = [r for r in rows if r.startswith("3,3,3,")]
    assert len(triangle_rows) == 1
    assert "1;2;3;1" in triangle_rows[0]


def test_table_minimal_range(tmp_path, capsys):
    out_path = tmp_path / "one.csv"
    code, _, _ = run(capsys, "table", "--max-n", "1", "--max-N", "1",
                     "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == 2
    assert lines[1] == "1,1,1,1,0,1,1,0,true,true"


def test_table_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "table", "--max-n", "1", "--max-N", "1",
                       "--out", str(tmp_path))
    assert code == 2
    assert "cannot write" in err


def test_usage_errors(capsys):
    assert run(capsys, "hvec")[0] == 2                       # missing composition
    assert run(capsys, "hvec", "--r", "a,b")[0] == 2         # unparsable literal
    assert run(capsys, "hvec", "--r", "0")[0] == 2           # empty composition
    assert run(capsys, "hvec", "--k", "0,1")[0] == 2         # invalid cycle length
    assert run(capsys, "verify", "--max-n", "0", "--max-N", "4")[0] == 2
    assert run(capsys, "verify", "--max-n", "3", "--max-N", "2")[0] == 2
    assert run(capsys, "nope")[0] == 2                       # unknown subcommand


def test_version_of_r_and_k_agree(capsys):
    code_a, out_a, _ = run(capsys, "hvec", "--r", "1,1,1", "--format", "json")
    code_b, out_b, _ = run(capsys, "hvec", "--k", "3,2,1", "--format", "json")
    assert code_a == code_b == 0
    assert out_a == out_b
