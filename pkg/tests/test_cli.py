import json

from zprs.cli import main

C2_SPEC = {
    "p": 2, "q": 2, "r": 2, "s": 2,
    "generators": [
        [[1, 0], [[0, 0], [0, 1]], [[1, 0, 1], [0, 0, 0]]],
        [[0, 1], [[1, 1], [0, 0]], [[0, 0, 0], [1, 1, 0]]],
    ],
}

R_ONLY_SPEC = {
    "p": 17, "q": 0, "r": 8, "s": 0, "mu": [1, 1, 1],
    "g": [[4, 5, 3, 1], [9, 14, 14, 8, 10, 12, 1]],
    "hypotheses": "ignore",
}


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = main(argv)
    out = capsys.readouterr()
    return status, out.out, out.err


def spec_file(tmp_path, spec, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(spec))
    return str(path)


def test_factor_text_and_json(capsys):
    status, out, _ = run(capsys, ["factor", "--p", "17", "--n", "8", "--lambda", "1"])
    assert status == 0
    assert out.count("x +") + out.count("x with") >= 0
    assert len([l for l in out.splitlines() if l.startswith("  ")]) == 8
    status, out, _ = run(capsys, ["factor", "--p", "17", "--n", "8", "--json"])
    payload = json.loads(out)
    assert len(payload["factors"]) == 8
    assert [16, 1] in payload["factors"]


def test_build_and_dual(capsys, tmp_path):
    path = spec_file(tmp_path, C2_SPEC)
    status, out, _ = run(capsys, ["build", "--input", path, "--json"])
    assert status == 0
    assert json.loads(out)["rank"] == 6
    status, out, _ = run(capsys, ["dual", "--input", path, "--json"])
    assert json.loads(out)["rank"] == 6


def test_contains(capsys, tmp_path):
    path = spec_file(tmp_path, C2_SPEC)
    word = json.dumps([[0, 0], [[0, 0], [0, 0]], [[0, 1, 0], [0, 0, 0]]])
    status, out, _ = run(capsys, ["contains", "--input", path, "--word", word])
    assert status == 0 and out.strip() == "true"
    word = json.dumps([[1, 1], [[0, 0], [0, 0]], [[0, 0, 0], [0, 0, 0]]])
    status, out, _ = run(capsys, ["contains", "--input", path, "--word", word])
    assert out.strip() == "false"


def test_gray_and_distance(capsys, tmp_path):
    path = spec_file(tmp_path, R_ONLY_SPEC)
    status, out, _ = run(capsys, ["gray", "--input", path, "--json"])
    payload = json.loads(out)
    assert (payload["n"], payload["k"]) == (16, 12)
    status, out, _ = run(capsys, ["distance", "--input", path, "--json"])
    assert json.loads(out) == {"n": 16, "k": 12, "d": 4}
    linear = {"p": 2, "n": 3, "generator": [[1, 1, 1]]}
    status, out, _ = run(capsys, ["distance", "--input", spec_file(tmp_path, linear, "g.json"),
                                  "--json"])
    assert json.loads(out) == {"n": 3, "k": 1, "d": 3}


def test_wenum_kinds(capsys, tmp_path):
    path = spec_file(tmp_path, C2_SPEC)
    status, out, _ = run(capsys, ["wenum", "--input", path, "--kind", "hamming"])
    assert status == 0 and out.strip().startswith("4 x y + x^2 + 59 y^2")
    status, out, _ = run(capsys, ["wenum", "--input", path, "--kind", "symmetrized", "--json"])
    terms = json.loads(out)["terms"]
    assert {"exponents": [0, 0, 0, 1, 1, 0, 0], "coeff": 11} in terms
    status, out, _ = run(capsys, ["wenum", "--input", path, "--kind", "complete"])
    assert "symbols:" in out
    status, out, _ = run(capsys, ["wenum", "--input", path, "--kind", "lee", "--json"])
    assert {"exponents": [5, 7], "coeff": 11} in json.loads(out)["terms"]


def test_constacyclic_closure_key(capsys, tmp_path):
    spec = {"p": 5, "q": 0, "r": 4, "s": 0, "mu": [1, 1, 1],
            "constacyclic_closure": True,
            "generators": [[[], [[1, 0], [1, 0], [0, 0], [0, 0]], []]]}
    status, out, _ = run(capsys, ["build", "--input", spec_file(tmp_path, spec), "--json"])
    # cyclic closure of <1 + x> over R^4: the free module on a degree-1 divisor
    assert status == 0 and json.loads(out)["rank"] == 6


def test_polynomial_text_form_accepted(capsys, tmp_path):
    spec = {"p": 17, "q": 0, "r": 8, "s": 0,
            "g": ["x^3 + 3x^2 + 5x + 4", "x^6 + 12x^5 + 10x^4 + 8x^3 + 14x^2 + 14x + 9"],
            "hypotheses": "ignore"}
    status, out, _ = run(capsys, ["build", "--input", spec_file(tmp_path, spec), "--json"])
    assert status == 0 and json.loads(out)["rank"] == 12


def test_wenum_reads_stdin(capsys, monkeypatch):
    status, out, _ = run(capsys, ["wenum", "--kind", "hamming"],
                         stdin=json.dumps(C2_SPEC), monkeypatch=monkeypatch)
    assert status == 0 and "59 y^2" in out


def test_macwilliams_command(capsys, tmp_path):
    path = spec_file(tmp_path, C2_SPEC)
    for kind in ("complete", "hamming", "symmetrized", "lee"):
        status, out, _ = run(capsys, ["macwilliams", "--input", path, "--kind", kind])
        assert status == 0
        assert out.startswith("PASS")


def test_css_command(capsys, tmp_path):
    path = spec_file(tmp_path, R_ONLY_SPEC)
    status, out, _ = run(capsys, ["css", "--input", path, "--json"])
    assert json.loads(out) == {"n": 16, "k": 8, "d": 4, "p": 17}
    # not dual containing: precondition violation, structured error, exit 2
    bad = {"p": 2, "n": 4, "generator": [[1, 1, 1, 1]]}
    status, out, err = run(capsys, ["css", "--input", spec_file(tmp_path, bad, "bad.json")])
    assert status == 2
    assert json.loads(err)["error"]["code"] == "NotDualContaining"


def test_css_search_command(capsys):
    status, out, _ = run(capsys, ["css-search", "--p", "5", "--s", "8", "--json"])
    assert status == 0
    rows = json.loads(out)["results"]
    found = [r for r in rows if r["quantum"] == [16, 8, 3]]
    assert found and found[0]["gray"] == [16, 12, 3] and found[0]["distance_exact"]
    assert any(r["quantum"] == [16, 12, 2] for r in rows)


def test_css_search_output_independent_of_jobs(capsys):
    status, out1, _ = run(capsys, ["css-search", "--p", "13", "--s", "6", "--json"])
    status, out2, _ = run(capsys, ["css-search", "--p", "13", "--s", "6", "--json",
                                   "--jobs", "2"])
    assert out1 == out2


def test_reproduce_targets(capsys):
    for target in ("example1", "example3", "example5"):
        status, out, _ = run(capsys, ["reproduce", "--target", target])
        assert status == 0
        assert "FAIL" not in out


def test_exit_codes(capsys, monkeypatch):
    status, _, err = run(capsys, ["frobnicate"])
    assert status == 64
    assert json.loads(err)["error"]["code"] == "UnknownSubcommand"
    status, _, err = run(capsys, ["build"], stdin="{not json", monkeypatch=monkeypatch)
    assert status == 65
    status, _, err = run(capsys, ["factor", "--p", "2", "--n", "4"])
    assert status == 2
    assert json.loads(err)["error"]["code"] == "GcdViolation"


def test_deterministic_output(capsys, tmp_path):
    path = spec_file(tmp_path, C2_SPEC)
    outs = set()
    for _ in range(2):
        status, out, _ = run(capsys, ["wenum", "--input", path, "--kind", "complete",
                                      "--json"])
        outs.add(out)
    assert len(outs) == 1
