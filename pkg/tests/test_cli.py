"""CLI behavior: output shapes, exit codes, caching, determinism."""

import json

from widthk import genfun
from widthk.cli import main
from widthk.genfun import VerificationReport
from widthk.poly import LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_stat_des_plain(capsys):
    code, out, _ = run(
        capsys, "stat", "--perm", "4136572", "--widths", "2,3", "--stat", "des"
    )
    assert code == 0
    assert out.splitlines() == [
        "des_{2,3}(4136572) = 3",
        "Des_2 = {1,5}",
        "Des_3 = {4}",
        "Des_{2,3} = {1,4,5}",
    ]


def test_stat_inv_json(capsys):
    code, out, _ = run(
        capsys,
        "stat", "--perm", "4136572", "--widths", "2,3", "--stat", "inv",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 5
    assert data["inv"] == [[1, 3], [1, 7], [3, 7], [4, 7], [5, 7]]
    assert data["inv_by_width"]["3"] == [[1, 7], [4, 7]]


def test_stat_exc_and_maj(capsys):
    code, out, _ = run(
        capsys, "stat", "--perm", "4136572", "--widths", "2,3", "--stat", "maj"
    )
    assert code == 0
    assert out.splitlines()[0] == "maj_{2,3}(4136572) = 6"
    code, out, _ = run(
        capsys,
        "stat", "--perm", "4136572", "--widths", "2,3", "--stat", "exc",
        "--format", "csv",
    )
    assert code == 0
    assert "value,4" in out.splitlines()


def test_stat_rejects_bad_input(capsys):
    code, _, err = run(capsys, "stat", "--perm", "4106", "--stat", "des")
    assert code == 2 and "error:" in err
    code, _, err = run(
        capsys, "stat", "--perm", "123", "--widths", "0", "--stat", "des"
    )
    assert code == 2
    code, _, err = run(
        capsys, "stat", "--perm", "123", "--widths", "5", "--stat", "des"
    )
    assert code == 2  # width sets live inside [1, n-1]


def test_gf_brute_matches_closed(capsys):
    code, out, _ = run(
        capsys, "gf", "--n", "6", "--stat", "des", "--width", "3", "--method", "all"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "brute: 90 + 270*q + 270*q^2 + 90*q^3"
    assert lines[1] == "closed: 90 + 270*q + 270*q^2 + 90*q^3"
    assert lines[2] == "agreement: yes"


def test_gf_recursion_route(capsys):
    code, out, _ = run(
        capsys,
        "gf", "--n", "5", "--stat", "des", "--width", "2", "--avoid", "312",
        "--method", "recursion",
    )
    assert code == 0
    assert out.strip() == "recursion: 8 + 21*q + 11*q^2 + 2*q^3"


def test_gf_width_set_product(capsys):
    code, out, _ = run(
        capsys,
        "gf", "--n", "4", "--stat", "des", "--widths", "1,2",
        "--avoid", "132,231", "--method", "all", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["agree"] is True
    assert data["widths"] == [1, 2]
    methods = {r["method"] for r in data["results"]}
    assert methods == {"brute", "closed"}
    for r in data["results"]:
        assert r["poly"]["terms"] == [[0, 1], [1, 1], [2, 2], [3, 2], [4, 1], [5, 1]]


def test_gf_csv(capsys):
    code, out, _ = run(
        capsys,
        "gf", "--n", "4", "--stat", "des", "--width", "2", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == [
        "method,exponent,coefficient",
        "brute,0,6",
        "brute,1,12",
        "brute,2,6",
    ]


def test_gf_inapplicable_method_exits_2(capsys):
    code, _, err = run(
        capsys, "gf", "--n", "5", "--stat", "exc", "--method", "closed"
    )
    assert code == 2 and "no closed formula" in err
    code, _, err = run(
        capsys, "gf", "--n", "5", "--stat", "des", "--method", "recursion"
    )
    assert code == 2
    code, _, err = run(
        capsys,
        "gf", "--n", "5", "--stat", "des", "--widths", "1,2", "--avoid", "312",
        "--method", "recursion",
    )
    assert code == 2  # the recursion handles one width at a time


def test_gf_route_disagreement_exits_1(capsys, monkeypatch):
    # force the registered recursion to emit garbage: 'all' must flag it
    monkeypatch.setitem(
        genfun.RECURSIONS, ((3, 1, 2),), lambda n, k, cache=None: LaurentPoly({0: 1})
    )
    code, out, _ = run(
        capsys,
        "gf", "--n", "4", "--stat", "des", "--width", "1", "--avoid", "312",
        "--method", "all",
    )
    assert code == 1
    assert "agreement: NO" in out


def test_gf_cache_dir_roundtrip(tmp_path, capsys):
    args = (
        "gf", "--n", "6", "--stat", "des", "--width", "2", "--avoid", "312",
        "--method", "recursion", "--cache-dir", str(tmp_path),
    )
    code, first, _ = run(capsys, *args)
    assert code == 0
    stored = tmp_path / "rec-312.json"
    assert stored.exists()
    data = json.loads(stored.read_text())
    assert "6,2" in data
    code, second, _ = run(capsys, *args)
    assert code == 0 and second == first


def test_tpoly(capsys):
    code, out, _ = run(capsys, "tpoly", "--n", "3")
    assert code == 0
    assert out.strip() == "1 + 2*t1 + 2*t1*t2 + t1^2*t2"
    code, out, _ = run(capsys, "tpoly", "--n", "3", "--format", "csv")
    assert out.splitlines() == [
        "t1,t2,coefficient",
        "0,0,1",
        "1,0,2",
        "1,1,2",
        "2,1,1",
    ]


def test_gtable_plain_and_csv(capsys):
    code, out, _ = run(capsys, "gtable", "--n", "4")
    assert code == 0
    assert out.splitlines() == [
        "G[4,1] = 4*A_3(q) = 4 + 16*q + 4*q^2",
        "G[4,2] = 24",
        "G[4,3] = 4*q^-2*A_3(q) = 4*q^-2 + 16*q^-1 + 4",
    ]
    code, out, _ = run(capsys, "gtable", "--n", "4", "--format", "csv")
    assert out.splitlines()[0] == "n,k,exponent,coefficient"
    assert "4,3,-2,4" in out.splitlines()


def test_gtable_json_matches_polynomials(capsys):
    code, out, _ = run(capsys, "gtable", "--n", "5,6", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [(r["n"], r["k"]) for r in rows] == [
        (5, k) for k in range(1, 5)
    ] + [(6, k) for k in range(1, 6)]
    for r in rows:
        expected = genfun.g_polynomial(r["n"], r["k"])
        assert LaurentPoly.from_json(r["poly"]) == expected


def test_verify_example_plain(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "example")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "[verified] example[des]  (sigma=4136572, K={2,3})"
    assert lines[-1] == "4 verified, 0 mismatched, 0 informational of 4 identity families"


def test_verify_json_stream(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "theorem", "--nmax", "5", "--format", "json"
    )
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert [r["identity"] for r in reports] == ["theorem[des]", "theorem[inv]"]
    assert all(r["status"] == "verified" for r in reports)


def test_verify_rejects_bad_arguments(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err
    code, _, err = run(capsys, "verify", "--nmax", "12")
    assert code == 2 and "enumeration cap" in err


def test_verify_mismatch_exits_1(capsys, monkeypatch):
    bad = VerificationReport(
        "fake[x]", "n=1", "mismatch", {"params": {"n": 1}, "lhs": 0, "rhs": 1}
    )
    monkeypatch.setitem(genfun.SUITES, "example", lambda n_max=None, caches=None: [bad])
    code, out, _ = run(capsys, "verify", "--suite", "example")
    assert code == 1
    assert "[mismatch] fake[x]" in out
    assert 'counterexample: {"params": {"n": 1}, "lhs": 0, "rhs": 1}' in out


def test_verify_is_deterministic(capsys):
    args = ("verify", "--suite", "inclusion-exclusion", "--nmax", "5")
    code1, first, _ = run(capsys, *args)
    code2, second, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert first == second


def test_avoid(capsys):
    code, out, _ = run(capsys, "avoid", "--n", "5", "--patterns", "132")
    assert code == 0 and out.strip() == "42"
    code, out, _ = run(
        capsys, "avoid", "--n", "4", "--patterns", "123,312", "--members"
    )
    lines = out.splitlines()
    assert lines[0] == "7"
    assert lines[1:] == ["1432", "2143", "2431", "3214", "3241", "3421", "4321"]
    code, out, _ = run(
        capsys, "avoid", "--n", "3", "--patterns", "", "--format", "json"
    )
    assert json.loads(out) == {"n": 3, "patterns": [], "count": 6}


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "stat", "--perm", "123")[0] == 2  # missing --stat
    assert run(capsys, "gf", "--n", "4")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "gf", "--n", "11", "--stat", "des")[0] == 2  # over cap
