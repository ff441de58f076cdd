import json
from fractions import Fraction

import pytest

from sieve_mk.certify import MkCertificate
from sieve_mk.cli import cache_path, main, run, save_certificate


def payload(result):
    data = json.loads(result.output)
    assert data["schema"] == "sieve-mk/1"
    assert json.loads(json.dumps(data)) == data
    return data


def test_certify_writes_certificate(tmp_path):
    out = tmp_path / "k5.json"
    res = run(["certify", "--k", "5", "--degree", "3", "--target", "2/1", "--output", str(out)])
    assert res.exit_code == 0 and res.artifacts == [str(out)]
    cert = MkCertificate.from_json(out.read_text())
    assert cert.ratio > 2
    assert "exact ratio" in res.output and "float hint" in res.output


def test_certify_default_goes_to_cache(cache):
    res = run(["certify", "--k", "3", "--degree", "2", "--target", "3/2"])
    assert res.exit_code == 0
    assert res.artifacts == [str(cache_path(3, 2))]
    assert str(cache) in res.artifacts[0]


def test_certify_failure_reports_one_by_one_value(tmp_path, capsys):
    code = main(["certify", "--k", "2", "--degree", "0", "--target", "2/1", "--output", str(tmp_path / "x.json")])
    assert code != 0
    err = capsys.readouterr().err
    assert "4/3" in err and "1.3333333333" in err
    assert not (tmp_path / "x.json").exists()


def test_verify_and_tamper(tmp_path, cert5):
    good = save_certificate(cert5, tmp_path / "good.json")
    assert run(["verify", str(good)]).exit_code == 0
    data = json.loads(good.read_text())
    data["vector"][0] = "1/1"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    res = run(["verify", str(good), str(bad)])
    assert res.exit_code != 0
    assert "OK" in res.output and f"FAIL {bad}" in res.output


def test_verify_missing_file(tmp_path):
    res = run(["verify", str(tmp_path / "nope.json")])
    assert res.exit_code != 0


def test_gaps_single(tmp_path, cert105):
    path = save_certificate(cert105, tmp_path / "k105.json")
    res = run(["gaps", "--theta", "1/2", "--cert", str(path), "--tuple", "builtin:h105"])
    assert res.exit_code == 0
    assert "liminf (p_{n+1} - p_n) <= 600" in res.output
    assert cert105.digest()[:16] in res.output
    data = payload(run(["gaps", "--theta", "1/2", "--cert", str(path), "--tuple", "builtin:h105", "--json"]))
    (row,) = data["rows"]
    assert (row["m"], row["gap"], row["certificate_ref"]) == (1, 600, cert105.digest())
    assert row["theta_sup"] == "1/2" and row["advisory_flag"] is False


def test_gaps_tampered_certificate_named(tmp_path, cert105):
    data = cert105.to_dict()
    data["ratio"] = "5/1"
    bad = tmp_path / "forged.json"
    bad.write_text(json.dumps(data))
    res = run(["gaps", "--theta", "1/2", "--cert", str(bad), "--tuple", "builtin:h105"])
    assert res.exit_code != 0 and "forged.json" in res.output


def test_gaps_requires_arguments():
    assert run(["gaps"]).exit_code != 0


def write_headline_cache(cert105, cert5):
    save_certificate(cert105, cache_path(105, 11))
    save_certificate(cert5, cache_path(5, 3))


def test_gaps_headline_deterministic(cache, cert105, cert5):
    write_headline_cache(cert105, cert5)
    first = run(["gaps", "--headline"])
    assert first.exit_code == 0
    assert first.output == run(["gaps", "--headline"]).output
    data = payload(run(["gaps", "--headline", "--json"]))
    got = [(r["theta_sup"], r["m"], r["gap"], r["primes_guaranteed"]) for r in data["rows"]]
    assert got == [("1/2", 1, 600, 2), ("1/1", 1, 12, 2), ("1/1", 2, 600, 3)]


def test_gaps_headline_missing_certificate(cache, cert5):
    save_certificate(cert5, cache_path(5, 3))
    res = run(["gaps", "--headline"])
    assert res.exit_code != 0
    assert "certify --k 105 --degree 11 --target 4/1" in res.output


def test_tuple_check_builtin():
    res = run(["tuple", "check", "builtin:h105"])
    assert res.exit_code == 0 and "diameter=600 admissible" in res.output
    data = payload(run(["tuple", "check", "builtin:h105", "--json"]))
    assert data["admissible"] and data["diameter"] == 600 and data["k"] == 105


def test_tuple_check_inadmissible(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("0\n2\n4\n")
    res = run(["tuple", "check", str(f)])
    assert res.exit_code == 1 and "mod 3" in res.output


def test_tuple_check_malformed(tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("0\n2\nsix\n")
    res = run(["tuple", "check", str(f)])
    assert res.exit_code != 0 and f"{f}:3:" in res.output


def test_tuple_gen_and_refine(tmp_path):
    res = run(["tuple", "gen", "--k", "5"])
    assert res.output.split() == ["0", "4", "6", "10", "12"]
    f = tmp_path / "a.txt"
    f.write_text("".join(f"{i}\n" for i in range(1, 31)))
    refined = [int(x) for x in run(["tuple", "refine", str(f), "--k", "5"]).output.split()]
    assert refined and all(x % 2 and x % 3 and x % 5 for x in refined)


def test_asymptote_is_flagged():
    res = run(["asymptote", "--k", "100000"])
    assert res.exit_code == 0 and "advisory" in res.output
    data = payload(run(["asymptote", "--k", "100000", "--json"]))
    assert data["advisory_flag"] is True
    assert float(data["mk_lower"]) >= 6.28
    assert run(["asymptote", "--k", "20"]).exit_code != 0


def test_simulate_json():
    data = payload(run(["simulate", "--H", "0,2", "--N", "10000", "--D0", "3", "--R", "12"]))
    assert set(data) >= {"config", "S1_direct", "S1_pairsum", "S2_direct", "S2_pairsum", "S1_pred", "S2_pred", "ratios"}
    assert data["S1_direct"] == data["S1_pairsum"]
    assert Fraction(data["S1_direct"]) > 0


def test_simulate_inadmissible():
    assert run(["simulate", "--H", "0,1", "--N", "10000"]).exit_code != 0
