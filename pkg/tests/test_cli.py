"""Command-line interface: payloads, formats, exit codes, determinism."""

import json

import pytest

from coinv import cli
from coinv.ehf import direct_character, enumerate_ehf
from coinv.laurent import LaurentPoly
from coinv.wspace import w_character


def run(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_verlinde_dim_json(capsys):
    code, out = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "0", "--N", "4"])
    assert code == 0
    payload = json.loads(out)
    assert payload == {"k": 1, "l": 0, "N": 4, "mode": "zero", "dim": 41}


def test_verlinde_dim_mode_n(capsys):
    code, out = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "1", "--N", "5", "--mode", "n"])
    assert code == 0
    assert json.loads(out)["dim"] == 16


def test_ehf_count_routes_agree(capsys):
    code, direct = run(capsys, ["ehf", "count", "--k", "2", "--l", "1", "--N", "3"])
    assert code == 0
    code, transfer = run(capsys, ["ehf", "count", "--k", "2", "--l", "1", "--N", "3",
                                  "--method", "transfer"])
    assert code == 0
    assert json.loads(direct)["count"] == json.loads(transfer)["count"]


def test_ehf_char_payload_round_trips(capsys):
    code, out = run(capsys, ["ehf", "char", "--k", "1", "--l", "1", "--N", "2"])
    assert code == 0
    payload = json.loads(out)
    assert LaurentPoly.from_json_dict(payload["character"]) == direct_character(1, 1, 2)


def test_ehf_list(capsys):
    code, out = run(capsys, ["ehf", "list", "--k", "1", "--l", "0", "--N", "2"])
    assert code == 0
    words = json.loads(out)["words"]
    assert len(words) == len(enumerate_ehf(1, 0, 2))
    assert all(len(w) == 3 for w in words)


def test_w_char_payload(capsys):
    code, out = run(capsys, ["w", "char", "--M", "1", "--N", "1"])
    assert code == 0
    payload = json.loads(out)
    assert LaurentPoly.from_json_dict(payload["character"]) == w_character(1, 1)


def test_w_fh_basis_family_flag_matches_m(capsys):
    code, via_m = run(capsys, ["w", "fh-basis", "--M", "0", "--N", "4"])
    assert code == 0
    code, via_family = run(capsys, ["w", "fh-basis", "--family", "C0", "--N", "4"])
    assert code == 0
    assert via_m == via_family
    assert len(json.loads(via_m)["words"]) == 2 ** 3


def test_w_fh_basis_needs_family_or_m(capsys):
    code, _ = run(capsys, ["w", "fh-basis", "--N", "4"])
    assert code == 2


def test_w_recursions(capsys):
    code, out = run(capsys, ["w", "recursions", "--M", "2", "--N", "2"])
    assert code == 0
    checks = {c["which"]: c for c in json.loads(out)["checks"]}
    assert checks["first"]["holds"]
    assert checks["second-corrected"]["holds"]
    assert not checks["second-printed"]["holds"]


def test_oracle_dim_contract(capsys):
    code, out = run(capsys, ["oracle", "dim", "--M", "1", "--N", "1",
                             "--m", "1", "--n", "1", "--d", "1"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"params", "dim", "elapsed-ms"}
    assert payload["params"] == {"M": 1, "N": 1, "m": 1, "n": 1, "d": 1}
    assert payload["dim"] == 1


def test_oracle_budget_exit(capsys):
    code, _ = run(capsys, ["oracle", "dim", "--M", "1", "--N", "1",
                           "--m", "4", "--n", "2", "--d", "3"])
    assert code == 3


def test_negative_arguments_parse(capsys):
    code, out = run(capsys, ["oracle", "dim", "--M", "-1", "--N", "1",
                             "--m", "0", "--n", "1", "--d", "1"])
    assert code == 0
    assert json.loads(out)["dim"] == 0


def test_usage_errors(capsys):
    assert cli.main(["verlinde", "dim", "--k", "1", "--l", "0"]) == 2  # missing --N
    capsys.readouterr()
    assert cli.main(["nonsense"]) == 2
    capsys.readouterr()
    code, _ = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "7", "--N", "2"])
    assert code == 2


def test_csv_format(capsys):
    code, out = run(capsys, ["lkn", "char", "--N", "2", "--l", "0", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "q,z,coeff"
    assert len(lines) == 3  # header plus two terms


def test_env_format_default(capsys, monkeypatch):
    monkeypatch.setenv("COINV_FORMAT", "csv")
    code, out = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "0", "--N", "3"])
    assert code == 0
    assert out.splitlines()[0] == "k,l,N,mode,dim"
    # explicit flag wins over the environment
    code, out = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "0", "--N", "3",
                             "--format", "json"])
    assert out.startswith("{")


def test_bad_env_format(capsys, monkeypatch):
    monkeypatch.setenv("COINV_FORMAT", "bogus")
    code, _ = run(capsys, ["verlinde", "dim", "--k", "1", "--l", "0", "--N", "3"])
    assert code == 2


def test_byte_identical_reruns(capsys):
    for argv in (
        ["verlinde", "dim", "--k", "2", "--l", "2", "--N", "6"],
        ["w", "char", "--M", "2", "--N", "2"],
        ["ehf", "char", "--k", "1", "--l", "1", "--N", "3", "--format", "csv"],
        ["fermi", "char", "--N", "3", "--l", "1"],
    ):
        _, first = run(capsys, argv)
        _, second = run(capsys, argv)
        assert first == second


def test_verify_quick_cli(capsys):
    code, out = run(capsys, ["verify", "--suite", "quick"])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "coinv-report/1"
    assert report["ok"] is True
    assert len(report["checks"]) == 11
    statuses = {c["id"]: c["status"] for c in report["checks"]}
    assert statuses["w-recursions"] == "finding"
    assert statuses["lkn-characters"] == "finding"
    assert report["calibrations"]["fermionic_offset"] == 1
