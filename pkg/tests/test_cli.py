import contextlib
import io
import json

import pytest

from recomp.cli import main
from recomp.graph6 import decode, encode
from recomp.graphs import Graph


def run(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def run_json(*argv):
    code, out = run(*argv)
    return code, json.loads(out)


def test_construct_paley5_graph6():
    code, out = run("construct", "paley", "5")
    assert code == 0 and out.strip() == "Dhc"
    assert decode(out.strip()) == Graph.cycle(5)


def test_construct_pair_json():
    code, payload = run_json("construct", "clique-pair", "6", "--mode", "json")
    assert code == 0
    g, h = decode(payload["g"]), decode(payload["g_prime"])
    assert g.n == h.n == 6
    assert payload["provenance"]["construction"] == "clique-pair"
    assert "not-iso-utc" in payload["verified"]


def test_construct_unknown_name():
    code, payload = run_json("construct", "mystery", "3", "--mode", "json")
    assert code == 2 and "error" in payload


def test_matrix_wilson_row():
    code, row = run_json("matrix", "--t", "2", "--k", "4", "--v", "6", "--p", "2", "--mode", "json")
    assert code == 0
    assert row["expected_rank"] == row["computed_rank"] == 14 and row["pass"]


def test_matrix_rational_row():
    code, row = run_json("matrix", "--t", "2", "--k", "3", "--v", "6", "--mode", "json")
    assert code == 0 and row["field"] == "Q" and row["expected_rank"] == 15 and row["pass"]


def test_check_pair_verdict():
    code, verdict = run_json("check-pair", encode(Graph.empty(4)), encode(Graph.from_edges(4, [(0, 1)])), "--k", "2", "--mode", "hypo")
    assert code == 0
    assert not verdict["holds"] and verdict["witness_subset"] == [0, 1]
    assert decode(verdict["witness_graph6"]).n == 2


def test_check_pair_h3_mode():
    g6 = encode(Graph.cycle(6))
    code, verdict = run_json("check-pair", g6, g6, "--mode", "h3")
    assert code == 0 and verdict["holds"] and verdict["k"] is None


def test_check_pair_missing_k():
    code, payload = run_json("check-pair", "Dhc", "Dhc", "--mode", "hypo")
    assert code == 2 and "error" in payload


def test_kernel_census():
    code, payload = run_json("kernel", "--k", "5", "--v", "7", "--mode", "json")
    assert code == 0
    assert payload["count"] == 128 and payload["dimension"] == 7
    assert payload["all_in_family"]
    assert len(payload["graphs"]) == 128
    for s in payload["graphs"][:10]:
        assert encode(decode(s)) == s


def test_verify_sweep_exit_codes():
    code, rep = run_json("verify", "k0mod4", "--v", "6", "--k", "4", "--mode", "json")
    assert code == 0 and rep["ok"] and rep["violation_count"] == 0
    code, payload = run_json("verify", "k0mod4", "--v", "6", "--k", "3", "--mode", "json")
    assert code == 2 and "error" in payload  # precondition violation is usage


def test_atlas_subcommand(tmp_path):
    log = tmp_path / "log.jsonl"
    args = ("atlas", "--relation", "S", "--v", "6", "--k", "4", "--resume", str(log), "--mode", "json")
    code, rec = run_json(*args)
    assert code == 0 and rec["verdict"] == "Member"
    code2, rec2 = run_json(*args)  # resumed from the log
    assert code2 == 0 and rec2 == rec


def test_search_class_g_subcommand():
    code, rep = run_json("search-class-g", "--n", "5", "--budget", "100", "--mode", "json")
    assert code == 0 and rep["members"] == ["Dhc"]


def test_analyze_json_roundtrip():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    code, payload = run_json("analyze", encode(g), "--mode", "json")
    assert code == 0
    assert payload["e"] == 5 and payload["self_complementary"] and payload["regular"]
    assert encode(decode(payload["graph6"])) == payload["graph6"]


def test_error_paths_emit_valid_json():
    for argv in (
        ["analyze", "not graph6!!", "--mode", "json"],
        ["matrix", "--t", "9", "--k", "2", "--v", "6", "--mode", "json"],
        ["kernel", "--k", "1", "--v", "6", "--mode", "json"],
        ["totally-bogus", "--mode", "json"],
        ["construct", "paley", "7", "--mode", "json"],
    ):
        code, out = run(*argv)
        payload = json.loads(out)
        assert code == 2 and "error" in payload


def test_construct_verification_failure_would_exit_1(monkeypatch):
    # force a construction to lie about its claims to check the exit path
    import recomp.cli as cli_mod

    def bad_construct(v, verify=True):
        from recomp.errors import VerificationError

        raise VerificationError("claimed property failed")

    monkeypatch.setattr(cli_mod, "clique_pair_counterexample", bad_construct)
    code, payload = run_json("construct", "clique-pair", "6", "--mode", "json")
    assert code == 1 and payload.get("falsified")


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv("RECOMP_JOBS", "2")
    code, rep = run_json("verify", "clawfree", "--v", "5", "--mode", "json")
    assert code == 0 and rep["ok"]
