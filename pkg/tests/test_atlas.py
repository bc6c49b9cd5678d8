import json
import subprocess
import sys

import pytest

from recomp.atlas import (
    CATALOG_COUNTS,
    AtlasRecord,
    enumerate_graphs,
    membership_with_resume,
    r_membership,
    s_membership,
    sweep_theorem,
    write_csv,
    write_witness_files,
)
from recomp.errors import DomainError, OrderTooLarge
from recomp.graph6 import decode
from recomp.graphs import Graph
from recomp.hypomorphy import equal_up_to_complementation, k_hypomorphic_utc
from recomp.isomorphism import canonical_form, find_isomorphism, isomorphic_up_to_complementation


def test_catalog_counts_small():
    for n in range(1, 7):
        assert len(enumerate_graphs(n)) == CATALOG_COUNTS[n]


def test_catalog_order7():
    assert len(enumerate_graphs(7)) == 1044


@pytest.mark.slow
def test_catalog_order8():
    assert len(enumerate_graphs(8)) == 12346


def test_catalog_reps_pairwise_nonisomorphic():
    reps = enumerate_graphs(5).representatives
    assert len({canonical_form(g) for g in reps}) == len(reps)
    for i in range(0, len(reps), 7):
        for j in range(i + 1, min(i + 4, len(reps))):
            assert find_isomorphism(reps[i], reps[j]) is None


def test_catalog_guards():
    with pytest.raises(OrderTooLarge):
        enumerate_graphs(9)


def test_s_row_v6():
    verdicts = {}
    for k in range(1, 7):
        rec = s_membership(6, k)
        verdicts[k] = rec.verdict
        if rec.verdict == "NonMember":
            g = decode(rec.witness[0])
            h = decode(rec.witness[1])
            assert k_hypomorphic_utc(g, h, k).holds
            assert not equal_up_to_complementation(g, h)
    assert verdicts == {
        1: "NonMember",
        2: "NonMember",
        3: "NonMember",
        4: "Member",
        5: "NonMember",
        6: "NonMember",
    }


def test_s_small_orders():
    # at order <= 2 every k qualifies
    assert s_membership(1, 1).verdict == "Member"
    assert s_membership(2, 1).verdict == "Member"
    assert s_membership(2, 2).verdict == "Member"
    # order 5: no k at all (below 6 nothing forces equality)
    for k in range(3, 6):
        assert s_membership(5, k).verdict == "NonMember"


def test_r_records():
    rec = r_membership(4, 3)
    assert rec.verdict == "NonMember"
    g, h = decode(rec.witness[0]), decode(rec.witness[1])
    assert k_hypomorphic_utc(g, h, 3).holds
    assert not isomorphic_up_to_complementation(g, h)
    assert r_membership(5, 4).verdict == "Member"
    # S is contained in R
    assert r_membership(6, 4).verdict == "Member"


def test_s_subset_of_r():
    for (v, k) in ((5, 4), (6, 4), (6, 3)):
        if s_membership(v, k).verdict == "Member":
            assert r_membership(v, k).verdict == "Member"


def test_witness_reverifies_in_fresh_process():
    rec = s_membership(6, 3)
    assert rec.verdict == "NonMember"
    code = (
        "import sys, json\n"
        "from recomp.graph6 import decode\n"
        "from recomp.hypomorphy import k_hypomorphic_utc, equal_up_to_complementation\n"
        "g = decode(sys.argv[1]); h = decode(sys.argv[2]); k = int(sys.argv[3])\n"
        "assert k_hypomorphic_utc(g, h, k).holds\n"
        "assert not equal_up_to_complementation(g, h)\n"
        "print('ok')\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code, rec.witness[0], rec.witness[1], "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "ok"


def test_membership_guards():
    with pytest.raises(OrderTooLarge):
        s_membership(7, 4)  # gated
    with pytest.raises(OrderTooLarge):
        s_membership(8, 4, long_running=True)
    with pytest.raises(DomainError):
        s_membership(6, 0)


def test_sweeps_zero_violations():
    assert sweep_theorem("k0mod4", 6, 4).ok
    assert sweep_theorem("clawfree", 5).ok
    assert sweep_theorem("principal", 6, 4).ok
    assert sweep_theorem("down", 6, 4).ok
    assert sweep_theorem("corkk1", 6, 4).ok
    assert sweep_theorem("kaplus", 6, 3).ok


def test_sweep_param_validation():
    with pytest.raises(DomainError):
        sweep_theorem("k0mod4", 6, 3)
    with pytest.raises(DomainError):
        sweep_theorem("k1mod4", 6, 5)  # needs k <= v-2
    with pytest.raises(DomainError):
        sweep_theorem("unknown", 6, 4)
    with pytest.raises(DomainError):
        sweep_theorem("principal", 6, None)


def test_sweep_determinism_and_jobs():
    a = sweep_theorem("k0mod4", 6, 4, jobs=1)
    b = sweep_theorem("k0mod4", 6, 4, jobs=3)
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)
    r1 = s_membership(6, 5, jobs=1)
    r2 = s_membership(6, 5, jobs=3)
    assert r1.to_json() == r2.to_json()


def test_sweep_hypothesis_counts():
    # at (6,4) the parity hypothesis selects exactly {g, complement(g)}
    # for every representative
    rep = sweep_theorem("k0mod4", 6, 4)
    assert rep.hypothesis_count == 2 * len(enumerate_graphs(6))
    assert rep.pairs_examined == len(enumerate_graphs(6)) * (1 << 15)


def test_resume_log(tmp_path):
    log = tmp_path / "atlas.jsonl"
    a = membership_with_resume("S", 6, 3, resume_log=str(log))
    b = membership_with_resume("S", 6, 3, resume_log=str(log))
    assert a.to_json() == b.to_json()
    assert b.wall_time_seconds == a.wall_time_seconds  # came from the log
    lines = log.read_text().strip().splitlines()
    assert len(lines) == 1
    entry = json.loads(lines[0])
    assert entry["relation"] == "S" and entry["v"] == 6 and entry["k"] == 3


def test_write_csv(tmp_path):
    rec = s_membership(6, 4)
    path = tmp_path / "table.csv"
    write_csv([rec], str(path))
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "v,k,relation,verdict,witness_g,witness_g_prime"
    assert lines[1].startswith("6,4,S,Member")


def test_witness_files(tmp_path):
    recs = [s_membership(6, 3), s_membership(6, 4)]
    paths = write_witness_files(recs, str(tmp_path))
    assert len(paths) == 1 and paths[0].endswith("S_v6_k3.g6")
    lines = open(paths[0]).read().splitlines()
    g, h = decode(lines[0]), decode(lines[1])
    assert k_hypomorphic_utc(g, h, 3).holds and not equal_up_to_complementation(g, h)


def test_atlas_record_json_is_stable():
    rec = s_membership(6, 4)
    blob = rec.to_json()
    assert "wall_time_seconds" not in blob  # canonical reports stay byte-stable
    assert blob["code_version"]


@pytest.mark.slow
def test_gated_order7_smembership():
    rec = s_membership(7, 5, long_running=True, jobs=4)
    assert rec.verdict == "NonMember"
    g, h = decode(rec.witness[0]), decode(rec.witness[1])
    assert k_hypomorphic_utc(g, h, 5).holds
    assert not equal_up_to_complementation(g, h)


@pytest.mark.slow
def test_gated_order7_k1mod4_sweep():
    rep = sweep_theorem("k1mod4", 7, 5, long_running=True, jobs=4)
    assert rep.ok
