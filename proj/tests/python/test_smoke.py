import math

import pytest

import lambda_forge as lf


def corner(sx=1, sy=1, sz=1):
    return {"n": 1, "coeffs": {"I": "1", "X": str(sx), "Y": str(sy), "Z": str(sz)}}


def test_stabilizer_counts():
    assert [len(lf.stabilizer_states(n)) for n in (1, 2, 3)] == [6, 60, 1080]


def test_corner_is_vertex():
    assert lf.membership(corner())["member"]
    assert lf.is_vertex(corner(1, -1, 1))["vertex"]


def test_tensor_counterexample():
    op = {"n": 2, "coeffs": {a + b: "1" for a in "IXYZ" for b in "IXYZ"}}
    cert = lf.membership(op)
    assert not cert["member"]
    assert cert["violation"]["value"] == "-1/2"


def test_orbit_family_and_reference():
    fam = lf.orbit_family()
    assert len(fam) == 1920
    ref = lf.alpha0()
    assert lf.orbit_vertex(ref["params"]) == ref["operator"]
    assert lf.is_vertex(ref["operator"])["vertex"]


def test_cnc_vertices():
    assert len(lf.cnc_vertices(1)) == 8
    op = lf.cnc_operator(lf.cnc_vertices(1)[0])
    assert lf.is_vertex(op)["vertex"]


def test_phi_lift():
    out = lf.phi(corner(), {"m": 1, "j": ["+IZ"]})
    assert out["n"] == 2
    assert lf.is_vertex(out)["vertex"]


def test_t_state_exact_and_sampled():
    circuit = {
        "n": 1,
        "initial": {
            "type": "decomposition",
            "state": {"n": 1, "coeffs": {"I": "1", "X": {"a": "0", "b": "1/2"}, "Y": {"a": "0", "b": "1/2"}}},
        },
        "steps": [{"measure": "X"}],
    }
    dist = {tuple(e["outcomes"]): lf.parse_field(e["probability"]) for e in lf.simulate_exact(circuit)}
    assert dist[(0,)] == pytest.approx((1 + 1 / math.sqrt(2)) / 2)
    counts = lf.sample(circuit, seed=5, shots=4000)
    assert sum(e["count"] for e in counts) == 4000
    assert counts == lf.sample(circuit, seed=5, shots=4000, jobs=2)


def test_reduce_coin_schedule():
    req = {"instance": {"m": 1, "sigma": {"generators": ["+Z"]}}, "steps": [{"measure": "IX"}, {"measure": "IX"}]}
    out = lf.reduce(req, [0])
    assert [s["kind"] for s in out["steps"]] == ["coin", "fixed"]
    assert out["steps"][1]["outcome"] == 0


def test_lemma_check_and_poset():
    rep = lf.lemma_check(samples=3, seed=2)
    assert all(rep[k]["failures"] == 0 for k in ("lemma1", "lemma2", "lemma3"))
    assert len(lf.poset()["nodes"]) == 30


def test_errors_raise():
    with pytest.raises(ValueError):
        lf.membership('{"n": 1, "coeffs": {"I": "1",, }}')
    bad = {"n": 1, "initial": {"type": "decomposition", "state": {"n": 1, "coeffs": {"I": "1", "X": "3"}}},
           "steps": [{"measure": "Z"}]}
    with pytest.raises(lf.InfeasibleError):
        lf.simulate_exact(bad)
