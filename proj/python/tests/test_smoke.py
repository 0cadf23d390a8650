import pytest

import eosp

A, B, C = 1, 2, 3


def worked_example():
    return eosp.Instance(
        10,
        [
            eosp.Task(A, 3.0, eosp.Window(2, 4)),
            eosp.Task(B, 2.0, eosp.Window(3, 5)),
            eosp.Task(C, 2.0, eosp.Window(7, 8)),
        ],
    )


def worked_language():
    caps = [eosp.Cap(k, w) for k in (1, 2) for w in (3, 4, 5)]
    return eosp.Language(sep_delta_min=2, sep_delta_max=4, cap_candidates=caps)


HIDDEN = [eosp.Sep(A, B, 3), eosp.Cap(1, 5)]


def test_objective_and_feasibility():
    inst = worked_example()
    assert eosp.objective(inst, [2, 0, 7]) == 5.0
    assert eosp.is_feasible(HIDDEN, [2, 0, 7])
    assert not eosp.is_feasible(HIDDEN, [3, 4, 7])
    with pytest.raises(ValueError):
        eosp.objective(inst, [1, 0, 0])


def test_solve_matches_brute_force():
    inst = worked_example()
    r = eosp.solve(inst, HIDDEN, time_limit=5.0)
    assert r["proven_optimal"]
    assert r["value"] == eosp.brute_force(inst, HIDDEN)["value"] == 5.0


def test_learn_optimize_worked_example():
    inst = worked_example()
    oracle = eosp.Oracle(inst, HIDDEN)
    r = eosp.learn_optimize(inst, oracle, worked_language(), t_iter=5.0, t_final=5.0)
    assert r["stop_reason"] == "AcceptedOpt"
    assert r["best_value"] == 5.0
    assert r["best"]["slots"] == [2, 0, 7]
    assert r["loop_main"] == 2
    assert r["partial"] == 2
    assert len(r["iterations"]) == 2
    assert oracle.stats["partial"] == 2


def test_baselines():
    inst = worked_example()
    pg = eosp.priority_greedy(inst, eosp.Oracle(inst, HIDDEN))
    assert pg["value"] == 5.0
    assert pg["main"] == 2
    f = eosp.fao(inst, eosp.Oracle(inst, HIDDEN), worked_language(), budget=5, t_iter=5.0, t_final=5.0)
    assert f["value"] == 5.0
    assert f["acquisition_main"] == 5


def test_generate_is_deterministic():
    inst, hidden, lang = eosp.generate(10, seed=4)
    inst2, hidden2, _ = eosp.generate(10, seed=4)
    assert inst.to_dict() == inst2.to_dict()
    assert set(hidden) == set(hidden2)
    assert inst.horizon == 30
    assert lang.basis_size(inst) == 430
    assert eosp.default_cap_k(30) == 4


def test_dominates():
    assert eosp.dominates(eosp.Cap(1, 5), eosp.Cap(2, 3))
    assert not eosp.dominates(eosp.Sep(1, 2, 3), eosp.Sep(1, 2, 4))
