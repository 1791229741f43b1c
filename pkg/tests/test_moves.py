import pytest
from hypothesis import given

from conftest import model_from_seed, seeds
from lcymirror import lattice as la
from lcymirror.bundled import load_script
from lcymirror.logcy import fundamental_group, make_model, picard, qbar
from lcymirror.moves import (
    MoveError, apply_elementary, apply_move, apply_relabel, apply_toric_blowup, compose, find_relabel,
    flip_side, identity_transition, legal_elementary_pairs, move_from_json, run_script, script_from_json,
)
from lcymirror.toric import standard_fan


def test_hirzebruch_step(bundled):
    f2 = bundled["hirzebruch2"]
    new, t = apply_elementary(f2, 3, 1, "cw")
    assert new.rays == ((1, 0), (0, 1), (-1, 1), (0, -1))
    assert new.n == [0, -1, 0, 1] and new.m == (0, 1, 0, 0)
    assert t.is_isometry() and t.fixes_boundary()


def test_pentagon_step_classes(pentagon):
    new, t = apply_elementary(pentagon, 0, 2)
    assert new.m == (0, 1, 1, 0, 0)
    p, q = picard(pentagon), picard(new)
    # the new exceptional curve pulls back to Dbar of ray (0, 1) minus the consumed one
    old = la.solve_integer(t.matrix, q.exc[(2, 1)])
    assert la.mat_equal(old.reshape(-1, 1), (p.dbar[1] - p.exc[(0, 1)]).reshape(-1, 1))


def test_errors(pentagon):
    with pytest.raises(MoveError) as e:
        apply_elementary(pentagon, 0, 1)
    assert e.value.code == "not_opposite"
    with pytest.raises(MoveError) as e:
        apply_elementary(pentagon, 2, 0)
    assert e.value.code == "no_interior_blowup"
    with pytest.raises(MoveError) as e:
        apply_elementary(pentagon, 0, 2, "up")
    assert e.value.code == "bad_side"
    with pytest.raises(MoveError) as e:
        apply_relabel(pentagon, ((2, 0), (0, 1)))
    assert e.value.code == "not_symmetry"


def test_toric_blowup():
    p1 = make_model(standard_fan("P1xP1").rays, [1, 1, 0, 0])
    new, t = apply_toric_blowup(p1, 2)
    assert new.rays == ((1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1))
    assert new.m == (1, 1, 0, 0, 0)
    p, q = picard(p1), picard(new)
    assert q.rank == p.rank + 1
    assert la.mat_equal(t.matrix.T.dot(q.gram).dot(t.matrix), p.gram)


def test_relabel_basics():
    p1 = make_model(standard_fan("P1xP1").rays, [0, 0, 0, 0])
    _, t = apply_relabel(p1, ((1, 0), (0, 1)), 0)
    assert la.is_identity(t.matrix)
    new, t = apply_relabel(p1, ((-1, 0), (0, -1)), 2)
    assert new == p1 and t.is_isometry()


def test_pentagon_order_five(pentagon):
    _, step = load_script("pentagon_step")
    models, trs = run_script(pentagon, step)
    assert models[-1] == pentagon
    assert la.matrix_order(compose(trs).matrix) == 5
    assert find_relabel(models[1], pentagon) is not None


def test_compose():
    p1 = make_model(standard_fan("P1xP1").rays, [0, 0, 0, 0])
    t = identity_transition(p1)
    assert compose([t]) is t
    with pytest.raises(MoveError) as e:
        compose([])
    assert e.value.code == "empty_chain"
    other = identity_transition(make_model(standard_fan("P2").rays, [0, 0, 0]))
    with pytest.raises(MoveError) as e:
        compose([t, other])
    assert e.value.code == "chain_mismatch"


def test_script_parsing():
    steps = script_from_json({"steps": [{"type": "elementary", "i": 0, "j": 2},
                                        {"type": "relabel", "g": [[0, 1], [-1, 0]], "rot": 1},
                                        {"type": "blowup", "corner": 0}]})
    assert [s.to_json()["type"] for s in steps] == ["elementary", "relabel", "blowup"]
    for bad in ({"type": "elementary", "i": 0}, {"type": "teleport"}, {"i": 1}):
        with pytest.raises(MoveError) as e:
            move_from_json(bad)
        assert e.value.code == "schema"


def test_run_script_reports_step(pentagon):
    moves = script_from_json([{"type": "elementary", "i": 0, "j": 2}, {"type": "elementary", "i": 0, "j": 2}])
    with pytest.raises(MoveError) as e:
        run_script(pentagon, moves)
    assert e.value.code == "illegal_move" and e.value.step == 1


@given(seeds)
def test_elementary_invariants_and_inverse(seed):
    model = model_from_seed(seed, max_interior=4)
    for i, j in legal_elementary_pairs(model):
        for side in ("ccw", "cw"):
            new, t = apply_elementary(model, i, j, side)
            assert new.k == model.k and sum(new.m) == sum(model.m)
            assert new.n[i] == model.n[i] - 1 and new.n[j] == model.n[j] + 1
            assert new.m[i] == model.m[i] - 1 and new.m[j] == model.m[j] + 1
            assert picard(new).rank == picard(model).rank
            assert t.is_isometry() and t.fixes_boundary()
            assert fundamental_group(new) == fundamental_group(model)
            assert qbar(new) == qbar(model)
            back, t2 = apply_elementary(new, j, i, flip_side(side))
            assert back == model
            assert la.is_identity(compose([t, t2]).matrix)


@given(seeds)
def test_find_relabel_roundtrip(seed):
    model = model_from_seed(seed)
    g = ((2, 1), (1, 1))
    rot = seed % model.k
    new, _ = apply_relabel(model, g, rot)
    found = find_relabel(model, new)
    assert found is not None
    again, _ = apply_move(model, move_from_json({"type": "relabel", "g": found[0], "rot": found[1]}))
    assert again == new
