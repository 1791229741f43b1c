import re

import pytest
from hypothesis import given

from conftest import model_from_seed, seeds
from lcymirror import lattice as la
from lcymirror.atf import (
    DiagramError, boundary_h1, diagram_from_model, diagram_svg, elementary_move, handle_homology,
    make_diagram, node_monodromy, total_monodromy,
)
from lcymirror.lattice import QuotientShape
from lcymirror.logcy import make_model, qbar
from lcymirror.moves import apply_elementary, legal_elementary_pairs
from lcymirror.toric import standard_fan


def test_node_monodromy():
    assert la.as_int_list(node_monodromy((1, 0))) == [[1, 1], [0, 1]]
    assert la.as_int_list(node_monodromy((0, 1))) == [[1, 0], [-1, 1]]
    for v in [(2, 1), (-3, 2), (1, -1)]:
        A = node_monodromy(v)
        assert la.mat_equal(A, node_monodromy((-v[0], -v[1])))
        assert la.det(A) == 1 and la.mat_equal(A.dot(la.intvec(v)).reshape(-1, 1), la.intvec(v).reshape(-1, 1))
    with pytest.raises(DiagramError) as e:
        node_monodromy((2, 0))
    assert e.value.code == "not_primitive"


def test_total_monodromy_examples():
    assert la.as_int_list(total_monodromy(make_diagram([((1, 0), 1)]))) == [[1, 1], [0, 1]]
    assert la.as_int_list(total_monodromy(make_diagram([((1, 0), 1), ((-1, 0), 1)]))) == [[1, 2], [0, 1]]
    assert la.is_identity(total_monodromy(make_diagram([])))


def test_diagram_from_model(pentagon, k8):
    assert diagram_from_model(pentagon).to_json() == {"nodes": [{"dir": [1, 0], "count": 1},
                                                                {"dir": [0, 1], "count": 1}]}
    assert [nd.count for nd in diagram_from_model(k8).nodes] == [1, 1, 1, 1]
    assert diagram_from_model(make_model(standard_fan("P2").rays, [0, 0, 0])).nodes == ()


def test_pentagon_move(pentagon):
    dg = diagram_from_model(pentagon)
    new, C = elementary_move(dg, (1, 0), (-1, 0), "cw")
    assert {nd.direction for nd in new.nodes} == {(0, 1), (-1, 0)}
    sheared, _ = elementary_move(dg, (1, 0), (-1, 0), "ccw")
    assert {nd.direction for nd in sheared.nodes} == {(1, 1), (-1, 0)}
    P, P2 = total_monodromy(dg), total_monodromy(new)
    assert la.mat_equal(P2, C.dot(P).dot(la.unimodular_inverse(C)))


def test_sweep_direction():
    dg = make_diagram([((0, 1), 1), ((1, 0), 1)])
    # the counterclockwise side of (0, 1) holds no node here; the clockwise side shears (1, 0) by A^{-1}
    new, _ = elementary_move(dg, (0, 1), (0, -1), "ccw")
    assert {nd.direction for nd in new.nodes} == {(1, 0), (0, -1)}
    new, _ = elementary_move(dg, (0, 1), (0, -1), "cw")
    assert {nd.direction for nd in new.nodes} == {(1, 1), (0, -1)}
    assert la.as_int_list(node_monodromy((0, 1)).dot(la.intvec([1, 0]))) == [1, -1]


def test_move_errors():
    dg = make_diagram([((1, 0), 1)])
    with pytest.raises(DiagramError) as e:
        elementary_move(dg, (0, 1), (0, -1))
    assert e.value.code == "no_such_node"
    with pytest.raises(DiagramError) as e:
        elementary_move(dg, (1, 0), (0, -1))
    assert e.value.code == "not_opposite"
    with pytest.raises(DiagramError) as e:
        elementary_move(dg, 5, (0, -1))
    assert e.value.code == "no_such_node"


def test_move_and_back():
    dg = make_diagram([((1, 0), 2), ((0, 1), 1), ((-1, 1), 1)])
    new, C = elementary_move(dg, (1, 0), (-1, 0), "ccw")
    back, C2 = elementary_move(new, (-1, 0), (1, 0), "cw")
    assert back == dg
    assert la.is_identity(C2.dot(C))


def test_boundary_h1():
    assert boundary_h1(la.identity(2)) == QuotientShape(3)
    assert boundary_h1(la.intmat([[1, 1], [0, 1]])) == QuotientShape(2)
    assert boundary_h1(make_diagram([((0, 1), 5)])) == QuotientShape(2, (5,))


def test_handle_homology(pentagon, k8):
    h = handle_homology(pentagon)
    assert h.h2_rank == 1 and h.h2_mod_boundary == QuotientShape(0)
    assert handle_homology(k8).h2_mod_boundary == QuotientShape(1)
    two = make_model(standard_fan("P1xP1").rays, [2, 0, 0, 0])
    assert handle_homology(two).h2_rank == 2


@given(seeds)
def test_handle_homology_matches_qbar(seed):
    model = model_from_seed(seed, max_interior=6)
    assert handle_homology(model).h2_mod_boundary == qbar(model)


@given(seeds)
def test_coherence_with_fan(seed):
    model = model_from_seed(seed, max_interior=5)
    dg = diagram_from_model(model)
    for i, j in legal_elementary_pairs(model):
        for side in ("ccw", "cw"):
            new, _ = apply_elementary(model, i, j, side)
            moved, C = elementary_move(dg, model.rays[i], model.rays[j], side)
            assert diagram_from_model(new) == moved
            assert total_monodromy(moved).trace() == total_monodromy(dg).trace()


def test_svg(pentagon, k8):
    empty = diagram_svg(make_diagram([]))
    assert 'class="node"' not in empty and 'class="axis"' in empty
    svg = diagram_svg(diagram_from_model(pentagon))
    assert svg.count('class="node"') == 2
    assert diagram_svg(diagram_from_model(k8)).count('class="node"') == 4
    assert svg == diagram_svg(diagram_from_model(pentagon))
    assert not re.search(r"\d\.\d", svg.split("\n", 1)[1])
