import pytest
from hypothesis import given

from conftest import model_from_seed, seeds
from lcymirror import lattice as la
from lcymirror.lattice import QuotientShape
from lcymirror.logcy import (
    ModelError, fibre_class, fundamental_group, handle_quotient, in_q, make_model, model_from_json,
    picard, q_lattice, qbar, simple_root_candidates, spherical_class_check, weyl_orbit, weyl_reflection,
)
from lcymirror.ktheory import kclass
from lcymirror.toric import standard_fan


def test_p2_picard():
    pd = picard(make_model(standard_fan("P2").rays, [0, 0, 0]))
    assert pd.rank == 1 and la.as_int_list(pd.gram) == [[1]]


def test_pentagon_picard(pentagon):
    pd = picard(pentagon)
    assert pd.rank == 5
    assert abs(la.det(pd.gram)) == 1
    assert len(q_lattice(pentagon)) == 0
    assert qbar(pentagon) == QuotientShape(0)
    assert simple_root_candidates(pentagon) == []


def test_k8_picard(k8):
    pd = picard(k8)
    assert pd.rank == 10
    assert k8.n == [-2, -1, -2, -1, -1, -2, -1, -2]
    assert all(pd.dot(d, d) == -2 for d in pd.dtilde)
    Q = q_lattice(k8)
    assert len(Q) == 2
    assert la.solve_integer(la.stack_columns(Q, pd.rank), pd.D) is not None
    assert qbar(k8) == QuotientShape(1)
    assert fundamental_group(k8) == QuotientShape(0)
    assert simple_root_candidates(k8) == []


def test_k8_sibling_pi1(bundled):
    assert fundamental_group(bundled["k8_z2"]) == QuotientShape(0, (2,))


def test_standard_basis_rays_kill_pi1():
    model = make_model(standard_fan("P1xP1").rays, [1, 1, 0, 0])
    assert fundamental_group(model) == QuotientShape(0)


def test_toric_model_has_no_q():
    model = make_model(standard_fan("F(1)").rays, [0, 0, 0, 0])
    assert q_lattice(model) == []


def test_fibre_class(pentagon):
    pd = picard(pentagon)
    F = fibre_class(pentagon, 0, 2)
    assert la.mat_equal(F.reshape(-1, 1), pd.dbar[1].reshape(-1, 1))
    with pytest.raises(ModelError) as e:
        fibre_class(pentagon, 0, 1)
    assert e.value.code == "not_opposite"
    p1 = make_model(standard_fan("P1xP1").rays, [0, 0, 0, 0])
    assert la.mat_equal(fibre_class(p1, 0, 2).reshape(-1, 1), picard(p1).dbar[1].reshape(-1, 1))


def test_roots_and_weyl(bundled):
    model = bundled["k6"]  # ray 5 has m = 3
    pd = picard(model)
    a1, a2 = pd.exc[(5, 1)] - pd.exc[(5, 2)], pd.exc[(5, 2)] - pd.exc[(5, 3)]
    roots = simple_root_candidates(model)
    assert any(la.mat_equal(r, a1) for r in roots) and any(la.mat_equal(r, a2) for r in roots)
    assert pd.dot(a1, a2) == 1
    s = weyl_reflection(pd, a1)
    assert la.mat_equal(s.dot(a1), -a1)
    assert la.mat_equal(s.dot(s), la.identity(pd.rank))
    assert la.mat_equal(s.T.dot(pd.gram).dot(s), pd.gram)
    orbit = weyl_orbit(pd, [a1, a2], 3)
    assert len(orbit) == 6
    assert all(pd.dot(x, x) == -2 and in_q(pd, x) for x in orbit)
    with pytest.raises(ModelError) as e:
        weyl_reflection(pd, pd.exc[(5, 1)])
    assert e.value.code == "not_minus_two"


def test_spherical_class_check(bundled):
    model = bundled["k7"]
    pd = picard(model)
    a = pd.exc[(0, 1)] - pd.exc[(0, 2)]
    assert spherical_class_check(pd, kclass(model, 0, a, 10))  # ch2 = 5
    assert not spherical_class_check(pd, kclass(model, 1, [0] * pd.rank, 0))
    assert not spherical_class_check(pd, kclass(model, 0, 2 * a, 0))


def test_model_json_schema():
    good = {"rays": [[1, 0], [0, 1], [-1, -1]], "m": [1, 0, 0]}
    assert model_from_json(good).k == 3
    for bad in ({"rays": [[1, 0]]}, {"rays": "x", "m": []}, {"rays": [[1, 0], [0, 1], [-1, -1]], "m": [1]},
                {"rays": [[1, 0], [0, 1], [-1, -1]], "m": [0, 0, 0], "colour": 1}):
        with pytest.raises(Exception) as e:
            model_from_json(bad)
        assert getattr(e.value, "code", None) in ("schema", "shape")


def test_bad_extra_root():
    with pytest.raises(ModelError) as e:
        model_from_json({"rays": [[1, 0], [0, 1], [-1, -1]], "m": [2, 0, 0], "extra_roots": [[0, 0, 0, 1, 0]]})
    assert e.value.code == "bad_extra_root"


@given(seeds)
def test_picard_invariants(seed):
    model = model_from_seed(seed, max_interior=5)
    pd = picard(model)
    assert pd.rank == model.k - 2 + sum(model.m)
    assert abs(la.det(pd.gram)) == 1
    for i, d in enumerate(pd.dtilde):
        assert pd.dot(d, d) == model.n[i] - model.m[i]
        assert pd.dot(pd.D, d) == model.n[i] - model.m[i] + 2
    for e in pd.exc.values():
        assert pd.dot(e, e) == -1 and pd.dot(pd.D, e) == 1
    assert len(q_lattice(model)) == pd.rank - la.rank(pd.eval_matrix())


@given(seeds)
def test_pi1_cross_oracle(seed):
    model = model_from_seed(seed, max_interior=5, prefer_opposite=False)
    assert la.cokernel_shape(picard(model).eval_matrix()) == handle_quotient(model)
