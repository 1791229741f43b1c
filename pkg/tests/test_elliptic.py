import pytest

from lcymirror import lattice as la
from lcymirror.bundled import load_fibres
from lcymirror.elliptic import FibreConfig, FibreError, config_from_json, shioda_mw
from lcymirror.lattice import QuotientShape
from lcymirror.logcy import make_model, picard
from lcymirror.toric import standard_fan


def test_hyperbolic_plane():
    model = make_model(standard_fan("P1xP1").rays, [0, 0, 0, 0])
    pd = picard(model)
    assert pd.rank == 2
    F = pd.dbar[0]
    assert shioda_mw(pd, FibreConfig.build(F, [])) == QuotientShape(0)


def test_bundled_configs():
    model, cfg = load_fibres("k8_i8")
    assert shioda_mw(picard(model), cfg) == QuotientShape(1)
    model, cfg = load_fibres("k7_i7_i2")
    assert shioda_mw(picard(model), cfg).free_rank == 1
    model, cfg = load_fibres("k6_i6_i2_i3")
    assert shioda_mw(picard(model), cfg).free_rank == 0


def test_irreducible_fibre_changes_nothing():
    model, cfg = load_fibres("k7_i7_i2")
    pd = picard(model)
    more = FibreConfig(cfg.F, cfg.fibres + ((cfg.F,),))
    assert shioda_mw(pd, more) == shioda_mw(pd, cfg)


def test_rank_formula():
    for name in ("k8_i8", "k7_i7_i2", "k6_i6_i2_i3"):
        model, cfg = load_fibres(name)
        pd = picard(model)
        perp = la.orthogonal_complement(pd.gram, [cfg.F])
        comps = [la.intvec(cfg.F)] + [la.intvec(c) for fib in cfg.fibres for c in fib]
        K = la.rank(la.stack_columns(comps, pd.rank))
        assert shioda_mw(pd, cfg).free_rank == len(perp) - K


def test_errors():
    model, cfg = load_fibres("k7_i7_i2")
    pd = picard(model)
    E = tuple(int(x) for x in pd.exc[(0, 1)])
    with pytest.raises(FibreError) as e:
        shioda_mw(pd, FibreConfig(E, ()))
    assert e.value.code == "F_not_isotropic"
    broken = FibreConfig(cfg.F, (cfg.fibres[1][:1],))
    with pytest.raises(FibreError) as e:
        shioda_mw(pd, broken)
    assert e.value.code == "bad_fibre_sum"
    with pytest.raises(FibreError) as e:
        config_from_json({"F": [1]})
    assert e.value.code == "schema"
