"""JSON-ready reports assembled from library calls.

Every value is an int, str, bool, list or dict, so the output serializes
exactly and diffs cleanly.
"""
from __future__ import annotations

from typing import Sequence

from . import __version__
from . import lattice as la
from .atf import boundary_h1, diagram_from_model, elementary_move, handle_homology, total_monodromy
from .elliptic import FibreConfig, shioda_mw
from .ktheory import (
    KError, compact_support_check, et_schedule, preserves_euler, preserves_parity, recombination,
)
from .logcy import (
    ToricModel, fundamental_group, picard, q_lattice, qbar, simple_root_candidates,
)
from .moves import Elementary, Move, compose, identity_transition, legal_elementary_pairs, run_script


def _atf_json(model: ToricModel) -> dict:
    dg = diagram_from_model(model)
    P = total_monodromy(dg)
    return {"nodes": dg.to_json()["nodes"], "total_monodromy": la.as_int_list(P),
            "trace": int(P.trace()), "boundary_h1": boundary_h1(P).to_json()}


def model_report(model: ToricModel) -> dict:
    """Picard data, lattice quotients, root candidates and the ATF diagram."""
    pd = picard(model)
    pi1 = fundamental_group(model)
    return {
        "version": __version__,
        "model": model.to_json(),
        "k": model.k,
        "n": list(model.n),
        "picard_rank": pd.rank,
        "semidefinite": pd.is_semidefinite(),
        "q_rank": len(q_lattice(model)),
        "qbar": qbar(model).to_json(),
        "pi1": pi1.to_json(),
        "pi1_trivial": pi1.is_trivial,
        "handle_homology": handle_homology(model).to_json(),
        "root_candidates": [la.as_int_list(r) for r in simple_root_candidates(model)],
        "legal_elementary_pairs": [list(p) for p in legal_elementary_pairs(model)],
        "atf": _atf_json(model),
    }


def _certificate(src: ToricModel, dst: ToricModel, mv: Move, side: str) -> dict:
    dg = diagram_from_model(src)
    new, C = elementary_move(dg, src.rays[mv.i], src.rays[mv.j], side)
    P, P2 = total_monodromy(dg), total_monodromy(new)
    return {
        "C": la.as_int_list(C),
        "conjugation_ok": la.mat_equal(P2.dot(C), C.dot(P)),
        "coherent_with_fan": diagram_from_model(dst) == new,
        "trace": int(P2.trace()),
    }


def run_report(model: ToricModel, moves: Sequence[Move], side: str | None = None,
               require_closed: bool = False) -> dict:
    """Run a script and collect the per-step certificates and the composite maps.

    Raises:
        MoveError: ``illegal_move`` (with ``step``) from the runner.
        KError: ``script_not_closed`` when ``require_closed`` and the script
            does not return to the starting model.
    """
    models, trs = run_script(model, moves, side)
    steps, sign_log = [], []
    for n, (src, mv, dst) in enumerate(zip(models, moves, models[1:])):
        entry = {"index": n, "move": mv.to_json(), "model": dst.to_json()}
        if isinstance(mv, Elementary):
            s = side or mv.side
            entry["move"]["side"] = s
            entry["certificate"] = _certificate(src, dst, mv, s)
            _, signs = et_schedule(src, mv.i, mv.j, s)
            sign_log.append({"step": n, "signs": signs})
        else:
            entry["trace"] = int(total_monodromy(diagram_from_model(dst)).trace())
        steps.append(entry)
    T = compose(trs) if trs else identity_transition(model)
    closed = models[-1] == model
    out = {
        "version": __version__,
        "conventions": {"side": side or "per-step", "sign_log": sign_log},
        "steps": steps,
        "final_model": models[-1].to_json(),
        "closed": closed,
        "transition": la.as_int_list(T.matrix),
        "transition_is_identity": closed and la.is_identity(T.matrix),
        "traces_constant": len({int(total_monodromy(diagram_from_model(m)).trace()) for m in models}) == 1,
    }
    if closed:
        A = recombination(model, moves, side, certify=True)
        out["kauto"] = A.to_json()
        out["kauto_is_identity"] = A.is_identity()
        out["compact_support"] = compact_support_check(A)
        out["preserves_euler"] = preserves_euler(A)
        out["preserves_parity"] = preserves_parity(A)
    elif require_closed:
        raise KError("script_not_closed", "script does not return to the starting model")
    return out


def mw_report(model: ToricModel, config: FibreConfig) -> dict:
    shape = shioda_mw(picard(model), config)
    return {"version": __version__, "mw": shape.to_json(), "mw_rank": shape.free_rank, "mw_str": str(shape),
            "fibre_count": len(config.fibres)}
