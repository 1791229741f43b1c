"""The acceptance suite: thirteen exact checks over bundled and random data.

Each criterion is a function returning an :class:`Outcome`.  Random samples
use fixed seeds so the suite is deterministic.  :func:`run_all` evaluates
them serially or in worker processes; results are ordered by number either
way.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import lattice as la
from .atf import diagram_from_model, elementary_move, handle_homology, total_monodromy
from .bundled import load_fibres, load_model, load_script, model_names, script_names
from .elliptic import shioda_mw
from .ktheory import (
    collection_from_model, compact_support_check, curve_class, et_schedule, apply_steps,
    kdim, mutate, preserves_euler, preserves_parity, pushforward_auto,
    recombination, restrict_to_U, shift_auto, tensor_auto, theta_shadow, transport, twist_auto,
)
from .lattice import QuotientShape
from .logcy import (
    fundamental_group, handle_quotient, picard, q_lattice, qbar, simple_root_candidates, weyl_orbit,
)
from .moves import (
    Elementary, Relabel, apply_elementary, compose, flip_side, legal_elementary_pairs, run_script,
)
from .sampling import random_fan, random_model
from .toric import self_intersections

SEED = 20240601


@dataclass(frozen=True)
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed, "detail": self.detail}


def _bundled_models():
    return [(name, load_model(name)) for name in model_names()]


def _same_up_to_sign(a, b) -> bool:
    return all(la.mat_equal(x.vector.reshape(-1, 1), y.vector.reshape(-1, 1))
               or la.mat_equal(x.vector.reshape(-1, 1), -y.vector.reshape(-1, 1))
               for x, y in zip(a.classes, b.classes))


def c01_noether() -> Outcome:
    rng = random.Random(SEED + 1)
    bad = 0
    for _ in range(200):
        fan = random_fan(rng, max_k=14)
        bad += sum(self_intersections(fan)) != 12 - 3 * fan.k
    return Outcome(1, "Noether shadow", bad == 0, f"200 random fans, {bad} violations of sum n = 12 - 3k")


def c02_pentagon() -> Outcome:
    model_name, script = load_script("pentagon")
    model = load_model(model_name)
    A = recombination(model, script, certify=True)
    ok = kdim(model) == 7 and A.is_identity()
    return Outcome(2, "Pentagon relation", ok,
                   f"rank-{kdim(model)} K-lattice, composite {'is' if A.is_identity() else 'is not'} the identity")


def c03_involution() -> Outcome:
    cases = bad = 0
    for _, model in _bundled_models():
        start = collection_from_model(model)
        for i, j in legal_elementary_pairs(model):
            for side in ("ccw", "cw"):
                cases += 1
                new, t1 = apply_elementary(model, i, j, side)
                back, t2 = apply_elementary(new, j, i, flip_side(side))
                T = compose([t1, t2])
                A = pushforward_auto(t2) @ pushforward_auto(t1)
                s1, _ = et_schedule(model, i, j, side)
                s2, _ = et_schedule(new, j, i, flip_side(side))
                coll = transport(apply_steps(start, s1), pushforward_auto(t1))
                coll = transport(apply_steps(coll, s2), pushforward_auto(t2))
                ok = (back == model and la.is_identity(T.matrix) and A.is_identity()
                      and _same_up_to_sign(coll, start))
                bad += not ok
    return Outcome(3, "Involution relation", bad == 0 and cases > 0,
                   f"{cases} (pair, side) cases over bundled models, {bad} failures")


def c04_twist_translation() -> Outcome:
    models = [m for _, m in _bundled_models()]
    rng = random.Random(SEED + 4)
    while sum(1 for m in models if max(m.m, default=0) >= 2) < 12:
        models.append(random_model(rng, max_interior=5))
    cases = bad = 0
    for model in models:
        pd = picard(model)
        for i in range(model.k):
            if model.m[i] < 2:
                continue
            C = pd.exc[(i, 1)] - pd.exc[(i, 2)]
            for a in range(-2, 3):
                cases += 1
                lhs = twist_auto(curve_class(model, C, a - 1)) @ twist_auto(curve_class(model, C, a))
                bad += not la.mat_equal(lhs.matrix, tensor_auto(model, C).matrix)
    return Outcome(4, "Twist-translation identity", bad == 0 and cases > 0,
                   f"{cases} (model, ray, a) cases, {bad} failures")


def c05_faithfulness() -> Outcome:
    model = load_model("k8")
    pd = picard(model)
    Q = q_lattice(model)
    D = pd.D
    seen: dict[tuple, int] = {}
    shape_ok = injective = True
    for a in range(-3, 4):
        for b in range(-3, 4):
            L = a * Q[0] + b * Q[1]
            M = restrict_to_U(tensor_auto(model, L))
            n = M.shape[0]
            c = restrict_to_U(curve_class(model, L, 0))[1:n]
            want = la.identity(n)
            for r in range(1, n):
                want[r, 0] = c[r - 1]
            shape_ok &= la.mat_equal(M, want)
            # the Qbar class of L: coordinates modulo D
            key = tuple(tuple(r) for r in la.as_int_list(M))
            cls = la.solve_integer(la.stack_columns([Q[0], Q[1]], pd.rank), L)
            dc = la.solve_integer(la.stack_columns([Q[0], Q[1]], pd.rank), D)
            qbar_coord = int(cls[0] * dc[1] - cls[1] * dc[0])
            if key in seen and seen[key] != qbar_coord:
                injective = False
            seen[key] = qbar_coord
    distinct_classes = len(set(seen.values()))
    injective &= len(seen) == distinct_classes
    ok = shape_ok and injective and len(Q) == 2
    return Outcome(5, "K-faithfulness shadow", ok,
                   f"49 lifts, {distinct_classes} Qbar classes, {len(seen)} restricted matrices, "
                   f"shape (1 0; c Id) {'holds' if shape_ok else 'fails'}")


def c06_pi1() -> Outcome:
    rng = random.Random(SEED + 6)
    bad = 0
    for _ in range(100):
        model = random_model(rng, max_interior=5, prefer_opposite=rng.random() < 0.5)
        bad += la.cokernel_shape(picard(model).eval_matrix()) != handle_quotient(model)
    g1 = fundamental_group(load_model("k8"))
    g2 = fundamental_group(load_model("k8_z2"))
    ok = bad == 0 and g1 == QuotientShape(0) and g2 == QuotientShape(0, (2,))
    return Outcome(6, "pi1 cross-oracle", ok, f"100 random models, {bad} mismatches; k=8 models give {g1} and {g2}")


def c07_qbar() -> Outcome:
    model = load_model("k8")
    a, b = qbar(model), handle_homology(model).h2_mod_boundary
    roots = simple_root_candidates(model)
    ok = a == QuotientShape(1) and b == a and not roots
    return Outcome(7, "Qbar bridge", ok, f"Qbar = {a}, handle quotient = {b}, {len(roots)} root candidates")


def c08_mordell_weil() -> Outcome:
    got = {}
    for name in ("k8_i8", "k7_i7_i2", "k6_i6_i2_i3"):
        model, cfg = load_fibres(name)
        got[name] = shioda_mw(picard(model), cfg)
    ok = (got["k8_i8"] == QuotientShape(1) and got["k7_i7_i2"].free_rank == 1
          and got["k6_i6_i2_i3"].free_rank == 0)
    return Outcome(8, "Mordell-Weil", ok, ", ".join(f"{k}: {v}" for k, v in got.items()))


def c09_monodromy() -> Outcome:
    certs = bad_cert = bad_trace = bad_coh = coh = 0
    for name in script_names():
        model_name, script = load_script(name)
        models, _ = run_script(load_model(model_name), script)
        traces = set()
        for src, mv, dst in zip(models, script, models[1:]):
            traces.add(int(total_monodromy(diagram_from_model(src)).trace()))
            if isinstance(mv, Elementary):
                dg = diagram_from_model(src)
                new, C = elementary_move(dg, src.rays[mv.i], src.rays[mv.j], mv.side)
                certs += 1
                P, P2 = total_monodromy(dg), total_monodromy(new)
                bad_cert += not la.mat_equal(P2, C.dot(P).dot(la.unimodular_inverse(C)))
        traces.add(int(total_monodromy(diagram_from_model(models[-1])).trace()))
        bad_trace += len(traces) != 1
    for _, model in _bundled_models():
        dg = diagram_from_model(model)
        for i, j in legal_elementary_pairs(model):
            for side in ("ccw", "cw"):
                coh += 1
                new, _ = apply_elementary(model, i, j, side)
                moved, _ = elementary_move(dg, model.rays[i], model.rays[j], side)
                bad_coh += diagram_from_model(new) != moved
    ok = not (bad_cert or bad_trace or bad_coh)
    return Outcome(9, "Monodromy certificates", ok,
                   f"{certs} certificates ({bad_cert} bad), {len(script_names())} scripts ({bad_trace} trace jumps), "
                   f"{coh} coherence cases ({bad_coh} bad)")


def c10_mutation() -> Outcome:
    rng = random.Random(SEED + 10)
    pool = [random_model(rng) for _ in range(100)]
    bad_exc = sum(not collection_from_model(m).is_exceptional() for m in pool)
    bad_mut = 0
    for _ in range(1000):
        coll = collection_from_model(rng.choice(pool))
        p = rng.randrange(len(coll) - 1)
        r = mutate(coll, p, "R")
        back = mutate(r, p, "L")
        same = all(la.mat_equal(x.vector.reshape(-1, 1), y.vector.reshape(-1, 1))
                   for x, y in zip(back.classes, coll.classes))
        bad_mut += not (r.is_exceptional() and mutate(coll, p, "L").is_exceptional() and same)
    ok = bad_exc == 0 and bad_mut == 0
    return Outcome(10, "Exceptionality and mutation", ok,
                   f"100 models ({bad_exc} not unitriangular), 1000 mutations ({bad_mut} failures)")


def c11_kauto_invariants() -> Outcome:
    autos, compact = [], []
    for _, model in _bundled_models():
        pd = picard(model)
        autos.append(shift_auto(model))
        autos += [tensor_auto(model, pd.vec([int(i == j) for i in range(pd.rank)])) for j in range(pd.rank)]
        for q in q_lattice(model):
            compact.append(tensor_auto(model, q))
        for alpha in simple_root_candidates(model):
            for a in (-1, 0, 1):
                compact.append(twist_auto(curve_class(model, alpha, a)))
        for i, j in legal_elementary_pairs(model):
            autos.append(pushforward_auto(apply_elementary(model, i, j)[1]))
    for name in script_names():
        model_name, script = load_script(name)
        model = load_model(model_name)
        models, trs = run_script(model, script)
        autos += [pushforward_auto(t) for mv, t in zip(script, trs) if isinstance(mv, Relabel)]
        if models[-1] == model:
            A = recombination(model, script)
            autos.append(A)
            if name in ("pentagon", "b2_rho3", "k8_generator_8", "involution"):
                compact.append(A)
    autos += compact
    bad_inv = sum(not (preserves_euler(a) and preserves_parity(a)) for a in autos)
    bad_cs = sum(not compact_support_check(a) for a in compact)

    rng = random.Random(SEED + 11)
    sph = []
    for _, model in _bundled_models():
        pd = picard(model)
        roots = simple_root_candidates(model)
        if roots:
            sph += [(model, c) for c in weyl_orbit(pd, roots, 60)]
    bad_twist = 0
    for _ in range(100):
        model, c = rng.choice(sph)
        T = twist_auto(curve_class(model, c, rng.randint(-5, 5)))
        bad_twist += not (T @ T).is_identity()
    ok = not (bad_inv or bad_cs or bad_twist)
    return Outcome(11, "KAuto invariants", ok,
                   f"{len(autos)} autos ({bad_inv} break Euler/parity), {len(compact)} compactly supported "
                   f"({bad_cs} fail), 100 twists ({bad_twist} not involutions)")


def c12_theta() -> Outcome:
    model = load_model("k8")
    pd = picard(model)
    E = pd.exc[pd.exc_list()[0]]
    t = theta_shadow(tensor_auto(model, E))
    s = theta_shadow(shift_auto(model))
    ok = la.mat_equal(t, la.intmat([[1, 0], [1, 1]])) and la.mat_equal(s, -la.identity(2))
    return Outcome(12, "Theta shadow", ok, f"tensor(E) -> {la.as_int_list(t)}, shift -> {la.as_int_list(s)}")


def c13_b2() -> Outcome:
    model_name, rho = load_script("b2_rho")
    model = load_model(model_name)
    A = recombination(model, rho, certify=True)
    A3 = A @ A @ A
    _, rho3 = load_script("b2_rho3")
    B = recombination(model, rho3)
    ok = A3.is_identity() and B.is_identity() and not A.is_identity()
    return Outcome(13, "k=6 B2 relation", ok,
                   f"rho {'is' if A.is_identity() else 'is not'} the identity, rho^3 "
                   f"{'is' if A3.is_identity() else 'is not'} the identity")


CRITERIA = (c01_noether, c02_pentagon, c03_involution, c04_twist_translation, c05_faithfulness, c06_pi1,
            c07_qbar, c08_mordell_weil, c09_monodromy, c10_mutation, c11_kauto_invariants, c12_theta, c13_b2)


def _run_one(idx: int) -> Outcome:
    fn = CRITERIA[idx]
    try:
        return fn()
    except Exception as exc:  # a crash is a failure of that criterion, not of the suite
        return Outcome(idx + 1, fn.__name__, False, f"raised {type(exc).__name__}: {exc}")


def run_all(jobs: int = 1, only: list[int] | None = None) -> list[Outcome]:
    idxs = [n - 1 for n in (only or range(1, len(CRITERIA) + 1))]
    if jobs <= 1:
        return [_run_one(i) for i in idxs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, idxs))
