"""Changes of toric model and the maps they induce on Picard lattices.

Three moves are supported:

* elementary transformation at a pair of opposite rays,
* toric (corner) blow-up,
* relabelling by an element of SL2(Z) combined with a cyclic rotation of labels.

Each returns the new model and a :class:`Transition`, an integer matrix
sending old Picard basis coordinates to new ones.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import lattice as la
from .logcy import ModelError, ToricModel, fibre_class, picard
from .toric import Fan, apply_sl2, corner_blowup, det2, validate_fan

SIDES = ("ccw", "cw")


class MoveError(ModelError):
    pass


@dataclass(frozen=True)
class Elementary:
    i: int
    j: int
    side: str = "ccw"

    def to_json(self) -> dict:
        return {"type": "elementary", "i": self.i, "j": self.j, "side": self.side}


@dataclass(frozen=True)
class ToricBlowup:
    corner: int

    def to_json(self) -> dict:
        return {"type": "blowup", "corner": self.corner}


@dataclass(frozen=True)
class Relabel:
    g: tuple[tuple[int, int], tuple[int, int]]
    rot: int = 0

    def to_json(self) -> dict:
        return {"type": "relabel", "g": [list(r) for r in self.g], "rot": self.rot}


Move = Elementary | ToricBlowup | Relabel


@dataclass(frozen=True, eq=False)
class Transition:
    """Integer map between Picard lattices of two models."""

    source: ToricModel
    target: ToricModel
    matrix: np.ndarray
    kind: str = "composite"
    info: dict = field(default_factory=dict)

    def apply(self, x) -> np.ndarray:
        return self.matrix.dot(la.intvec(x))

    def is_isometry(self) -> bool:
        G = picard(self.source).gram
        G2 = picard(self.target).gram
        T = self.matrix
        return la.mat_equal(T.T.dot(G2).dot(T), G)

    def fixes_boundary(self) -> bool:
        return la.mat_equal(self.apply(picard(self.source).D).reshape(-1, 1),
                            picard(self.target).D.reshape(-1, 1))


def flip_side(side: str) -> str:
    return "cw" if side == "ccw" else "ccw"


def inverse_move(move: Elementary) -> Elementary:
    """The elementary transformation undoing ``move``.

    The sheared half-plane is the same, seen from the opposite ray, so the
    side label flips.
    """
    return Elementary(move.j, move.i, flip_side(move.side))


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise MoveError("bad_side", f"side must be one of {SIDES}, got {side!r}")


def shear_fan(fan: Fan, i: int, side: str) -> Fan:
    """Shear the rays strictly on one side of the line through v_i.

    ``ccw`` is the open half-plane containing v_{i+1}.  Each ray x there goes
    to x + |det(x, v_i)| v_i, which lowers the self-intersection at v_i by
    one and raises it at -v_i by one.
    """
    _check_side(side)
    v = fan.ray(i)
    sgn = 1 if side == "ccw" else -1
    rays = []
    for x in fan.rays:
        d = det2(v, x)
        if d * sgn > 0:
            rays.append((x[0] + abs(d) * v[0], x[1] + abs(d) * v[1]))
        else:
            rays.append(x)
    return validate_fan(rays)


def _check_opposite(model: ToricModel, i: int, j: int) -> None:
    k = model.k
    if not (0 <= i < k and 0 <= j < k):
        raise MoveError("bad_index", f"ray indices must lie in 0..{k - 1}")
    vi, vj = model.rays[i], model.rays[j]
    if (vi[0] + vj[0], vi[1] + vj[1]) != (0, 0):
        raise MoveError("not_opposite", f"rays {i} = {list(vi)} and {j} = {list(vj)} are not opposite")


def _map_from_images(src: ToricModel, dst: ToricModel, img_exc: dict) -> np.ndarray:
    """Matrix sending Dtilde_l to Dtilde'_l and E to the given images."""
    p, q = picard(src), picard(dst)
    T = la.zeros(q.rank, p.rank)
    for l in range(2, src.k):
        col = q.dtilde[l].copy()
        for t in range(1, src.m[l] + 1):
            col = col + img_exc[(l, t)]
        T[:, l - 2] = col
    for s, key in enumerate(p.exc_list()):
        T[:, src.k - 2 + s] = img_exc[key]
    # the eliminated classes must land correctly too
    for l in (0, 1):
        if not la.mat_equal(T.dot(p.dtilde[l]).reshape(-1, 1), q.dtilde[l].reshape(-1, 1)):
            raise MoveError("invariant", f"transition inconsistent on Dtilde_{l}")
    return T


def _verify(tr: Transition) -> Transition:
    if not tr.is_isometry():
        raise MoveError("invariant", f"{tr.kind} transition is not an isometry")
    if abs(la.det(tr.matrix)) != 1 if tr.matrix.shape[0] == tr.matrix.shape[1] else False:
        raise MoveError("invariant", f"{tr.kind} transition is not unimodular")
    return tr


def apply_elementary(model: ToricModel, i: int, j: int, side: str = "ccw") -> tuple[ToricModel, Transition]:
    """Elementary transformation moving one interior blow-up from ray i to ray j.

    The last exceptional curve on ray i is consumed; the new last exceptional
    on ray j has class F - E_{i, m_i}, with F the fibre class of the pair.

    Raises:
        MoveError: ``not_opposite``, ``no_interior_blowup`` or ``bad_side``.
    """
    _check_opposite(model, i, j)
    _check_side(side)
    if model.m[i] == 0:
        raise MoveError("no_interior_blowup", f"ray {i} carries no interior blow-up")
    fan2 = shear_fan(model.fan, i, side)
    m2 = list(model.m)
    m2[i] -= 1
    m2[j] += 1
    new = ToricModel(fan2, tuple(m2))
    p, q = picard(model), picard(new)
    F = fibre_class(model, i, j)
    F2 = fibre_class(new, i, j)
    mi, mj = model.m[i], model.m[j]
    img = {}
    for key in p.exc_list():
        if key != (i, mi):
            img[key] = q.exc[key]
    img[(i, mi)] = F2 - q.exc[(j, mj + 1)]
    T = _map_from_images(model, new, img)
    if not la.mat_equal(T.dot(F).reshape(-1, 1), F2.reshape(-1, 1)):
        raise MoveError("invariant", "elementary transition does not preserve the fibre class")
    tr = Transition(model, new, T, "elementary", {"i": i, "j": j, "side": side})
    return new, _verify(tr)


def apply_toric_blowup(model: ToricModel, corner: int) -> tuple[ToricModel, Transition]:
    """Blow up the node between rays ``corner`` and ``corner + 1``.

    The transition is the pullback, an isometric embedding of the old lattice.
    """
    k = model.k
    if not 0 <= corner < k:
        raise MoveError("bad_index", f"corner {corner} out of range 0..{k - 1}")
    fan2 = corner_blowup(model.fan, corner)
    pos = corner + 1
    m2 = list(model.m)
    m2.insert(pos, 0)
    new = ToricModel(fan2, tuple(m2))
    p, q = picard(model), picard(new)

    def idx(l):
        return l if l < pos else l + 1

    T = la.zeros(q.rank, p.rank)
    for l in range(2, k):
        col = q.dbar[idx(l)].copy()
        if l in (corner, (corner + 1) % k):
            col = col + q.dbar[pos]
        T[:, l - 2] = col
    for s, (l, t) in enumerate(p.exc_list()):
        T[:, k - 2 + s] = q.exc[(idx(l), t)]
    for l in (0, 1):
        want = q.dbar[idx(l)] + (q.dbar[pos] if l in (corner, (corner + 1) % k) else 0)
        if not la.mat_equal(T.dot(p.dbar[l]).reshape(-1, 1), la.intvec(want).reshape(-1, 1)):
            raise MoveError("invariant", f"pullback inconsistent on Dbar_{l}")
    tr = Transition(model, new, T, "blowup", {"corner": corner})
    return new, _verify(tr)


def _as_sl2(g) -> tuple[tuple[int, int], tuple[int, int]]:
    try:
        (a, b), (c, d) = g
        a, b, c, d = int(a), int(b), int(c), int(d)
    except (TypeError, ValueError):
        raise MoveError("not_symmetry", "g must be a 2x2 integer matrix") from None
    if a * d - b * c != 1:
        raise MoveError("not_symmetry", f"det g = {a * d - b * c}, expected 1")
    return ((a, b), (c, d))


def apply_relabel(model: ToricModel, g, rot: int = 0,
                  target: ToricModel | None = None) -> tuple[ToricModel, Transition]:
    """New ray l is g applied to old ray l + rot; counts move with their rays.

    If ``target`` is given the result must equal it exactly.

    Raises:
        MoveError: ``not_symmetry`` if g is not in SL2(Z) or the target is not
            reproduced.
    """
    g = _as_sl2(g)
    k = model.k
    rays = [apply_sl2(g, model.rays[(l + rot) % k]) for l in range(k)]
    m2 = [model.m[(l + rot) % k] for l in range(k)]
    extras = ()
    new = ToricModel(validate_fan(rays), tuple(m2), extras)
    if target is not None and (new.fan != target.fan or new.m != target.m):
        raise MoveError("not_symmetry", "relabelled model does not match the target")
    q = picard(new)
    img = {(l, t): q.exc[((l - rot) % k, t)] for l in range(k) for t in range(1, model.m[l] + 1)}
    p = picard(model)
    T = la.zeros(q.rank, p.rank)
    for l in range(2, k):
        T[:, l - 2] = q.dbar[(l - rot) % k]
    for s, key in enumerate(p.exc_list()):
        T[:, k - 2 + s] = img[key]
    for l in (0, 1):
        if not la.mat_equal(T.dot(p.dbar[l]).reshape(-1, 1), q.dbar[(l - rot) % k].reshape(-1, 1)):
            raise MoveError("invariant", f"relabel inconsistent on Dbar_{l}")
    tr = Transition(model, new, T, "relabel", {"g": [list(r) for r in g], "rot": rot % k})
    return new, _verify(tr)


def find_relabel(a: ToricModel, b: ToricModel) -> tuple[tuple, int] | None:
    """Some (g, rot) with apply_relabel(a, g, rot) == b, or None."""
    if a.k != b.k:
        return None
    k = a.k
    for rot in range(k):
        u0, u1 = a.rays[rot % k], a.rays[(rot + 1) % k]
        w0, w1 = b.rays[0], b.rays[1]
        # g [u0 u1] = [w0 w1], det [u0 u1] = 1
        U = la.intmat([[u0[0], u1[0]], [u0[1], u1[1]]])
        W = la.intmat([[w0[0], w1[0]], [w0[1], w1[1]]])
        g = W.dot(la.unimodular_inverse(U))
        gt = tuple(tuple(int(x) for x in row) for row in g)
        if all(apply_sl2(gt, a.rays[(l + rot) % k]) == b.rays[l] and a.m[(l + rot) % k] == b.m[l]
               for l in range(k)):
            return gt, rot
    return None


def compose(transitions: Sequence[Transition]) -> Transition:
    """Product of a chain of transitions, first applied first.

    Raises:
        MoveError: ``chain_mismatch`` if a target differs from the next source,
            ``empty_chain`` for an empty list.
    """
    if not transitions:
        raise MoveError("empty_chain", "compose needs at least one transition")
    M = transitions[0].matrix
    for a, b in zip(transitions, transitions[1:]):
        if a.target != b.source:
            raise MoveError("chain_mismatch", "target of one transition is not the next source")
        M = b.matrix.dot(M)
    if len(transitions) == 1:
        return transitions[0]
    return Transition(transitions[0].source, transitions[-1].target, M, "composite",
                      {"steps": [t.kind for t in transitions]})


def identity_transition(model: ToricModel) -> Transition:
    return Transition(model, model, la.identity(picard(model).rank), "identity")


def move_from_json(obj: dict) -> Move:
    """Parse one script step.

    Raises:
        MoveError: ``schema`` on malformed input.
    """
    if not isinstance(obj, dict) or "type" not in obj:
        raise MoveError("schema", "each step must be an object with a 'type'")
    t = obj["type"]
    try:
        if t == "elementary":
            side = obj.get("side", "ccw")
            _check_side(side)
            return Elementary(int(obj["i"]), int(obj["j"]), side)
        if t in ("blowup", "toric_blowup"):
            return ToricBlowup(int(obj["corner"]))
        if t == "relabel":
            return Relabel(_as_sl2(obj["g"]), int(obj.get("rot", 0)))
    except KeyError as exc:
        raise MoveError("schema", f"step of type {t!r} is missing field {exc}") from None
    raise MoveError("schema", f"unknown step type {t!r}")


def apply_move(model: ToricModel, move: Move, side: str | None = None) -> tuple[ToricModel, Transition]:
    """Dispatch one move.  ``side`` overrides the elementary side if given."""
    if isinstance(move, Elementary):
        return apply_elementary(model, move.i, move.j, side or move.side)
    if isinstance(move, ToricBlowup):
        return apply_toric_blowup(model, move.corner)
    if isinstance(move, Relabel):
        return apply_relabel(model, move.g, move.rot)
    raise MoveError("schema", f"unknown move {move!r}")


def legal_elementary_pairs(model: ToricModel) -> list[tuple[int, int]]:
    """All (i, j) with v_i = -v_j and m_i > 0."""
    out = []
    for i, vi in enumerate(model.rays):
        if model.m[i] == 0:
            continue
        for j, vj in enumerate(model.rays):
            if (vi[0] + vj[0], vi[1] + vj[1]) == (0, 0):
                out.append((i, j))
    return out


def script_from_json(obj) -> list[Move]:
    """Parse ``{"steps": [...]}`` or a bare list of steps.

    Raises:
        MoveError: ``schema``.
    """
    if isinstance(obj, dict):
        unknown = set(obj) - {"steps", "model", "name", "comment"}
        if unknown:
            raise MoveError("schema", f"unknown field(s) {sorted(unknown)}")
        if "steps" not in obj:
            raise MoveError("schema", "script needs a 'steps' list")
        obj = obj["steps"]
    if not isinstance(obj, list):
        raise MoveError("schema", "'steps' must be a list")
    out = []
    for n, step in enumerate(obj):
        try:
            out.append(move_from_json(step))
        except MoveError as exc:
            raise MoveError("schema", f"step {n}: {exc}") from None
    return out


class IllegalMove(MoveError):
    """A script step that cannot be applied; ``step`` is its index."""

    def __init__(self, step: int, cause: Exception):
        code = getattr(cause, "code", "illegal_move")
        super().__init__("illegal_move", f"step {step} ({code}): {cause}")
        self.step = step
        self.cause_code = code


def run_script(model: ToricModel, moves: Sequence[Move],
               side: str | None = None) -> tuple[list[ToricModel], list[Transition]]:
    """Apply moves in order.

    Returns:
        The visited models (starting model first) and one transition per step.

    Raises:
        IllegalMove: at the first step that cannot be applied.
    """
    models, trs = [model], []
    for n, mv in enumerate(moves):
        try:
            model, t = apply_move(model, mv, side)
        except ValueError as exc:
            raise IllegalMove(n, exc) from None
        models.append(model)
        trs.append(t)
    return models, trs
