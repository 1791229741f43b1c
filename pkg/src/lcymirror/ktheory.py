"""K-theory of a toric model's surface, autoequivalence shadows, and mutations.

A class is stored as ``(r, c1, ch2x2)`` where ``ch2x2 = 2 ch2`` keeps every
coordinate integral.  On the flat coordinate vector ``(r, c1..., ch2x2)``
the Euler pairing is ``chi(x, y) = x^T H y / 2`` with ``H`` from
:func:`euler_matrix`; Riemann-Roch with ``-K = D`` gives

    chi(E, F) = r r' + (r c'.D - r' c.D)/2 + (r s' + r' s)/2 - c.c'

where ``s = ch2x2``.  Classes satisfy the parity condition
``ch2x2 = c1^2 (mod 2)``; on that sublattice chi is integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import lattice as la
from .lattice import LatticeError
from .logcy import ToricModel, picard

POINT_X2 = 2


class KError(LatticeError):
    pass


@dataclass(frozen=True)
class KClass:
    """A K-theory class ``(r, c1, 2 ch2)`` over a fixed model."""

    model: ToricModel
    r: int
    c1: tuple[int, ...]
    ch2x2: int

    def __post_init__(self):
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "c1", tuple(int(c) for c in self.c1))
        object.__setattr__(self, "ch2x2", int(self.ch2x2))
        pd = picard(self.model)
        if len(self.c1) != pd.rank:
            raise KError("shape", f"c1 has length {len(self.c1)}, Picard rank is {pd.rank}")
        if (self.ch2x2 - pd.dot(self.c1, self.c1)) % 2:
            raise KError("parity", "2 ch2 must have the parity of c1^2")

    @property
    def vector(self) -> np.ndarray:
        return la.intvec((self.r, *self.c1, self.ch2x2))

    def __neg__(self) -> "KClass":
        return KClass(self.model, -self.r, tuple(-c for c in self.c1), -self.ch2x2)

    def to_json(self) -> dict:
        return {"r": self.r, "c1": list(self.c1), "ch2x2": self.ch2x2}


def kclass(model: ToricModel, r: int, c1, ch2x2: int) -> KClass:
    return KClass(model, r, tuple(int(c) for c in c1), ch2x2)


def from_vector(model: ToricModel, v) -> KClass:
    v = [int(x) for x in v]
    return KClass(model, v[0], tuple(v[1:-1]), v[-1])


def kdim(model: ToricModel) -> int:
    return picard(model).rank + 2


def euler_matrix(model: ToricModel) -> np.ndarray:
    """H with 2 chi(x, y) = x^T H y on flat coordinates."""
    pd = picard(model)
    r = pd.rank
    gD = pd.gram.dot(pd.D)
    H = la.zeros(r + 2, r + 2)
    H[0, 0] = 2
    H[0, 1:r + 1] = gD
    H[1:r + 1, 0] = -gD
    H[1:r + 1, 1:r + 1] = -2 * pd.gram
    H[0, r + 1] = 1
    H[r + 1, 0] = 1
    return H


def _chi_vec(model: ToricModel, x, y) -> int:
    v = la.intvec(x).dot(euler_matrix(model).dot(la.intvec(y)))
    if v % 2:
        raise KError("parity", "Euler pairing of classes violating the parity condition")
    return int(v // 2)


def euler_form(E: KClass, F: KClass) -> int:
    """chi(E, F).

    Raises:
        KError: ``model_mismatch`` if the classes live on different models.
    """
    if E.model != F.model:
        raise KError("model_mismatch", "classes belong to different models")
    return _chi_vec(E.model, E.vector, F.vector)


def curve_class(model: ToricModel, C, a: int) -> KClass:
    """Class of O_C(a) pushed forward: (0, C, 2a - C^2)."""
    pd = picard(model)
    c = la.intvec(C)
    return KClass(model, 0, tuple(c), 2 * int(a) - pd.dot(c, c))


def structure_sheaf(model: ToricModel) -> KClass:
    return KClass(model, 1, (0,) * picard(model).rank, 0)


def point_class(model: ToricModel) -> KClass:
    return KClass(model, 0, (0,) * picard(model).rank, POINT_X2)


def line_bundle(model: ToricModel, L) -> KClass:
    """O(L) = (1, L, L^2)."""
    pd = picard(model)
    c = la.intvec(L)
    return KClass(model, 1, tuple(c), pd.dot(c, c))


@dataclass(frozen=True, eq=False)
class KAuto:
    """Integer matrix acting on flat K coordinates ``(r, c1..., 2 ch2)``.

    ``source`` and ``target`` are equal for an automorphism; maps between
    different models arise from Picard transitions.
    """

    source: ToricModel
    target: ToricModel
    matrix: np.ndarray
    label: str = ""

    def __post_init__(self):
        n, m = kdim(self.target), kdim(self.source)
        if self.matrix.shape != (n, m):
            raise KError("shape", f"matrix shape {self.matrix.shape}, expected {(n, m)}")

    @property
    def preserves_parity(self) -> bool:
        return preserves_parity(self)

    def __call__(self, x: KClass) -> KClass:
        if x.model != self.source:
            raise KError("model_mismatch", "class does not live on the source model")
        return from_vector(self.target, self.matrix.dot(x.vector))

    def __matmul__(self, other: "KAuto") -> "KAuto":
        """Composition, ``other`` first."""
        if other.target != self.source:
            raise KError("chain_mismatch", "cannot compose: models do not chain")
        return KAuto(other.source, self.target, self.matrix.dot(other.matrix),
                     f"{self.label}*{other.label}".strip("*"))

    def inverse(self) -> "KAuto":
        return KAuto(self.target, self.source, la.unimodular_inverse(self.matrix), f"inv({self.label})")

    def is_identity(self) -> bool:
        return self.source == self.target and la.is_identity(self.matrix)

    def to_json(self) -> dict:
        pd = picard(self.source)
        return {"basis": ["r"] + [f"c1[{i}]" for i in range(pd.rank)] + ["ch2x2"],
                "matrix": la.as_int_list(self.matrix)}


def identity_auto(model: ToricModel) -> KAuto:
    return KAuto(model, model, la.identity(kdim(model)), "id")


def shift_auto(model: ToricModel) -> KAuto:
    """The degree one shift acts as -1."""
    return KAuto(model, model, -la.identity(kdim(model)), "shift")


def _parity_basis(model: ToricModel) -> list[np.ndarray]:
    """Generators of the parity sublattice of flat coordinates."""
    pd = picard(model)
    r = pd.rank
    out = [la.intvec([1] + [0] * r + [0]), la.intvec([0] * (r + 1) + [2])]
    for i in range(r):
        e = [0] * (r + 2)
        e[1 + i] = 1
        e[-1] = int(pd.gram[i, i]) % 2
        out.append(la.intvec(e))
    return out


def _is_parity(model: ToricModel, v) -> bool:
    pd = picard(model)
    v = la.intvec(v)
    c = v[1:-1]
    return (int(v[-1]) - pd.dot(c, c)) % 2 == 0


def preserves_parity(a: KAuto) -> bool:
    return all(_is_parity(a.target, a.matrix.dot(b)) for b in _parity_basis(a.source))


def preserves_euler(a: KAuto) -> bool:
    H, H2 = euler_matrix(a.source), euler_matrix(a.target)
    return la.mat_equal(a.matrix.T.dot(H2).dot(a.matrix), H)


def tensor_auto(model: ToricModel, L) -> KAuto:
    """Tensor by O(L): (r, c, s) -> (r, c + rL, s + 2 c.L + r L^2)."""
    pd = picard(model)
    L = la.intvec(L)
    r = pd.rank
    M = la.identity(r + 2)
    M[1:r + 1, 0] = L
    M[r + 1, 0] = pd.dot(L, L)
    M[r + 1, 1:r + 1] = 2 * pd.gram.dot(L)
    return KAuto(model, model, M, "tensor")


def twist_auto(S: KClass) -> KAuto:
    """x -> x - chi(S, x) S.

    Raises:
        KError: ``not_spherical_class`` if chi(S, S) != 2; ``not_integral`` if
            the map does not preserve integral flat coordinates, which can only
            happen for odd rank S.
    """
    model = S.model
    if euler_form(S, S) != 2:
        raise KError("not_spherical_class", f"chi(S, S) = {euler_form(S, S)}, expected 2")
    s = S.vector
    row = s.dot(euler_matrix(model))
    if any(x % 2 for x in row):
        raise KError("not_integral", "twist is not integral on flat coordinates")
    M = la.identity(len(s)) - np.outer(s, row // 2)
    return KAuto(model, model, M, "twist")


def pushforward_auto(t) -> KAuto:
    """K action of a Picard isometry: c1 mapped, r and 2 ch2 fixed.

    ``t`` is a :class:`~lcymirror.moves.Transition` or a square integer
    matrix (an automorphism of one model, which must then be passed as
    ``(model, matrix)``).

    Raises:
        KError: ``not_isometry`` or ``boundary_not_fixed``.
    """
    if isinstance(t, tuple):
        src = tgt = t[0]
        T = la.intmat(t[1])
    else:
        src, tgt, T = t.source, t.target, t.matrix
    p, q = picard(src), picard(tgt)
    if T.shape != (q.rank, p.rank) or not la.mat_equal(T.T.dot(q.gram).dot(T), p.gram):
        raise KError("not_isometry", "map is not an isometry of Picard lattices")
    if not la.mat_equal(T.dot(p.D).reshape(-1, 1), q.D.reshape(-1, 1)):
        raise KError("boundary_not_fixed", "map does not send D to D")
    M = la.zeros(q.rank + 2, p.rank + 2)
    M[0, 0] = 1
    M[q.rank + 1, p.rank + 1] = 1
    M[1:q.rank + 1, 1:p.rank + 1] = T
    return KAuto(src, tgt, M, "push")


def _reduction(model: ToricModel) -> tuple[np.ndarray, list[int]]:
    """Matrix R: flat K coords -> Z + Pic(U), Pic(U) = Pic / <Dtilde_i>.

    Row 0 is the rank.  Each further row is a coordinate of Pic(U); ``mods``
    gives its order (0 for a free coordinate, d for a Z/d summand).  Free
    rows come first.
    """
    pd = picard(model)
    B = la.stack_columns(list(pd.dtilde), pd.rank)
    U, S, _ = la.smith_normal_form(B)
    d = [int(S[i, i]) if i < S.shape[1] else 0 for i in range(pd.rank)]
    keep = [i for i in range(pd.rank) if d[i] == 0] + [i for i in range(pd.rank) if d[i] > 1]
    R = la.zeros(1 + len(keep), pd.rank + 2)
    R[0, 0] = 1
    for row, i in enumerate(keep):
        R[1 + row, 1:pd.rank + 1] = U[i, :]
    return R, [0] + [d[i] for i in keep]


def _reduce(R, mods, v) -> tuple[int, ...]:
    w = R.dot(la.intvec(v))
    return tuple(int(x) % m if m else int(x) for x, m in zip(w, mods))


def restrict_to_U(obj):
    """Image in K(U) = Z + Pic(U), dropping ch2.

    For a KClass returns the reduced coordinates (rank, free part of
    Pic(U), then torsion residues).  For a KAuto returns the induced integer
    matrix on Z + Pic(U)/torsion, after checking that the kernel of the
    reduction (the ch2 coordinate and the strict transforms) is preserved.

    Raises:
        KError: ``kernel_not_preserved``.
    """
    if isinstance(obj, KClass):
        R, mods = _reduction(obj.model)
        return _reduce(R, mods, obj.vector)
    a = obj
    if a.source != a.target:
        raise KError("model_mismatch", "restriction needs an automorphism of one model")
    model = a.source
    pd = picard(model)
    R, mods = _reduction(model)
    zero = tuple(0 for _ in mods)
    gens = [la.intvec([0] * (pd.rank + 1) + [1])] + [la.intvec([0, *d, 0]) for d in pd.dtilde]
    for g in gens:
        if _reduce(R, mods, a.matrix.dot(g)) != zero:
            raise KError("kernel_not_preserved", "automorphism does not descend to K(U)")
    nf = sum(1 for m in mods if m == 0)
    Rf = R[:nf, :]
    cols = []
    for j in range(nf):
        lift = la.solve_integer(Rf, [1 if i == j else 0 for i in range(nf)])
        cols.append(Rf.dot(a.matrix.dot(lift)))
    return la.stack_columns(cols, nf)


def boundary_character(model: ToricModel) -> np.ndarray:
    """beta(x) = (r, c.Dtilde_1, ..., c.Dtilde_k) as a matrix."""
    pd = picard(model)
    B = la.zeros(pd.model.k + 1, pd.rank + 2)
    B[0, 0] = 1
    for i, d in enumerate(pd.dtilde):
        B[1 + i, 1:pd.rank + 1] = pd.gram.dot(d)
    return B


def compact_support_check(a: KAuto) -> bool:
    """True iff beta o a = beta."""
    if a.source != a.target:
        return False
    B = boundary_character(a.source)
    return la.mat_equal(B.dot(a.matrix), B)


def theta_shadow(a: KAuto) -> np.ndarray:
    """Action on the span of ([O_F], [O_pt]) = ((0, D, 0), (0, 0, 2)).

    Raises:
        KError: ``not_semidefinite`` or ``span_not_preserved``.
    """
    model = a.source
    pd = picard(model)
    if a.source != a.target or not pd.is_semidefinite():
        raise KError("not_semidefinite", "Theta needs a semi-definite boundary")
    f = la.intvec([0, *pd.D, 0])
    p = point_class(model).vector
    basis = la.stack_columns([f, p], kdim(model))
    out = []
    for v in (f, p):
        coords = la.solve_integer(basis, a.matrix.dot(v))
        if coords is None:
            raise KError("span_not_preserved", "automorphism moves the fibre/point span")
        out.append(coords)
    return la.stack_columns(out, 2)


# -- exceptional collections and mutations ---------------------------------

@dataclass(frozen=True)
class ExcCollection:
    model: ToricModel
    classes: tuple[KClass, ...]
    names: tuple[str, ...] = ()

    def gram(self) -> np.ndarray:
        return la.intmat([[euler_form(a, b) for b in self.classes] for a in self.classes])

    def is_exceptional(self) -> bool:
        G = self.gram()
        n = len(self.classes)
        return all(G[i, i] == 1 for i in range(n)) and all(G[j, i] == 0 for i in range(n) for j in range(i + 1, n))

    def __len__(self) -> int:
        return len(self.classes)

    def vectors(self) -> list[np.ndarray]:
        return [c.vector for c in self.classes]


def collection_from_model(model: ToricModel) -> ExcCollection:
    """The standard full exceptional collection.

    Order: O_G(G) for every exceptional curve G = E[i, t] in decreasing
    (i, t), then O, then O(Dbar_0 + ... + Dbar_{l-1}) for l = 1, ..., k-1.
    """
    pd = picard(model)
    classes, names = [], []
    for key in sorted(pd.exc, reverse=True):
        classes.append(curve_class(model, pd.exc[key], -1))
        names.append(f"W{key[0]},{key[1]}")
    L = la.intvec([0] * pd.rank)
    for l in range(model.k):
        classes.append(line_bundle(model, L))
        names.append(f"V{l}")
        L = L + pd.dbar[l]
    coll = ExcCollection(model, tuple(classes), tuple(names))
    return coll


def _mutated(x: KClass, y: KClass, coef: int) -> KClass:
    return from_vector(x.model, x.vector - coef * y.vector)


def mutate(coll: ExcCollection, position: int, direction: str) -> ExcCollection:
    """Mutate the adjacent pair at (position, position + 1).

    ``R``: (a, b) -> (b, R_b a) with R_b a = a - chi(a, b) b.
    ``L``: (a, b) -> (L_a b, a) with L_a b = b - chi(a, b) a.

    Raises:
        KError: ``position_out_of_range`` or ``bad_direction``.
    """
    n = len(coll.classes)
    if not 0 <= position < n - 1:
        raise KError("position_out_of_range", f"position {position} not in 0..{n - 2}")
    a, b = coll.classes[position], coll.classes[position + 1]
    chi = euler_form(a, b)
    if direction == "R":
        pair = (b, _mutated(a, b, chi))
    elif direction == "L":
        pair = (_mutated(b, a, chi), a)
    else:
        raise KError("bad_direction", f"direction must be 'L' or 'R', got {direction!r}")
    cl = list(coll.classes)
    cl[position:position + 2] = pair
    nm = list(coll.names) if coll.names else []
    if nm:
        nm[position], nm[position + 1] = nm[position + 1], nm[position]
    return ExcCollection(coll.model, tuple(cl), tuple(nm))


def negate(coll: ExcCollection, position: int) -> ExcCollection:
    cl = list(coll.classes)
    cl[position] = -cl[position]
    return ExcCollection(coll.model, tuple(cl), coll.names)


def transport(coll: ExcCollection, a: KAuto) -> ExcCollection:
    return ExcCollection(a.target, tuple(a(x) for x in coll.classes), coll.names)


# -- elementary-transformation schedules -----------------------------------

@dataclass(frozen=True)
class MutationStep:
    position: int
    direction: str
    note: str = ""

    def to_json(self) -> dict:
        return {"position": self.position, "direction": self.direction, "note": self.note}


def inverse_steps(steps: Sequence[MutationStep]) -> list[MutationStep]:
    """Undo a word: reverse it and swap L and R at each position."""
    return [MutationStep(s.position, "L" if s.direction == "R" else "R", "undo " + s.note)
            for s in reversed(steps)]


def apply_steps(coll: ExcCollection, steps: Sequence[MutationStep]) -> ExcCollection:
    for s in steps:
        coll = mutate(coll, s.position, s.direction)
    return coll


def _sort_block(names: list[str], lo: int, hi: int, key) -> list[MutationStep]:
    """Bubble-sort names[lo:hi] by key with adjacent swaps; mutates names."""
    steps = []
    changed = True
    while changed:
        changed = False
        for p in range(lo, hi - 1):
            if key(names[p]) > key(names[p + 1]):
                steps.append(MutationStep(p, "R", "reorder"))
                names[p], names[p + 1] = names[p + 1], names[p]
                changed = True
    return steps


def _core_schedule(m: Sequence[int], i: int) -> list[MutationStep]:
    """Schedule for consumed ray i with the opposite ray labelled last.

    ``m`` are the counts in the (possibly rotated) labelling.
    """
    k = len(m)
    nW = sum(m)
    steps = []
    keys = sorted(((a, t) for a in range(k) for t in range(1, m[a] + 1)), reverse=True)
    p = keys.index((i, m[i]))
    # carry the consumed thimble to the end of the list
    for q in range(p, nW + k - 1):
        steps.append(MutationStep(q, "R", "W to end"))
    # pass V_{k-1}, ..., V_{i+1} over it
    for l in range(k - 1, i, -1):
        pos = nW - 1 + l
        steps.append(MutationStep(pos, "R", f"V{l} over W"))
    # carry it left past V_i, ..., V_0
    pos = nW - 1 + i + 1
    for l in range(i, -1, -1):
        steps.append(MutationStep(pos - 1, "L", f"W over V{l}"))
        pos -= 1
    return steps


def _rotation_back(model: ToricModel, times: int) -> list[MutationStep]:
    """Move the last V to the front of the V block, ``times`` times."""
    nW, k = sum(model.m), model.k
    steps = []
    for _ in range(times):
        for pos in range(nW + k - 2, nW - 1, -1):
            steps.append(MutationStep(pos, "L", "rotate V block"))
    return steps


def _schedule_lt(model: ToricModel, i: int, j: int) -> list[MutationStep]:
    """Schedule for an elementary transformation with i < j."""
    k = model.k
    nW = sum(model.m)
    r = k - 1 - j
    steps = _rotation_back(model, r)
    # W block order in the rotated labelling
    rot = lambda a: (a + r) % k
    names = [f"{a},{t}" for a, t in sorted(((a, t) for a in range(k) for t in range(1, model.m[a] + 1)),
                                            reverse=True)]
    parse = lambda s: tuple(int(x) for x in s.split(","))
    steps += _sort_block(names, 0, nW, lambda s: (-rot(parse(s)[0]), -parse(s)[1]))
    steps += _core_schedule([model.m[(a - r) % k] for a in range(k)], rot(i))
    # the new thimble now sits last in the W block; W labels after the move
    names.remove(f"{i},{model.m[i]}")
    names.append(f"{j},{model.m[j] + 1}")
    steps += _sort_block(names, 0, nW, lambda s: (-rot(parse(s)[0]), -parse(s)[1]))
    # undo the rotation: move the first V to the end, r times
    for _ in range(r):
        for pos in range(nW, nW + k - 1):
            steps.append(MutationStep(pos, "R", "unrotate V block"))
    steps += _sort_block(names, 0, nW, lambda s: (-parse(s)[0], -parse(s)[1]))
    return steps


def et_schedule(model: ToricModel, i: int, j: int, side: str = "ccw") -> tuple[list[MutationStep], list[int]]:
    """Mutation word realizing an elementary transformation on the standard collection.

    For ``i < j`` the V block is first rotated (left mutations) so that ray j
    is labelled last; then the consumed thimble W_{i, m_i} is carried to the
    end, V_{k-1}, ..., V_{i+1} are mutated over it, and it is carried back
    left past V_i, ..., V_0.  Rotation and W reordering are undone after.
    For ``i > j`` the word is the inverse of the word for the reverse move.

    Returns:
        The steps and the per-class signs s with
        push(T)(apply_steps(coll)) = s * collection_from_model(new).

    Raises:
        MoveError: as :func:`~lcymirror.moves.apply_elementary`.
    """
    from .moves import apply_elementary, inverse_move, Elementary

    new, T = apply_elementary(model, i, j, side)
    if i < j:
        steps = _schedule_lt(model, i, j)
    else:
        inv = inverse_move(Elementary(i, j, side))
        steps = inverse_steps(_schedule_lt(new, inv.i, inv.j))
    got = transport(apply_steps(collection_from_model(model), steps), pushforward_auto(T))
    want = collection_from_model(new)
    signs = []
    for a, b in zip(got.classes, want.classes):
        if la.mat_equal(a.vector.reshape(-1, 1), b.vector.reshape(-1, 1)):
            signs.append(1)
        elif la.mat_equal(a.vector.reshape(-1, 1), -b.vector.reshape(-1, 1)):
            signs.append(-1)
        else:
            raise KError("schedule_mismatch", "mutation schedule does not reach the new collection")
    return steps, signs


# -- recombination and relations --------------------------------------------

def recombination(model: ToricModel, script, side: str | None = None, certify: bool = False) -> KAuto:
    """K action of a closed script of elementary transformations and relabels.

    Each step acts by the pushforward of its Picard transition.  With
    ``certify`` the mutation schedule of every elementary step is replayed
    and must land on the next standard collection.  The result is
    normalized so that O_Y keeps positive rank.

    Raises:
        KError: ``script_not_closed`` if the script does not return to
            ``model`` exactly, ``blowup_not_allowed`` for corner blow-ups.
        MoveError: ``illegal_move`` from the runner.
    """
    from .moves import Elementary, ToricBlowup, run_script

    moves = list(script)
    if any(isinstance(mv, ToricBlowup) for mv in moves):
        raise KError("blowup_not_allowed", "corner blow-ups change the K lattice")
    if not moves:
        return identity_auto(model)
    models, trs = run_script(model, moves, side)
    if models[-1] != model:
        raise KError("script_not_closed", "script does not return to the starting model")
    out = identity_auto(model)
    for src, mv, t in zip(models, moves, trs):
        if certify and isinstance(mv, Elementary):
            et_schedule(src, mv.i, mv.j, side or mv.side)
        out = pushforward_auto(t) @ out
    if out.matrix[0, 0] < 0:
        out = shift_auto(model) @ out
    return KAuto(model, model, out.matrix, "recombination")


def _isometry_sample(model: ToricModel) -> list[KAuto]:
    """Pushforwards of self-relabels and reflections in simple roots."""
    from .logcy import simple_root_candidates, weyl_reflection
    from .moves import apply_relabel

    pd = picard(model)
    out = []
    for rot in range(model.k):
        # a self-relabel with this rotation, if any
        u0, u1 = model.rays[rot], model.rays[(rot + 1) % model.k]
        w0, w1 = model.rays[0], model.rays[1]
        U = la.intmat([[u0[0], u1[0]], [u0[1], u1[1]]])
        W = la.intmat([[w0[0], w1[0]], [w0[1], w1[1]]])
        g = W.dot(la.unimodular_inverse(U))
        try:
            _, t = apply_relabel(model, tuple(tuple(int(x) for x in r) for r in g), rot, target=model)
        except LatticeError:
            continue
        if rot:
            out.append(pushforward_auto(t))
    for alpha in simple_root_candidates(model):
        out.append(pushforward_auto((model, weyl_reflection(pd, alpha))))
    return out


def _spherical_sample(model: ToricModel) -> list[KClass]:
    """O_C(a) for (-2)-classes C among roots and boundary components."""
    from .logcy import simple_root_candidates

    pd = picard(model)
    curves = list(simple_root_candidates(model))
    curves += [d for d in pd.dtilde if pd.dot(d, d) == -2]
    return [curve_class(model, c, a) for c in curves for a in (-1, 0, 1)]


def relation_suite(model: ToricModel) -> dict:
    """Check four families of autoequivalence identities as matrix equalities.

    (1) push(f) T_S push(f)^-1 = T_{f(S)};
    (2) tensor(L) T_S = T_{S(L)} tensor(L);
    (3) push(f) tensor(L) push(f)^-1 = tensor(f(L));
    (4) T_{O_C(a-1)} T_{O_C(a)} = tensor(C) for C = E_{i,1} - E_{i,2}, a in -2..2.

    Returns:
        ``{"1": {"status": ..., "cases": n, "failures": f}, ...}`` with status
        ``pass``, ``fail`` or ``skipped``.
    """
    pd = picard(model)
    isos = _isometry_sample(model)
    sph = _spherical_sample(model)
    twists = [(S, twist_auto(S)) for S in sph]
    basis_L = [pd.vec([1 if i == j else 0 for i in range(pd.rank)]) for j in range(pd.rank)]
    sample_L = basis_L + [pd.D]
    results: dict[str, list[bool]] = {"1": [], "2": [], "3": [], "4": []}

    def eq(a: KAuto, b: KAuto) -> bool:
        return la.mat_equal(a.matrix, b.matrix)

    for f in isos:
        finv = f.inverse()
        for S, T in twists:
            results["1"].append(eq(f @ T @ finv, twist_auto(f(S))))
        for L in sample_L:
            fL = f.matrix[1:pd.rank + 1, 1:pd.rank + 1].dot(L)
            results["3"].append(eq(f @ tensor_auto(model, L) @ finv, tensor_auto(model, fL)))
    for L in sample_L:
        tL = tensor_auto(model, L)
        for S, T in twists:
            results["2"].append(eq(tL @ T, twist_auto(tL(S)) @ tL))
    for i in range(model.k):
        if model.m[i] < 2:
            continue
        C = pd.exc[(i, 1)] - pd.exc[(i, 2)]
        for a in range(-2, 3):
            lhs = twist_auto(curve_class(model, C, a - 1)) @ twist_auto(curve_class(model, C, a))
            results["4"].append(eq(lhs, tensor_auto(model, C)))

    report = {}
    for key, vals in results.items():
        status = "skipped" if not vals else ("pass" if all(vals) else "fail")
        report[key] = {"status": status, "cases": len(vals), "failures": vals.count(False)}
    return report
