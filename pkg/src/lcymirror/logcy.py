"""Toric models of log Calabi-Yau surfaces and their Picard lattices.

A toric model is a smooth complete fan together with a count ``m[i]`` of
interior blow-ups on each boundary divisor.  Picard classes are integer
vectors in a fixed basis:

* ``Dbar[l]`` for ``l = 2, ..., k-1`` (pullbacks of toric boundary divisors),
* ``E[i, t]`` for each ray ``i`` and ``t = 1, ..., m[i]``, ordered by ``i``
  then ``t``.

``Dbar[0]`` and ``Dbar[1]`` are eliminated with the two linear relations
``sum_l <u, v_l> Dbar[l] = 0``.  Rays 0 and 1 always have det 1 since the fan
is smooth, so this is the lexicographically first admissible pair.

Classes may also be given in the redundant "D/E coordinates" of length
``k + sum(m)`` (one entry per ``Dbar`` then per ``E``); :meth:`PicardData.vec`
accepts either form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import lattice as la
from .lattice import LatticeError, QuotientShape
from .toric import Fan, self_intersections, validate_fan


class ModelError(LatticeError):
    pass


@dataclass(frozen=True)
class ToricModel:
    """A fan plus interior blow-up counts, one per ray."""

    fan: Fan
    m: tuple[int, ...]
    extra_roots: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "extra_roots", tuple(tuple(int(c) for c in r) for r in self.extra_roots))
        if len(self.m) != self.fan.k:
            raise ModelError("shape", f"{len(self.m)} blow-up counts for {self.fan.k} rays")
        if any(x < 0 for x in self.m):
            raise ModelError("negative_m", "interior blow-up counts must be nonnegative")

    @property
    def k(self) -> int:
        return self.fan.k

    @property
    def rays(self):
        return self.fan.rays

    @property
    def n(self) -> list[int]:
        return self_intersections(self.fan)

    def to_json(self) -> dict:
        out = {"rays": self.fan.to_json(), "m": list(self.m)}
        if self.extra_roots:
            out["extra_roots"] = [list(r) for r in self.extra_roots]
        return out

    def same_as(self, other: "ToricModel") -> bool:
        """Equal fan and counts up to a common cyclic relabelling."""
        if self.k != other.k:
            return False
        k = self.k
        for r in range(k):
            if all(self.rays[(r + l) % k] == other.rays[l] and self.m[(r + l) % k] == other.m[l]
                   for l in range(k)):
                return True
        return False


def make_model(rays, m, extra_roots=()) -> ToricModel:
    return ToricModel(validate_fan(rays), tuple(m), tuple(tuple(r) for r in extra_roots))


def model_from_json(obj: dict) -> ToricModel:
    """Parse ``{"rays": [...], "m": [...], "extra_roots": [...]}``."""
    if not isinstance(obj, dict):
        raise ModelError("schema", "model must be a JSON object")
    for key in ("rays", "m"):
        if key not in obj:
            raise ModelError("schema", f"missing field {key!r}")
    unknown = set(obj) - {"rays", "m", "extra_roots", "name", "comment"}
    if unknown:
        raise ModelError("schema", f"unknown field(s) {sorted(unknown)}")
    rays = obj["rays"]
    if not isinstance(rays, list) or not all(
            isinstance(r, list) and len(r) == 2 and all(isinstance(c, int) for c in r) for r in rays):
        raise ModelError("schema", "field 'rays' must be a list of [int, int]")
    m = obj["m"]
    if not isinstance(m, list) or not all(isinstance(c, int) for c in m):
        raise ModelError("schema", "field 'm' must be a list of integers")
    extra = obj.get("extra_roots", [])
    if not isinstance(extra, list) or not all(
            isinstance(r, list) and all(isinstance(c, int) for c in r) for r in extra):
        raise ModelError("schema", "field 'extra_roots' must be a list of integer lists")
    model = make_model(rays, m, extra)
    if extra:
        simple_root_candidates(model)
    return model


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class PicardData:
    """Picard lattice of the blown-up surface in the fixed basis.

    Attributes:
        rank: k - 2 + sum(m).
        gram: intersection matrix in the basis.
        dbar: pullback boundary classes, one per ray.
        exc: exceptional classes keyed by ``(i, t)`` with ``t`` starting at 1.
        dtilde: strict transforms ``dbar[i] - sum_t exc[i, t]``.
        D: anticanonical class, the sum of the strict transforms.
        to_basis: matrix taking D/E coordinates to basis coordinates.
    """

    model: ToricModel
    rank: int
    gram: np.ndarray
    dbar: tuple
    exc: dict
    dtilde: tuple
    D: np.ndarray
    to_basis: np.ndarray
    labels: tuple

    @property
    def n(self) -> list[int]:
        return self.model.n

    def dot(self, x, y) -> int:
        return int(la.intvec(x).dot(self.gram.dot(la.intvec(y))))

    def vec(self, coords: Sequence[int]) -> np.ndarray:
        """Basis vector from basis coordinates or D/E coordinates."""
        c = la.intvec(coords)
        if len(c) == self.rank:
            return c
        if len(c) == self.to_basis.shape[1]:
            return self.to_basis.dot(c)
        raise ModelError("shape", f"class of length {len(c)}; expected {self.rank} "
                                  f"(basis) or {self.to_basis.shape[1]} (D/E coordinates)")

    def exc_list(self) -> list[tuple[int, int]]:
        return sorted(self.exc)

    def eval_matrix(self) -> np.ndarray:
        """Rows x -> x . Dtilde_i, as a k x rank matrix."""
        return la.intmat([self.gram.dot(d) for d in self.dtilde])

    def boundary_gram(self) -> np.ndarray:
        return la.intmat([[self.dot(a, b) for b in self.dtilde] for a in self.dtilde])

    def is_semidefinite(self) -> bool:
        """All strict transforms are (-2)-curves, so D is isotropic and in Q."""
        return all(self.dot(d, d) == -2 for d in self.dtilde)


@lru_cache(maxsize=512)
def picard(model: ToricModel) -> PicardData:
    k = model.k
    rays = model.rays
    n = model.n
    exc_keys = [(i, t) for i in range(k) for t in range(1, model.m[i] + 1)]
    r = k - 2 + len(exc_keys)
    idx_d = {l: l - 2 for l in range(2, k)}
    idx_e = {key: k - 2 + s for s, key in enumerate(exc_keys)}

    dbar = [la.intvec([0] * r) for _ in range(k)]
    for l in range(2, k):
        dbar[l][idx_d[l]] = 1
    # (Dbar_0, Dbar_1) = -M^{-1} sum_{l >= 2} v_l Dbar_l with M = [v0 v1]
    (a, c), (b, d) = rays[0], rays[1]
    minv = ((d, -b), (-c, a))  # det M = 1
    for l in range(2, k):
        x, y = rays[l]
        dbar[0][idx_d[l]] = -(minv[0][0] * x + minv[0][1] * y)
        dbar[1][idx_d[l]] = -(minv[1][0] * x + minv[1][1] * y)

    exc = {}
    for key in exc_keys:
        e = la.intvec([0] * r)
        e[idx_e[key]] = 1
        exc[key] = _frozen(e)

    gram = la.zeros(r, r)
    for l1 in range(2, k):
        for l2 in range(2, k):
            if l1 == l2:
                v = n[l1]
            else:
                v = 1 if (l1 - l2) % k in (1, k - 1) else 0
            gram[idx_d[l1], idx_d[l2]] = v
    for key in exc_keys:
        gram[idx_e[key], idx_e[key]] = -1

    dtilde = []
    for i in range(k):
        v = dbar[i].copy()
        for t in range(1, model.m[i] + 1):
            v = v - exc[(i, t)]
        dtilde.append(_frozen(v))
    D = sum(dtilde[1:], dtilde[0].copy()) if k else la.intvec([0] * r)

    to_basis = la.zeros(r, k + len(exc_keys))
    for l in range(k):
        to_basis[:, l] = dbar[l]
    for s, key in enumerate(exc_keys):
        to_basis[:, k + s] = exc[key]
    labels = tuple([f"D{l}" for l in range(k)] + [f"E{i},{t}" for i, t in exc_keys])

    pd = PicardData(model, r, _frozen(gram), tuple(_frozen(v) for v in dbar), exc, tuple(dtilde),
                    _frozen(la.intvec(D)), _frozen(to_basis), labels)
    _check_picard(pd)
    return pd


def _check_picard(pd: PicardData) -> None:
    model = pd.model
    k, n, m = model.k, model.n, model.m
    if abs(la.det(pd.gram)) != 1:
        raise ModelError("invariant", "Picard Gram matrix is not unimodular")
    for i in range(k):
        for j in range(k):
            got = pd.dot(pd.dbar[i], pd.dbar[j])
            want = n[i] if i == j else (1 if (i - j) % k in (1, k - 1) else 0)
            if k == 3 and i != j:
                want = 1
            if got != want:
                raise ModelError("invariant", f"Dbar{i}.Dbar{j} = {got}, expected {want}")
    for key, e in pd.exc.items():
        if pd.dot(e, pd.D) != 1:
            raise ModelError("invariant", f"D.E{key} != 1")
    for i in range(k):
        if pd.dot(pd.dtilde[i], pd.dtilde[i]) != n[i] - m[i]:
            raise ModelError("invariant", "strict transform self-intersection")


def q_lattice(model: ToricModel) -> list[np.ndarray]:
    """Saturated basis of Q, the classes orthogonal to every strict transform."""
    pd = picard(model)
    return la.orthogonal_complement(pd.gram, pd.dtilde)


def qbar(model: ToricModel) -> QuotientShape:
    """Shape of the image of Q in Pic(U) = Pic / <Dtilde_i>.

    This is Q modulo Q intersected with the span of the strict transforms.
    When the boundary is semi-definite that intersection is spanned by D;
    when the boundary Gram is nondegenerate it is zero.
    """
    pd = picard(model)
    q = q_lattice(model)
    if not q:
        return QuotientShape(0)
    Qm = la.stack_columns(q, pd.rank)
    relations = []
    for c in la.kernel_basis(pd.boundary_gram()):
        x = sum((int(ci) * d for ci, d in zip(c, pd.dtilde)), la.intvec([0] * pd.rank))
        coords = la.solve_integer(Qm, x)
        if coords is None:
            raise ModelError("invariant", "boundary kernel class not in Q")
        relations.append(coords)
    return la.cokernel_shape(la.stack_columns(relations, len(q)))


def fundamental_group(model: ToricModel) -> QuotientShape:
    """Cokernel of Pic -> Z^k, checked against Z^2 / <v_i : m_i > 0>.

    Raises:
        ModelError: ``oracle_mismatch`` if the two computations disagree.
    """
    pd = picard(model)
    a = la.cokernel_shape(pd.eval_matrix())
    b = handle_quotient(model)
    if a != b:
        raise ModelError("oracle_mismatch", f"evaluation cokernel {a} != handle quotient {b}")
    return a


def handle_quotient(model: ToricModel) -> QuotientShape:
    """Z^2 modulo the directions of rays carrying interior blow-ups."""
    cols = [la.intvec(v) for v, mi in zip(model.rays, model.m) if mi > 0]
    return la.cokernel_shape(la.stack_columns(cols, 2))


def fibre_class(model: ToricModel, i: int, j: int) -> np.ndarray:
    """Class F meeting Dtilde_i and Dtilde_j once and nothing else on the boundary.

    Raises:
        ModelError: ``not_opposite`` unless v_i = -v_j.
    """
    k = model.k
    if not (0 <= i < k and 0 <= j < k):
        raise ModelError("bad_index", f"ray indices must lie in 0..{k - 1}")
    vi, vj = model.rays[i], model.rays[j]
    if (vi[0] + vj[0], vi[1] + vj[1]) != (0, 0):
        raise ModelError("not_opposite", f"rays {i} and {j} are not opposite")
    pd = picard(model)
    rows = [pd.gram.dot(d) for d in pd.dtilde] + [pd.gram.dot(pd.exc[key]) for key in pd.exc_list()]
    rhs = [1 if l in (i, j) else 0 for l in range(k)] + [0] * len(pd.exc)
    F = la.solve_integer(la.intmat(rows), rhs)
    if F is None or pd.dot(F, F) != 0:
        raise ModelError("invariant", "fibre class system has no isotropic integral solution")
    return F


def in_q(pd: PicardData, x) -> bool:
    return all(pd.dot(x, d) == 0 for d in pd.dtilde)


def simple_root_candidates(model: ToricModel) -> list[np.ndarray]:
    """Differences of consecutive exceptionals on a ray, plus declared extras.

    Raises:
        ModelError: ``bad_extra_root`` if a declared class is not a (-2)-class
            in Q.
    """
    pd = picard(model)
    out = []
    for i in range(model.k):
        for t in range(1, model.m[i]):
            out.append(pd.exc[(i, t)] - pd.exc[(i, t + 1)])
    for coords in model.extra_roots:
        try:
            x = pd.vec(coords)
        except ModelError as exc:
            raise ModelError("bad_extra_root", str(exc)) from None
        if pd.dot(x, x) != -2 or not in_q(pd, x):
            raise ModelError("bad_extra_root", f"{list(coords)} is not a (-2)-class orthogonal to the boundary")
        out.append(x)
    return out


def weyl_reflection(pd: PicardData, alpha) -> np.ndarray:
    """Matrix of s(x) = x + <x, alpha> alpha.

    Raises:
        ModelError: ``not_minus_two`` if alpha^2 != -2.
    """
    a = la.intvec(alpha)
    if pd.dot(a, a) != -2:
        raise ModelError("not_minus_two", "reflection needs a class of square -2")
    # column j is the image of basis vector e_j
    row = pd.gram.dot(a)
    return la.identity(pd.rank) + np.outer(a, row)


def weyl_orbit(pd: PicardData, seeds: Iterable, bound: int) -> list[np.ndarray]:
    """Closure of ``seeds`` under reflections in every root found so far.

    Vectors with a coefficient above ``bound`` in absolute value are dropped.
    The result is sorted.
    """
    found = {}
    frontier = []
    for s in seeds:
        v = la.intvec(s)
        if pd.dot(v, v) != -2:
            raise ModelError("not_minus_two", "orbit seeds must have square -2")
        key = tuple(int(c) for c in v)
        if key not in found and max(map(abs, key), default=0) <= bound:
            found[key] = v
            frontier.append(key)
    while frontier:
        new = []
        roots = list(found.values())
        for key in frontier:
            x = found[key]
            for a in roots:
                for y, b in ((x, a), (a, x)):
                    img = y + pd.dot(y, b) * b
                    ik = tuple(int(c) for c in img)
                    if ik not in found and max(map(abs, ik)) <= bound:
                        found[ik] = img
                        new.append(ik)
        frontier = new
    return [found[key] for key in sorted(found)]


def spherical_class_check(pd: PicardData, x) -> bool:
    """Candidate test for the K-class of a spherical sheaf supported away from D.

    ``x`` needs attributes ``r``, ``c1`` and ``ch2x2`` (doubled ch2).  Only
    rank zero, square -2, orthogonality to the boundary and an integral ch2
    are checked.
    """
    c = la.intvec(x.c1)
    return int(x.r) == 0 and pd.dot(c, c) == -2 and in_q(pd, c) and int(x.ch2x2) % 2 == 0
