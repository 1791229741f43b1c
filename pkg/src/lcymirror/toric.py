"""Fans of smooth complete toric surfaces.

A fan is stored as its cyclic list of primitive rays in counterclockwise
order.  The labelling start is whatever the caller supplied; interior
blow-up counts and move indices refer to these labels, so validation never
rotates.  :meth:`Fan.canonical` gives the rotation used for equality tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import LatticeError, primitive

Vec = tuple[int, int]


class FanError(LatticeError):
    pass


def det2(a: Sequence[int], b: Sequence[int]) -> int:
    return int(a[0]) * int(b[1]) - int(a[1]) * int(b[0])


def _half(v: Vec) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def angle_key(v: Vec) -> tuple:
    """Sort key for the angle of ``v`` in [0, 2pi), exact."""
    from fractions import Fraction

    x, y = v
    h = _half(v)
    if h == 1:
        x, y = -x, -y
    # within a half-plane angle increases as x/|v| decreases; compare by cot
    if y == 0:
        return (h, 0, Fraction(0))
    return (h, 1, Fraction(-x, y))


@dataclass(frozen=True)
class Fan:
    """Cyclically ordered primitive rays, counterclockwise, det(v_i, v_i+1) = 1."""

    rays: tuple[Vec, ...]

    @property
    def k(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> Vec:
        return self.rays[i % self.k]

    def rotated(self, r: int) -> "Fan":
        """Relabel so that new ray 0 is old ray ``r``."""
        k = self.k
        return Fan(tuple(self.rays[(r + l) % k] for l in range(k)))

    def start_index(self) -> int:
        """Index of the ray of smallest nonnegative angle from (1,0)."""
        return min(range(self.k), key=lambda i: angle_key(self.rays[i]))

    def canonical(self) -> "Fan":
        return self.rotated(self.start_index())

    def to_json(self) -> list:
        return [list(v) for v in self.rays]


def validate_fan(rays) -> Fan:
    """Check and wrap a list of rays.

    Raises:
        FanError: ``too_few_rays``, ``non_primitive``, ``not_smooth`` or
            ``not_complete``.
    """
    try:
        vs = tuple((int(a), int(b)) for a, b in rays)
    except (TypeError, ValueError) as exc:
        raise FanError("shape", f"rays must be pairs of integers ({exc})") from None
    k = len(vs)
    if k < 3:
        raise FanError("too_few_rays", f"{k} rays given, need at least 3")
    for i, v in enumerate(vs):
        if not primitive(v):
            raise FanError("non_primitive", f"ray {i} = {list(v)} is not primitive")
    for i in range(k):
        d = det2(vs[i], vs[(i + 1) % k])
        if d != 1:
            raise FanError("not_smooth", f"det(v{i}, v{(i + 1) % k}) = {d}")
    # each consecutive turn is in (0, pi); total turning must be exactly once
    crossings = sum(1 for i in range(k) if _half(vs[i]) == 1 and _half(vs[(i + 1) % k]) == 0)
    if crossings != 1:
        raise FanError("not_complete", f"rays wind {crossings} times around the origin")
    return Fan(vs)


def self_intersections(fan: Fan) -> list[int]:
    """n_i with v_{i-1} + v_{i+1} + n_i v_i = 0."""
    out = []
    k = fan.k
    for i in range(k):
        a, b, c = fan.ray(i - 1), fan.ray(i), fan.ray(i + 1)
        n = -det2(a, c)
        if a[0] + c[0] + n * b[0] != 0 or a[1] + c[1] + n * b[1] != 0:
            raise FanError("invariant", f"ray {i} fails the self-intersection relation")
        out.append(n)
    return out


def corner_blowup(fan: Fan, i: int) -> Fan:
    """Insert v_i + v_{i+1} between positions i and i+1.

    With ``i = k - 1`` the new ray is appended at the end, between the last
    ray and ray 0.
    """
    k = fan.k
    if not 0 <= i < k:
        raise FanError("bad_index", f"corner {i} out of range 0..{k - 1}")
    a, b = fan.ray(i), fan.ray(i + 1)
    new = (a[0] + b[0], a[1] + b[1])
    rays = list(fan.rays)
    rays.insert(i + 1, new)
    return validate_fan(rays)


def contract_ray(fan: Fan, i: int) -> Fan:
    """Inverse of a corner blow-up: remove a ray with n_i = -1."""
    if self_intersections(fan)[i] != -1:
        raise FanError("not_contractible", f"ray {i} does not have self-intersection -1")
    rays = list(fan.rays)
    del rays[i]
    return validate_fan(rays)


def standard_fan(kind: str) -> Fan:
    """``P2``, ``P1xP1`` or ``F(a)`` (Hirzebruch, a >= 0)."""
    kind = kind.strip()
    if kind == "P2":
        return validate_fan([(1, 0), (0, 1), (-1, -1)])
    if kind == "P1xP1":
        return validate_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])
    if kind.startswith("F(") and kind.endswith(")"):
        a = int(kind[2:-1])
        if a < 0:
            raise FanError("bad_kind", "Hirzebruch index must be nonnegative")
        return validate_fan([(1, 0), (0, 1), (-1, a), (0, -1)])
    raise FanError("bad_kind", f"unknown fan kind {kind!r}")


def apply_sl2(g, v: Vec) -> Vec:
    return (g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1])


def same_fan(a: Fan, b: Fan) -> bool:
    """Equality up to cyclic relabelling."""
    return a.canonical() == b.canonical()
