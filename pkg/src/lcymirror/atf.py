"""Combinatorial almost-toric base diagrams.

A diagram is a list of nodes ``(direction, count)``: ``count`` focus-focus
singularities whose invariant lines all point along ``direction`` from a
common origin.  Nodes are kept sorted by the angle of their direction in
[0, 2pi), which is also the order used for the total monodromy with the base
point just below the positive x-axis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import lattice as la
from .lattice import LatticeError, QuotientShape
from .logcy import ModelError, ToricModel, qbar
from .toric import angle_key, det2

Vec = tuple[int, int]


class DiagramError(LatticeError):
    pass


@dataclass(frozen=True)
class Node:
    direction: Vec
    count: int


@dataclass(frozen=True)
class ATFDiagram:
    nodes: tuple[Node, ...]

    def __post_init__(self):
        seen = set()
        for nd in self.nodes:
            if not la.primitive(nd.direction):
                raise DiagramError("not_primitive", f"direction {list(nd.direction)} is not primitive")
            if nd.count < 1:
                raise DiagramError("bad_count", "node counts must be at least 1")
            if nd.direction in seen:
                raise DiagramError("duplicate", f"two node groups share direction {list(nd.direction)}")
            seen.add(nd.direction)
        keys = [angle_key(nd.direction) for nd in self.nodes]
        if keys != sorted(keys):
            raise DiagramError("order", "nodes must be in counterclockwise order from the base point")

    def to_json(self) -> dict:
        return {"nodes": [{"dir": list(nd.direction), "count": nd.count} for nd in self.nodes]}


def make_diagram(pairs: Sequence[tuple[Vec, int]]) -> ATFDiagram:
    """Build a diagram from (direction, count) pairs in any order, merging repeats."""
    counts: dict[Vec, int] = {}
    for v, c in pairs:
        v = (int(v[0]), int(v[1]))
        counts[v] = counts.get(v, 0) + int(c)
    nodes = [Node(v, c) for v, c in counts.items() if c > 0]
    nodes.sort(key=lambda nd: angle_key(nd.direction))
    return ATFDiagram(tuple(nodes))


def diagram_from_model(model: ToricModel) -> ATFDiagram:
    """One node group per ray carrying interior blow-ups."""
    return make_diagram([(v, mi) for v, mi in zip(model.rays, model.m) if mi > 0])


def node_monodromy(v: Sequence[int]) -> np.ndarray:
    """A_v = I + v (Jv)^T with J the rotation by +90 degrees.

    Raises:
        DiagramError: ``not_primitive``.
    """
    if not la.primitive(v):
        raise DiagramError("not_primitive", f"direction {list(v)} is not primitive")
    a, b = int(v[0]), int(v[1])
    return la.intmat([[1 - a * b, a * a], [-b * b, 1 + a * b]])


def _power(A: np.ndarray, n: int) -> np.ndarray:
    out = la.identity(2)
    for _ in range(n):
        out = out.dot(A)
    return out


def _product(nodes: Sequence[Node]) -> np.ndarray:
    P = la.identity(2)
    for nd in nodes:
        P = P.dot(_power(node_monodromy(nd.direction), nd.count))
    return P


def total_monodromy(diagram: ATFDiagram) -> np.ndarray:
    """Ordered product of node monodromies, earlier nodes on the left."""
    return _product(diagram.nodes)


def _before(nodes, key) -> list[Node]:
    return [nd for nd in nodes if angle_key(nd.direction) < key]


def elementary_move(diagram: ATFDiagram, j, k: Vec, side: str = "ccw") -> tuple[ATFDiagram, np.ndarray]:
    """Slide one node of direction v_j through the centre and transfer its cut to -v_j.

    Node directions strictly on the chosen side of the line through v_j are
    sheared: by A_v on the counterclockwise side and by A_v^{-1} on the
    clockwise side, matching the fan shear of the mirror elementary
    transformation.

    Args:
        diagram: the starting diagram.
        j: index into ``diagram.nodes`` or a direction vector.
        k: the target direction, which must be -v_j.
        side: ``ccw`` or ``cw``.

    Returns:
        The new diagram and C with total'(new) = C total(old) C^{-1}.

    Raises:
        DiagramError: ``no_such_node``, ``not_opposite`` or ``bad_side``.
    """
    if side not in ("ccw", "cw"):
        raise DiagramError("bad_side", f"side must be 'ccw' or 'cw', got {side!r}")
    if isinstance(j, (int, np.integer)):
        if not 0 <= j < len(diagram.nodes):
            raise DiagramError("no_such_node", f"no node group with index {j}")
        v = diagram.nodes[j].direction
    else:
        v = (int(j[0]), int(j[1]))
        if v not in {nd.direction for nd in diagram.nodes}:
            raise DiagramError("no_such_node", f"no node group with direction {list(v)}")
    k = (int(k[0]), int(k[1]))
    if k != (-v[0], -v[1]):
        raise DiagramError("not_opposite", f"{list(k)} is not opposite to {list(v)}")
    A = node_monodromy(v)
    Ainv = la.unimodular_inverse(A)
    sgn = 1 if side == "ccw" else -1
    pairs = []
    for nd in diagram.nodes:
        x = nd.direction
        c = nd.count - (1 if x == v else 0)
        d = det2(v, x)
        if d * sgn > 0:
            y = (A if sgn > 0 else Ainv).dot(la.intvec(x))
            x = (int(y[0]), int(y[1]))
        pairs.append((x, c))
    pairs.append((k, 1))
    new = make_diagram(pairs)

    # base point b0 on the unsheared side, perpendicular to v
    b0 = (v[1], -v[0]) if sgn > 0 else (-v[1], v[0])
    key0 = angle_key(b0)
    X = _product(_before(diagram.nodes, key0))
    X2 = _product(_before(new.nodes, key0))
    C = X2.dot(la.unimodular_inverse(X))
    P, P2 = total_monodromy(diagram), total_monodromy(new)
    if not la.mat_equal(P2.dot(C), C.dot(P)):
        raise DiagramError("invariant", "conjugation certificate failed")
    return new, C


def boundary_h1(diagram_or_matrix) -> QuotientShape:
    """Z + coker(A - I) for the total monodromy A."""
    A = diagram_or_matrix
    if isinstance(A, ATFDiagram):
        A = total_monodromy(A)
    A = la.intmat(A)
    inner = la.cokernel_shape(A - la.identity(2))
    return QuotientShape(inner.free_rank + 1, inner.torsion)


@dataclass(frozen=True)
class HandleHomology:
    h2_rank: int
    h2_mod_boundary: QuotientShape
    boundary_classes: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"h2_rank": self.h2_rank, "h2_mod_boundary": self.h2_mod_boundary.to_json(),
                "boundary_classes": [list(c) for c in self.boundary_classes]}


def boundary_cycle_gram(model: ToricModel) -> np.ndarray:
    """Intersection matrix of the boundary cycle from (n, m) alone."""
    k, n, m = model.k, model.n, model.m
    N = la.zeros(k, k)
    for i in range(k):
        N[i, i] = n[i] - m[i]
        for j in ((i - 1) % k, (i + 1) % k):
            if j != i:
                N[i, j] = 1
    return N


def handle_homology(model: ToricModel) -> HandleHomology:
    """Second homology from the handle description, checked against Q-bar.

    H2 is the fibre torus plus the kernel of Z^{sum m} -> Z^2 sending the
    handle (i, t) to v_i.  Dividing by the fibre torus leaves the kernel.
    Boundary classes are then divided out: for each c in the kernel of the
    boundary cycle's intersection matrix, the handle vector with entry c_i on
    every handle of ray i.  In the semi-definite case (parabolic total
    monodromy) this is the single all-ones class.

    Raises:
        ModelError: ``mismatch_with_qbar``.
    """
    handles = [v for v, mi in zip(model.rays, model.m) for _ in range(mi)]
    M = la.zeros(2, len(handles))
    for c, v in enumerate(handles):
        M[0, c], M[1, c] = v
    ker = la.kernel_basis(M)
    rels, extra = [], []
    for c in la.kernel_basis(boundary_cycle_gram(model)):
        hv = la.intvec([int(ci) for ci, mi in zip(c, model.m) for _ in range(mi)])
        if not any(hv):
            continue
        coords = la.solve_integer(la.stack_columns(ker, len(handles)), hv) if ker else None
        if coords is None:
            raise ModelError("mismatch_with_qbar", "boundary class is not a handle cycle")
        rels.append(coords)
        extra.append(tuple(int(x) for x in hv))
    if ker:
        shape = la.cokernel_shape(la.stack_columns(rels, len(ker)))
    else:
        shape = QuotientShape(0)
    want = qbar(model)
    if shape != want:
        raise ModelError("mismatch_with_qbar", f"handle quotient {shape} != Q-bar {want}")
    return HandleHomology(1 + len(ker), shape, tuple(extra))


def diagram_svg(diagram: ATFDiagram, size: int = 400) -> str:
    """Standalone SVG: rays from the origin, a cross per node group, and a legend."""
    h = size // 2
    reach = h - 40
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 20 * len(diagram.nodes) + 20}" '
        f'viewBox="0 0 {size} {size + 20 * len(diagram.nodes) + 20}">',
        f'<rect x="0" y="0" width="{size}" height="{size + 20 * len(diagram.nodes) + 20}" fill="white"/>',
        f'<line class="axis" x1="0" y1="{h}" x2="{size}" y2="{h}" stroke="#ccc" stroke-width="1"/>',
        f'<line class="axis" x1="{h}" y1="0" x2="{h}" y2="{size}" stroke="#ccc" stroke-width="1"/>',
    ]
    for n, nd in enumerate(diagram.nodes):
        a, b = nd.direction
        s = max(abs(a), abs(b))
        ex, ey = h + a * reach // s, h - b * reach // s
        mx, my = h + a * reach // (2 * s), h - b * reach // (2 * s)
        out.append(f'<line class="ray" x1="{h}" y1="{h}" x2="{ex}" y2="{ey}" stroke="black" '
                   f'stroke-width="2" stroke-dasharray="6,4"/>')
        out.append(f'<g class="node" data-dir="{a},{b}" data-count="{nd.count}">'
                   f'<line x1="{mx - 6}" y1="{my - 6}" x2="{mx + 6}" y2="{my + 6}" stroke="red" stroke-width="3"/>'
                   f'<line x1="{mx - 6}" y1="{my + 6}" x2="{mx + 6}" y2="{my - 6}" stroke="red" stroke-width="3"/>'
                   f'<text x="{mx + 9}" y="{my - 9}" font-size="14" font-family="monospace">{nd.count}</text></g>')
    y = size + 15
    out.append(f'<text class="legend" x="10" y="{y}" font-size="13" font-family="monospace">'
               f'{len(diagram.nodes)} node group(s)</text>')
    for n, nd in enumerate(diagram.nodes):
        y += 20
        out.append(f'<text class="legend" x="10" y="{y}" font-size="13" font-family="monospace">'
                   f'dir ({nd.direction[0]},{nd.direction[1]}) x {nd.count}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
