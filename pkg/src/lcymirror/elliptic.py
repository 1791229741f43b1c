"""Mordell-Weil groups of rational elliptic fibrations from fibre data.

Given the fibre class F and the components of the reducible fibres, the
Mordell-Weil group is <F>^perp / K where K is spanned by F and every listed
fibre component.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import lattice as la
from .lattice import LatticeError, QuotientShape
from .logcy import PicardData


class FibreError(LatticeError):
    pass


@dataclass(frozen=True)
class FibreConfig:
    """Fibre class and reducible fibres, each a list of component classes."""

    F: tuple[int, ...]
    fibres: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def build(cls, F, fibres) -> "FibreConfig":
        return cls(tuple(int(x) for x in F),
                   tuple(tuple(tuple(int(x) for x in c) for c in fib) for fib in fibres))

    def to_json(self) -> dict:
        return {"F": list(self.F), "fibres": [[list(c) for c in fib] for fib in self.fibres]}


def config_from_json(obj: dict, pd: PicardData | None = None) -> FibreConfig:
    """Parse ``{"F": [...], "fibres": [[[...], ...], ...]}``.

    Classes may be in basis or D/E coordinates when ``pd`` is given.
    """
    if not isinstance(obj, dict) or "F" not in obj or "fibres" not in obj:
        raise FibreError("schema", "fibre config needs fields 'F' and 'fibres'")
    conv = (lambda v: tuple(int(x) for x in pd.vec(v))) if pd is not None else (lambda v: tuple(v))
    try:
        return FibreConfig.build(conv(obj["F"]), [[conv(c) for c in fib] for fib in obj["fibres"]])
    except (TypeError, ValueError) as exc:
        raise FibreError("schema", f"malformed fibre config ({exc})") from None


def validate_config(pd: PicardData, config: FibreConfig) -> None:
    """Check the config against the Gram matrix.

    Raises:
        FibreError: ``shape``, ``F_not_isotropic``, ``bad_fibre_sum`` or
            ``bad_component``.
    """
    F = la.intvec(config.F)
    if len(F) != pd.rank:
        raise FibreError("shape", f"F has length {len(F)}, Picard rank is {pd.rank}")
    if pd.dot(F, F) != 0:
        raise FibreError("F_not_isotropic", f"F^2 = {pd.dot(F, F)}")
    for n, fib in enumerate(config.fibres):
        if not fib:
            raise FibreError("bad_fibre_sum", f"fibre {n} has no components")
        comps = [la.intvec(c) for c in fib]
        if any(len(c) != pd.rank for c in comps):
            raise FibreError("shape", f"fibre {n} has a component of the wrong length")
        total = sum(comps[1:], comps[0].copy())
        if not la.mat_equal(total.reshape(-1, 1), F.reshape(-1, 1)):
            raise FibreError("bad_fibre_sum", f"components of fibre {n} do not sum to F")
        if len(comps) > 1:
            for c in comps:
                if pd.dot(c, c) != -2:
                    raise FibreError("bad_component", f"fibre {n} has a component of square {pd.dot(c, c)}")


def shioda_mw(pd: PicardData, config: FibreConfig) -> QuotientShape:
    """<F>^perp modulo the span of F and all fibre components."""
    validate_config(pd, config)
    F = la.intvec(config.F)
    perp = la.orthogonal_complement(pd.gram, [F])
    P = la.stack_columns(perp, pd.rank)
    rels = []
    for c in [F] + [la.intvec(c) for fib in config.fibres for c in fib]:
        coords = la.solve_integer(P, c)
        if coords is None:
            raise FibreError("bad_component", "fibre component not orthogonal to F")
        rels.append(coords)
    return la.cokernel_shape(la.stack_columns(rels, len(perp)))


def mw_rank(pd: PicardData, config: FibreConfig) -> int:
    return shioda_mw(pd, config).free_rank
