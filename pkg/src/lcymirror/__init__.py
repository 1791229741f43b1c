"""Exact lattice and K-theory computations for toric models of log Calabi-Yau surfaces.

Submodules:

* :mod:`lattice` -- Smith normal form and integer lattice quotients.
* :mod:`toric` -- smooth complete fans.
* :mod:`logcy` -- toric models, Picard lattices, Q, Q-bar, pi1, roots.
* :mod:`moves` -- elementary transformations, corner blow-ups, relabels.
* :mod:`atf` -- almost-toric diagrams and monodromy.
* :mod:`ktheory` -- K classes, autoequivalence shadows, mutations.
* :mod:`elliptic` -- Mordell-Weil groups from fibre configurations.
* :mod:`cli` -- the ``lcymirror`` command.
"""
__version__ = "0.1.0"

from .lattice import LatticeError, QuotientShape, smith_normal_form
from .toric import Fan, FanError, corner_blowup, self_intersections, standard_fan, validate_fan
from .logcy import (
    ModelError, PicardData, ToricModel, fibre_class, fundamental_group, make_model, model_from_json,
    picard, q_lattice, qbar, simple_root_candidates, weyl_orbit, weyl_reflection,
)
from .moves import (
    Elementary, MoveError, Relabel, ToricBlowup, Transition, apply_elementary, apply_relabel,
    apply_toric_blowup, compose, find_relabel, run_script, script_from_json,
)
from .atf import ATFDiagram, diagram_from_model, diagram_svg, elementary_move, handle_homology, total_monodromy
from .ktheory import (
    KAuto, KClass, KError, collection_from_model, compact_support_check, curve_class, et_schedule,
    euler_form, line_bundle, mutate, pushforward_auto, recombination, relation_suite, restrict_to_U,
    shift_auto, tensor_auto, theta_shadow, twist_auto,
)
from .elliptic import FibreConfig, FibreError, shioda_mw

__all__ = [
    "ATFDiagram", "Elementary", "Fan", "FanError", "FibreConfig", "FibreError", "KAuto", "KClass", "KError",
    "LatticeError", "ModelError", "MoveError", "PicardData", "QuotientShape", "Relabel", "ToricBlowup",
    "ToricModel", "Transition", "apply_elementary", "apply_relabel", "apply_toric_blowup",
    "collection_from_model", "compact_support_check", "compose", "corner_blowup", "curve_class",
    "diagram_from_model", "diagram_svg", "elementary_move", "et_schedule", "euler_form", "fibre_class",
    "find_relabel", "fundamental_group", "handle_homology", "line_bundle", "make_model", "model_from_json",
    "mutate", "picard", "pushforward_auto", "q_lattice", "qbar", "recombination", "relation_suite",
    "restrict_to_U", "run_script", "script_from_json", "self_intersections", "shift_auto", "shioda_mw",
    "simple_root_candidates", "smith_normal_form", "standard_fan", "tensor_auto", "theta_shadow",
    "total_monodromy", "twist_auto", "validate_fan", "weyl_orbit", "weyl_reflection",
]
