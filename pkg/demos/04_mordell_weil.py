"""Mordell-Weil groups of elliptic fibrations read off from toric models.

Each bundled fibre configuration lists the fibre class and the components
of its reducible fibres.  The group is the orthogonal complement of F
modulo F and the fibre components.
"""
from lcymirror import fundamental_group, picard, shioda_mw
from lcymirror.bundled import fibre_names, load_fibres

for name in fibre_names():
    model, cfg = load_fibres(name)
    mw = shioda_mw(picard(model), cfg)
    sizes = [len(f) for f in cfg.fibres]
    print(f"{name:<14} fibres with {sizes} components   MW = {mw}   pi1 = {fundamental_group(model)}")
