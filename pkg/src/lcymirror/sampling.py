"""Seeded random fans and models for property checks."""
from __future__ import annotations

import random

from .logcy import ToricModel, make_model
from .toric import Fan, corner_blowup, standard_fan


def random_fan(rng: random.Random, blowups: int | None = None, max_k: int = 10) -> Fan:
    """Corner blow-ups of P2 or P1xP1 at random corners."""
    fan = standard_fan(rng.choice(["P2", "P1xP1"]))
    if blowups is None:
        blowups = rng.randint(0, max_k - fan.k)
    for _ in range(blowups):
        fan = corner_blowup(fan, rng.randrange(fan.k))
    return fan


def random_model(rng: random.Random, max_interior: int = 4, max_k: int = 8,
                 prefer_opposite: bool = True) -> ToricModel:
    """Random fan plus up to ``max_interior`` interior blow-ups.

    With ``prefer_opposite`` the blow-ups go on rays that have an opposite
    ray when there are any, so elementary transformations are available.
    """
    fan = random_fan(rng, max_k=max_k)
    rays = fan.rays
    pool = [i for i, v in enumerate(rays) if (-v[0], -v[1]) in rays] if prefer_opposite else []
    if not pool:
        pool = list(range(fan.k))
    m = [0] * fan.k
    for _ in range(rng.randint(0, max_interior)):
        m[rng.choice(pool)] += 1
    return make_model(rays, m)
