"""Built-in surfaces: the two worked examples and a synthetic family.

Each preset is defined as a config dict and built through the same loader
as user configs, so ``preset --emit-config`` followed by ``analyze`` is
guaranteed to reproduce ``preset --run`` exactly.

* ``abelian-cover``: the self-product of an elliptic curve with form
  [[0,1,1],[1,0,1],[1,1,0]] and nef = effective cone cut out by
  ``xy + xz + yz >= 0`` and the selector ``x + y + z >= 0``; a degree-2
  cover ramified over ``6(f1 + f2)`` doubles the pairing and shifts the
  canonical class to ``3f1 + 3f2``; polarization ``3f1 + 6f2 + 6delta``.
  Its vertex has the irrational valuation ``-(23 + sqrt(17))/16``.
* ``p1xE``: the product of a line with an elliptic curve, hyperbolic
  lattice [[0,1],[1,0]] in (degree on the line factor, degree on the
  elliptic factor) coordinates, quadrant effective cone, K = (-2, 0),
  L = (2, 2*degree).  Its vertex is canonical but not klt.
* ``quadrant-synthetic``: hyperbolic lattice, quadrant cone, L = (1, 1)
  and a caller-chosen canonical class; with K = -L the vertex is klt.
"""

from __future__ import annotations

from fractions import Fraction

from .configio import load_singularity
from .singularity import ConeSingularity

ABELIAN_COVER = "abelian-cover"
P1XE = "p1xE"
QUADRANT_SYNTHETIC = "quadrant-synthetic"

PRESET_IDS = (ABELIAN_COVER, P1XE, QUADRANT_SYNTHETIC)


def config_abelian_cover() -> dict:
    return {
        "name": ABELIAN_COVER,
        "lattice": {
            "rank": 3,
            "basis": ["f1", "f2", "delta"],
            "form": [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
        },
        "cone": {"type": "quadratic", "ample": [1, 1, 1]},
        "canonical_class": ["0", "0", "0"],
        "polarization": [3, 6, 6],
        "cover": {"degree": 2, "branch": [6, 6, 0]},
    }


def config_p1xe(degree: int = 1) -> dict:
    if degree < 1:
        raise ValueError("the elliptic polarization degree must be >= 1")
    return {
        "name": f"{P1XE}(degree={degree})",
        "lattice": {
            "rank": 2,
            "basis": ["f", "e"],
            "form": [[0, 1], [1, 0]],
        },
        "cone": {"type": "polyhedral", "inequalities": [[1, 0], [0, 1]]},
        "canonical_class": ["-2", "0"],
        "polarization": [2, 2 * degree],
    }


def config_quadrant_synthetic(canonical: tuple = (-1, -1)) -> dict:
    if len(canonical) != 2:
        raise ValueError("the synthetic preset takes 2 canonical coordinates")
    coords = [str(Fraction(c)) for c in canonical]
    return {
        "name": f"{QUADRANT_SYNTHETIC}(K=[{','.join(coords)}])",
        "lattice": {
            "rank": 2,
            "basis": ["x", "y"],
            "form": [[0, 1], [1, 0]],
        },
        "cone": {"type": "polyhedral", "inequalities": [[1, 0], [0, 1]]},
        "canonical_class": coords,
        "polarization": [1, 1],
    }


def config_for(preset_id: str, degree: int = 1, canonical: tuple = (-1, -1)) -> dict:
    if preset_id == ABELIAN_COVER:
        return config_abelian_cover()
    if preset_id == P1XE:
        return config_p1xe(degree)
    if preset_id == QUADRANT_SYNTHETIC:
        return config_quadrant_synthetic(canonical)
    raise ValueError(f"unknown preset {preset_id!r}; choose from {', '.join(PRESET_IDS)}")


def build(preset_id: str, degree: int = 1, canonical: tuple = (-1, -1)) -> ConeSingularity:
    """Construct a preset through the config loader."""
    return load_singularity(config_for(preset_id, degree=degree, canonical=canonical))
