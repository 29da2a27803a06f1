"""JSON config ingestion for surface data.

A config fully describes a polarized surface (and optionally a degree-2
cover to apply); loading re-checks every structural invariant and reports
violations with the path of the offending field, e.g. ``lattice.form`` or
``cover.branch``.  Rational entries are strings like ``"3/4"`` so no
floating-point parsing is ever involved.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .singularity import ConeSingularity
from .surface import (
    DivClass,
    NSLattice,
    PolyhedralCone,
    QuadraticCone,
    SurfaceDatum,
    WrongSignatureError,
    double_cover,
)

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class ConfigError(ValueError):
    """Schema or invariant violation, located by a field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"at {path}: {message}")


def _expect_dict(obj, path: str, allowed: set[str], required: set[str]) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(path, f"expected an object, got {type(obj).__name__}")
    for key in obj:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")
    for key in required:
        if key not in obj:
            raise ConfigError(path or key, f"missing required key {key!r}")
    return obj


def _expect_int(obj, path: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ConfigError(path, f"expected an integer, got {obj!r}")
    return obj


def _expect_str(obj, path: str) -> str:
    if not isinstance(obj, str):
        raise ConfigError(path, f"expected a string, got {obj!r}")
    return obj


def _int_vector(obj, path: str, rank: int) -> tuple[int, ...]:
    if not isinstance(obj, list) or len(obj) != rank:
        raise ConfigError(path, f"expected a list of {rank} integers")
    return tuple(_expect_int(x, f"{path}[{i}]") for i, x in enumerate(obj))


def _rational_vector(obj, path: str, rank: int) -> tuple[Fraction, ...]:
    if not isinstance(obj, list) or len(obj) != rank:
        raise ConfigError(path, f"expected a list of {rank} rational strings")
    out = []
    for i, x in enumerate(obj):
        s = _expect_str(x, f"{path}[{i}]")
        if not _RATIONAL_RE.match(s):
            raise ConfigError(f"{path}[{i}]", f"not a rational string (like \"-3/4\"): {s!r}")
        out.append(Fraction(s))
    return tuple(out)


def load_surface(config: dict) -> SurfaceDatum:
    """Build a validated surface from a config dict."""
    _expect_dict(
        config,
        "",
        allowed={"name", "lattice", "cone", "canonical_class", "polarization", "cover"},
        required={"name", "lattice", "cone", "canonical_class", "polarization"},
    )
    name = _expect_str(config["name"], "name")

    lat_obj = _expect_dict(
        config["lattice"], "lattice", allowed={"rank", "basis", "form"},
        required={"rank", "basis", "form"},
    )
    rank = _expect_int(lat_obj["rank"], "lattice.rank")
    if rank < 1:
        raise ConfigError("lattice.rank", "rank must be positive")
    basis = lat_obj["basis"]
    if not isinstance(basis, list) or len(basis) != rank:
        raise ConfigError("lattice.basis", f"expected a list of {rank} names")
    labels = tuple(_expect_str(x, f"lattice.basis[{i}]") for i, x in enumerate(basis))
    form_obj = lat_obj["form"]
    if not isinstance(form_obj, list) or len(form_obj) != rank:
        raise ConfigError("lattice.form", f"expected a {rank}x{rank} integer matrix")
    form = tuple(
        _int_vector(row, f"lattice.form[{i}]", rank) for i, row in enumerate(form_obj)
    )
    try:
        lattice = NSLattice(rank, labels, form)
    except WrongSignatureError as exc:
        raise ConfigError("lattice.form", str(exc)) from exc
    except ValueError as exc:
        raise ConfigError("lattice.form", str(exc)) from exc

    cone_obj = _expect_dict(
        config["cone"], "cone", allowed={"type", "ample", "inequalities"}, required={"type"}
    )
    cone_type = _expect_str(cone_obj["type"], "cone.type")
    if cone_type == "quadratic":
        if "ample" not in cone_obj:
            raise ConfigError("cone", "quadratic cone needs an \"ample\" selector vector")
        if "inequalities" in cone_obj:
            raise ConfigError("cone.inequalities", "not allowed for a quadratic cone")
        ample = _int_vector(cone_obj["ample"], "cone.ample", rank)
        cone = QuadraticCone(DivClass(ample))
    elif cone_type == "polyhedral":
        if "inequalities" not in cone_obj:
            raise ConfigError("cone", "polyhedral cone needs an \"inequalities\" list")
        if "ample" in cone_obj:
            raise ConfigError("cone.ample", "not allowed for a polyhedral cone")
        ineq_obj = cone_obj["inequalities"]
        if not isinstance(ineq_obj, list) or not ineq_obj:
            raise ConfigError("cone.inequalities", "expected a non-empty list of integer vectors")
        ineqs = tuple(
            _int_vector(row, f"cone.inequalities[{i}]", rank)
            for i, row in enumerate(ineq_obj)
        )
        cone = PolyhedralCone(ineqs)
    else:
        raise ConfigError("cone.type", f"must be \"quadratic\" or \"polyhedral\", got {cone_type!r}")

    canonical = DivClass(_rational_vector(config["canonical_class"], "canonical_class", rank))
    polarization = DivClass(_int_vector(config["polarization"], "polarization", rank))

    try:
        surf = SurfaceDatum(lattice, cone, canonical, polarization, name=name)
    except ValueError as exc:
        msg = str(exc)
        path = "cone"
        if "selector" in msg:
            path = "cone.ample"
        elif "pointed" in msg:
            path = "cone.inequalities"
        elif "polarization" in msg:
            path = "polarization"
        raise ConfigError(path, msg) from exc

    if "cover" in config:
        cover_obj = _expect_dict(
            config["cover"], "cover", allowed={"degree", "branch"}, required={"degree", "branch"}
        )
        degree = _expect_int(cover_obj["degree"], "cover.degree")
        if degree != 2:
            raise ConfigError("cover.degree", f"only degree 2 covers are supported, got {degree}")
        branch = DivClass(_int_vector(cover_obj["branch"], "cover.branch", rank))
        try:
            surf = double_cover(surf, branch)
        except ValueError as exc:
            raise ConfigError("cover.branch", str(exc)) from exc
    return surf


def load_singularity(config: dict) -> ConeSingularity:
    surf = load_surface(config)
    return ConeSingularity(surf, label=surf.name)


def load_singularity_file(path: str) -> ConeSingularity:
    try:
        with open(path, encoding="utf-8") as fh:
            config = json.load(fh)
    except OSError as exc:
        raise ConfigError(path, f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(path, f"invalid JSON: {exc}") from exc
    return load_singularity(config)
