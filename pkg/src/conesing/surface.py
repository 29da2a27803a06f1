"""Polarized surfaces as numerical data.

A surface enters every computation through its divisor class lattice with
the integer intersection pairing, a model of the effective cone, a canonical
class and a polarization.  Two cone models are supported: the self-pairing
cone of an abelian surface, cut to one nappe by an ample selector class, and
a rational polyhedral cone given by linear inequalities.  Degree-2 covers
are tracked inside the pulled-back sublattice: the pairing doubles, the
canonical class gains half the branch class and the cone is unchanged in
coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadNum

MAX_RANK = 8  # desk-scale cap on the lattice rank


class DimensionMismatchError(ValueError):
    """A class vector's length disagrees with the lattice rank."""


class WrongSignatureError(ValueError):
    """The intersection form is not of signature (1, rank-1)."""

    def __init__(self, inertia: tuple[int, int], rank: int):
        self.inertia = inertia
        super().__init__(
            f"intersection form has signature {inertia}, "
            f"but the Hodge index theorem requires (1, {rank - 1})"
        )


class BranchNotDivisibleError(ValueError):
    """A double-cover branch class is not 2x an integral class."""


class BranchNotAmpleError(ValueError):
    """Half the branch class is not strictly interior to the cone."""


def _sign_of(x) -> int:
    if isinstance(x, QuadNum):
        return x.sign()
    return (x > 0) - (x < 0)


def inertia(form: list[list[Fraction]]) -> tuple[int, int, int]:
    """Exact inertia (positive, negative, zero) of a symmetric matrix.

    Congruent diagonalization with rational pivots; a zero diagonal is
    repaired by adding another basis vector, which keeps the congruence
    class and hence the inertia.
    """
    m = [[Fraction(x) for x in row] for row in form]
    n = len(m)
    pos = neg = zero = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0),
                None,
            )
            if pair is None:
                zero += n - k
                break
            i, j = pair
            for r in range(n):
                m[i][r] += m[j][r]
            for r in range(n):
                m[r][i] += m[r][j]
            piv = i  # now m[i][i] = 2*m_old[i][j] != 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for r in range(n):
                m[r][k], m[r][piv] = m[r][piv], m[r][k]
        p = m[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            if m[r][k] == 0:
                continue
            f = m[r][k] / p
            for c in range(n):
                m[r][c] -= f * m[k][c]
            for c in range(n):
                m[c][r] -= f * m[c][k]
        k += 1
    return pos, neg, zero


@dataclass(frozen=True)
class NSLattice:
    """Divisor class lattice: rank, basis labels and intersection matrix."""

    rank: int
    basis_labels: tuple[str, ...]
    form: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not 1 <= self.rank <= MAX_RANK:
            raise ValueError(f"rank must be in 1..{MAX_RANK}, got {self.rank}")
        labels = tuple(str(x) for x in self.basis_labels)
        if len(labels) != self.rank:
            raise DimensionMismatchError(
                f"{len(labels)} basis labels for rank {self.rank}"
            )
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.form)
        if len(rows) != self.rank or any(len(r) != self.rank for r in rows):
            raise DimensionMismatchError("intersection matrix is not rank x rank")
        for i in range(self.rank):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("intersection matrix must be symmetric")
        object.__setattr__(self, "basis_labels", labels)
        object.__setattr__(self, "form", rows)
        pos, neg, zero = inertia([list(r) for r in rows])
        if (pos, neg, zero) != (1, self.rank - 1, 0):
            raise WrongSignatureError((pos, neg), self.rank)

    def scaled(self, factor: int) -> "NSLattice":
        form = tuple(tuple(factor * x for x in row) for row in self.form)
        return NSLattice(self.rank, self.basis_labels, form)

    def basis_class(self, index: int) -> "DivClass":
        coords = [Fraction(0)] * self.rank
        coords[index] = Fraction(1)
        return DivClass(tuple(coords))


@dataclass(frozen=True)
class DivClass:
    """A divisor class as a coordinate vector in the lattice basis."""

    coords: tuple

    def __post_init__(self) -> None:
        coerced = tuple(
            c if isinstance(c, QuadNum) else Fraction(c) for c in self.coords
        )
        object.__setattr__(self, "coords", coerced)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivClass") -> "DivClass":
        if len(self) != len(other):
            raise DimensionMismatchError("cannot add classes of different rank")
        return DivClass(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + (-other)

    def __neg__(self) -> "DivClass":
        return DivClass(tuple(-x for x in self.coords))

    def __rmul__(self, scalar) -> "DivClass":
        return DivClass(tuple(scalar * x for x in self.coords))

    def is_zero(self) -> bool:
        return all(_sign_of(x) == 0 for x in self.coords)


def pairing(lat: NSLattice, alpha: DivClass, beta: DivClass):
    """Intersection number ``alpha . beta``; exact, QuadNum-aware."""
    if len(alpha) != lat.rank or len(beta) != lat.rank:
        raise DimensionMismatchError("class vector length does not match lattice rank")
    acc = Fraction(0)
    for i, ai in enumerate(alpha.coords):
        row = lat.form[i]
        for j, bj in enumerate(beta.coords):
            if row[j]:
                acc = acc + ai * row[j] * bj
    return acc


def validate_hodge_index(lat: NSLattice) -> None:
    """Re-check signature (1, rank-1); NSLattice already enforces it."""
    pos, neg, zero = inertia([list(r) for r in lat.form])
    if (pos, neg, zero) != (1, lat.rank - 1, 0):
        raise WrongSignatureError((pos, neg), lat.rank)


@dataclass(frozen=True)
class QuadraticCone:
    """Effective = one nappe of {q(a,a) >= 0}, picked by an ample selector."""

    ample_selector: DivClass


@dataclass(frozen=True)
class PolyhedralCone:
    """Effective = {a : l_i(a) >= 0} for integer linear functionals l_i."""

    inequalities: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.inequalities)
        if not rows:
            raise ValueError("a polyhedral cone needs at least one inequality")
        object.__setattr__(self, "inequalities", rows)

    def functional(self, index: int, alpha: DivClass):
        row = self.inequalities[index]
        if len(row) != len(alpha):
            raise DimensionMismatchError("inequality arity does not match class rank")
        acc = Fraction(0)
        for c, x in zip(row, alpha.coords):
            if c:
                acc = acc + c * x
        return acc


ConeModel = QuadraticCone | PolyhedralCone


def _matrix_rank(rows: list[list[Fraction]]) -> int:
    m = [row[:] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SurfaceDatum:
    """A polarized surface: lattice, effective-cone model, K, L and cover degree."""

    lattice: NSLattice
    cone: QuadraticCone | PolyhedralCone
    canonical_class: DivClass
    polarization: DivClass
    name: str = "surface"
    cover_degree: int = 1

    def __post_init__(self) -> None:
        lat = self.lattice
        if len(self.canonical_class) != lat.rank:
            raise DimensionMismatchError("canonical class has wrong rank")
        if len(self.polarization) != lat.rank:
            raise DimensionMismatchError("polarization has wrong rank")
        if self.cover_degree not in (1, 2):
            raise ValueError(f"cover degree must be 1 or 2, got {self.cover_degree}")
        if isinstance(self.cone, QuadraticCone):
            h = self.cone.ample_selector
            if len(h) != lat.rank:
                raise DimensionMismatchError("ample selector has wrong rank")
            if _sign_of(pairing(lat, h, h)) <= 0:
                raise ValueError("ample selector must have positive self-pairing")
        else:
            ineqs = self.cone.inequalities
            if any(len(row) != lat.rank for row in ineqs):
                raise DimensionMismatchError("cone inequality arity != lattice rank")
            rows = [[Fraction(x) for x in row] for row in ineqs]
            if _matrix_rank(rows) != lat.rank:
                raise ValueError("polyhedral cone is not pointed (inequalities have a common kernel)")
        if not self.is_strictly_interior(self.polarization):
            raise ValueError("polarization must be strictly interior to the effective cone")

    def is_strictly_interior(self, alpha: DivClass) -> bool:
        if isinstance(self.cone, QuadraticCone):
            h = self.cone.ample_selector
            return (
                _sign_of(pairing(self.lattice, alpha, alpha)) > 0
                and _sign_of(pairing(self.lattice, alpha, h)) > 0
            )
        return all(
            _sign_of(self.cone.functional(i, alpha)) > 0
            for i in range(len(self.cone.inequalities))
        )


def is_effective(surf: SurfaceDatum, alpha: DivClass) -> bool:
    """Closed-cone membership test; coordinates may be QuadNum."""
    if isinstance(surf.cone, QuadraticCone):
        h = surf.cone.ample_selector
        return (
            _sign_of(pairing(surf.lattice, alpha, alpha)) >= 0
            and _sign_of(pairing(surf.lattice, alpha, h)) >= 0
        )
    return all(
        _sign_of(surf.cone.functional(i, alpha)) >= 0
        for i in range(len(surf.cone.inequalities))
    )


def double_cover(surf: SurfaceDatum, branch: DivClass) -> SurfaceDatum:
    """Pull back along the degree-2 cover ramified over ``branch``.

    Requires ``branch = 2*Lp`` with ``Lp`` integral and strictly interior.
    In pulled-back coordinates the pairing doubles, the canonical class
    becomes ``K + Lp`` and the cone inequalities are unchanged.
    """
    if surf.cover_degree != 1:
        raise ValueError("surface already carries a cover")
    if len(branch) != surf.lattice.rank:
        raise DimensionMismatchError("branch class has wrong rank")
    half = []
    for c in branch.coords:
        if isinstance(c, QuadNum) or c.denominator != 1 or c.numerator % 2:
            raise BranchNotDivisibleError(
                "branch class must be 2x an integral class"
            )
        half.append(c / 2)
    half_class = DivClass(tuple(half))
    if not surf.is_strictly_interior(half_class):
        raise BranchNotAmpleError("half the branch class must be strictly interior")
    return SurfaceDatum(
        lattice=surf.lattice.scaled(2),
        cone=surf.cone,
        canonical_class=surf.canonical_class + half_class,
        polarization=surf.polarization,
        name=surf.name,
        cover_degree=2,
    )
