"""Concrete normed spaces: finite-support vectors with exact analytic tails.

Vectors are finite maps ``index -> coefficient`` over the canonical basis,
optionally extended by one closed-form tail from a fixed registry.  The only
registered tail family is ``harmonic-l2``: ``scale * sum_{k>start} (1/k) e_k``,
whose squared length is ``scale^2 * (pi^2/6 - sum_{k<=start} 1/k^2)``.  That
keeps every computation in this package exact up to double rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import SpaceMismatchError, UnsupportedRepresentationError

PI2_OVER_6 = math.pi ** 2 / 6.0

_NORMS = ("l1", "l2", "linf")
_DUAL = {"l1": "linf", "l2": "l2", "linf": "l1"}

# Peeling a tail into explicit coordinates must stay desk-scale.
_MAX_PEEL_SPAN = 1_000_000


def dual_norm_name(norm: str) -> str:
    """Name of the dual norm under the coordinate pairing."""
    return _DUAL[norm]


@dataclass(frozen=True)
class SpaceSpec:
    """A concrete normed space: Euclidean R^dim or a sequence space."""

    kind: str
    norm: str
    dim: int | None = None

    def __post_init__(self):
        if self.kind not in ("euclidean", "sequence"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.norm not in _NORMS:
            raise ValueError(f"unknown norm {self.norm!r}")
        if self.kind == "euclidean":
            if self.dim is None or self.dim < 1:
                raise ValueError("euclidean space needs dim >= 1")
        else:
            if self.dim is not None:
                raise ValueError("sequence space carries no dim")
            if self.norm == "l1":
                raise ValueError("sequence spaces carry norm l2 or linf only")

    @staticmethod
    def euclidean(dim: int, norm: str = "l2") -> "SpaceSpec":
        return SpaceSpec("euclidean", norm, dim)

    @staticmethod
    def sequence(norm: str = "l2") -> "SpaceSpec":
        return SpaceSpec("sequence", norm)

    @staticmethod
    def scalar() -> "SpaceSpec":
        """The reals, viewed as a one-dimensional Euclidean space."""
        return SpaceSpec("euclidean", "l2", 1)

    @property
    def is_scalar(self) -> bool:
        return self.kind == "euclidean" and self.dim == 1


@lru_cache(maxsize=None)
def tail_remainder_zeta2(start: int) -> float:
    """Remainder ``sum_{k>start} 1/k^2 = pi^2/6 - sum_{k<=start} 1/k^2``.

    Small ``start`` uses compensated summation of the partial sum; large
    ``start`` switches to the trigamma asymptotic series, accurate far below
    double rounding for start >= 1000.
    """
    if not isinstance(start, int) or isinstance(start, bool):
        raise ValueError(f"start must be an integer, got {start!r}")
    if start < 0:
        raise ValueError(f"start must be >= 0, got {start}")
    if start <= 1000:
        return PI2_OVER_6 - math.fsum(1.0 / (k * k) for k in range(1, start + 1))
    x = float(start + 1)
    return (
        1.0 / x
        + 1.0 / (2.0 * x ** 2)
        + 1.0 / (6.0 * x ** 3)
        - 1.0 / (30.0 * x ** 5)
        + 1.0 / (42.0 * x ** 7)
        - 1.0 / (30.0 * x ** 9)
    )


def harmonic_number(n: int) -> float:
    """Partial sum ``sum_{k<=n} 1/k`` by compensated summation."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.fsum(1.0 / k for k in range(1, n + 1))


@dataclass(frozen=True)
class TailDescriptor:
    """Closed-form tail ``scale * sum_{k>start} (1/k) e_k`` in the l2 sequence space."""

    start: int
    scale: float
    family: str = "harmonic-l2"

    def __post_init__(self):
        if self.family != "harmonic-l2":
            raise UnsupportedRepresentationError(f"unknown tail family {self.family!r}")
        if not isinstance(self.start, int) or self.start < 1:
            raise ValueError(f"tail start must be an integer >= 1, got {self.start!r}")

    def norm_sq(self) -> float:
        return self.scale * self.scale * tail_remainder_zeta2(self.start)

    def coord(self, k: int) -> float:
        """Coefficient of e_k inside the tail (0 outside its support)."""
        return self.scale / k if k > self.start else 0.0


def _canonical_coords(coords: Mapping[int, float], space: SpaceSpec) -> dict[int, float]:
    out: dict[int, float] = {}
    for k, v in coords.items():
        kk = int(k)
        if kk != k or kk < 1:
            raise ValueError(f"coordinate index must be an integer >= 1, got {k!r}")
        if space.kind == "euclidean" and kk > space.dim:
            raise ValueError(f"index {kk} exceeds dimension {space.dim}")
        vv = float(v)
        if vv != 0.0:
            out[kk] = out.get(kk, 0.0) + vv
    return {k: v for k, v in out.items() if v != 0.0}


@dataclass(frozen=True, eq=True)
class NormedVector:
    """Finite-support vector plus an optional analytic tail.

    Instances are canonical: zero coefficients are dropped, a zero-scale tail
    is dropped, and the tail's support never overlaps the explicit
    coordinates (overlapping tails are peeled forward exactly).
    """

    space: SpaceSpec
    coords: dict[int, float] = field(default_factory=dict)
    tail: TailDescriptor | None = None

    def __post_init__(self):
        coords = _canonical_coords(self.coords, self.space)
        tail = self.tail
        if tail is not None:
            if self.space.kind != "sequence" or self.space.norm != "l2":
                raise UnsupportedRepresentationError(
                    "tails are supported only in the l2 sequence space"
                )
            if tail.scale == 0.0:
                tail = None
        if tail is not None and coords:
            top = max(coords)
            if top > tail.start:
                # Peel the tail forward so its support clears the coords.
                span = top - tail.start
                if span > _MAX_PEEL_SPAN:
                    raise UnsupportedRepresentationError(
                        f"peeling tail across {span} coordinates is out of desk scale"
                    )
                for k in range(tail.start + 1, top + 1):
                    coords[k] = coords.get(k, 0.0) + tail.scale / k
                coords = {k: v for k, v in coords.items() if v != 0.0}
                tail = TailDescriptor(top, tail.scale, tail.family)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "tail", tail)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(space: SpaceSpec) -> "NormedVector":
        return NormedVector(space, {})

    @staticmethod
    def basis(space: SpaceSpec, k: int, value: float = 1.0) -> "NormedVector":
        return NormedVector(space, {k: value})

    @staticmethod
    def from_dense(space: SpaceSpec, values: Iterable[float]) -> "NormedVector":
        return NormedVector(space, {i + 1: float(v) for i, v in enumerate(values)})

    # -- algebra ------------------------------------------------------

    def _check_space(self, other: "NormedVector") -> None:
        if self.space != other.space:
            raise SpaceMismatchError(f"space mismatch: {self.space} vs {other.space}")

    def __add__(self, other: "NormedVector") -> "NormedVector":
        self._check_space(other)
        coords = dict(self.coords)
        for k, v in other.coords.items():
            coords[k] = coords.get(k, 0.0) + v
        tail = _combine_tails(self.tail, other.tail, coords)
        return NormedVector(self.space, coords, tail)

    def __sub__(self, other: "NormedVector") -> "NormedVector":
        return self + (-other)

    def __neg__(self) -> "NormedVector":
        return self * -1.0

    def __mul__(self, scalar: float) -> "NormedVector":
        s = float(scalar)
        coords = {k: v * s for k, v in self.coords.items()}
        tail = None
        if self.tail is not None and s != 0.0:
            tail = TailDescriptor(self.tail.start, self.tail.scale * s, self.tail.family)
        return NormedVector(self.space, coords, tail)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.coords and self.tail is None

    # -- metric -------------------------------------------------------

    def norm_sq(self) -> float:
        """Squared l2 length (coords and tail are orthogonal by canonicality)."""
        if self.space.norm != "l2":
            raise UnsupportedRepresentationError("norm_sq is an l2 quantity")
        total = math.fsum(v * v for v in self.coords.values())
        if self.tail is not None:
            total += self.tail.norm_sq()
        return total

    def norm(self) -> float:
        if self.tail is not None and self.space.norm != "l2":
            raise UnsupportedRepresentationError(
                "tail-bearing vectors support the l2 norm only"
            )
        if self.space.norm == "l2":
            return math.sqrt(self.norm_sq())
        if self.space.norm == "l1":
            return math.fsum(abs(v) for v in self.coords.values())
        return max((abs(v) for v in self.coords.values()), default=0.0)

    def support_max(self) -> int:
        """Largest explicitly stored coordinate index (0 for the zero vector)."""
        return max(self.coords) if self.coords else 0

    def dense(self, dim: int | None = None) -> list[float]:
        if self.tail is not None:
            raise UnsupportedRepresentationError("cannot densify a tail-bearing vector")
        n = dim or (self.space.dim if self.space.kind == "euclidean" else self.support_max())
        return [self.coords.get(k, 0.0) for k in range(1, (n or 0) + 1)]


def _combine_tails(
    t1: TailDescriptor | None, t2: TailDescriptor | None, coords: dict[int, float]
) -> TailDescriptor | None:
    """Merge two optional tails in place, peeling to a common start when needed."""
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    if t1.family != t2.family:
        raise UnsupportedRepresentationError("cannot combine tails from different families")
    lo, hi = (t1, t2) if t1.start <= t2.start else (t2, t1)
    span = hi.start - lo.start
    if span > _MAX_PEEL_SPAN:
        raise UnsupportedRepresentationError(
            f"aligning tails across {span} coordinates is out of desk scale"
        )
    for k in range(lo.start + 1, hi.start + 1):
        coords[k] = coords.get(k, 0.0) + lo.scale / k
    scale = lo.scale + hi.scale
    if scale == 0.0:
        return None
    return TailDescriptor(hi.start, scale, hi.family)


def l2_inner(u: NormedVector, v: NormedVector) -> float:
    """Exact inner product in the l2 space, tail cross terms in closed form."""
    if u.space != v.space:
        raise SpaceMismatchError("inner product needs a common space")
    if u.space.norm != "l2":
        raise UnsupportedRepresentationError("inner product is an l2 quantity")
    terms = [u.coords[k] * v.coords[k] for k in u.coords.keys() & v.coords.keys()]
    if v.tail is not None:
        terms.extend(u.coords[k] * v.tail.coord(k) for k in u.coords if k > v.tail.start)
    if u.tail is not None:
        terms.extend(v.coords[k] * u.tail.coord(k) for k in v.coords if k > u.tail.start)
    if u.tail is not None and v.tail is not None:
        start = max(u.tail.start, v.tail.start)
        terms.append(u.tail.scale * v.tail.scale * tail_remainder_zeta2(start))
    return math.fsum(terms)


@dataclass(frozen=True, eq=True)
class Functional:
    """A representable functional: coordinate pairing with a finite map."""

    space: SpaceSpec
    coords: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coords", _canonical_coords(self.coords, self.space))

    @staticmethod
    def coordinate(space: SpaceSpec, k: int, value: float = 1.0) -> "Functional":
        return Functional(space, {k: value})

    @staticmethod
    def zero(space: SpaceSpec) -> "Functional":
        return Functional(space, {})

    def __call__(self, v: NormedVector) -> float:
        if v.space != self.space:
            raise SpaceMismatchError(f"space mismatch: {self.space} vs {v.space}")
        terms = [fv * v.coords[k] for k, fv in self.coords.items() if k in v.coords]
        if v.tail is not None:
            terms.extend(
                fv * v.tail.coord(k) for k, fv in self.coords.items() if k > v.tail.start
            )
        return math.fsum(terms)

    def dual_norm(self) -> float:
        dual = dual_norm_name(self.space.norm)
        if dual == "l2":
            return math.sqrt(math.fsum(v * v for v in self.coords.values()))
        if dual == "l1":
            return math.fsum(abs(v) for v in self.coords.values())
        return max((abs(v) for v in self.coords.values()), default=0.0)

    def unit_attainer(self) -> NormedVector:
        """A unit vector x with f(x) = dual_norm(f); basis e_1 for the zero functional."""
        if not self.coords:
            return NormedVector.basis(self.space, 1)
        norm = self.space.norm
        if norm == "l2":
            d = self.dual_norm()
            return NormedVector(self.space, {k: v / d for k, v in self.coords.items()})
        if norm == "linf":
            return NormedVector(self.space, {k: math.copysign(1.0, v) for k, v in self.coords.items()})
        # l1 ball: all mass on the largest dual coordinate
        k_best = max(self.coords, key=lambda k: abs(self.coords[k]))
        return NormedVector.basis(self.space, k_best, math.copysign(1.0, self.coords[k_best]))

    def scaled(self, s: float) -> "Functional":
        return Functional(self.space, {k: v * s for k, v in self.coords.items()})


def combine_functionals(space: SpaceSpec, parts: Iterable[tuple[float, Functional]]) -> Functional:
    """Linear combination ``sum_i weight_i * f_i`` as a single functional."""
    coords: dict[int, float] = {}
    for w, f in parts:
        if f.space != space:
            raise SpaceMismatchError("functional combination needs a common space")
        if w == 0.0:
            continue
        for k, v in f.coords.items():
            coords[k] = coords.get(k, 0.0) + w * v
    return Functional(space, coords)
