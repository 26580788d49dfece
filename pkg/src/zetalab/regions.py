"""Compact regions (disks and axis-aligned rectangles) with sample grids.

Targets and shifted function values are compared on finite grids, so the
reported sup-distance is the sup over the grid, a lower bound of the true
sup-norm.  Disk grids put most points on the boundary circle, where the sup
of an analytic function over the closed disk is attained.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatchError

_INSIDE_TOL = 1e-9


@dataclass(frozen=True)
class CompactRegion:
    """A closed disk or rectangle together with its finite sample grid."""

    kind: str
    grid: np.ndarray
    center: complex = 0j
    radius: float = 0.0
    corners: tuple[complex, complex] = (0j, 0j)

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.complex128)
        object.__setattr__(self, "grid", grid)
        if self.kind not in ("disk", "rectangle"):
            raise ValueError(f"unknown region kind {self.kind!r}")
        if grid.size == 0:
            raise ValueError("region grid must be nonempty")
        if not np.all(self.contains(grid)):
            raise ValueError("grid contains points outside the closed region")

    @classmethod
    def disk(cls, center: complex, radius: float, boundary_points: int = 64,
             interior_rings: int = 0) -> CompactRegion:
        """Closed disk; grid is the boundary circle plus optional interior rings."""
        if radius <= 0:
            raise ValueError(f"disk radius must be positive, got {radius}")
        if boundary_points < 4:
            raise ValueError("need at least 4 boundary points")
        center = complex(center)
        theta = 2.0 * np.pi * np.arange(boundary_points) / boundary_points
        pts = [center + radius * np.exp(1j * theta)]
        for ring in range(1, interior_rings + 1):
            r = radius * ring / (interior_rings + 1)
            n = max(4, int(boundary_points * ring / (interior_rings + 1)))
            pts.append(center + r * np.exp(2j * np.pi * np.arange(n) / n))
        if interior_rings > 0:
            pts.append(np.array([center]))
        return cls(kind="disk", grid=np.concatenate(pts), center=center, radius=float(radius))

    @classmethod
    def rectangle(cls, lo: complex, hi: complex, per_side: int = 16,
                  interior: int = 0) -> CompactRegion:
        """Closed rectangle with corners lo, hi; perimeter grid plus optional lattice."""
        lo, hi = complex(lo), complex(hi)
        if not (lo.real < hi.real and lo.imag < hi.imag):
            raise ValueError("rectangle corners must satisfy lo < hi componentwise")
        if per_side < 2:
            raise ValueError("need at least 2 points per side")
        xs = np.linspace(lo.real, hi.real, per_side)
        ys = np.linspace(lo.imag, hi.imag, per_side)
        edges = np.concatenate([
            xs + 1j * lo.imag,
            xs + 1j * hi.imag,
            lo.real + 1j * ys[1:-1],
            hi.real + 1j * ys[1:-1],
        ])
        pts = [edges]
        if interior > 0:
            xi = np.linspace(lo.real, hi.real, interior + 2)[1:-1]
            yi = np.linspace(lo.imag, hi.imag, interior + 2)[1:-1]
            gx, gy = np.meshgrid(xi, yi)
            pts.append((gx + 1j * gy).ravel())
        return cls(kind="rectangle", grid=np.concatenate(pts), corners=(lo, hi))

    def contains(self, points) -> np.ndarray:
        points = np.asarray(points, dtype=np.complex128)
        if self.kind == "disk":
            return np.abs(points - self.center) <= self.radius * (1 + _INSIDE_TOL) + _INSIDE_TOL
        lo, hi = self.corners
        tol = _INSIDE_TOL * (1 + abs(hi - lo))
        return ((points.real >= lo.real - tol) & (points.real <= hi.real + tol)
                & (points.imag >= lo.imag - tol) & (points.imag <= hi.imag + tol))

    @property
    def re_range(self) -> tuple[float, float]:
        if self.kind == "disk":
            return self.center.real - self.radius, self.center.real + self.radius
        return self.corners[0].real, self.corners[1].real

    @property
    def im_center(self) -> float:
        if self.kind == "disk":
            return self.center.imag
        return 0.5 * (self.corners[0].imag + self.corners[1].imag)

    def same_grid(self, other: CompactRegion) -> bool:
        return (self.kind == other.kind and self.grid.shape == other.grid.shape
                and bool(np.array_equal(self.grid, other.grid)))


@dataclass(frozen=True)
class FunctionGrid:
    """Complex values sampled on a region's grid."""

    region: CompactRegion
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128)
        object.__setattr__(self, "values", values)
        if values.shape != self.region.grid.shape:
            raise ValueError("values length must equal grid length")
        if not np.all(np.isfinite(values.real) & np.isfinite(values.imag)):
            raise ValueError("grid values must be finite")

    @classmethod
    def from_function(cls, region: CompactRegion, f) -> FunctionGrid:
        try:
            values = np.asarray(f(region.grid), dtype=np.complex128)
            if values.shape != region.grid.shape:
                raise TypeError
        except TypeError:
            values = np.array([f(s) for s in region.grid], dtype=np.complex128)
        return cls(region=region, values=values)

    @classmethod
    def constant(cls, region: CompactRegion, value: complex) -> FunctionGrid:
        return cls(region=region, values=np.full(region.grid.shape, complex(value)))


def sup_distance(a: FunctionGrid, b: FunctionGrid) -> float:
    """max over the shared grid of |a(s) - b(s)|."""
    if not a.region.same_grid(b.region):
        raise GridMismatchError("function grids live on different regions or grids")
    return float(np.max(np.abs(a.values - b.values)))
