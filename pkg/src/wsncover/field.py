"""Sensor-field geometry: disk coverage, disjoint subregions, and covers.

Coverage is evaluated on a uniform grid of cell-center sample points rather
than by exact circle arrangements; the grid error is bounded by
cell diagonal * disk perimeter / field area and shrinks with the resolution.
Disk boundaries are inclusive (distance == sensing range counts as covered).
All functions here are pure and safe to call from multiple threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np


@dataclass(frozen=True)
class FieldConfig:
    """Rectangular field with a grid sampling resolution and a base-station position."""

    width: float
    height: float
    grid_resolution: float
    bs_position: tuple[float, float]

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("field dimensions must be > 0")
        if not 0 < self.grid_resolution <= min(self.width, self.height) / 10:
            raise ValueError("grid_resolution must lie in (0, min(width, height)/10]")
        bx, by = self.bs_position
        if not (0 <= bx <= self.width and 0 <= by <= self.height):
            raise ValueError("bs_position must lie inside the field")

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)


@dataclass(frozen=True)
class SensorPlacement:
    """One deployed sensor: position plus sensing and radio disk radii."""

    node_id: int
    position: tuple[float, float]
    sensing_range: float
    radio_range: float

    def __post_init__(self):
        if self.sensing_range <= 0 or self.radio_range <= 0:
            raise ValueError("ranges must be > 0")


@dataclass(frozen=True)
class SubRegion:
    """Maximal set of sample points covered by exactly the same sensors.

    The uncovered area is represented explicitly as a region with an empty
    covering set (possibly with zero sample points under full coverage).
    """

    region_id: int
    covering_set: frozenset[int]
    sample_points: np.ndarray  # (k, 2) coordinates
    area_estimate: float


@dataclass(frozen=True)
class Cover:
    """A sensor subset that jointly covers every sample point of the field."""

    members: frozenset[int]
    index: int


@dataclass(frozen=True)
class Grid:
    """Cell-center sample points in row-major order (y rows, then x columns)."""

    points: np.ndarray  # (P, 2)
    nx: int
    ny: int
    cell_area: float


def build_grid(field: FieldConfig) -> Grid:
    """Tile the field exactly with cells as close to grid_resolution as possible."""
    nx = max(1, round(field.width / field.grid_resolution))
    ny = max(1, round(field.height / field.grid_resolution))
    cw, ch = field.width / nx, field.height / ny
    xs = (np.arange(nx) + 0.5) * cw
    ys = (np.arange(ny) + 0.5) * ch
    gx, gy = np.meshgrid(xs, ys)  # row-major: y varies by row
    points = np.column_stack([gx.ravel(), gy.ravel()])
    return Grid(points=points, nx=nx, ny=ny, cell_area=cw * ch)


def covers_point(placement: SensorPlacement, point: tuple[float, float]) -> bool:
    """True iff the point lies within the sensor's disk (boundary inclusive)."""
    return math.dist(placement.position, point) <= placement.sensing_range


def cover_matrix(placements: Sequence[SensorPlacement], grid: Grid) -> np.ndarray:
    """Boolean (points x sensors) matrix of the covers_point predicate.

    Column j corresponds to placements[j]; computed sensor-by-sensor to keep
    memory at points x sensors booleans.
    """
    pts = grid.points
    mat = np.zeros((len(pts), len(placements)), dtype=bool)
    for j, pl in enumerate(placements):
        dx = pts[:, 0] - pl.position[0]
        dy = pts[:, 1] - pl.position[1]
        mat[:, j] = dx * dx + dy * dy <= pl.sensing_range ** 2
    return mat


def coverage_ratio(placements: Sequence[SensorPlacement], field: FieldConfig) -> float:
    """Fraction of grid sample points covered by at least one sensor."""
    grid = build_grid(field)
    if len(grid.points) == 0:
        raise ValueError("degenerate field")
    if not placements:
        return 0.0
    covered = cover_matrix(placements, grid).any(axis=1)
    return float(covered.sum()) / len(grid.points)


def is_cover(members: Iterable[int], placements: Sequence[SensorPlacement],
             field: FieldConfig) -> bool:
    """True iff every grid sample point is covered by at least one member."""
    members = set(members)
    by_id = {pl.node_id: pl for pl in placements}
    unknown = members - by_id.keys()
    if unknown:
        raise ValueError(f"members not deployed: {sorted(unknown)}")
    chosen = [by_id[m] for m in sorted(members)]
    grid = build_grid(field)
    if not chosen:
        return len(grid.points) == 0
    return bool(cover_matrix(chosen, grid).any(axis=1).all())


def compute_subregions(placements: Sequence[SensorPlacement],
                       field: FieldConfig) -> list[SubRegion]:
    """Partition the grid into maximal cells of identical covering sets.

    Non-empty covering sets are ordered lexicographically by their sorted
    member ids; the uncovered region always comes last.
    """
    grid = build_grid(field)
    pts = grid.points
    if not placements:
        return [SubRegion(region_id=0, covering_set=frozenset(),
                          sample_points=pts, area_estimate=len(pts) * grid.cell_area)]

    mat = cover_matrix(placements, grid)
    packed = np.packbits(mat, axis=1)
    labels, inverse = np.unique(packed, axis=0, return_inverse=True)

    groups: list[tuple[tuple[int, ...], np.ndarray]] = []
    uncovered_points = pts[:0]
    for lab in range(len(labels)):
        idx = np.flatnonzero(inverse == lab)
        bits = np.unpackbits(labels[lab])[: len(placements)]
        ids = tuple(placements[j].node_id for j in np.flatnonzero(bits))
        if ids:
            groups.append((tuple(sorted(ids)), pts[idx]))
        else:
            uncovered_points = pts[idx]
    groups.sort(key=lambda g: g[0])

    regions = [
        SubRegion(region_id=i, covering_set=frozenset(ids), sample_points=sample,
                  area_estimate=len(sample) * grid.cell_area)
        for i, (ids, sample) in enumerate(groups)
    ]
    regions.append(SubRegion(region_id=len(regions), covering_set=frozenset(),
                             sample_points=uncovered_points,
                             area_estimate=len(uncovered_points) * grid.cell_area))
    return regions


def coverage_areas(placements: Sequence[SensorPlacement], grid: Grid) -> dict[int, float]:
    """Per-sensor covered area inside the field (union of its subregions), m^2."""
    mat = cover_matrix(placements, grid)
    counts = mat.sum(axis=0)
    return {pl.node_id: float(counts[j]) * grid.cell_area
            for j, pl in enumerate(placements)}


def greedy_cover_sequence(placements: Sequence[SensorPlacement], field: FieldConfig,
                          residual_energies: Mapping[int, float],
                          per_round_cost: float) -> list[Cover]:
    """Schedule covers until energy runs out, spreading duty across sensors.

    Each cover is built by scanning uncovered sample points in row-major order
    and adding, per point, the covering candidate with maximal remaining
    energy (ties by lowest node id). A sensor is a candidate only while its
    remaining energy pays for per_round_cost; joining a cover charges it once.
    Returns an empty list when no cover exists at all.
    """
    if per_round_cost <= 0:
        raise ValueError("per_round_cost must be > 0")
    for nid, e in residual_energies.items():
        if e < 0:
            raise ValueError(f"negative residual energy for node {nid}")

    grid = build_grid(field)
    mat = cover_matrix(placements, grid)
    col = {pl.node_id: j for j, pl in enumerate(placements)}
    id_order = sorted(col)
    # integer rounds each sensor can still afford; the 1e-9 slack absorbs
    # float dust when residuals are exact multiples of the cost
    allowance = {nid: math.floor(
        residual_energies.get(nid, 0.0) / per_round_cost + 1e-9) for nid in col}
    remaining = {nid: residual_energies.get(nid, 0.0) for nid in col}

    covers: list[Cover] = []
    while True:
        members: list[int] = []
        covered = np.zeros(len(grid.points), dtype=bool)
        feasible = True
        for p in range(len(grid.points)):
            if covered[p]:
                continue
            best = None
            for nid in id_order:  # id order makes ties fall to the lowest id
                if mat[p, col[nid]] and allowance[nid] > 0:
                    if best is None or remaining[nid] > remaining[best]:
                        best = nid
            if best is None:
                feasible = False
                break
            members.append(best)
            covered |= mat[:, col[best]]
        if not feasible or not covered.all():
            break
        for nid in members:
            allowance[nid] -= 1
            remaining[nid] -= per_round_cost
        covers.append(Cover(members=frozenset(members), index=len(covers)))
    return covers
