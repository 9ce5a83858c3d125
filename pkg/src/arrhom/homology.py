"""First twisted homology of the complement via angles and chambers.

Generators are the angles at resonant points: at a point p with incident
lines l_1 < ... < l_k in slope order, the k angles are the arcs (l_i, l_{i+1})
of the pencil of directions at p, the last one wrapping through the vertical
direction.  Relations come in two families:

* two rows per resonant point, with coefficients 1 on every angle and with
  the partial products m(l_1)...m(l_i) on the angle (l_i, l_{i+1});
* one row per bounded chamber, with a monodromy factor on the unique angle
  the chamber subtends at each of its resonant vertices.

The first Betti number with coefficients in the local system is the number
of angles minus the rank of the stacked relation matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import rank, rank_float, to_complex_matrix
from .errors import (
    NotAdjacent,
    NotNormalized,
    NotResonant,
    UnboundedChamber,
)
from .geometry import (
    Arrangement,
    Basic,
    Chamber,
    NormalizationRecord,
    chambers,
    euler_characteristic,
    normalize,
    zaslavsky_bounded_count,
)
from .local_system import LocalSystem, ResonantSet, resonant_points

__all__ = [
    "Angle",
    "AngleBasis",
    "HomologyReport",
    "RelationRow",
    "angle_basis",
    "chamber_row",
    "h1",
    "lambda_coeff",
    "point_rows",
    "relation_matrix",
    "sector_sums",
    "subtended_angle",
]


@dataclass(frozen=True)
class Angle:
    """The arc between consecutive directions l_i, l_{i+1} at a resonant point.

    ``index`` runs from 1 to mult(p); the last index is the wrap-around arc
    through the vertical direction.
    """

    point_id: int
    index: int


class AngleBasis:
    """Deterministically ordered angles over all resonant points."""

    def __init__(self, arr: Arrangement, resonant: ResonantSet):
        if not arr.is_normalized:
            raise NotNormalized("angle basis needs a normalized arrangement")
        self.angles = []
        self._col = {}
        self._lines_at = {}
        for pid in resonant.point_ids:
            p = arr.points[pid]
            self._lines_at[pid] = p.line_ids  # already slope-sorted
            for i in range(1, p.multiplicity + 1):
                self._col[(pid, i)] = len(self.angles)
                self.angles.append(Angle(pid, i))

    @property
    def dim(self) -> int:
        return len(self.angles)

    def column(self, point_id: int, index: int) -> int:
        return self._col[(point_id, index)]

    def lines_at(self, point_id: int) -> tuple:
        return self._lines_at[point_id]

    def angle_lines(self, angle: Angle) -> tuple:
        """The ordered pair of lines bounding the angle."""
        lines = self._lines_at[angle.point_id]
        k = len(lines)
        return (lines[angle.index - 1], lines[angle.index % k])


def angle_basis(arr: Arrangement, resonant: ResonantSet) -> AngleBasis:
    return AngleBasis(arr, resonant)


@dataclass(frozen=True)
class RelationRow:
    """A sparse relation supported on the angle basis."""

    kind: str  # "point+", "point-" or "chamber"
    label: int  # point id or chamber id
    coeffs: dict = field(compare=False)

    def dense(self, basis: AngleBasis, zero):
        row = [zero] * basis.dim
        for col, val in self.coeffs.items():
            row[col] = val
        return row

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


def point_rows(arr: Arrangement, system: LocalSystem, basis: AngleBasis, point_id: int):
    """The two kernel generators attached to one resonant point."""
    p = arr.points[point_id]
    if not system.is_resonant_at(p):
        raise NotResonant(f"point {point_id} is not resonant")
    lines = p.line_ids
    k = len(lines)
    one = system.one()
    plus = {basis.column(point_id, i): one for i in range(1, k + 1)}
    minus = {}
    acc = one
    for i in range(1, k + 1):
        acc = acc * system.m(lines[i - 1])
        minus[basis.column(point_id, i)] = acc
    if system.is_exact:
        assert acc == one  # resonance: the full product is 1
    return (
        RelationRow("point+", point_id, plus),
        RelationRow("point-", point_id, minus),
    )


def _interior_offset(arr: Arrangement, point, chamber: Chamber):
    """An interior point of the chamber, as an offset from the given vertex.

    For bounded chambers the centroid is tried first; if it is vertically
    aligned with the vertex, midpoints of the centroid with boundary-edge
    midpoints are tried in boundary order.  The slab-derived interior point
    is used for unbounded chambers; its abscissa never matches a vertex.
    """
    px, py = point.x, point.y
    cand = [chamber.sample_point]
    if chamber.bounded:
        verts = [arr.points[v] for v in chamber.vertex_ids]
        cx, cy = chamber.sample_point
        for a, b in zip(verts, verts[1:] + verts[:1]):
            ex, ey = (a.x + b.x) / 2, (a.y + b.y) / 2
            cand.append(((cx + ex) / 2, (cy + ey) / 2))
    else:
        cand.append(chamber.interior_point)
    for sx, sy in cand:
        if sx != px:
            return (sx - px, sy - py)
    raise NotAdjacent("no interior sample off the vertical through the vertex")


def lambda_coeff(arr: Arrangement, system: LocalSystem, point_id: int, chamber: Chamber):
    """Monodromy correction factor of a chamber at one of its vertices.

    For an interior offset (x0, y0) with x0 > 0 the factor is 1; for x0 < 0
    it is the product of m(l) over the incident lines with s(l)*x0 > y0.
    The value does not depend on the chosen interior point.
    """
    if point_id not in chamber.vertex_ids:
        raise NotAdjacent(f"chamber {chamber.index} has no vertex {point_id}")
    p = arr.points[point_id]
    x0, y0 = _interior_offset(arr, p, chamber)
    if x0 > 0:
        return system.one()
    out = system.one()
    for i in p.line_ids:
        if arr.lines[i].slope * x0 > y0:
            out = out * system.m(i)
    return out


def subtended_angle(arr: Arrangement, basis: AngleBasis, point_id: int, chamber: Chamber) -> Angle:
    """The unique angle at the point spanned by directions into the chamber."""
    if point_id not in chamber.vertex_ids:
        raise NotAdjacent(f"chamber {chamber.index} has no vertex {point_id}")
    p = arr.points[point_id]
    x0, y0 = _interior_offset(arr, p, chamber)
    mu = y0 / x0
    lines = basis.lines_at(point_id)
    slopes = [arr.lines[i].slope for i in lines]
    k = len(slopes)
    if mu < slopes[0] or mu > slopes[-1]:
        return Angle(point_id, k)
    for i in range(k - 1):
        if slopes[i] < mu < slopes[i + 1]:
            return Angle(point_id, i + 1)
    raise NotAdjacent("interior direction lies on an incident line")


def chamber_row(
    arr: Arrangement,
    system: LocalSystem,
    basis: AngleBasis,
    resonant: ResonantSet,
    chamber: Chamber,
) -> RelationRow:
    """The relation contributed by one bounded chamber."""
    if not chamber.bounded:
        raise UnboundedChamber(f"chamber {chamber.index} is unbounded")
    coeffs = {}
    for pid in chamber.vertex_ids:
        if pid not in resonant:
            continue
        ang = subtended_angle(arr, basis, pid, chamber)
        coeffs[basis.column(pid, ang.index)] = lambda_coeff(arr, system, pid, chamber)
    return RelationRow("chamber", chamber.index, coeffs)


def relation_matrix(arr: Arrangement, system: LocalSystem, seed=None):
    """Angle basis and the full relation row list of a normalized arrangement.

    Rows are ordered point rows first (plus then minus, by point id), then
    bounded chamber rows by chamber id.  Zero chamber rows are retained so
    the row census matches the chamber census.
    """
    if not arr.is_normalized:
        raise NotNormalized("relation matrix needs a normalized arrangement")
    resonant = resonant_points(arr, system)
    basis = angle_basis(arr, resonant)
    rows = []
    for pid in resonant.point_ids:
        plus, minus = point_rows(arr, system, basis, pid)
        rows.append(plus)
        rows.append(minus)
    for ch in chambers(arr):
        if ch.bounded:
            rows.append(chamber_row(arr, system, basis, resonant, ch))
    return basis, rows


@dataclass
class HomologyReport:
    """Outcome of the angle/chamber computation for one local system."""

    dim_A: int
    num_rows: int
    num_point_rows: int
    num_chamber_rows: int
    zero_chamber_rows: tuple
    rank_K: int
    h1: int
    euler: int
    h2: int
    zaslavsky_ok: bool
    float_agrees: bool
    record: NormalizationRecord
    arrangement: Arrangement = field(repr=False)
    basis: AngleBasis = field(repr=False)
    rows: list = field(repr=False)


def h1(arr: Arrangement, system: LocalSystem, seed: int = 0, float_check: bool = True) -> HomologyReport:
    """Normalize, assemble the relation matrix and report dim A - rank K."""
    system.require_admissible(arr)
    if arr.n < 2:
        raise ValueError("need an arrangement of at least 2 lines")
    narr, record = normalize(arr, Basic(), seed)
    basis, rows = relation_matrix(narr, system)
    zero = system.one() - system.one()
    dense = [r.dense(basis, zero) for r in rows]
    rank_K = rank(dense) if basis.dim else 0
    betti = basis.dim - rank_K
    bounded = [c for c in chambers(narr) if c.bounded]
    zas_ok = len(bounded) == zaslavsky_bounded_count(narr)
    agrees = True
    if float_check and system.is_exact and basis.dim:
        agrees = rank_float(to_complex_matrix(dense)) == rank_K
    e = euler_characteristic(narr)
    return HomologyReport(
        dim_A=basis.dim,
        num_rows=len(rows),
        num_point_rows=sum(1 for r in rows if r.kind != "chamber"),
        num_chamber_rows=sum(1 for r in rows if r.kind == "chamber"),
        zero_chamber_rows=tuple(r.label for r in rows if r.kind == "chamber" and r.is_zero),
        rank_K=rank_K,
        h1=betti,
        euler=e,
        h2=e + betti,
        zaslavsky_ok=zas_ok,
        float_agrees=agrees,
        record=record,
        arrangement=narr,
        basis=basis,
        rows=rows,
    )


def sector_sums(arr: Arrangement, system: LocalSystem, resonant: ResonantSet, basis: AngleBasis):
    """Per-point sums of lambda-weighted angles over the two sides of the
    slope-minimal incident line, over *all* adjacent chambers.

    Returns a dict point id -> (sum over the positive side, sum over the
    negative side), each as a column -> coefficient dict.  The positive-side
    sum must reproduce the all-ones point row and the negative-side sum the
    partial-product row.
    """
    all_chambers = chambers(arr)
    out = {}
    for pid in resonant.point_ids:
        l1 = basis.lines_at(pid)[0]
        plus, minus = {}, {}
        for ch in all_chambers:
            if pid not in ch.vertex_ids:
                continue
            ang = subtended_angle(arr, basis, pid, ch)
            lam = lambda_coeff(arr, system, pid, ch)
            side = plus if ch.signs[l1] > 0 else minus
            col = basis.column(pid, ang.index)
            side[col] = side.get(col, system.one() - system.one()) + lam
        out[pid] = (plus, minus)
    return out
