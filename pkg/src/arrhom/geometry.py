"""Real-figure combinatorics of line arrangements.

Lines live in the real projective plane and are stored as primitive integer
covectors (a, b, c) for a*x + b*y + c*z = 0.  Intersection points are exact
projective points; an arrangement is *normalized* when every line has a
finite slope, slopes are pairwise distinct and every intersection point is
affine.  Normalization is a seeded search over rational projective maps with
full verification of the target assumption profile, so failures are loud and
reproducible rather than silent.

Chambers of a normalized arrangement are enumerated by an exact vertical
decomposition: intersection abscissas split the plane into slabs, the lines
are totally ordered inside each slab, and trapezoids are glued across slab
walls whenever their open wall intervals overlap.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

from .errors import DuplicateLine, NormalizationFailed, NotNormalized

__all__ = [
    "Arrangement",
    "Basic",
    "Chamber",
    "IntersectionPoint",
    "Line",
    "NormalizationRecord",
    "SharpPairAdapted",
    "chambers",
    "euler_characteristic",
    "incidence_signature",
    "intersections",
    "mat_identity",
    "mat_inverse",
    "mat_mul",
    "normalize",
    "sharp_pairs",
    "transform",
    "zaslavsky_bounded_count",
]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _canonical_triple(a, b, c):
    """Scale a rational triple to a primitive integer one, first nonzero > 0."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == b == c == 0:
        raise ValueError("zero triple")
    denom = 1
    for q in (a, b, c):
        denom = denom * q.denominator // gcd(denom, q.denominator)
    ia, ib, ic = int(a * denom), int(b * denom), int(c * denom)
    g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
    ia, ib, ic = ia // g, ib // g, ic // g
    lead = ia if ia else (ib if ib else ic)
    if lead < 0:
        ia, ib, ic = -ia, -ib, -ic
    return (ia, ib, ic)


@dataclass(frozen=True)
class Line:
    """A real projective line a*x + b*y + c*z = 0 with rational coefficients."""

    a: int
    b: int
    c: int

    @classmethod
    def from_coeffs(cls, a, b, c) -> "Line":
        return cls(*_canonical_triple(a, b, c))

    @classmethod
    def from_slope_intercept(cls, s, b0) -> "Line":
        # y = s*x + b0  <=>  -s*x + y - b0 = 0
        return cls.from_coeffs(-Fraction(s), 1, -Fraction(b0))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    @property
    def slope(self) -> Fraction:
        if self.b == 0:
            raise ValueError("vertical line has no finite slope")
        return Fraction(-self.a, self.b)

    @property
    def intercept(self) -> Fraction:
        if self.b == 0:
            raise ValueError("vertical line has no intercept")
        return Fraction(-self.c, self.b)

    def q(self, x, y) -> Fraction:
        """The defining form y - slope*x - intercept (non-vertical lines)."""
        return Fraction(y) - self.slope * Fraction(x) - self.intercept

    def hom_eval(self, X, Y, Z) -> Fraction:
        return self.a * Fraction(X) + self.b * Fraction(Y) + self.c * Fraction(Z)

    def __repr__(self):
        return f"Line({self.a}x{self.b:+}y{self.c:+}z=0)"


@dataclass(frozen=True)
class IntersectionPoint:
    """A point of the intersection set, as a primitive projective triple."""

    index: int
    coords: tuple  # (X, Y, Z) primitive integers, first nonzero positive
    line_ids: tuple  # incident lines; slope-sorted when the arrangement is normalized

    @property
    def is_infinite(self) -> bool:
        return self.coords[2] == 0

    @property
    def x(self) -> Fraction:
        return Fraction(self.coords[0], self.coords[2])

    @property
    def y(self) -> Fraction:
        return Fraction(self.coords[1], self.coords[2])

    @property
    def multiplicity(self) -> int:
        return len(self.line_ids)


def _cross(l1: Line, l2: Line):
    X = l1.b * l2.c - l1.c * l2.b
    Y = l1.c * l2.a - l1.a * l2.c
    Z = l1.a * l2.b - l1.b * l2.a
    return (X, Y, Z)


def intersections(lines) -> list:
    """All pairwise intersection points with coincidences merged.

    Points are exact projective points; parallel lines meet at infinity.
    """
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLine("arrangement lines must be pairwise distinct")
    groups = {}
    for i, j in itertools.combinations(range(len(lines)), 2):
        key = _canonical_triple(*_cross(lines[i], lines[j]))
        groups.setdefault(key, set()).update((i, j))
    def sort_key(item):
        (X, Y, Z), _ = item
        if Z != 0:
            return (0, Fraction(X, Z), Fraction(Y, Z))
        return (1, Fraction(X), Fraction(Y))
    out = []
    for idx, (coords, ids) in enumerate(sorted(groups.items(), key=sort_key)):
        out.append(IntersectionPoint(idx, coords, tuple(sorted(ids))))
    return out


class Arrangement:
    """An ordered list of distinct lines with derived intersection data."""

    def __init__(self, lines):
        lines = tuple(lines)
        if len(set(lines)) != len(lines):
            raise DuplicateLine("arrangement lines must be pairwise distinct")
        if not lines:
            raise ValueError("arrangement needs at least one line")
        self.lines = lines
        self._points = None
        self._normalized = None

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def points(self):
        if self._points is None:
            pts = intersections(self.lines)
            if self._compute_normalized(pts):
                pts = [
                    IntersectionPoint(
                        p.index,
                        p.coords,
                        tuple(sorted(p.line_ids, key=lambda i: self.lines[i].slope)),
                    )
                    for p in pts
                ]
            self._points = pts
        return self._points

    def _compute_normalized(self, pts) -> bool:
        if self._normalized is None:
            ok = all(not l.is_vertical for l in self.lines)
            if ok:
                slopes = [l.slope for l in self.lines]
                ok = len(set(slopes)) == len(slopes)
            if ok:
                ok = all(not p.is_infinite for p in pts)
            self._normalized = ok
        return self._normalized

    @property
    def is_normalized(self) -> bool:
        self.points  # forces the cached computation
        return self._normalized

    def points_on_line(self, line_id: int):
        return [p for p in self.points if line_id in p.line_ids]

    def __repr__(self):
        return f"Arrangement({self.n} lines, {len(self.points)} points)"


def incidence_signature(arr: Arrangement):
    """Canonical incidence poset: a sorted tuple of sorted line-id tuples."""
    return tuple(sorted(tuple(sorted(p.line_ids)) for p in arr.points))


def euler_characteristic(arr: Arrangement) -> int:
    """Topological Euler characteristic of the complex projective complement."""
    n = arr.n
    return 3 - 2 * n + sum(p.multiplicity - 1 for p in arr.points)


def zaslavsky_bounded_count(arr: Arrangement) -> int:
    """Bounded-region count of the affine figure from intersection data."""
    if not arr.is_normalized:
        raise NotNormalized("Zaslavsky count needs a normalized arrangement")
    return sum(p.multiplicity - 1 for p in arr.points) - arr.n + 1


# ---------------------------------------------------------------------------
# projective transformations (3x3 rational matrices acting on points)


def mat_identity():
    return tuple(tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3))


def mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_det(A):
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def mat_inverse(A):
    d = mat_det(A)
    if d == 0:
        raise ValueError("singular transformation")
    cof = [
        [
            (A[(i + 1) % 3][(j + 1) % 3] * A[(i + 2) % 3][(j + 2) % 3]
             - A[(i + 1) % 3][(j + 2) % 3] * A[(i + 2) % 3][(j + 1) % 3])
            for i in range(3)
        ]
        for j in range(3)
    ]
    return tuple(tuple(Fraction(cof[i][j], 1) / d for j in range(3)) for i in range(3))


def mat_apply_point(A, P):
    return tuple(sum(A[i][k] * Fraction(P[k]) for k in range(3)) for i in range(3))


def transform_line(line: Line, M_inv) -> Line:
    row = [
        line.a * M_inv[0][j] + line.b * M_inv[1][j] + line.c * M_inv[2][j]
        for j in range(3)
    ]
    return Line.from_coeffs(*row)


def transform(arr: Arrangement, M) -> Arrangement:
    """Apply the point map v -> M v; line covectors map by M^{-1} on the right."""
    M_inv = mat_inverse(M)
    return Arrangement(transform_line(l, M_inv) for l in arr.lines)


# ---------------------------------------------------------------------------
# normalization profiles


@dataclass(frozen=True)
class Basic:
    """Target: all intersection points affine, slopes distinct and finite."""


@dataclass(frozen=True)
class SharpPairAdapted:
    """Half-plane adapted frame along ``l0``.

    With only ``l0`` given, the target is: l0 = {y = 0}, all other slopes
    distinct positive, every intersection point has y >= 0 (the chosen line
    at infinity forms a sharp pair with l0 in the extended arrangement).
    With ``l0_prime`` given as well, additionally l0' = {y = x}, slopes lie
    in [0, 1] and every point satisfies x <= 0, y = 0 or x >= y > 0.
    """

    l0: int
    l0_prime: int | None = None


@dataclass(frozen=True)
class NormalizationRecord:
    """The exact projective map applied by :func:`normalize`."""

    matrix: tuple  # 3x3 Fractions, acting on points
    seed: int
    profile: str

    @property
    def l_inf(self) -> Line:
        """The input-coordinates line sent to infinity."""
        return Line.from_coeffs(*self.matrix[2])

    def apply(self, arr: Arrangement) -> Arrangement:
        return transform(arr, self.matrix)

    def inverse_matrix(self):
        return mat_inverse(self.matrix)


def _is_basic(arr: Arrangement) -> bool:
    return arr.is_normalized


def _line_through_point(line: Line, coords) -> bool:
    return line.hom_eval(*coords) == 0


def _shear_x(t):
    # x -> x + t*y
    return (
        (Fraction(1), Fraction(t), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    )


def _shear_to_x_axis(s, b0):
    # y -> y - s*x - b0, mapping the line y = s*x + b0 onto y = 0
    return (
        (Fraction(1), Fraction(0), Fraction(0)),
        (-Fraction(s), Fraction(1), -Fraction(b0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    )


def _normalize_basic(arr: Arrangement, rng: random.Random, retries: int = 64):
    if _is_basic(arr):
        return arr, mat_identity()
    pts = arr.points
    has_infinite = any(p.is_infinite for p in pts)
    for attempt in range(retries):
        if not has_infinite:
            M1 = mat_identity()
        else:
            bound = 3 + attempt
            u, v = rng.randint(-bound, bound), rng.randint(-bound, bound)
            w = Line.from_coeffs(u, v, 1)
            if any(_line_through_point(w, p.coords) for p in pts):
                continue
            if w in arr.lines:
                continue
            M1 = (
                (Fraction(1), Fraction(0), Fraction(0)),
                (Fraction(0), Fraction(1), Fraction(0)),
                (Fraction(u), Fraction(v), Fraction(1)),
            )
        arr1 = transform(arr, M1)
        for t_try in range(6):
            if t_try == 0:
                t = Fraction(0)
            else:
                t = Fraction(rng.randint(1, 8 * t_try), rng.randint(1, 5)) * rng.choice((1, -1))
            M = mat_mul(_shear_x(t), M1)
            cand = transform(arr, M)
            if _is_basic(cand):
                return cand, M
    raise NormalizationFailed(
        f"basic normalization failed after {retries} attempts", seed=None
    )


def _pair_component_labels(arr: Arrangement, li: Line, lj: Line, extra_points=()):
    """Signs of li*lj over intersection points off both lines.

    The product sign is projectively well-defined and labels the two
    components of the real projective plane minus the two lines.
    """
    labels = set()
    for coords in [p.coords for p in arr.points] + list(extra_points):
        vi = li.hom_eval(*coords)
        vj = lj.hom_eval(*coords)
        if vi == 0 or vj == 0:
            continue
        labels.add(_sign(vi * vj))
    return labels


def sharp_pairs(arr: Arrangement) -> list:
    """All unordered line pairs with an empty complement component.

    A pair is sharp when one of the two components of the projective plane
    minus the two lines contains no intersection point of the arrangement.
    """
    out = []
    for i, j in itertools.combinations(range(arr.n), 2):
        labels = _pair_component_labels(arr, arr.lines[i], arr.lines[j])
        if len(labels) < 2:
            out.append((i, j))
    return out


def _adapted_single(arr: Arrangement, l0: int, rng: random.Random):
    """Frame with l0 = {y=0}, slopes distinct positive, all points above.

    Always constructible: a line parallel to l0, closer to it than any
    intersection point off l0, is sent to infinity; both half-planes next to
    l0 are empty strips, so the far side ends up without points.
    """
    arr1, M1 = _normalize_basic(arr, rng)
    line0 = arr1.lines[l0]
    M2 = mat_mul(_shear_to_x_axis(line0.slope, line0.intercept), M1)
    arr2 = transform(arr, M2)
    off = [abs(p.y) for p in arr2.points if p.y != 0]
    eps = min(off) / 2 if off else Fraction(1)
    # send the line y = -eps to infinity
    M3 = mat_mul(
        (
            (Fraction(1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1), Fraction(eps)),
        ),
        M2,
    )
    arr3 = transform(arr, M3)
    # make every slope other than l0's positive: on u = 1/slope the available
    # shears act as u -> u + beta, and verticals sit at u = 0
    us = []
    for i, l in enumerate(arr3.lines):
        if i == l0:
            continue
        if l.a == 0:
            raise NormalizationFailed("unexpected line parallel to the base line")
        us.append(Fraction(-l.b, l.a))
    beta = Fraction(0)
    if us and min(us) <= 0:
        beta = 1 - min(us)
    M4 = mat_mul(_shear_x(beta), M3)
    out = transform(arr, M4)
    _verify_adapted_single(out, l0)
    return out, M4


def _verify_adapted_single(arr: Arrangement, l0: int):
    line0 = arr.lines[l0]
    if (line0.a, line0.b, line0.c) != (0, 1, 0):
        raise NormalizationFailed("base line did not land on y = 0")
    slopes = []
    for i, l in enumerate(arr.lines):
        if l.is_vertical:
            raise NormalizationFailed("vertical line in adapted frame")
        slopes.append(l.slope)
        if i != l0 and l.slope <= 0:
            raise NormalizationFailed("non-positive slope in adapted frame")
    if len(set(slopes)) != len(slopes):
        raise NormalizationFailed("slope collision in adapted frame")
    for p in arr.points:
        if p.is_infinite or p.y < 0:
            raise NormalizationFailed("intersection point below the base line")


def _occupied_piece_labels(arr: Arrangement, l0: Line, l0p: Line, linf: Line, occ_label: int):
    """Labels separating the occupied component cut by the infinity candidate."""
    taus = set()
    for p in arr.points:
        v0 = l0.hom_eval(*p.coords)
        vp = l0p.hom_eval(*p.coords)
        if v0 == 0 or vp == 0:
            continue
        if _sign(v0 * vp) != occ_label:
            continue
        vi = linf.hom_eval(*p.coords)
        if vi == 0:
            return None  # candidate passes through a point
        taus.add(_sign(v0 * vi))
    return taus


def _adapted_pair(arr: Arrangement, l0: int, l0p: int, rng: random.Random, retries: int = 64):
    """Frame with l0 = {y=0}, l0' = {y=x}, slopes in [0,1], points in the wedge."""
    arr1, M1 = _normalize_basic(arr, rng)
    line0 = arr1.lines[l0]
    M2 = mat_mul(_shear_to_x_axis(line0.slope, line0.intercept), M1)
    arr2 = transform(arr, M2)
    labels = _pair_component_labels(arr2, arr2.lines[l0], arr2.lines[l0p])
    if len(labels) > 1:
        raise NormalizationFailed("the given pair of lines is not sharp")
    occ_label = labels.pop() if labels else 1
    p0 = _cross(arr2.lines[l0], arr2.lines[l0p])
    x0 = Fraction(p0[0], p0[2])
    on_l0 = sorted(
        p.x for p in arr2.points if l0 in p.line_ids and p.coords != _canonical_triple(*p0)
    )
    # pivot abscissas for the infinity candidate, adjacent to p0 on l0
    cands = []
    right = [x for x in on_l0 if x > x0]
    left = [x for x in on_l0 if x < x0]
    cands.append((x0 + right[0]) / 2 if right else x0 + 1)
    cands.append((x0 + left[-1]) / 2 if left else x0 - 1)
    etas = [Fraction(1, k) for k in (2, 8, 64, 512)]
    attempt = 0
    for c in cands:
        for eta_mag in etas:
            for eta in (eta_mag, -eta_mag):
                attempt += 1
                if attempt > retries:
                    raise NormalizationFailed(
                        "sharp-pair normalization exhausted its retry budget"
                    )
                linf = Line.from_coeffs(-eta, 1, eta * c)  # y = eta*(x - c)
                M = _try_pair_frame(arr, arr2, M2, l0, l0p, linf, occ_label)
                if M is not None:
                    out = transform(arr, M)
                    _verify_adapted_pair(out, l0, l0p)
                    return out, M
    raise NormalizationFailed("sharp-pair normalization found no admissible frame")


def _try_pair_frame(arr, arr2, M2, l0, l0p, linf, occ_label):
    li0, lip = arr2.lines[l0], arr2.lines[l0p]
    if linf in arr2.lines:
        return None
    if any(_line_through_point(linf, p.coords) for p in arr2.points):
        return None
    # (l0, linf) must be sharp in the extended arrangement
    if len(_pair_component_labels(arr2, li0, linf)) > 1:
        return None
    # (l0, l0') must stay sharp once the crossings with linf are added
    crossings = [_cross(l, linf) for i, l in enumerate(arr2.lines) if i not in (l0, l0p)]
    if len(_pair_component_labels(arr2, li0, lip, extra_points=crossings)) > 1:
        return None
    # points in the occupied component must not be separated by linf
    taus = _occupied_piece_labels(arr2, li0, lip, linf, occ_label)
    if taus is None or len(taus) > 1:
        return None
    # triangle map: (l0, l0', linf) -> (y=0, y=x, z=0)
    L = (
        tuple(Fraction(v) for v in (li0.a, li0.b, li0.c)),
        tuple(Fraction(v) for v in (lip.a, lip.b, lip.c)),
        tuple(Fraction(v) for v in (linf.a, linf.b, linf.c)),
    )
    E = (
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(-1), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    )
    if mat_det(L) == 0:
        return None
    T1 = mat_mul(mat_inverse(E), L)
    base = mat_mul(T1, M2)
    # leftover stabilizer freedom of the fixed triangle: phi_t swaps the two
    # slope arcs between 0 and 1, psi_u reflects the affine picture through
    # the origin; try the four sign combinations and keep a verified one
    for t in (1, -1):
        phi = (
            (Fraction(1), Fraction(t - 1), Fraction(0)),
            (Fraction(0), Fraction(t), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1)),
        )
        for u in (1, -1):
            psi = (
                (Fraction(u), Fraction(0), Fraction(0)),
                (Fraction(0), Fraction(u), Fraction(0)),
                (Fraction(0), Fraction(0), Fraction(1)),
            )
            M = mat_mul(psi, mat_mul(phi, base))
            try:
                _verify_adapted_pair(transform(arr, M), l0, l0p)
            except NormalizationFailed:
                continue
            return M
    return None


def _verify_adapted_pair(arr: Arrangement, l0: int, l0p: int):
    if (arr.lines[l0].a, arr.lines[l0].b, arr.lines[l0].c) != (0, 1, 0):
        raise NormalizationFailed("base line did not land on y = 0")
    if (arr.lines[l0p].a, arr.lines[l0p].b, arr.lines[l0p].c) != (1, -1, 0):
        raise NormalizationFailed("second line did not land on y = x")
    slopes = []
    for l in arr.lines:
        if l.is_vertical:
            raise NormalizationFailed("vertical line in sharp-pair frame")
        s = l.slope
        if s < 0 or s > 1:
            raise NormalizationFailed("slope outside [0, 1] in sharp-pair frame")
        slopes.append(s)
    if len(set(slopes)) != len(slopes):
        raise NormalizationFailed("slope collision in sharp-pair frame")
    for p in arr.points:
        if p.is_infinite:
            raise NormalizationFailed("intersection point at infinity")
        if p.y == 0:
            if p.x > 0:
                raise NormalizationFailed("point on the base line with x > 0")
        elif not (p.x >= p.y > 0):
            raise NormalizationFailed("point outside the admissible wedge")


def normalize(arr: Arrangement, profile=Basic(), seed: int = 0):
    """Return an equivalent arrangement satisfying the requested profile.

    The returned record holds the exact 3x3 rational point map, the seed and
    the profile, and allows exact inverse mapping.  Incidences are preserved;
    line indices are unchanged.
    """
    rng = random.Random(seed)
    if isinstance(profile, Basic):
        out, M = _normalize_basic(arr, rng)
        name = "basic"
    elif isinstance(profile, SharpPairAdapted):
        if profile.l0_prime is None:
            out, M = _adapted_single(arr, profile.l0, rng)
            name = f"adapted(l0={profile.l0})"
        else:
            out, M = _adapted_pair(arr, profile.l0, profile.l0_prime, rng)
            name = f"adapted(l0={profile.l0},l0'={profile.l0_prime})"
    else:
        raise TypeError(f"unknown profile {profile!r}")
    if incidence_signature(out) != incidence_signature(arr):
        raise NormalizationFailed("normalization changed the incidence poset")
    return out, NormalizationRecord(M, seed, name)


# ---------------------------------------------------------------------------
# chamber enumeration


@dataclass(frozen=True)
class Chamber:
    """A connected component of the real plane minus the lines.

    ``signs`` records the side of every line; ``sample_point`` is the polygon
    centroid for bounded chambers and an interior slab point otherwise;
    ``interior_point`` is always a slab point, whose abscissa never coincides
    with a vertex abscissa.  ``vertex_ids`` are in counterclockwise boundary
    order for bounded chambers.
    """

    index: int
    signs: tuple
    bounded: bool
    sample_point: tuple
    interior_point: tuple
    vertex_ids: tuple
    edge_count: int


class _DSU:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = p = self.parent[p]
            x = p
            p = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _interval_overlap(lo1, hi1, lo2, hi2):
    lo = lo1 if (lo2 is None or (lo1 is not None and lo1 >= lo2)) else lo2
    hi = hi1 if (hi2 is None or (hi1 is not None and hi1 <= hi2)) else hi2
    if lo is None or hi is None:
        return True
    return lo < hi


def _ccw_sorted(vertices, centroid):
    cx, cy = centroid

    def half(v):
        dx, dy = v[0] - cx, v[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(u, v):
        hu, hv = half(u[1]), half(v[1])
        if hu != hv:
            return -1 if hu < hv else 1
        ux, uy = u[1][0] - cx, u[1][1] - cy
        vx, vy = v[1][0] - cx, v[1][1] - cy
        cr = ux * vy - uy * vx
        return 0 if cr == 0 else (-1 if cr > 0 else 1)

    return [v[0] for v in sorted(vertices, key=cmp_to_key(cmp))]


def chambers(arr: Arrangement) -> list:
    """All chambers of the affine real figure of a normalized arrangement."""
    if not arr.is_normalized:
        raise NotNormalized("chamber enumeration needs a normalized arrangement")
    n = arr.n
    lines = arr.lines
    pts = arr.points
    xs = sorted({p.x for p in pts})
    if xs:
        samples = [xs[0] - 1]
        samples += [(xs[i] + xs[i + 1]) / 2 for i in range(len(xs) - 1)]
        samples += [xs[-1] + 1]
    else:
        samples = [Fraction(0)]
    nslabs = len(samples)

    def y_at(i, x):
        return lines[i].slope * x + lines[i].intercept

    orders = []
    for sx in samples:
        order = sorted(range(n), key=lambda i: y_at(i, sx))
        orders.append(order)

    dsu = _DSU()
    for s in range(nslabs):
        for g in range(n + 1):
            dsu.find((s, g))
    for w in range(1, nslabs):
        xw = xs[w - 1]
        lv = [y_at(i, xw) for i in orders[w - 1]]
        rv = [y_at(i, xw) for i in orders[w]]
        for gl in range(n + 1):
            lo1 = lv[gl - 1] if gl > 0 else None
            hi1 = lv[gl] if gl < n else None
            if lo1 is not None and hi1 is not None and lo1 >= hi1:
                continue
            for gr in range(n + 1):
                lo2 = rv[gr - 1] if gr > 0 else None
                hi2 = rv[gr] if gr < n else None
                if lo2 is not None and hi2 is not None and lo2 >= hi2:
                    continue
                if _interval_overlap(lo1, hi1, lo2, hi2):
                    dsu.union((w - 1, gl), (w, gr))

    classes = {}
    for s in range(nslabs):
        for g in range(n + 1):
            classes.setdefault(dsu.find((s, g)), []).append((s, g))

    chamber_list = []
    sign_lookup = {}
    for traps in sorted(classes.values(), key=min):
        idx = len(chamber_list)
        bounded = all(0 < s < nslabs - 1 and 0 < g < n for s, g in traps)
        s0, g0 = min(traps)
        sx = samples[s0]
        order = orders[s0]
        if g0 == 0:
            sy = y_at(order[0], sx) - 1
        elif g0 == n:
            sy = y_at(order[-1], sx) + 1
        else:
            sy = (y_at(order[g0 - 1], sx) + y_at(order[g0], sx)) / 2
        interior = (sx, sy)
        signs = tuple(_sign(lines[i].q(sx, sy)) for i in range(n))
        verts = [
            p for p in pts
            if all(signs[i] * lines[i].q(p.x, p.y) >= 0 for i in range(n))
        ]
        if bounded:
            cx = sum(p.x for p in verts) / len(verts)
            cy = sum(p.y for p in verts) / len(verts)
            vertex_ids = tuple(_ccw_sorted([(p.index, (p.x, p.y)) for p in verts], (cx, cy)))
            sample = (cx, cy)
        else:
            vertex_ids = tuple(sorted(p.index for p in verts))
            sample = interior
        chamber_list.append([idx, signs, bounded, sample, interior, vertex_ids, 0])
        sign_lookup[signs] = idx

    # edge incidence pass: each segment or ray touches exactly two chambers
    if n >= 2:
        for i in range(n):
            on_line = sorted(arr.points_on_line(i), key=lambda p: p.x)
            reps = []
            if on_line:
                reps.append((on_line[0].x - 1, None))
                for a, b in zip(on_line, on_line[1:]):
                    reps.append(((a.x + b.x) / 2, None))
                reps.append((on_line[-1].x + 1, None))
            for rx, _ in reps:
                ry = y_at(i, rx)
                base = [_sign(lines[j].q(rx, ry)) for j in range(n)]
                for side in (1, -1):
                    base[i] = side
                    cid = sign_lookup[tuple(base)]
                    chamber_list[cid][6] += 1
    else:
        for c in chamber_list:
            c[6] = 1

    return [Chamber(*c[:6], c[6]) for c in chamber_list]
