"""Combinatorial upper bounds on the twisted first Betti number.

Two bounds are computed per base line l0: the sum of mult(p) - 2 over the
resonant points on l0, and max(0, #R0 - 1) where R0 is that resonant set
(the latter requires more than one intersection point).

The second bound is certified constructively: in an adapted frame where l0
is the x-axis and every intersection point lies on or above it, each line
through a resonant point of l0 has a lowest intersection point off l0 (its
*neighbor*).  Every neighbor q yields an explicit kernel vector beta(q) in
the span of the partial-sum generators alpha(l); the certificate checks
exact membership of each beta(q) in the row space of the relation matrix
(rank stability under appending) and exact linear independence of the
family, giving dim(A'/K cap A') <= #A' - #N <= #R0 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import rank
from .errors import PencilNotCovered
from .geometry import Arrangement, SharpPairAdapted, normalize, sharp_pairs
from .homology import angle_basis, h1, relation_matrix
from .local_system import LocalSystem, resonant_points

__all__ = [
    "BetaCertificate",
    "SharpPairReport",
    "beta_certificate",
    "cdo_bound",
    "r0_bound",
    "sharp_pair_report",
]


def cdo_bound(arr: Arrangement, system: LocalSystem, l0: int) -> int:
    """Sum of (mult(p) - 2) over resonant points on the base line."""
    res = resonant_points(arr, system)
    return sum(arr.points[pid].multiplicity - 2 for pid in res.on_line(l0))


def r0_bound(arr: Arrangement, system: LocalSystem, l0: int) -> int:
    """max(0, #R0 - 1); undefined for pencils."""
    if len(arr.points) <= 1:
        raise PencilNotCovered("the resonant-count bound needs more than one point")
    res = resonant_points(arr, system)
    return max(0, len(res.on_line(l0)) - 1)


@dataclass
class BetaCertificate:
    """Constructive evidence for the max(0, #R0 - 1) bound along one line."""

    l0: int
    record: object
    n_r0: int
    n_a_prime: int
    neighbors: dict  # line id -> neighbor point id (in the adapted frame)
    betas: list  # (point id, resonant flag, column -> coefficient)
    extra_members: list  # consecutive differences at non-resonant neighbors
    all_in_kernel: bool
    family_rank: int
    independent: bool
    counting_ok: bool  # #N >= #A' - #R0 + 1
    bound_value: int  # #A' - #N, an upper bound for dim(A'/K cap A')

    @property
    def ok(self) -> bool:
        return self.all_in_kernel and self.independent and self.counting_ok


def _alpha_line_vector(basis, point_id, a_prime_sorted, line_id, one):
    """Partial angle sum attached to a line through a resonant base point."""
    i = a_prime_sorted.index(line_id) + 1
    return {basis.column(point_id, j): one for j in range(1, i + 1)}


def _vec_add(acc, vec, scale):
    for col, val in vec.items():
        cur = acc.get(col)
        acc[col] = val * scale if cur is None else cur + val * scale
    return acc


def _vec_dense(vec, dim, zero):
    row = [zero] * dim
    for col, val in vec.items():
        row[col] = val
    return row


def beta_certificate(arr: Arrangement, system: LocalSystem, l0: int, seed: int = 0) -> BetaCertificate:
    """Build and verify the neighbor certificate along one line."""
    system.require_admissible(arr)
    if len(arr.points) <= 1:
        raise PencilNotCovered("the neighbor certificate needs more than one point")
    narr, record = normalize(arr, SharpPairAdapted(l0), seed)
    res = resonant_points(narr, system)
    basis = angle_basis(narr, res)
    one = system.one()
    r0 = res.on_line(l0)

    # alpha(l) lives at the unique resonant base point that l passes through
    alpha_of_line = {}
    for pid in r0:
        lines_at = basis.lines_at(pid)
        assert lines_at[0] == l0  # the base line has the minimal slope 0
        a_prime_sorted = list(lines_at[1:])
        for lid in a_prime_sorted:
            alpha_of_line[lid] = _alpha_line_vector(basis, pid, a_prime_sorted, lid, one)
    a_prime = sorted(alpha_of_line)

    neighbors = {}
    for lid in a_prime:
        off = [p for p in narr.points if lid in p.line_ids and l0 not in p.line_ids]
        qs = sorted(off, key=lambda p: p.y)
        assert qs and (len(qs) == 1 or qs[0].y < qs[1].y)
        neighbors[lid] = qs[0].index
    n_points = sorted(set(neighbors.values()))

    zero = one - one
    betas = []
    extra = []
    for qid in n_points:
        q = narr.points[qid]
        lines_q = q.line_ids  # slope-sorted, never contains l0
        k = len(lines_q)
        vec = {}
        if qid in res:
            acc = one
            for lid in lines_q:
                acc = acc * system.m(lid)
                if lid in alpha_of_line:
                    _vec_add(vec, alpha_of_line[lid], (system.m(lid) - one) / acc)
            betas.append((qid, True, vec))
        else:
            first = lines_q[0]
            if first in alpha_of_line:
                _vec_add(vec, alpha_of_line[first], one * k)
            for lid in lines_q:
                if lid in alpha_of_line:
                    _vec_add(vec, alpha_of_line[lid], -one)
            betas.append((qid, False, vec))
            for la, lb in zip(lines_q, lines_q[1:]):
                diff = {}
                if la in alpha_of_line:
                    _vec_add(diff, alpha_of_line[la], one)
                if lb in alpha_of_line:
                    _vec_add(diff, alpha_of_line[lb], -one)
                extra.append((qid, diff))

    _, rel_rows = relation_matrix(narr, system)
    dense_rel = [r.dense(basis, zero) for r in rel_rows]
    base_rank = rank(dense_rel) if basis.dim else 0
    all_in = True
    for _qid, _flag, vec in betas:
        if rank(dense_rel + [_vec_dense(vec, basis.dim, zero)]) != base_rank:
            all_in = False
    for _qid, diff in extra:
        if any(diff.values()):
            if rank(dense_rel + [_vec_dense(diff, basis.dim, zero)]) != base_rank:
                all_in = False

    beta_rows = [_vec_dense(vec, basis.dim, zero) for _q, _f, vec in betas]
    family_rank = rank(beta_rows) if beta_rows and basis.dim else 0
    n_n = len(n_points)
    counting_ok = n_n >= len(a_prime) - len(r0) + 1 if r0 else True
    return BetaCertificate(
        l0=l0,
        record=record,
        n_r0=len(r0),
        n_a_prime=len(a_prime),
        neighbors=neighbors,
        betas=betas,
        extra_members=extra,
        all_in_kernel=all_in,
        family_rank=family_rank,
        independent=family_rank == n_n,
        counting_ok=counting_ok,
        bound_value=max(0, len(a_prime) - n_n),
    )


@dataclass
class SharpPairReport:
    """Sharp pairs of the arrangement and the theorems they trigger."""

    pairs: list
    h1: int
    bound_applicable: bool  # some sharp pair exists: h1 <= 1 must hold
    bound_satisfied: bool | None
    vanishing_applicable: bool  # constant monodromy of even order: h1 = 0
    vanishing_satisfied: bool | None
    constant_order: int | None  # effective order of a constant system

    @property
    def ok(self) -> bool:
        return (self.bound_satisfied is not False) and (self.vanishing_satisfied is not False)


def _effective_constant_order(system: LocalSystem) -> int | None:
    """The order of the common value when the monodromy map is constant."""
    if not system.is_exact:
        return None
    ks = set(system.exponents)
    if len(ks) != 1:
        return None
    k = ks.pop()
    from math import gcd

    return system.order // gcd(system.order, k)


def sharp_pair_report(arr: Arrangement, system: LocalSystem, seed: int = 0) -> SharpPairReport:
    """List sharp pairs and check the bounds they imply for the computed h1.

    Pencils are excluded from both checks: with a single intersection point
    every pair is vacuously sharp while h1 can be as large as mult - 2, so
    the statements only make sense with more than one intersection point.
    """
    pairs = sharp_pairs(arr)
    report = h1(arr, system, seed)
    applicable = bool(pairs) and len(arr.points) > 1
    bound_sat = (report.h1 <= 1) if applicable else None
    d_eff = _effective_constant_order(system)
    vanishing = applicable and d_eff is not None and d_eff % 2 == 0 and arr.n % d_eff == 0
    vanishing_sat = (report.h1 == 0) if vanishing else None
    return SharpPairReport(
        pairs=pairs,
        h1=report.h1,
        bound_applicable=applicable,
        bound_satisfied=bound_sat,
        vanishing_applicable=vanishing,
        vanishing_satisfied=vanishing_sat,
        constant_order=d_eff,
    )
