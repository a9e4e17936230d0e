"""Projective planes over small finite fields.

PG(2,q) is built from normalized homogeneous triples (leftmost nonzero
coordinate 1) listed lexicographically; the same list indexes both points
and lines, and point x lies on line a iff a0*x0 + a1*x1 + a2*x2 = 0 in
GF(q). Everything downstream (conics, hyperovals, duals) works on plane
point/line indices.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from .core import LinearSystem
from .errors import NotPrimePower, OddOrder, SizeLimit
from .field import FieldTable, is_prime, make_field
from .kernels import ACTIVE
from .limits import DEFAULT_CAPS, Caps

Triple = Tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class PlaneModel:
    """A projective plane of order q with its coordinatization."""

    system: LinearSystem
    point_coords: Tuple[Triple, ...]
    line_coords: Tuple[Triple, ...]
    order: int
    field: FieldTable


@dataclass(frozen=True)
class Arc:
    points: FrozenSet[int]
    is_hyperoval: bool


@dataclass(frozen=True)
class PlaneReport:
    """Either the inferred order or the first violated plane axiom.

    Axioms are checked in a fixed sequence: point-pairs (two points on
    exactly one common line), line-pairs (two lines meet), general-position
    (four points, no three collinear), uniformity (line sizes and degrees
    all equal), counts (n = m = q^2+q+1).
    """

    is_plane: bool
    order: Optional[int]
    failed_axiom: Optional[str]
    detail: Optional[str]


def _prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m == 1:
                return p, k
            raise NotPrimePower(f"{q} is not a prime power")
    raise NotPrimePower(f"{q} is not a prime power")


def normalized_triples(q: int) -> Tuple[Triple, ...]:
    """All projective triples with leftmost nonzero coordinate 1, in
    lexicographic order. There are q*q + q + 1 of them."""
    out = [(0, 0, 1)]
    out.extend((0, 1, x) for x in range(q))
    out.extend((1, x, y) for x in range(q) for y in range(q))
    return tuple(sorted(out))


def projective_plane(q: int, caps: Caps = DEFAULT_CAPS) -> PlaneModel:
    """PG(2,q) for a prime power q within the configured order cap."""
    p, k = _prime_power(q)
    if q > caps.plane_order:
        raise SizeLimit(f"plane order {q} exceeds cap {caps.plane_order}")
    F = make_field(p, k, caps=caps)

    coords = normalized_triples(q)
    n = len(coords)
    C = np.array(coords, dtype=np.int64)
    add, mul = F.add_table, F.mul_table

    lines = []
    for a0, a1, a2 in coords:
        s = add[mul[a0, C[:, 0]], mul[a1, C[:, 1]]]
        s = add[s, mul[a2, C[:, 2]]]
        lines.append(np.nonzero(s == 0)[0].tolist())
    system = LinearSystem(n, lines, name=f"PG(2,{q})")
    return PlaneModel(
        system=system,
        point_coords=coords,
        line_coords=coords,
        order=q,
        field=F,
    )


def verify_plane_axioms(sys: LinearSystem) -> PlaneReport:
    """Exhaustively check the projective-plane axioms on a linear system."""
    n, m = sys.num_points, sys.num_lines

    # two distinct points on exactly one common line; linearity already
    # rules out two, so only missing pairs can occur
    expected_pairs = n * (n - 1) // 2
    if len(sys.pair_line) != expected_pairs:
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) not in sys.pair_line:
                    return PlaneReport(
                        False,
                        None,
                        "point-pairs",
                        f"points {u} and {v} lie on no common line",
                    )

    if m > 1:
        counts = ACTIVE.pairwise_intersections(sys.line_words)
        iu = np.triu_indices(m, 1)
        flat = counts[iu]
        if (flat == 0).any():
            where = int(np.nonzero(flat == 0)[0][0])
            i, j = int(iu[0][where]), int(iu[1][where])
            return PlaneReport(
                False, None, "line-pairs", f"lines {i} and {j} are disjoint"
            )

    quad = _general_position_quad(sys)
    if quad is None:
        return PlaneReport(
            False,
            None,
            "general-position",
            "no four points in general position",
        )

    sizes = {len(l) for l in sys.lines}
    if len(sizes) != 1:
        return PlaneReport(
            False, None, "uniformity", f"line sizes {sorted(sizes)} differ"
        )
    r = sizes.pop()
    degs = {int(d) for d in sys.degrees}
    if degs != {r}:
        return PlaneReport(
            False,
            None,
            "uniformity",
            f"degrees {sorted(degs)} differ from line size {r}",
        )

    q = r - 1
    expected = q * q + q + 1
    if n != expected or m != expected:
        return PlaneReport(
            False,
            None,
            "counts",
            f"{n} points and {m} lines, expected {expected} for order {q}",
        )
    return PlaneReport(True, q, None, None)


def _general_position_quad(sys: LinearSystem):
    """First 4-point subset with no three collinear, or None."""

    def collinear(a, b, c):
        i = sys.pair_line.get((min(a, b), max(a, b)))
        return i is not None and c in sys.lines[i]

    n = sys.num_points
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if collinear(a, b, c):
                    continue
                for d in range(c + 1, n):
                    if (
                        not collinear(a, b, d)
                        and not collinear(a, c, d)
                        and not collinear(b, c, d)
                    ):
                        return (a, b, c, d)
    return None


def conic_points(plane: PlaneModel) -> FrozenSet[int]:
    """The q+1 points satisfying X1^2 = X0*X2: (1, t, t^2) plus (0,0,1)."""
    F = plane.field
    index = {c: i for i, c in enumerate(plane.point_coords)}
    pts = {index[(0, 0, 1)]}
    for t in range(plane.order):
        pts.add(index[(1, t, F.mul(t, t))])
    return frozenset(pts)


def hyperoval(plane: PlaneModel) -> Arc:
    """Conic plus nucleus (0,1,0): a (q+2)-arc, available for even q only."""
    if plane.order % 2 == 1:
        raise OddOrder(
            f"no hyperoval in a plane of odd order {plane.order}"
        )
    index = {c: i for i, c in enumerate(plane.point_coords)}
    pts = set(conic_points(plane))
    pts.add(index[(0, 1, 0)])
    return Arc(points=frozenset(pts), is_hyperoval=True)


def is_arc(plane: PlaneModel, points: Iterable[int]) -> bool:
    """True when no line of the plane meets the set in three points."""
    pts = set(points)
    return all(len(pts & l) <= 2 for l in plane.system.lines)


def dual_plane(plane: PlaneModel) -> PlaneModel:
    """Swap points and lines: dual point i is primal line i, dual line j
    collects the primal lines through primal point j."""
    m = plane.system.num_lines
    dual_lines = []
    for j in range(plane.system.num_points):
        dual_lines.append(
            [i for i in range(m) if j in plane.system.lines[i]]
        )
    system = LinearSystem(m, dual_lines, name=f"dual-PG(2,{plane.order})")
    return PlaneModel(
        system=system,
        point_coords=plane.line_coords,
        line_coords=plane.point_coords,
        order=plane.order,
        field=plane.field,
    )


def dual_hyperoval_lines(plane: PlaneModel) -> FrozenSet[int]:
    """Indices of the lines whose coordinates are the hyperoval's point
    coordinates. Every plane point lies on at most two of them, so they
    form a 2-packing of maximum size q+2."""
    arc = hyperoval(plane)
    line_index = {c: i for i, c in enumerate(plane.line_coords)}
    return frozenset(line_index[plane.point_coords[p]] for p in arc.points)
