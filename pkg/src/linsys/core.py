"""Linear systems: point/line incidence structures with pairwise line
intersections of size at most one.

Points are integer indices 0..num_points-1; lines are nonempty distinct
point sets. Structural operations keep point indices stable, so a deleted
point simply becomes isolated and witness maps stay valid across
derivations. All systems are immutable once built.
"""

import numbers
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from . import bitsets
from .errors import (
    BadIndex,
    DuplicateLine,
    EmptyLine,
    LinearityViolation,
    NoLines,
    SizeLimit,
)
from .kernels import ACTIVE
from .limits import DEFAULT_CAPS, Caps


def _as_point(x, num_points: int, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, numbers.Integral):
        raise BadIndex(f"{where}: point {x!r} is not an integer")
    v = int(x)
    if not 0 <= v < num_points:
        raise BadIndex(f"{where}: point {v} outside 0..{num_points - 1}")
    return v


class LinearSystem:
    """Validated linear system. Raises on empty/duplicate lines, bad
    indices, or any pair of lines sharing two or more points."""

    __slots__ = (
        "num_points",
        "lines",
        "name",
        "line_tuples",
        "line_words",
        "point_lines",
        "degrees",
        "support",
        "pair_line",
    )

    def __init__(
        self,
        num_points: int,
        lines: Iterable[Iterable[int]],
        name: Optional[str] = None,
    ):
        if not isinstance(num_points, numbers.Integral) or num_points < 0:
            raise BadIndex(f"num_points must be a nonnegative integer, got {num_points!r}")
        n = int(num_points)

        cleaned = []
        seen: Dict[frozenset, int] = {}
        for i, raw in enumerate(lines):
            members = frozenset(_as_point(x, n, f"line {i}") for x in raw)
            if not members:
                raise EmptyLine(f"line {i} is empty")
            if members in seen:
                raise DuplicateLine(f"lines {seen[members]} and {i} are equal")
            seen[members] = i
            cleaned.append(members)

        self.num_points = n
        self.lines: Tuple[frozenset, ...] = tuple(cleaned)
        self.name = name
        self.line_tuples: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(l)) for l in cleaned
        )

        m = len(cleaned)
        self.line_words = bitsets.pack_sets(self.line_tuples, n)
        if m > 1:
            counts = ACTIVE.pairwise_intersections(self.line_words)
            bad = np.argwhere(np.triu(counts, 1) > 1)
            if bad.size:
                i, j = int(bad[0, 0]), int(bad[0, 1])
                shared = sorted(self.lines[i] & self.lines[j])
                raise LinearityViolation(i, j, shared)

        degs = np.zeros(n, dtype=np.int32)
        incident = [[] for _ in range(n)]
        for i, l in enumerate(self.line_tuples):
            for v in l:
                degs[v] += 1
                incident[v].append(i)
        degs.setflags(write=False)
        self.degrees = degs
        self.point_lines = bitsets.pack_sets(incident, m)
        self.support = frozenset(int(v) for v in np.nonzero(degs)[0])

        pair = {}
        for i, l in enumerate(self.line_tuples):
            for a in range(len(l)):
                for b in range(a + 1, len(l)):
                    pair[(l[a], l[b])] = i
        self.pair_line = pair

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearSystem):
            return NotImplemented
        return self.num_points == other.num_points and self.lines == other.lines

    __hash__ = None

    def __repr__(self) -> str:
        label = f", name={self.name!r}" if self.name else ""
        return f"LinearSystem(n={self.num_points}, m={self.num_lines}{label})"


def new_system(
    num_points: int, lines: Iterable[Iterable[int]], name: Optional[str] = None
) -> LinearSystem:
    return LinearSystem(num_points, lines, name)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: Tuple[int, ...]
    max_degree: int
    second_max_degree: int


def degree_profile(sys: LinearSystem) -> DegreeProfile:
    """Per-point line counts plus the top two degrees (second computed
    after removing a single point of maximum degree)."""
    degs = tuple(int(d) for d in sys.degrees)
    ordered = sorted(degs, reverse=True)
    max_degree = ordered[0] if ordered else 0
    second = ordered[1] if len(ordered) > 1 else 0
    return DegreeProfile(degrees=degs, max_degree=max_degree, second_max_degree=second)


def rank(sys: LinearSystem) -> int:
    if not sys.lines:
        raise NoLines("rank is undefined for a system with no lines")
    return max(len(l) for l in sys.lines)


def is_intersecting(sys: LinearSystem) -> bool:
    """True when every pair of distinct lines shares exactly one point."""
    m = sys.num_lines
    if m <= 1:
        return True
    counts = ACTIVE.pairwise_intersections(sys.line_words)
    iu = np.triu_indices(m, 1)
    return bool((counts[iu] == 1).all())


def is_uniform(sys: LinearSystem, r: int) -> bool:
    return all(len(l) == r for l in sys.lines)


def delete_point(sys: LinearSystem, point: int) -> LinearSystem:
    """Remove a point from every line. Emptied lines are dropped; lines
    that collapse onto an identical survivor are merged (the line list is
    a set). Indices stay stable: the removed point becomes isolated."""
    p = _as_point(point, sys.num_points, "delete_point")
    out = []
    seen = set()
    for l in sys.lines:
        nl = l - {p}
        if nl and nl not in seen:
            seen.add(nl)
            out.append(nl)
    return LinearSystem(sys.num_points, out)


def delete_line(sys: LinearSystem, line_index: int) -> LinearSystem:
    if not 0 <= line_index < sys.num_lines:
        raise BadIndex(
            f"line index {line_index} outside 0..{sys.num_lines - 1}"
        )
    out = [l for i, l in enumerate(sys.lines) if i != line_index]
    return LinearSystem(sys.num_points, out)


def induced_subsystem(sys: LinearSystem, line_indices: Iterable[int]) -> LinearSystem:
    """Keep only the chosen lines. The induced point set (union of the
    kept lines) is available as the result's ``support``."""
    idx = sorted(set(line_indices))
    for i in idx:
        if not 0 <= i < sys.num_lines:
            raise BadIndex(f"line index {i} outside 0..{sys.num_lines - 1}")
    return LinearSystem(sys.num_points, [sys.lines[i] for i in idx])


def is_spanning_subsystem(sub: LinearSystem, sys: LinearSystem) -> bool:
    """True when sub's lines all occur in sys and sub's induced point set
    equals sys's non-isolated point set."""
    if sub.num_points != sys.num_points:
        return False
    if sub.support != sys.support:
        return False
    host = set(sys.lines)
    return all(l in host for l in sub.lines)


def collinearity_adjacent(sys: LinearSystem, u: int, v: int) -> bool:
    """Two points are adjacent when some line contains both. A point is
    adjacent to itself by convention."""
    a = _as_point(u, sys.num_points, "collinearity_adjacent")
    b = _as_point(v, sys.num_points, "collinearity_adjacent")
    if a == b:
        return True
    return bool((sys.point_lines[a] & sys.point_lines[b]).any())


def closed_neighborhood(sys: LinearSystem, v: int) -> frozenset:
    p = _as_point(v, sys.num_points, "closed_neighborhood")
    out = {p}
    for l in sys.lines:
        if p in l:
            out |= l
    return frozenset(out)


def drop_isolated(sys: LinearSystem) -> Tuple[LinearSystem, Dict[int, int]]:
    """Reindex onto the support, removing isolated points. Returns the
    compacted system and the old-index -> new-index map."""
    remap = {old: new for new, old in enumerate(sorted(sys.support))}
    lines = [[remap[v] for v in l] for l in sys.line_tuples]
    return LinearSystem(len(remap), lines, sys.name), remap


def pendant_reduction(sys: LinearSystem) -> Tuple[LinearSystem, Tuple[int, ...]]:
    """Delete degree-1 points repeatedly until none remain. Deletion can
    cascade (a shrinking line creates new degree-1 points), so this runs
    to a fixed point. Returns the reduced system and the deleted points;
    isolated points need no deletion since indices are stable."""
    cur = sys
    removed = []
    while True:
        ones = [int(v) for v in np.nonzero(cur.degrees == 1)[0]]
        if not ones:
            return cur, tuple(removed)
        for v in ones:
            cur = delete_point(cur, v)
            removed.append(v)


@dataclass(frozen=True)
class IsoCertificate:
    """Outcome of an isomorphism test on the pendant-reduced systems.
    point_bijection maps reduced_a's support onto reduced_b's support and
    is None when the systems are not isomorphic."""

    isomorphic: bool
    point_bijection: Optional[Dict[int, int]]
    reduced_a: LinearSystem
    reduced_b: LinearSystem


@dataclass(frozen=True)
class Embedding:
    """Injective point map carrying each source line into a distinct host
    line; line_map gives the host line index per source line index."""

    point_map: Dict[int, int]
    line_map: Dict[int, int]


def _refine_colors(sys: LinearSystem) -> Tuple[Dict[int, int], Dict[int, int]]:
    """Joint point/line color refinement. Point colors start from
    (degree, incident line sizes) and are repeatedly split by the colors
    of incident lines, line colors by their point colors, until stable.
    Only support points are colored."""
    pts = sorted(sys.support)
    lns = range(sys.num_lines)
    pcol = {
        v: (int(sys.degrees[v]), tuple(sorted(len(l) for l in sys.lines if v in l)))
        for v in pts
    }
    lcol = {i: (len(sys.lines[i]),) for i in lns}

    def canon(raw):
        table = {}
        out = {}
        for k in sorted(raw, key=lambda k: (raw[k], k)):
            out[k] = table.setdefault(raw[k], len(table))
        return out

    pcol, lcol = canon(pcol), canon(lcol)
    while True:
        nl = {
            i: (lcol[i], tuple(sorted(pcol[v] for v in sys.lines[i])))
            for i in lns
        }
        npc = {
            v: (
                pcol[v],
                tuple(
                    sorted(nl[i] for i in range(sys.num_lines) if v in sys.lines[i])
                ),
            )
            for v in pts
        }
        npc, nl = canon(npc), canon(nl)
        if npc == pcol and nl == lcol:
            return pcol, lcol
        pcol, lcol = npc, nl


def _histogram(col: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for c in col.values():
        out[c] = out.get(c, 0) + 1
    return out


def _adjacent(sys: LinearSystem, u: int, v: int) -> bool:
    return bool((sys.point_lines[u] & sys.point_lines[v]).any())


def _iso_backtrack(a: LinearSystem, b: LinearSystem, pcol_a, pcol_b):
    """Match support points of a onto b within color classes; lines force
    each other through mapped point pairs. Deterministic order: the next
    point maximizes mapped neighbors, ties to the smaller index."""
    b_by_color: Dict[int, list] = {}
    for w in sorted(b.support):
        b_by_color.setdefault(pcol_b[w], []).append(w)
    class_size = {c: len(ws) for c, ws in b_by_color.items()}

    a_pts = sorted(a.support)
    b_lines = set(b.lines)
    mapping: Dict[int, int] = {}
    used = set()

    def next_point():
        best, key = -1, None
        for u in a_pts:
            if u in mapping:
                continue
            k = (
                -sum(1 for v in mapping if _adjacent(a, u, v)),
                class_size[pcol_a[u]] if pcol_a[u] in class_size else 0,
                u,
            )
            if key is None or k < key:
                best, key = u, k
        return best

    def feasible(u: int, w: int) -> bool:
        for v, x in mapping.items():
            if _adjacent(a, u, v) != _adjacent(b, w, x):
                return False
        # every a-line through u with mapped points must fit one b-line
        for i in range(a.num_lines):
            if u not in a.lines[i]:
                continue
            imgs = [mapping[v] for v in a.lines[i] if v in mapping]
            if not imgs:
                continue
            key = (min(imgs[0], w), max(imgs[0], w))
            j = b.pair_line.get(key)
            if j is None or len(b.lines[j]) != len(a.lines[i]):
                return False
            if any(x not in b.lines[j] for x in imgs):
                return False
        return True

    def rec() -> bool:
        if len(mapping) == len(a_pts):
            return all(
                frozenset(mapping[v] for v in l) in b_lines for l in a.lines
            )
        u = next_point()
        for w in b_by_color.get(pcol_a[u], []):
            if w in used or not feasible(u, w):
                continue
            mapping[u] = w
            used.add(w)
            if rec():
                return True
            del mapping[u]
            used.discard(w)
        return False

    return dict(mapping) if rec() else None


def are_isomorphic(a: LinearSystem, b: LinearSystem, caps: Caps = DEFAULT_CAPS) -> IsoCertificate:
    """Hypergraph isomorphism after pendant reduction of both systems."""
    ra, _ = pendant_reduction(a)
    rb, _ = pendant_reduction(b)
    no = IsoCertificate(False, None, ra, rb)

    if len(ra.support) != len(rb.support) or ra.num_lines != rb.num_lines:
        return no
    if len(ra.support) > caps.iso_points:
        raise SizeLimit(
            f"reduced system has {len(ra.support)} points, cap is {caps.iso_points}"
        )
    if sorted(len(l) for l in ra.lines) != sorted(len(l) for l in rb.lines):
        return no

    pcol_a, _ = _refine_colors(ra)
    pcol_b, _ = _refine_colors(rb)
    if _histogram(pcol_a) != _histogram(pcol_b):
        return no

    mapping = _iso_backtrack(ra, rb, pcol_a, pcol_b)
    if mapping is None:
        return no
    return IsoCertificate(True, mapping, ra, rb)


def _match_single_lines(singles, cand_lists):
    """Kuhn matching: assign each size-1 source line a distinct host line
    from its candidate list. Returns assignment list or None."""
    match_of = {}
    assign = [-1] * len(singles)

    def try_assign(i, banned):
        for j in cand_lists[i]:
            if j in banned:
                continue
            banned.add(j)
            if j not in match_of or try_assign(match_of[j], banned):
                match_of[j] = i
                assign[i] = j
                return True
        return False

    for i in range(len(singles)):
        if not try_assign(i, set()):
            return None
    return assign


def embeds_in(sub: LinearSystem, host: LinearSystem, caps: Caps = DEFAULT_CAPS) -> Optional[Embedding]:
    """Backtracking search for an injective map of sub's support into host
    carrying every line of sub into a distinct host line."""
    if len(sub.support) > caps.iso_points or len(host.support) > caps.iso_points:
        raise SizeLimit(
            f"embedding search over {len(sub.support)}/{len(host.support)} points,"
            f" cap is {caps.iso_points}"
        )
    if not sub.lines:
        return Embedding(point_map={}, line_map={})

    host_sizes = sorted((len(l) for l in host.lines), reverse=True)
    sub_sizes = sorted((len(l) for l in sub.lines), reverse=True)
    if len(sub_sizes) > len(host_sizes) or any(
        s > h for s, h in zip(sub_sizes, host_sizes)
    ):
        return None

    a_pts = sorted(sub.support)
    host_pts = sorted(host.support)
    mapping: Dict[int, int] = {}
    used = set()
    result = {}

    def next_point():
        best, key = -1, None
        for u in a_pts:
            if u in mapping:
                continue
            k = (
                -sum(1 for v in mapping if _adjacent(sub, u, v)),
                -int(sub.degrees[u]),
                u,
            )
            if key is None or k < key:
                best, key = u, k
        return best

    def feasible(u: int, w: int) -> bool:
        if host.degrees[w] < sub.degrees[u]:
            return False
        for i in range(sub.num_lines):
            if u not in sub.lines[i]:
                continue
            imgs = [mapping[v] for v in sub.lines[i] if v in mapping]
            if not imgs:
                continue
            key = (min(imgs[0], w), max(imgs[0], w))
            j = host.pair_line.get(key)
            if j is None or len(host.lines[j]) < len(sub.lines[i]):
                return False
            if any(x not in host.lines[j] for x in imgs):
                return False
        return True

    def finish() -> bool:
        # lines with two or more points are forced through image pairs
        line_map: Dict[int, int] = {}
        taken = set()
        singles = []
        for i, l in enumerate(sub.line_tuples):
            if len(l) == 1:
                singles.append(i)
                continue
            x, y = mapping[l[0]], mapping[l[1]]
            j = host.pair_line.get((min(x, y), max(x, y)))
            if j is None or j in taken:
                return False
            if any(mapping[v] not in host.lines[j] for v in l):
                return False
            taken.add(j)
            line_map[i] = j
        cands = []
        for i in singles:
            (x,) = sub.line_tuples[i]
            w = mapping[x]
            cands.append(
                [
                    j
                    for j in range(host.num_lines)
                    if j not in taken and w in host.lines[j]
                ]
            )
        assign = _match_single_lines(singles, cands)
        if assign is None:
            return False
        for i, j in zip(singles, assign):
            line_map[i] = j
        result["lines"] = line_map
        return True

    def rec() -> bool:
        if len(mapping) == len(a_pts):
            return finish()
        u = next_point()
        for w in host_pts:
            if w in used or not feasible(u, w):
                continue
            mapping[u] = w
            used.add(w)
            if rec():
                return True
            del mapping[u]
            used.discard(w)
        return False

    if not rec():
        return None
    return Embedding(point_map=dict(mapping), line_map=result["lines"])
