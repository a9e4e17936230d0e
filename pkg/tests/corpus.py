"""Deterministic corpus of small linear systems for property tests.

Everything fits the oracle budget: at most 16 points and 12 lines. The
random family uses a fixed seed and greedy line insertion (reject any
candidate sharing two points with an accepted line), so the corpus is
identical on every run.
"""

import itertools
import random

from linsys import (
    LinearSystem,
    delete_line,
    delete_point,
    extend_with_pendant_points,
    induced_subsystem,
    projective_plane,
    triangular_system,
)

MAX_POINTS = 16
MAX_LINES = 12


def _fits(sys: LinearSystem) -> bool:
    return sys.num_points <= MAX_POINTS and 1 <= sys.num_lines <= MAX_LINES


def _random_system(rng: random.Random) -> LinearSystem:
    n = rng.randint(4, MAX_POINTS)
    target = rng.randint(2, MAX_LINES)
    accepted = []
    for _ in range(60):
        if len(accepted) == target:
            break
        size = rng.randint(2, min(5, n))
        cand = frozenset(rng.sample(range(n), size))
        if any(len(cand & l) > 1 for l in accepted) or cand in accepted:
            continue
        accepted.append(cand)
    return LinearSystem(n, accepted)


def build_corpus():
    """At least 100 systems: planes, plane fragments, triangular systems,
    pendant extensions, and seeded random instances."""
    out = []

    fano = projective_plane(2).system
    pg3 = projective_plane(3).system
    out.append(fano)
    for i in range(7):
        out.append(delete_line(fano, i))
    for i in range(5):
        out.append(delete_point(fano, i))
    # the order-3 plane itself has 13 lines, one over budget
    for i in range(5):
        out.append(delete_line(pg3, i))
    for combo in itertools.combinations(range(7), 3):
        out.append(induced_subsystem(fano, combo))

    for m in (3, 4, 5):
        tri = triangular_system(m)
        out.append(tri)
        out.append(extend_with_pendant_points(tri))
    out.append(extend_with_pendant_points(projective_plane(2).system))

    out.append(LinearSystem(3, [[0, 1, 2]]))
    out.append(LinearSystem(4, [[0, 1, 2]]))
    out.append(LinearSystem(6, [[0, 1], [2, 3], [4, 5]]))
    out.append(LinearSystem(7, [[0, 1, 2], [2, 3, 4], [4, 5, 0], [1, 3, 5]]))

    rng = random.Random(20250825)
    while len(out) < 110:
        sys_ = _random_system(rng)
        if _fits(sys_):
            out.append(sys_)

    assert all(_fits(s) for s in out)
    assert len(out) >= 100
    return out
