"""Ball and sphere recognition, exact in low dimension, budgeted above.

Dimensions 0 through 2 use exact combinatorial characterizations (point
counts, cycle/path shape, surface classification by links, closedness and
Euler characteristic).  From dimension 3 on, recognition up to stellar
moves is undecidable in general, so a seeded greedy search welds the
complex toward a single simplex or a simplex boundary within a move
budget and answers Unknown when the budget runs out.  Neither is only
returned on a provable obstruction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .chains import (
    Complex,
    Simplex,
    Verdict,
    boundary,
    connected_components,
    euler_characteristic,
    is_closed,
    link,
)
from .errors import NotUniform
from .moves import Subdivide, Weld, subdivide, weld, weldable_pairs

__all__ = ["Shape", "RecognitionResult", "ManifoldReport", "recognize_ball_or_sphere", "is_stellar_manifold"]

DEFAULT_BUDGET = 10000
_STALL_LIMIT = 8


class Shape(Enum):
    BALL = "ball"
    SPHERE = "sphere"
    NEITHER = "neither"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RecognitionResult:
    verdict: Shape
    certificate: tuple | None = None  # MoveSequence reducing to the model shape
    diagnostics: str = ""


@dataclass
class ManifoldReport:
    verdict: Verdict
    per_vertex: dict = field(default_factory=dict)  # vertex -> RecognitionResult


def _is_simplex_boundary(k: Complex) -> bool:
    """True iff the generators are exactly all facets of one simplex."""
    d = k.dimension
    verts = sorted(k.vertices)
    if len(verts) != d + 2 or len(k) != d + 2:
        return False
    import itertools

    return k.generators == frozenset(Simplex(*c) for c in itertools.combinations(verts, d + 1))


def _vertex_degrees(k: Complex) -> dict[int, int]:
    deg: dict[int, int] = {}
    for g in k.generators:
        for v in g.vertices:
            deg[v] = deg.get(v, 0) + 1
    return deg


def _reduce_curve(k: Complex) -> tuple:
    """Weld a 1-dimensional cycle down to a triangle, or a path to an edge.

    Each weld removes one degree-2 vertex whose neighbors are not yet
    adjacent; in a plain cycle or path one always exists while more than
    the model shape remains.
    """
    moves = []
    cur = k
    while True:
        deg = _vertex_degrees(cur)
        is_cycle = all(d == 2 for d in deg.values())
        if is_cycle and len(cur) == 3:
            return tuple(moves)
        if not is_cycle and len(cur) == 1:
            return tuple(moves)
        done = False
        for v in sorted(deg):
            if deg[v] != 2:
                continue
            u, w = sorted(link(Simplex(v), cur).vertices)
            a = Simplex(u, w)
            if cur.has_face(a):
                continue
            cur = weld(cur, a, v)
            moves.append(Weld(a, v))
            done = True
            break
        if not done:  # no reducible vertex; caller never reaches this on a curve
            return tuple(moves)


def _recognize_dim1(k: Complex) -> RecognitionResult:
    if len(connected_components(k)) != 1:
        return RecognitionResult(Shape.NEITHER, None, "not connected")
    deg = _vertex_degrees(k)
    if all(d == 2 for d in deg.values()):
        return RecognitionResult(Shape.SPHERE, _reduce_curve(k), "single cycle")
    ends = [v for v, d in deg.items() if d == 1]
    if len(ends) == 2 and all(d in (1, 2) for d in deg.values()) and len(k) == len(deg) - 1:
        return RecognitionResult(Shape.BALL, _reduce_curve(k), "single path")
    return RecognitionResult(Shape.NEITHER, None, "vertex degrees rule out a single cycle or path")


def _recognize_dim2(k: Complex) -> RecognitionResult:
    if len(connected_components(k)) != 1:
        return RecognitionResult(Shape.NEITHER, None, "not connected")
    for v in sorted(k.vertices):
        sub = recognize_ball_or_sphere(link(Simplex(v), k), budget=0)
        if sub.verdict not in (Shape.BALL, Shape.SPHERE):
            return RecognitionResult(Shape.NEITHER, None, f"link of vertex {v} is not a 1-ball or 1-sphere")
    chi = euler_characteristic(k)
    if is_closed(k):
        if chi == 2:
            return RecognitionResult(Shape.SPHERE, None, "closed surface with Euler characteristic 2")
        return RecognitionResult(Shape.NEITHER, None, f"closed surface with Euler characteristic {chi}")
    rim = recognize_ball_or_sphere(boundary(k), budget=0)
    if chi == 1 and rim.verdict is Shape.SPHERE:
        return RecognitionResult(Shape.BALL, None, "surface with Euler characteristic 1 and one boundary cycle")
    return RecognitionResult(
        Shape.NEITHER, None, f"surface with boundary, Euler characteristic {chi}, boundary verdict {rim.verdict.value}"
    )


def _obstruction(k: Complex, seed: int) -> str | None:
    """A reason why ``k`` can be neither a ball nor a sphere, if provable."""
    if len(connected_components(k)) != 1:
        return "not connected"
    d = k.dimension
    for v in sorted(k.vertices):
        sub = recognize_ball_or_sphere(link(Simplex(v), k), budget=0, seed=seed)
        if sub.verdict is Shape.NEITHER:
            return f"link of vertex {v} is not a ball or sphere: {sub.diagnostics}"
    chi = euler_characteristic(k)
    if is_closed(k):
        want = 2 if d % 2 == 0 else 0
        if chi != want:
            return f"closed with Euler characteristic {chi}, a {d}-sphere needs {want}"
    else:
        if chi != 1:
            return f"boundary is nonzero and Euler characteristic is {chi}, a ball needs 1"
        rim = recognize_ball_or_sphere(boundary(k), budget=0, seed=seed)
        if rim.verdict is Shape.NEITHER:
            return f"boundary is not a sphere: {rim.diagnostics}"
    return None


def _search(k: Complex, budget: int, seed: int) -> RecognitionResult:
    """Greedy weld search toward the model shapes, with seeded restarts."""
    want_sphere = is_closed(k)

    def at_target(c: Complex) -> bool:
        return _is_simplex_boundary(c) if want_sphere else len(c) == 1

    rng = random.Random(seed)
    spent = 0
    while spent < budget:
        cur, moves, stall = k, [], 0
        while spent < budget:
            if at_target(cur):
                shape = Shape.SPHERE if want_sphere else Shape.BALL
                return RecognitionResult(shape, tuple(moves), f"reduced in {len(moves)} moves")
            welds = weldable_pairs(cur)
            if welds:
                a, v = welds[rng.randrange(len(welds))]
                cur = weld(cur, a, v)
                moves.append(Weld(a, v))
                spent += 1
                stall = 0
            else:
                if stall >= _STALL_LIMIT:
                    break  # restart from scratch with fresh randomness
                gens = cur.sorted_generators()
                g = gens[rng.randrange(len(gens))]
                faces = [f for f in g.faces() if f.dimension >= 1]
                f = faces[rng.randrange(len(faces))]
                fresh = max(cur.vertices) + 1
                cur = subdivide(cur, f, fresh)
                moves.append(Subdivide(f, fresh))
                spent += 1
                stall += 1
    return RecognitionResult(Shape.UNKNOWN, None, f"move budget {budget} exhausted")


def recognize_ball_or_sphere(k: Complex, budget: int = DEFAULT_BUDGET, seed: int = 0) -> RecognitionResult:
    """Decide whether ``k`` is a stellar ball, a stellar sphere, or neither.

    Exact for dimensions up to 2; from dimension 3 a seeded, budgeted weld
    search runs and Unknown is an honest outcome.  A certificate, when
    present, is a move sequence whose replay ends at a single simplex
    (ball) or all facets of one simplex (sphere).
    """
    if k.is_zero or not k.is_uniform:
        raise NotUniform("recognition requires a nonempty complex of one dimension")
    d = k.dimension
    if len(k) == 1 and d >= 0:
        return RecognitionResult(Shape.BALL, (), "a single simplex")
    if _is_simplex_boundary(k):
        return RecognitionResult(Shape.SPHERE, (), "the boundary of a simplex")
    if d == 0:
        return RecognitionResult(Shape.NEITHER, None, f"{len(k)} isolated vertices")
    if d == 1:
        return _recognize_dim1(k)
    if d == 2:
        return _recognize_dim2(k)
    reason = _obstruction(k, seed)
    if reason is not None:
        return RecognitionResult(Shape.NEITHER, None, reason)
    return _search(k, budget, seed)


def is_stellar_manifold(k: Complex, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ManifoldReport:
    """Check that every vertex link is a stellar ball or sphere.

    Yes iff all links pass; No if some link provably fails; Unknown when a
    high-dimensional link exhausts its budget and none fails.
    """
    if k.is_zero or not k.is_uniform:
        raise NotUniform("manifold check requires a nonempty complex of one dimension")
    if k.dimension == 0:
        return ManifoldReport(Verdict.yes("0-dimensional: every vertex is an isolated point"), {})
    per: dict[int, RecognitionResult] = {}
    for v in sorted(k.vertices):
        per[v] = recognize_ball_or_sphere(link(Simplex(v), k), budget=budget, seed=seed)
    bad = [v for v, r in per.items() if r.verdict is Shape.NEITHER]
    open_ = [v for v, r in per.items() if r.verdict is Shape.UNKNOWN]
    if bad:
        verdict = Verdict.no(f"link of vertex {bad[0]} is neither a ball nor a sphere")
    elif open_:
        verdict = Verdict.unknown(f"link of vertex {open_[0]} could not be recognized within budget")
    else:
        verdict = Verdict.yes()
    return ManifoldReport(verdict, per)
