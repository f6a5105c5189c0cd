"""Rewriting a connected manifold into star normal form.

The normal form is a cone: a single apex vertex joined onto a sphere one
dimension down, together with a regular vertex equivalence recording which
sphere generators were torn apart on the way.  The rewrite starts by
starring an arbitrary generator at the fresh apex, then repeatedly absorbs
a residual generator adjacent to the apex link across a codimension-1
face, where adjacency counts faces equal up to the accumulated
equivalence (the generator is first aligned onto the link's
representative vertices when they differ).  Each absorption is one
subdivision plus one weld; when the far vertex of the absorbed generator
already sits in the apex link it is first split off into a fresh copy,
and the copy is recorded as equivalent to the original.  Every step
removes exactly one residual generator, so a complex with G generators
normalizes in exactly G - 1 steps.

For closed inputs the resulting equivalence pairs every sphere generator
with exactly one partner; with boundary, the unpaired sphere generators
match the boundary faces of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import (
    Complex,
    Simplex,
    Verdict,
    boundary,
    connected_components,
    is_closed,
    join,
    link,
    residual,
    simplex_boundary,
)
from .errors import (
    BadNormalForm,
    InteriorFaceDegree,
    NoAdjacentGenerator,
    NotConnected,
    NotManifold,
    NotRegular,
    NotUniform,
)
from .moves import MergeVertex, SplitVertex, Subdivide, Weld, apply_sequence
from .quotient import GeneratorPairing, RegularEquivalence, derive_pairing, validate_regular
from .recognition import DEFAULT_BUDGET, Shape, is_stellar_manifold, recognize_ball_or_sphere

__all__ = [
    "NormalizationState",
    "StarNormalForm",
    "initial_state",
    "normalize_step",
    "normalize",
    "verify_normal_form",
]


@dataclass(frozen=True)
class NormalizationState:
    """Immutable snapshot between absorption steps."""

    complex: Complex
    apex: int
    eq: RegularEquivalence
    trace: tuple
    step_index: int

    def apex_link(self) -> Complex:
        return link(Simplex(self.apex), self.complex)

    def residual(self) -> Complex:
        return residual(Simplex(self.apex), self.complex)


@dataclass(frozen=True)
class StarNormalForm:
    apex: int
    sphere: Complex
    eq: RegularEquivalence
    pairing: GeneratorPairing
    trace: tuple
    steps: int
    warnings: tuple = ()


def initial_state(m: Complex) -> NormalizationState:
    """Star the least generator at a fresh apex."""
    if m.is_zero or not m.is_uniform:
        raise NotUniform("normalization requires a nonempty complex of one dimension")
    if m.dimension < 1:
        raise NotManifold("normalization requires dimension at least 1")
    if len(connected_components(m)) != 1:
        raise NotConnected("the complex is not connected")
    g = m.sorted_generators()[0]
    apex = max(m.vertices) + 1
    move = Subdivide(g, apex)
    return NormalizationState(move.apply(m), apex, RegularEquivalence.identity(), (move,), 0)


def _class_key(eq: RegularEquivalence, s: Simplex) -> tuple[int, ...]:
    return tuple(sorted(eq.representative(v) for v in s.vertices))


def _least_adjacent(state: NormalizationState) -> tuple[Simplex, Simplex, Simplex] | None:
    """Least (residual generator, facet, matching link face) triple.

    A literal shared face is preferred; failing that, a facet whose vertex
    classes coincide with those of some link face counts as adjacent, the
    accumulated equivalence having already identified the two.
    """
    lnk_gens = state.apex_link().generators
    for p in state.residual():
        for f in p.facets():
            if f in lnk_gens:
                return p, f, f
    eq = state.eq
    if eq.is_identity:
        return None
    by_key: dict[tuple[int, ...], Simplex] = {}
    for g in sorted(lnk_gens):
        by_key.setdefault(_class_key(eq, g), g)
    for p in state.residual():
        for f in p.facets():
            match = by_key.get(_class_key(eq, f))
            if match is not None:
                return p, f, match
    return None


def normalize_step(state: NormalizationState) -> NormalizationState:
    """Absorb one residual generator into the apex star.

    Picks the least residual generator p with a facet F matching a link
    face F', where matching means equal up to the accumulated equivalence
    (literal matches take priority).  If F differs from F', p is first
    aligned onto F' by replacing each facet vertex with its already
    equivalent link representative.  Let w be the vertex of p outside the
    facet.  If w is not in the apex link, subdividing at F' and welding
    the apex-to-w edge pulls p into the star.  If w is already a link
    vertex, p is first rewritten with a fresh vertex d in place of w
    (recorded as a vertex split plus the equivalence d = w).

    Either way the new apex link equals the old link plus the boundary of
    the absorbed generator, and the residual loses exactly p; this
    identity is re-checked on every step.
    """
    found = _least_adjacent(state)
    if found is None:
        raise NoAdjacentGenerator("no residual generator shares a codimension-1 face with the apex link")
    p, f, flink = found
    apex = state.apex
    n = state.complex
    lnk = state.apex_link()
    eq = state.eq
    moves: list = []

    current = p
    if f != flink:
        partner = {eq.representative(v): v for v in flink.vertices}
        for x in f.vertices:
            onto = partner[eq.representative(x)]
            if onto != x:
                merge = MergeVertex(current, x, onto)
                moves.append(merge)
                n = merge.apply(n)
                current = Simplex(*(onto if u == x else u for u in current.vertices))

    degree = sum(1 for g in n.generators if flink.is_face_of(g))
    if degree != 2:
        raise InteriorFaceDegree(f"face {flink} lies in {degree} generators, expected 2")

    w = current.difference(flink).vertices[0]
    if w in lnk.vertices:
        fresh = max(n.vertices) + 1
        split = SplitVertex(current, w, fresh)
        moves.append(split)
        n = split.apply(n)
        eq = eq.with_pair(fresh, w)
        far = fresh
    else:
        far = w

    b = max(n.vertices) + 1
    sub = Subdivide(flink, b)
    moves.append(sub)
    n = sub.apply(n)
    wld = Weld(Simplex(apex, far), b)
    moves.append(wld)
    n = wld.apply(n)

    absorbed = flink.union(Simplex(far))
    expected = join(Complex((apex,)), lnk + simplex_boundary(absorbed)) + (state.residual() + Complex(p))
    if n != expected:
        raise BadNormalForm(f"step {state.step_index} does not satisfy the absorption identity")

    return NormalizationState(n, apex, eq, state.trace + tuple(moves), state.step_index + 1)


def normalize(
    m: Complex,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    check_manifold: bool = True,
) -> StarNormalForm:
    """Rewrite a connected stellar manifold into star normal form.

    The result carries the apex, the sphere (the final apex link), the
    accumulated regular equivalence, the derived generator pairing, and
    the full replayable move trace.  Deterministic: choices are always
    lexicographically least and fresh labels are max + 1.
    """
    warnings: tuple = ()
    if check_manifold:
        report = is_stellar_manifold(m, budget=budget, seed=seed)
        if report.verdict.is_no:
            raise NotManifold(report.verdict.witness)
        if report.verdict.is_unknown:
            warnings = (f"manifold check inconclusive: {report.verdict.witness}",)

    state = initial_state(m)
    while True:
        try:
            state = normalize_step(state)
        except NoAdjacentGenerator:
            break
    if state.residual():
        raise NotConnected("normalization stalled with a nonempty residual")

    sphere = state.apex_link()
    eq = state.eq
    stray = eq.members() - sphere.vertices
    if stray:
        raise BadNormalForm(f"equivalence mentions vertex {min(stray)} outside the sphere")
    verdict = validate_regular(sphere, eq)
    if not verdict.is_yes:
        raise NotRegular(f"normalization produced a non-regular equivalence: {verdict.witness}")
    pairing = derive_pairing(sphere, eq)
    return StarNormalForm(state.apex, sphere, eq, pairing, state.trace, state.step_index, warnings)


def verify_normal_form(
    nf: StarNormalForm,
    original: Complex,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> Verdict:
    """Re-check every structural claim of a star normal form.

    Replays the trace, reconstructs the cone, validates the equivalence,
    recognizes the sphere, re-derives the pairing, and checks the pairing
    count against closedness of the original (perfect when closed, one
    unpaired sphere generator per boundary face otherwise).
    """
    problems = []
    notes = []

    cone = join(Complex((nf.apex,)), nf.sphere)
    try:
        replayed = apply_sequence(original, nf.trace)
        if replayed != cone:
            problems.append("trace replay does not reproduce the cone over the sphere")
    except Exception as e:  # noqa: BLE001 - report, do not crash a verifier
        problems.append(f"trace replay failed: {e}")

    if residual(Simplex(nf.apex), cone):
        problems.append("apex is not joined to every generator")

    try:
        verdict = validate_regular(nf.sphere, nf.eq)
        if not verdict.is_yes:
            problems.append(f"equivalence is not regular: {verdict.witness}")
        elif derive_pairing(nf.sphere, nf.eq) != nf.pairing:
            problems.append("stored pairing disagrees with the equivalence")
    except Exception as e:  # noqa: BLE001
        problems.append(f"equivalence check failed: {e}")

    rec = recognize_ball_or_sphere(nf.sphere, budget=budget, seed=seed)
    if rec.verdict is Shape.UNKNOWN and nf.sphere.dimension >= 3:
        notes.append("sphere recognition inconclusive at this dimension and budget")
    elif rec.verdict is not Shape.SPHERE:
        problems.append(f"final link is not recognized as a sphere: {rec.diagnostics}")

    if is_closed(original):
        if nf.pairing.unpaired:
            problems.append(f"closed input left {len(nf.pairing.unpaired)} sphere generators unpaired")
    else:
        rim = len(boundary(original))
        if len(nf.pairing.unpaired) != rim:
            problems.append(
                f"{len(nf.pairing.unpaired)} unpaired sphere generators but {rim} boundary faces in the input"
            )

    if problems:
        return Verdict.no("; ".join(problems))
    return Verdict.yes("; ".join(notes))
