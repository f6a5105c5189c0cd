"""Stellar moves: subdivision, weld, relabeling, with a replayable trail.

Subdividing at a simplex A replaces the star of A by a cone over the
boundary of A joined with the old link; the weld is its inverse, applicable
when the link of a vertex factors as such a boundary joined with a residual
piece.  Relabeling renames vertices injectively.  Each move has a record
type so whole sequences can be applied, audited and (when no vertex split
is involved) inverted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .chains import Complex, Simplex, join, link, residual, simplex_boundary
from .errors import (
    FaceAbsent,
    MoveSequenceError,
    NotInjective,
    NotInvertible,
    NotWeldable,
    StellarError,
    VertexInUse,
)

__all__ = [
    "subdivide",
    "weld",
    "relabel",
    "apply_sequence",
    "invert_sequence",
    "weldable_pairs",
    "Subdivide",
    "Weld",
    "Relabel",
    "SplitVertex",
    "MergeVertex",
    "Move",
    "MoveSequence",
]


def subdivide(k: Complex, a: Simplex, v: int) -> Complex:
    """Star the face ``a`` at the fresh vertex ``v``.

    The star of ``a`` is replaced by the cone from ``v`` over the boundary
    of ``a`` joined with the old link.  Starring a single vertex would
    erase its star (the boundary of a vertex is zero), so that case
    degenerates to relabeling the vertex to ``v``; this keeps subdivide and
    weld mutually inverse.
    """
    if a.dimension < 0:
        raise FaceAbsent("cannot star the empty simplex")
    if not k.has_face(a):
        raise FaceAbsent(f"{a} is not a face of the complex")
    if v in k.vertices:
        raise VertexInUse(f"vertex {v} already occurs in the complex")
    if a.dimension == 0:
        return relabel(k, {a.vertices[0]: v})
    cone = join(Complex((v,)), simplex_boundary(a))
    return join(cone, link(a, k)) + residual(a, k)


def _divide_link(lnk: Complex, a: Simplex) -> Complex | None:
    """Solve ``lnk == join(simplex_boundary(a), B)`` for B, or None.

    Candidates are the complements of facets of ``a`` inside generators of
    ``lnk``; a candidate survives iff every facet of ``a`` joins with it
    into a generator.  The resulting maximal set must reproduce ``lnk``
    exactly, which also makes it the unique solution.
    """
    facets = a.facets()
    averts = set(a.vertices)
    candidates: set[Simplex] = set()
    for g in lnk.generators:
        for f in facets:
            if f.is_face_of(g):
                rest = g.difference(f)
                if not (set(rest.vertices) & averts):
                    candidates.add(rest)
    valid = [c for c in candidates if all(f.union(c) in lnk.generators for f in facets)]
    b = Complex(*valid)
    if join(simplex_boundary(a), b) != lnk:
        return None
    return b


def weld(k: Complex, a: Simplex, v: int) -> Complex:
    """Inverse of subdivision: remove vertex ``v``, restoring the star of ``a``.

    Requires that ``a`` is not a simplex of ``k`` and that the link of
    ``v`` factors as the boundary of ``a`` joined with some complex B; the
    factorization is found constructively and verified exactly.  The
    degenerate single-vertex ``a`` undoes a degenerate starring, i.e.
    relabels ``v`` back.
    """
    if a.dimension < 0:
        raise NotWeldable("cannot weld the empty simplex")
    if v not in k.vertices:
        raise NotWeldable(f"vertex {v} is not in the complex")
    if a.dimension == 0:
        w = a.vertices[0]
        if w in k.vertices:
            raise NotWeldable(f"{a} is a vertex of the complex")
        return relabel(k, {v: w})
    if k.has_face(a):
        raise NotWeldable(f"{a} is a simplex of the complex")
    lnk = link(Simplex(v), k)
    b = _divide_link(lnk, a)
    if b is None:
        raise NotWeldable(f"link of vertex {v} does not factor through the boundary of {a}")
    return join(Complex(a), b) + residual(Simplex(v), k)


def relabel(k: Complex, mapping: dict) -> Complex:
    """Rename vertices by ``mapping`` (vertices not mapped stay fixed)."""
    verts = k.vertices
    image = {u: mapping.get(u, u) for u in verts}
    if len(set(image.values())) != len(verts):
        raise NotInjective("relabeling is not injective on the vertex set")
    return Complex(*(Simplex(*(image[u] for u in g.vertices)) for g in k.generators))


@dataclass(frozen=True)
class Subdivide:
    simplex: Simplex
    vertex: int

    def apply(self, k: Complex) -> Complex:
        return subdivide(k, self.simplex, self.vertex)

    def inverted(self) -> "Weld":
        return Weld(self.simplex, self.vertex)


@dataclass(frozen=True)
class Weld:
    simplex: Simplex
    vertex: int

    def apply(self, k: Complex) -> Complex:
        return weld(k, self.simplex, self.vertex)

    def inverted(self) -> "Subdivide":
        return Subdivide(self.simplex, self.vertex)


@dataclass(frozen=True)
class Relabel:
    mapping: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, mapping: dict) -> "Relabel":
        return cls(tuple(sorted(mapping.items())))

    def apply(self, k: Complex) -> Complex:
        return relabel(k, dict(self.mapping))

    def inverted(self) -> "Relabel":
        return Relabel(tuple(sorted((b, a) for a, b in self.mapping)))


def _replace_in_generator(k: Complex, generator: Simplex, old: int, new: int) -> Complex:
    if generator not in k:
        raise FaceAbsent(f"{generator} is not a generator of the complex")
    if old not in generator:
        raise FaceAbsent(f"vertex {old} is not in {generator}")
    replaced = Simplex(*(new if u == old else u for u in generator.vertices))
    if replaced in k:
        raise VertexInUse(f"rewriting {generator} produces {replaced}, which already exists")
    return k + Complex(generator, replaced)


@dataclass(frozen=True)
class SplitVertex:
    """Replace ``old`` by the fresh vertex ``fresh`` inside one generator.

    Not a stellar move: it appears only in normalization traces, where it
    carries the induced identification of ``fresh`` with ``old``.  It can
    be replayed but not inverted.
    """

    generator: Simplex
    old: int
    fresh: int

    def apply(self, k: Complex) -> Complex:
        if self.fresh in k.vertices:
            raise VertexInUse(f"vertex {self.fresh} already occurs in the complex")
        return _replace_in_generator(k, self.generator, self.old, self.fresh)

    def inverted(self):
        raise NotInvertible("vertex splits are not stellar moves and cannot be inverted")


@dataclass(frozen=True)
class MergeVertex:
    """Replace ``old`` by the existing vertex ``onto`` inside one generator.

    The normalization uses this to align a generator with the apex link
    representative of an already-identified vertex; like a split it is
    replayable but not invertible.
    """

    generator: Simplex
    old: int
    onto: int

    def apply(self, k: Complex) -> Complex:
        return _replace_in_generator(k, self.generator, self.old, self.onto)

    def inverted(self):
        raise NotInvertible("vertex merges are not stellar moves and cannot be inverted")


Move = Union[Subdivide, Weld, Relabel, SplitVertex, MergeVertex]
MoveSequence = tuple  # tuple[Move, ...]


def apply_sequence(k: Complex, moves) -> Complex:
    """Left-to-right composition; fails with the index of the first bad move."""
    for i, m in enumerate(moves):
        try:
            k = m.apply(k)
        except StellarError as e:
            raise MoveSequenceError(i, m, e) from e
    return k


def invert_sequence(moves) -> tuple:
    """Reverse the sequence, swapping subdivides and welds.

    Rejects sequences containing vertex splits.
    """
    return tuple(m.inverted() for m in reversed(moves))


def weldable_pairs(k: Complex, min_dimension: int = 1) -> list[tuple[Simplex, int]]:
    """All (simplex, vertex) pairs at which a weld applies.

    Candidate simplexes are assembled from the link of each vertex: every
    facet of a valid weld simplex lies inside some link generator, and the
    one remaining vertex lies elsewhere in the link.  Relabel-like welds at
    single vertices are skipped by default.  Sorted for determinism.
    """
    out = []
    for v in sorted(k.vertices):
        lnk = link(Simplex(v), k)
        if lnk.is_zero:
            continue
        lverts = sorted(lnk.vertices)
        seen: set[Simplex] = set()
        for g in lnk.generators:
            gset = set(g.vertices)
            subs = [c for size in range(1, len(g) + 1) for c in itertools.combinations(g.vertices, size)]
            for x in lverts:
                if x in gset:
                    continue
                for f in subs:
                    a = Simplex(*f, x)
                    if a in seen or a.dimension < min_dimension:
                        continue
                    seen.add(a)
                    if k.has_face(a):
                        continue
                    if _divide_link(lnk, a) is not None:
                        out.append((a, v))
    out.sort(key=lambda pair: (pair[0].vertices, pair[1]))
    return out
