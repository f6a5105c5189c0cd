"""Group presentations read off a star normal form, and abelian invariants.

For a surface (sphere of dimension 1) the quotient is a polygon with edges
identified in pairs: the presentation has one symbol per edge pair and the
single relator is the boundary word read once around the polygon.  In
higher dimensions the edge-path construction runs on the quotient
2-skeleton: one symbol per quotient edge, one relator per quotient
triangle.  In both cases a spanning tree of the quotient 1-skeleton
contributes one length-1 relator per tree edge, and the mandated
simplification (free reduction plus elimination of length-1 relators)
collapses those away, leaving generators only for edges outside the tree.

Abelian invariants come from integer diagonalization of the exponent-sum
matrix; they do not depend on the spanning tree or on orderings.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .chains import Complex, Simplex, connected_components
from .errors import BadNormalForm, OpenSurface
from .normalize import StarNormalForm
from .quotient import quotient_cells

__all__ = [
    "GroupPresentation",
    "AbelianInvariants",
    "presentation",
    "polygon_word",
    "abelianization",
    "presentation_text",
]

Letter = tuple  # (symbol, +1 | -1)
Word = tuple  # tuple[Letter, ...]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple  # tuple[str, ...]
    relators: tuple  # tuple[Word, ...]


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple = ()  # integers > 1 in divisibility order

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def _edge_symbols(keys) -> dict:
    """Assign x1, x2, ... to sorted quotient-edge keys."""
    return {key: f"x{i + 1}" for i, key in enumerate(sorted(keys))}


def _letter(symbols: dict, cu: int, cv: int) -> Letter:
    """Directed crossing of the quotient edge {cu, cv}, oriented least first."""
    if cu < cv:
        return (symbols[(cu, cv)], 1)
    return (symbols[(cv, cu)], -1)


def _free_reduce(word: Word) -> Word:
    out: list = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    # relators are cyclic words, so trim matching ends too
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out.pop()
        out.pop(0)
    return tuple(out)


def _simplify(generators: list, relators: list) -> GroupPresentation:
    """Free reduction plus elimination of length-1 relators, to a fixed point."""
    gens = list(generators)
    rels = [_free_reduce(w) for w in relators]
    while True:
        rels = [w for w in rels if w]
        short = next((w for w in rels if len(w) == 1), None)
        if short is None:
            break
        sym = short[0][0]
        gens.remove(sym)
        rels = [_free_reduce(tuple(l for l in w if l[0] != sym)) for w in rels if w != short]
    return GroupPresentation(tuple(gens), tuple(rels))


def _spanning_tree(nodes, edges: dict, rng: random.Random | None) -> set:
    """Breadth-first spanning tree of the quotient 1-skeleton.

    ``edges`` maps edge keys (c1, c2) to symbols.  Deterministic from the
    least node unless an rng is supplied, in which case neighbor order is
    shuffled (the presentation changes, its abelianization must not).
    """
    adjacency: dict[int, list] = {v: [] for v in nodes}
    for (c1, c2) in edges:
        adjacency[c1].append((c2, (c1, c2)))
        adjacency[c2].append((c1, (c1, c2)))
    for v in adjacency:
        adjacency[v].sort()
        if rng is not None:
            rng.shuffle(adjacency[v])
    start = min(nodes)
    seen = {start}
    queue = [start]
    tree: set = set()
    while queue:
        v = queue.pop(0)
        for u, key in adjacency[v]:
            if u not in seen:
                seen.add(u)
                tree.add(key)
                queue.append(u)
    if seen != set(nodes):
        raise BadNormalForm("quotient 1-skeleton is not connected")
    return tree


def polygon_word(nf: StarNormalForm) -> Word:
    """Boundary word read once around a 1-dimensional sphere.

    One letter per edge of the sphere, so the raw word length equals the
    edge count; paired edges repeat their symbol.  Starts at the least
    vertex, heading toward its least neighbor.
    """
    s = nf.sphere
    if s.dimension != 1:
        raise BadNormalForm("polygon words require a 1-dimensional sphere")
    adjacency: dict[int, list[int]] = {}
    for g in s:
        u, v = g.vertices
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    if any(len(ns) != 2 for ns in adjacency.values()) or len(connected_components(s)) != 1:
        raise BadNormalForm("sphere is not a single cycle")
    q = quotient_cells(s, nf.eq)
    symbols = _edge_symbols([c.key for c in q.cells(1)])
    rep = nf.eq.representative
    start = min(adjacency)
    walk = [start, min(adjacency[start])]
    while True:
        a, b = walk[-2], walk[-1]
        nxt = adjacency[b][0] if adjacency[b][0] != a else adjacency[b][1]
        if nxt == start:
            break
        walk.append(nxt)
    word = []
    for u, v in zip(walk, walk[1:] + [start]):
        word.append(_letter(symbols, rep(u), rep(v)))
    return tuple(word)


def _surface_presentation(nf: StarNormalForm, rng: random.Random | None) -> GroupPresentation:
    if nf.pairing.unpaired:
        raise OpenSurface(f"{len(nf.pairing.unpaired)} polygon edges have no partner")
    q = quotient_cells(nf.sphere, nf.eq)
    nodes = [c.key[0] for c in q.cells(0)]
    edge_keys = [c.key for c in q.cells(1)]
    symbols = _edge_symbols(edge_keys)
    tree = _spanning_tree(nodes, {k: symbols[k] for k in edge_keys}, rng)
    relators = [polygon_word(nf)]
    relators.extend(((symbols[k], 1),) for k in sorted(tree))
    return _simplify([symbols[k] for k in sorted(edge_keys)], relators)


def _edge_path_presentation(nf: StarNormalForm, rng: random.Random | None) -> GroupPresentation:
    q = quotient_cells(nf.sphere, nf.eq)
    nodes = [c.key[0] for c in q.cells(0)]
    edge_keys = [c.key for c in q.cells(1)]
    symbols = _edge_symbols(edge_keys)
    tree = _spanning_tree(nodes, {k: symbols[k] for k in edge_keys}, rng)
    relators: list[Word] = []
    for cell in q.cells(2):
        c1, c2, c3 = cell.key
        relators.append((_letter(symbols, c1, c2), _letter(symbols, c2, c3), _letter(symbols, c3, c1)))
    relators.extend(((symbols[k], 1),) for k in sorted(tree))
    return _simplify([symbols[k] for k in sorted(edge_keys)], relators)


def presentation(nf: StarNormalForm, rng: random.Random | None = None) -> GroupPresentation:
    """Presentation of the fundamental group of the quotient sphere.

    Dimension-1 spheres go through the polygon construction (and require a
    perfect pairing); higher spheres go through the edge-path group of the
    quotient 2-skeleton.  A 0-dimensional sphere cones to a circle or an
    arc depending on whether its two points are identified.
    """
    d = nf.sphere.dimension
    if d < 0:
        raise BadNormalForm("normal form has an empty sphere")
    if d == 0:
        if nf.pairing.pairs:
            return GroupPresentation(("x1",), ())
        return GroupPresentation((), ())
    if d == 1:
        return _surface_presentation(nf, rng)
    return _edge_path_presentation(nf, rng)


def _diagonalize(matrix: list) -> list:
    """Integer diagonal of a matrix under unimodular row/column operations.

    Classic pivoting: move the smallest nonzero entry to the pivot, clear
    its row and column by division with remainder, fold in any submatrix
    entry the pivot does not divide, repeat.  The diagonal is then made
    non-negative and arranged so each entry divides the next.
    """
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            for i in range(t + 1, rows):
                q = m[i][t] // m[t][t]
                if q:
                    for j in range(cols):
                        m[i][j] -= q * m[t][j]
            for j in range(t + 1, cols):
                q = m[t][j] // m[t][t]
                if q:
                    for i in range(rows):
                        m[i][j] -= q * m[i][t]
            dirty = next(
                ((i, j) for i in range(t, rows) for j in range(t, cols) if (i, j) != (t, t) and (m[i][t] or m[t][j])),
                None,
            )
            if dirty is None:
                stray = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % m[t][t]),
                    None,
                )
                if stray is None:
                    break
                for j in range(cols):
                    m[t][j] += m[stray[0]][j]
                continue
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            pi, pj = pivot
            m[t], m[pi] = m[pi], m[t]
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(m[t][t]))
        t += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    """Free rank and torsion of the abelianized group.

    Builds the exponent-sum matrix (one row per relator) and diagonalizes
    it over the integers.
    """
    index = {g: i for i, g in enumerate(p.generators)}
    matrix = []
    for w in p.relators:
        row = [0] * len(p.generators)
        for sym, exp in w:
            row[index[sym]] += exp
        matrix.append(row)
    if not matrix or not p.generators:
        return AbelianInvariants(len(p.generators), ())
    diag = [d for d in _diagonalize(matrix) if d != 0]
    return AbelianInvariants(len(p.generators) - len(diag), tuple(d for d in diag if d > 1))


def presentation_text(p: GroupPresentation) -> str:
    """Conventional angle-bracket form, e.g. ``<x1, x2 | x1 x2 x1^-1 x2^-1>``."""

    def word_text(w: Word) -> str:
        return " ".join(sym if exp == 1 else f"{sym}^-1" for sym, exp in w)

    gens = ", ".join(p.generators)
    rels = ", ".join(word_text(w) for w in p.relators)
    return f"⟨{gens} | {rels}⟩"
