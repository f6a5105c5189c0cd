"""Chain model of simplicial complexes over the two-element field.

A complex is a formal sum of simplexes with coefficients in Z2, stored as
the set of simplexes carrying coefficient 1 (its generators).  Addition is
symmetric difference: adding a simplex twice cancels it.  Lower faces of
generators are never stored; they are enumerated on demand.

The basic operators are ``boundary``, ``join``, ``link`` and ``residual``.
For every simplex A and complex K the decomposition

    K == join(Complex(A), link(A, K)) + residual(A, K)

holds exactly, with ``+`` the Z2 sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import SharedVertex

__all__ = [
    "Simplex",
    "Complex",
    "Verdict",
    "boundary",
    "simplex_boundary",
    "join",
    "link",
    "residual",
    "is_closed",
    "connected_components",
    "euler_characteristic",
]


class Simplex:
    """An abstract simplex: a strictly increasing tuple of vertex labels.

    Labels are non-negative integers and only their equality and order are
    ever used.  Two simplexes are equal iff their vertex tuples are equal.
    The empty simplex ``Simplex()`` has dimension -1 and acts as the
    identity for ``join``; it shows up as the link of a top generator.

    >>> Simplex(3, 1, 2)
    (1 2 3)
    >>> Simplex(1, 2).dimension
    1
    """

    __slots__ = ("_vertices",)

    def __init__(self, *vertices: int):
        vs = sorted(vertices)
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
        for u, w in zip(vs, vs[1:]):
            if u == w:
                raise ValueError(f"duplicate vertex {u} in simplex")
        self._vertices = tuple(vs)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dimension(self) -> int:
        return len(self._vertices) - 1

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Simplex):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __lt__(self, other: "Simplex") -> bool:
        return self._vertices < other._vertices

    def __le__(self, other: "Simplex") -> bool:
        return self._vertices <= other._vertices

    def __repr__(self) -> str:
        return "(" + " ".join(str(v) for v in self._vertices) + ")"

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self._vertices) <= set(other._vertices)

    def facets(self) -> tuple["Simplex", ...]:
        """Codimension-1 faces.  A vertex has none (its boundary is zero)."""
        if self.dimension <= 0:
            return ()
        return tuple(Simplex(*c) for c in itertools.combinations(self._vertices, len(self._vertices) - 1))

    def faces(self) -> Iterator["Simplex"]:
        """All nonempty faces, including the simplex itself."""
        for k in range(1, len(self._vertices) + 1):
            for c in itertools.combinations(self._vertices, k):
                yield Simplex(*c)

    def union(self, other: "Simplex") -> "Simplex":
        return Simplex(*self._vertices, *other._vertices)

    def difference(self, other: "Simplex") -> "Simplex":
        drop = set(other._vertices)
        return Simplex(*(v for v in self._vertices if v not in drop))


def _as_simplex(obj) -> Simplex:
    return obj if isinstance(obj, Simplex) else Simplex(*obj)


class Complex:
    """A Z2 chain: the finite set of simplexes with coefficient 1.

    Construction already works over Z2, so listing a simplex twice cancels
    it.  Generators may have mixed dimensions (boundaries of non-closed
    complexes do); ``is_uniform`` reports whether they do not.

    >>> Complex((1, 2, 3), (2, 3, 4))
    (1 2 3)+(2 3 4)
    >>> Complex((1, 2), (1, 2))
    0
    """

    __slots__ = ("_generators",)

    def __init__(self, *generators):
        gens: set[Simplex] = set()
        for g in generators:
            s = _as_simplex(g)
            if s in gens:
                gens.remove(s)
            else:
                gens.add(s)
        self._generators = frozenset(gens)

    @classmethod
    def _wrap(cls, gens: frozenset) -> "Complex":
        out = cls.__new__(cls)
        out._generators = gens
        return out

    @property
    def generators(self) -> frozenset:
        return self._generators

    @property
    def is_zero(self) -> bool:
        return not self._generators

    @property
    def dimension(self) -> int:
        """Largest generator dimension; -1 for the zero complex."""
        return max((s.dimension for s in self._generators), default=-1)

    @property
    def is_uniform(self) -> bool:
        return len({s.dimension for s in self._generators}) <= 1

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for s in self._generators for v in s.vertices)

    def sorted_generators(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self._generators, key=lambda s: s.vertices))

    def __add__(self, other: "Complex") -> "Complex":
        if not isinstance(other, Complex):
            return NotImplemented
        return Complex._wrap(self._generators ^ other._generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._generators == other._generators

    def __hash__(self) -> int:
        return hash(self._generators)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_generators())

    def __len__(self) -> int:
        return len(self._generators)

    def __bool__(self) -> bool:
        return bool(self._generators)

    def __contains__(self, s: Simplex) -> bool:
        return s in self._generators

    def __repr__(self) -> str:
        if not self._generators:
            return "0"
        return "+".join(repr(s) for s in self.sorted_generators())

    def has_face(self, a: Simplex) -> bool:
        """True iff ``a`` is a face of some generator."""
        return any(a.is_face_of(g) for g in self._generators)

    def faces(self, dim: int) -> frozenset:
        """All distinct faces of the given dimension across generators."""
        out = set()
        for g in self._generators:
            if g.dimension >= dim:
                out.update(Simplex(*c) for c in itertools.combinations(g.vertices, dim + 1))
        return frozenset(out)

    def all_faces(self) -> dict[int, frozenset]:
        return {d: self.faces(d) for d in range(0, self.dimension + 1)}


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer with an optional human-readable witness."""

    value: str  # "yes" | "no" | "unknown"
    witness: str = ""

    @classmethod
    def yes(cls, witness: str = "") -> "Verdict":
        return cls("yes", witness)

    @classmethod
    def no(cls, witness: str = "") -> "Verdict":
        return cls("no", witness)

    @classmethod
    def unknown(cls, witness: str = "") -> "Verdict":
        return cls("unknown", witness)

    @property
    def is_yes(self) -> bool:
        return self.value == "yes"

    @property
    def is_no(self) -> bool:
        return self.value == "no"

    @property
    def is_unknown(self) -> bool:
        return self.value == "unknown"


def simplex_boundary(a: Simplex) -> Complex:
    """Boundary of one simplex: the sum of its facets (zero for a vertex)."""
    return Complex(*a.facets())


def boundary(k: Complex) -> Complex:
    """Z2 boundary operator, extended linearly over generators.

    Codimension-1 faces shared by an even number of generators cancel.

    >>> boundary(Complex((1, 2, 3)))
    (1 2)+(1 3)+(2 3)
    >>> boundary(boundary(Complex((1, 2, 3, 4))))
    0
    """
    acc: set[Simplex] = set()
    for g in k.generators:
        for f in g.facets():
            if f in acc:
                acc.remove(f)
            else:
                acc.add(f)
    return Complex._wrap(frozenset(acc))


def join(k: Complex, m: Complex) -> Complex:
    """Join of vertex-disjoint complexes: all unions of generator pairs.

    Bilinear over the Z2 sums.  Raises ``SharedVertex`` if the vertex sets
    meet; the join of anything with the zero complex is zero, and the
    complex on the empty simplex is the identity.
    """
    shared = k.vertices & m.vertices
    if shared:
        raise SharedVertex(min(shared))
    return Complex._wrap(frozenset(q.union(p) for q in k.generators for p in m.generators))


def link(a: Simplex, k: Complex) -> Complex:
    """Complementary faces of ``a`` inside the generators containing it.

    >>> link(Simplex(1, 2), boundary(Complex((1, 2, 3, 4))))
    (3)+(4)
    """
    return Complex._wrap(frozenset(g.difference(a) for g in k.generators if a.is_face_of(g)))


def residual(a: Simplex, k: Complex) -> Complex:
    """Generators of ``k`` that do not contain ``a``."""
    return Complex._wrap(frozenset(g for g in k.generators if not a.is_face_of(g)))


def is_closed(k: Complex) -> bool:
    return boundary(k).is_zero


def connected_components(k: Complex) -> list[Complex]:
    """Partition of the generators by transitive shared-vertex adjacency.

    Returns components sorted by least generator; empty for the zero
    complex.
    """
    gens = k.sorted_generators()
    parent = list(range(len(gens)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_vertex: dict[int, int] = {}
    for i, g in enumerate(gens):
        for v in g.vertices:
            if v in by_vertex:
                ri, rj = find(i), find(by_vertex[v])
                if ri != rj:
                    parent[ri] = rj
            else:
                by_vertex[v] = i
    groups: dict[int, list[Simplex]] = {}
    for i, g in enumerate(gens):
        groups.setdefault(find(i), []).append(g)
    comps = [Complex(*gs) for gs in groups.values()]
    comps.sort(key=lambda c: c.sorted_generators()[0].vertices)
    return comps


def euler_characteristic(k: Complex) -> int:
    """Alternating sum of distinct face counts, each face counted once.

    >>> euler_characteristic(boundary(Complex((1, 2, 3, 4))))
    2
    """
    seen: set[Simplex] = set()
    for g in k.generators:
        seen.update(g.faces())
    chi = 0
    for f in seen:
        chi += -1 if f.dimension % 2 else 1
    return chi
