"""Regular vertex equivalences and the quotient cell structure they induce.

An equivalence relation on the vertices of a complex is regular when

  (i)  no generator contains two equivalent vertices, and
  (ii) each generator matches at most one other generator class for class.

A regular equivalence pairs up matching generators and gives the quotient
a well-defined cell structure: faces are identified iff their vertex-class
sets coincide.  The cone over such a quotient keeps one top cell per
original generator (cone cells are never identified, only faces of the
base are), which is what makes its Euler characteristic agree with the
manifold the normalization started from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Complex, Simplex, Verdict, euler_characteristic
from .errors import NotRegular, UnknownVertex

__all__ = [
    "RegularEquivalence",
    "GeneratorPairing",
    "QuotientCell",
    "QuotientComplex",
    "validate_regular",
    "derive_pairing",
    "quotient_cells",
    "cone_euler_characteristic",
]


@dataclass(frozen=True)
class RegularEquivalence:
    """Partition of vertex labels; singleton classes are implicit.

    Stored canonically: only classes of size at least two, each a frozen
    set, sorted by least element.  ``representative`` maps a vertex to the
    least member of its class.
    """

    classes: tuple[frozenset, ...] = ()

    @classmethod
    def identity(cls) -> "RegularEquivalence":
        return cls(())

    @classmethod
    def from_classes(cls, classes) -> "RegularEquivalence":
        seen: set[int] = set()
        keep = []
        for c in classes:
            fs = frozenset(c)
            for v in fs:
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise ValueError(f"vertex labels must be non-negative integers, got {v!r}")
            if fs & seen:
                raise ValueError("equivalence classes are not disjoint")
            seen |= fs
            if len(fs) >= 2:
                keep.append(fs)
        keep.sort(key=min)
        return cls(tuple(keep))

    @classmethod
    def from_pairs(cls, pairs) -> "RegularEquivalence":
        out = cls.identity()
        for u, v in pairs:
            out = out.with_pair(u, v)
        return out

    def with_pair(self, u: int, v: int) -> "RegularEquivalence":
        """Merge the classes of ``u`` and ``v``."""
        merged = {u, v}
        rest = []
        for c in self.classes:
            if u in c or v in c:
                merged |= c
            else:
                rest.append(c)
        rest.append(frozenset(merged))
        return RegularEquivalence.from_classes(rest)

    @property
    def is_identity(self) -> bool:
        return not self.classes

    def class_of(self, v: int) -> frozenset:
        for c in self.classes:
            if v in c:
                return c
        return frozenset((v,))

    def representative(self, v: int) -> int:
        for c in self.classes:
            if v in c:
                return min(c)
        return v

    def members(self) -> frozenset:
        return frozenset(v for c in self.classes for v in c)


@dataclass(frozen=True)
class GeneratorPairing:
    """Disjoint generator pairs plus the leftovers, covering all generators."""

    pairs: tuple = ()  # tuple[tuple[Simplex, Simplex], ...]
    unpaired: tuple = ()  # tuple[Simplex, ...]


def _class_key(eq: RegularEquivalence, face: Simplex) -> tuple[int, ...]:
    return tuple(sorted(eq.representative(v) for v in face.vertices))


def validate_regular(s: Complex, eq: RegularEquivalence) -> Verdict:
    """Check conditions (i) and (ii) on the generators of ``s``."""
    outside = sorted(eq.members() - s.vertices)
    if outside:
        raise UnknownVertex(f"equivalence mentions vertex {outside[0]}, which is not in the complex")
    keys: dict[tuple[int, ...], list[Simplex]] = {}
    for g in s:
        reps = [eq.representative(v) for v in g.vertices]
        if len(set(reps)) != len(reps):
            return Verdict.no(f"condition (i): generator {g} contains two equivalent vertices")
        keys.setdefault(tuple(sorted(reps)), []).append(g)
    for key in sorted(keys):
        group = keys[key]
        if len(group) > 2:
            names = ", ".join(repr(g) for g in sorted(group))
            return Verdict.no(f"condition (ii): generators {names} all share one vertex-class set")
    return Verdict.yes()


def derive_pairing(s: Complex, eq: RegularEquivalence) -> GeneratorPairing:
    """Pair each generator with the unique class-matching partner, if any."""
    verdict = validate_regular(s, eq)
    if not verdict.is_yes:
        raise NotRegular(verdict.witness)
    keys: dict[tuple[int, ...], list[Simplex]] = {}
    for g in s:
        keys.setdefault(_class_key(eq, g), []).append(g)
    pairs = []
    unpaired = []
    for key in sorted(keys):
        group = sorted(keys[key])
        if len(group) == 2:
            pairs.append((group[0], group[1]))
        else:
            unpaired.append(group[0])
    pairs.sort(key=lambda p: p[0].vertices)
    unpaired.sort()
    return GeneratorPairing(tuple(pairs), tuple(unpaired))


@dataclass(frozen=True)
class QuotientCell:
    dimension: int
    key: tuple[int, ...]  # sorted class representatives
    members: tuple  # faces of the original complex in this orbit
    boundary_keys: tuple  # keys of the facets of a representative member

    def __repr__(self) -> str:
        return f"QuotientCell(dim={self.dimension}, key={self.key}, size={len(self.members)})"


@dataclass(frozen=True)
class QuotientComplex:
    """Cells of the quotient: face orbits under vertex-class equality."""

    cells_by_dimension: tuple  # tuple[tuple[QuotientCell, ...], ...] indexed by dimension

    def cells(self, dim: int):
        if 0 <= dim < len(self.cells_by_dimension):
            return self.cells_by_dimension[dim]
        return ()

    def cell_count(self, dim: int) -> int:
        return len(self.cells(dim))

    def cell(self, dim: int, key: tuple[int, ...]) -> QuotientCell:
        for c in self.cells(dim):
            if c.key == key:
                return c
        raise KeyError(key)

    def euler_characteristic(self) -> int:
        chi = 0
        for d, cells in enumerate(self.cells_by_dimension):
            chi += len(cells) if d % 2 == 0 else -len(cells)
        return chi


def quotient_cells(s: Complex, eq: RegularEquivalence) -> QuotientComplex:
    """Group the faces of ``s`` by equal vertex-class sets.

    Identifying any two faces whose class sets coincide is the closure of
    the generator pairing to lower faces; it is what makes the quotient a
    cell complex with a computable Euler characteristic.
    """
    verdict = validate_regular(s, eq)
    if not verdict.is_yes:
        raise NotRegular(verdict.witness)
    by_dim = []
    for d in range(0, s.dimension + 1):
        orbits: dict[tuple[int, ...], list[Simplex]] = {}
        for f in sorted(s.faces(d)):
            orbits.setdefault(_class_key(eq, f), []).append(f)
        cells = []
        for key in sorted(orbits):
            members = tuple(sorted(orbits[key]))
            rep = members[0]
            bkeys = tuple(sorted(_class_key(eq, facet) for facet in rep.facets()))
            cells.append(QuotientCell(d, key, members, bkeys))
        by_dim.append(tuple(cells))
    return QuotientComplex(tuple(by_dim))


def cone_euler_characteristic(s: Complex, eq: RegularEquivalence) -> int:
    """Euler characteristic of the cone over the quotient of ``s``.

    Cells: the apex, the quotient cells of ``s``, and one cone cell per
    face of ``s``.  Cone cells are never identified, even over identified
    base cells, so the alternating sum telescopes to
    ``1 + chi(quotient) - chi(s)``.
    """
    q = quotient_cells(s, eq)
    return 1 + q.euler_characteristic() - euler_characteristic(s)
