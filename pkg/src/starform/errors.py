"""Exception hierarchy.

``StellarError`` covers domain failures (a move precondition, a failed
factorization, a non-manifold input); the CLI maps these to exit code 1.
``Malformed`` and its subclasses cover document-level problems (bad JSON,
schema violations); the CLI maps these to exit code 2.
"""

from __future__ import annotations


class StellarError(Exception):
    """Base class for domain errors."""


class SharedVertex(StellarError):
    """Join of complexes that share a vertex."""

    def __init__(self, label: int):
        super().__init__(f"complexes share vertex {label}")
        self.label = label


class FaceAbsent(StellarError):
    """Subdivision at a simplex that is not a face of the complex."""


class VertexInUse(StellarError):
    """A fresh vertex label collides with an existing one."""


class NotWeldable(StellarError):
    """Weld preconditions fail; the message carries the reason."""


class NotInjective(StellarError):
    """Relabeling map is not injective on the vertex set."""


class NotInvertible(StellarError):
    """Move sequence contains a record with no stellar inverse."""


class MoveSequenceError(StellarError):
    """A move in a sequence failed; carries the failing index."""

    def __init__(self, index: int, move, cause: Exception):
        super().__init__(f"move {index} ({move!r}) failed: {cause}")
        self.index = index
        self.move = move


class NotUniform(StellarError):
    """Operation requires a nonempty complex of a single dimension."""


class NotConnected(StellarError):
    """Operation requires a connected complex."""


class NotManifold(StellarError):
    """Input fails the vertex-link manifold condition."""


class InteriorFaceDegree(StellarError):
    """A codimension-1 face lies in a number of generators other than two."""


class NoAdjacentGenerator(StellarError):
    """Normalization loop termination signal: nothing left to absorb."""


class NotRegular(StellarError):
    """Vertex equivalence fails the regularity conditions."""


class UnknownVertex(StellarError):
    """Equivalence class references a vertex outside the complex."""


class OpenSurface(StellarError):
    """Surface presentation requires a perfect generator pairing."""


class BadNormalForm(StellarError):
    """Star normal form fails a structural invariant."""


class Malformed(Exception):
    """Document cannot be parsed or violates the schema."""


class DimensionMismatch(Malformed):
    """Generator length disagrees with the declared dimension."""


class DuplicateVertexInGenerator(Malformed):
    """A generator lists the same vertex twice."""
