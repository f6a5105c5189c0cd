"""Named desk-scale fixtures used by tests, scripts, and the CLI."""

from __future__ import annotations

from .chains import Complex, Simplex, boundary

__all__ = ["simplex", "sphere", "octahedron", "torus7", "projective_plane6", "fixture", "FIXTURE_NAMES"]


def simplex(k: int) -> Complex:
    """The k-simplex on vertices 1..k+1."""
    if k < 0:
        raise ValueError("dimension must be non-negative")
    return Complex(tuple(range(1, k + 2)))


def sphere(k: int) -> Complex:
    """The boundary of the (k+1)-simplex: the minimal k-sphere."""
    if k < 0:
        raise ValueError("dimension must be non-negative")
    return boundary(Complex(tuple(range(1, k + 3))))


def octahedron() -> Complex:
    """Antipodal pairs {1,2}, {3,4}, {5,6}; eight triangles, a 2-sphere."""
    return Complex(*(Simplex(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)))


def torus7() -> Complex:
    """The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    gens = []
    for i in range(7):
        gens.append(Simplex(i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))
        gens.append(Simplex(i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))
    return Complex(*gens)


def projective_plane6() -> Complex:
    """The 6-vertex projective plane: antipodal quotient of the icosahedron."""
    triangles = [
        (1, 2, 3),
        (1, 2, 4),
        (1, 3, 5),
        (1, 4, 6),
        (1, 5, 6),
        (2, 3, 6),
        (2, 4, 5),
        (2, 5, 6),
        (3, 4, 5),
        (3, 4, 6),
    ]
    return Complex(*triangles)


FIXTURE_NAMES = ("simplex-k", "sphere-k", "octahedron", "torus7", "rp2-6")


def fixture(name: str) -> Complex:
    """Look up a fixture by CLI name; ``simplex-k``/``sphere-k`` take a number."""
    if name == "octahedron":
        return octahedron()
    if name == "torus7":
        return torus7()
    if name == "rp2-6":
        return projective_plane6()
    for prefix, builder in (("simplex-", simplex), ("sphere-", sphere)):
        if name.startswith(prefix):
            try:
                k = int(name[len(prefix):])
            except ValueError:
                break
            return builder(k)
    raise KeyError(name)
