import pytest
from hypothesis import given
from hypothesis import strategies as st

from starform import (
    Complex,
    Relabel,
    Simplex,
    SplitVertex,
    Subdivide,
    Weld,
    apply_sequence,
    boundary,
    connected_components,
    euler_characteristic,
    invert_sequence,
    is_closed,
    relabel,
    subdivide,
    weld,
    weldable_pairs,
)
from starform.errors import (
    FaceAbsent,
    MoveSequenceError,
    NotInjective,
    NotInvertible,
    NotWeldable,
    VertexInUse,
)
from starform.fixtures import octahedron, sphere, torus7

from .strategies import complex_and_face


def test_subdivide_whole_triangle():
    got = subdivide(Complex((1, 2, 3)), Simplex(1, 2, 3), 9)
    assert got == Complex((9, 1, 2), (9, 1, 3), (9, 2, 3))


def test_subdivide_edge_of_triangle():
    got = subdivide(Complex((1, 2, 3)), Simplex(1, 2), 9)
    assert got == Complex((9, 1, 3), (9, 2, 3))


def test_subdivide_face_absent():
    with pytest.raises(FaceAbsent):
        subdivide(Complex((1, 2, 3)), Simplex(4, 5), 9)


def test_subdivide_vertex_in_use():
    with pytest.raises(VertexInUse):
        subdivide(Complex((1, 2, 3)), Simplex(1, 2), 3)


def test_subdivide_at_vertex_relabels():
    got = subdivide(Complex((1, 2, 3)), Simplex(1), 9)
    assert got == Complex((2, 3, 9))


def test_weld_restores_triangle():
    got = weld(Complex((9, 1, 3), (9, 2, 3)), Simplex(1, 2), 9)
    assert got == Complex((1, 2, 3))


def test_weld_inverts_subdivide_on_sphere():
    k = boundary(Complex((1, 2, 3, 4)))
    assert weld(subdivide(k, Simplex(1, 2), 9), Simplex(1, 2), 9) == k


def test_weld_rejects_present_simplex():
    with pytest.raises(NotWeldable):
        weld(Complex((1, 2, 3)), Simplex(1, 2), 1)


def test_weld_rejects_bad_factorization():
    # link of 1 in a lone triangle is a single edge, not a join with an edge boundary
    with pytest.raises(NotWeldable):
        weld(Complex((1, 2, 3)), Simplex(2, 4), 1)


def test_relabel_examples():
    assert relabel(Complex((1, 2, 3)), {1: 4, 2: 5, 3: 6}) == Complex((4, 5, 6))
    k = torus7()
    assert relabel(k, {}) == k
    with pytest.raises(NotInjective):
        relabel(Complex((1, 2)), {1: 2, 2: 2})
    with pytest.raises(NotInjective):
        relabel(Complex((1, 2, 3)), {1: 3})


def test_relabel_preserves_counts():
    k = torus7()
    got = relabel(k, {v: v + 10 for v in sorted(k.vertices)})
    assert len(got) == len(k)
    assert euler_characteristic(got) == euler_characteristic(k)


def test_apply_sequence_inverse_pair():
    k = boundary(Complex((1, 2, 3, 4)))
    moves = (Subdivide(Simplex(1, 2), 9), Weld(Simplex(1, 2), 9))
    assert apply_sequence(k, moves) == k
    assert apply_sequence(k, ()) == k


def test_apply_sequence_two_subdivisions():
    got = apply_sequence(Complex((1, 2, 3)), (Subdivide(Simplex(1, 2), 9), Subdivide(Simplex(3, 9), 10)))
    assert got == Complex((1, 3, 10), (2, 3, 10), (1, 9, 10), (2, 9, 10))


def test_apply_sequence_reports_failing_index():
    k = Complex((1, 2, 3))
    with pytest.raises(MoveSequenceError) as e:
        apply_sequence(k, (Subdivide(Simplex(1, 2), 9), Subdivide(Simplex(1, 2), 10)))
    assert e.value.index == 1


def test_invert_sequence_round_trips():
    k = boundary(Complex((1, 2, 3, 4)))
    moves = (Subdivide(Simplex(1, 2), 9), Subdivide(Simplex(3, 9), 10), Relabel.from_dict({1: 20}))
    forward = apply_sequence(k, moves)
    assert apply_sequence(forward, invert_sequence(moves)) == k


def test_invert_sequence_rejects_splits():
    with pytest.raises(NotInvertible):
        invert_sequence((SplitVertex(Simplex(1, 2, 3), 3, 9),))


def test_split_vertex_apply():
    k = Complex((1, 2, 3), (2, 3, 4))
    got = SplitVertex(Simplex(2, 3, 4), 4, 9).apply(k)
    assert got == Complex((1, 2, 3), (2, 3, 9))
    with pytest.raises(VertexInUse):
        SplitVertex(Simplex(1, 2, 3), 1, 4).apply(k)
    with pytest.raises(FaceAbsent):
        SplitVertex(Simplex(1, 2, 4), 1, 9).apply(k)


def test_weldable_pairs_finds_inverse():
    k = boundary(Complex((1, 2, 3, 4)))
    split = subdivide(k, Simplex(1, 2), 9)
    assert (Simplex(1, 2), 9) in weldable_pairs(split)


@given(complex_and_face(), st.data())
def test_subdivide_weld_round_trip(pair, data):
    k, a = pair
    fresh = max(k.vertices) + 1
    assert weld(subdivide(k, a, fresh), a, fresh) == k


@given(complex_and_face())
def test_moves_preserve_invariants(pair):
    k, a = pair
    fresh = max(k.vertices) + 1
    split = subdivide(k, a, fresh)
    assert is_closed(split) == is_closed(k)
    assert euler_characteristic(split) == euler_characteristic(k)
    assert len(connected_components(split)) == len(connected_components(k))


@given(complex_and_face())
def test_subdivide_vertex_count(pair):
    k, a = pair
    fresh = max(k.vertices) + 1
    split = subdivide(k, a, fresh)
    if a.dimension >= 1:
        assert len(split.vertices) == len(k.vertices) + 1
        assert len(weld(split, a, fresh).vertices) == len(k.vertices)
    else:
        assert len(split.vertices) == len(k.vertices)


def test_moves_preserve_manifoldness_on_fixtures():
    # single random-ish moves on small manifolds keep every link a ball or sphere
    from starform import is_stellar_manifold

    for k in (sphere(2), octahedron()):
        for a in sorted(k.faces(1))[:4]:
            split = subdivide(k, a, max(k.vertices) + 1)
            assert is_stellar_manifold(split).verdict.is_yes
