import pytest

from starform import (
    Complex,
    RegularEquivalence,
    Simplex,
    cone_euler_characteristic,
    derive_pairing,
    euler_characteristic,
    normalize,
    quotient_cells,
    validate_regular,
)
from starform.errors import NotRegular, UnknownVertex
from starform.fixtures import octahedron, projective_plane6, sphere, torus7


def test_equivalence_canonical_form():
    eq = RegularEquivalence.from_classes([[3, 1], [2], [5, 4]])
    assert eq.classes == (frozenset({1, 3}), frozenset({4, 5}))
    assert eq.representative(3) == 1
    assert eq.representative(7) == 7
    assert eq.class_of(2) == frozenset({2})
    assert RegularEquivalence.identity().is_identity


def test_equivalence_with_pair_merges():
    eq = RegularEquivalence.from_pairs([(1, 2), (3, 4), (2, 3)])
    assert eq.classes == (frozenset({1, 2, 3, 4}),)


def test_equivalence_rejects_overlap():
    with pytest.raises(ValueError):
        RegularEquivalence.from_classes([[1, 2], [2, 3]])


def test_validate_identity_is_regular():
    for s in (sphere(1), torus7(), Complex((1, 2), (3, 4))):
        assert validate_regular(s, RegularEquivalence.identity()).is_yes


def test_validate_condition_i():
    verdict = validate_regular(Complex((1, 2)), RegularEquivalence.from_classes([[1, 2]]))
    assert verdict.is_no
    assert "(i)" in verdict.witness


def test_validate_condition_ii():
    square = Complex((1, 2), (2, 3), (3, 4), (1, 4))
    eq = RegularEquivalence.from_classes([[1, 3], [2, 4]])
    # all four edges land on the same class pair, oracle: enumerate keys
    keys = {tuple(sorted(eq.representative(v) for v in g.vertices)) for g in square}
    assert keys == {(1, 2)}
    verdict = validate_regular(square, eq)
    assert verdict.is_no
    assert "(ii)" in verdict.witness


def test_validate_unknown_vertex():
    with pytest.raises(UnknownVertex):
        validate_regular(Complex((1, 2)), RegularEquivalence.from_classes([[1, 9]]))


def test_derive_pairing_identity_unpaired():
    pairing = derive_pairing(sphere(1), RegularEquivalence.identity())
    assert pairing.pairs == ()
    assert len(pairing.unpaired) == 3


def test_derive_pairing_forced_match():
    s = Complex((1, 2), (3, 4))
    eq = RegularEquivalence.from_classes([[1, 3], [2, 4]])
    pairing = derive_pairing(s, eq)
    assert pairing.pairs == ((Simplex(1, 2), Simplex(3, 4)),)
    assert pairing.unpaired == ()


def test_derive_pairing_rejects_non_regular():
    with pytest.raises(NotRegular):
        derive_pairing(Complex((1, 2)), RegularEquivalence.from_classes([[1, 2]]))


def test_quotient_cells_identity():
    q = quotient_cells(sphere(1), RegularEquivalence.identity())
    assert q.cell_count(0) == 3
    assert q.cell_count(1) == 3
    assert q.euler_characteristic() == 0


def test_quotient_cells_hexagon_antipodal():
    hexagon = Complex((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6))
    eq = RegularEquivalence.from_classes([[1, 4], [2, 5], [3, 6]])
    assert validate_regular(hexagon, eq).is_yes
    q = quotient_cells(hexagon, eq)
    assert q.cell_count(0) == 3
    assert q.cell_count(1) == 3
    # gluing a disk onto the quotient cycle: apex + cone cells over six edges
    assert cone_euler_characteristic(hexagon, eq) == 1


def test_quotient_incidence_keys():
    hexagon = Complex((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6))
    eq = RegularEquivalence.from_classes([[1, 4], [2, 5], [3, 6]])
    q = quotient_cells(hexagon, eq)
    edge = q.cell(1, (1, 2))
    assert edge.members == (Simplex(1, 2), Simplex(4, 5))
    assert edge.boundary_keys == ((1,), (2,))


def test_quotient_cell_counts_bounded_by_faces():
    s = torus7()
    q = quotient_cells(s, RegularEquivalence.identity())
    for d in range(0, s.dimension + 1):
        assert q.cell_count(d) == len(s.faces(d))


def test_cone_euler_matches_input_on_fixtures():
    for m in (sphere(2), octahedron(), torus7(), projective_plane6(), sphere(3)):
        nf = normalize(m)
        assert cone_euler_characteristic(nf.sphere, nf.eq) == euler_characteristic(m)


def test_normalize_equivalences_are_regular():
    for m in (sphere(2), octahedron(), torus7(), projective_plane6(), sphere(3)):
        nf = normalize(m)
        assert validate_regular(nf.sphere, nf.eq).is_yes
