import random

import pytest

from starform import (
    Complex,
    Shape,
    Simplex,
    apply_sequence,
    boundary,
    is_stellar_manifold,
    join,
    link,
    recognize_ball_or_sphere,
    residual,
    subdivide,
    weld,
    weldable_pairs,
)
from starform.errors import NotUniform
from starform.fixtures import octahedron, projective_plane6, simplex, sphere, torus7
from starform.recognition import _is_simplex_boundary


def cycle(n, offset=0):
    return Complex(*(Simplex(offset + i, offset + (i % n) + 1) for i in range(1, n + 1)))


def path(n):
    return Complex(*(Simplex(i, i + 1) for i in range(1, n)))


def test_requires_uniform_nonempty():
    with pytest.raises(NotUniform):
        recognize_ball_or_sphere(Complex())
    with pytest.raises(NotUniform):
        recognize_ball_or_sphere(Complex((1,), (2, 3)))


def test_dimension_zero():
    assert recognize_ball_or_sphere(Complex((1,))).verdict is Shape.BALL
    assert recognize_ball_or_sphere(Complex((1,), (2,))).verdict is Shape.SPHERE
    assert recognize_ball_or_sphere(Complex((1,), (2,), (3,))).verdict is Shape.NEITHER


def test_dimension_one():
    for n in range(3, 9):
        assert recognize_ball_or_sphere(cycle(n)).verdict is Shape.SPHERE
    for n in range(2, 7):
        assert recognize_ball_or_sphere(path(n)).verdict is Shape.BALL
    two_cycles = cycle(3) + cycle(3, offset=10)
    assert recognize_ball_or_sphere(two_cycles).verdict is Shape.NEITHER
    figure8 = Complex((1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5))
    assert recognize_ball_or_sphere(figure8).verdict is Shape.NEITHER


def test_dimension_one_certificates_replay():
    for k in (cycle(6), path(5)):
        res = recognize_ball_or_sphere(k)
        end = apply_sequence(k, res.certificate)
        if res.verdict is Shape.SPHERE:
            assert _is_simplex_boundary(end)
        else:
            assert len(end) == 1


def test_already_model_shapes():
    res = recognize_ball_or_sphere(boundary(Complex((1, 2, 3, 4))))
    assert res.verdict is Shape.SPHERE and res.certificate == ()
    res = recognize_ball_or_sphere(Complex((1, 2, 3)))
    assert res.verdict is Shape.BALL and res.certificate == ()


def test_dimension_two():
    assert recognize_ball_or_sphere(octahedron()).verdict is Shape.SPHERE
    assert recognize_ball_or_sphere(sphere(2)).verdict is Shape.SPHERE
    assert recognize_ball_or_sphere(Complex((1, 2, 3), (2, 3, 4))).verdict is Shape.BALL
    assert recognize_ball_or_sphere(torus7()).verdict is Shape.NEITHER
    assert recognize_ball_or_sphere(projective_plane6()).verdict is Shape.NEITHER
    pinched = Complex((1, 2, 3), (1, 4, 5))  # two triangles sharing one vertex
    assert recognize_ball_or_sphere(pinched).verdict is Shape.NEITHER


def test_dimension_two_subdivided():
    k = subdivide(octahedron(), Simplex(1, 3), 9)
    assert recognize_ball_or_sphere(k).verdict is Shape.SPHERE
    b = subdivide(Complex((1, 2, 3)), Simplex(1, 2, 3), 9)
    assert recognize_ball_or_sphere(b).verdict is Shape.BALL


def test_dimension_three_immediate():
    assert recognize_ball_or_sphere(sphere(3)).verdict is Shape.SPHERE
    assert recognize_ball_or_sphere(simplex(3)).verdict is Shape.BALL


def test_dimension_three_search_with_certificate():
    k = subdivide(subdivide(sphere(3), Simplex(1, 2), 9), Simplex(3, 9), 10)
    res = recognize_ball_or_sphere(k, budget=300, seed=2)
    assert res.verdict is Shape.SPHERE
    assert _is_simplex_boundary(apply_sequence(k, res.certificate))

    b = subdivide(simplex(3), Simplex(1, 2, 3, 4), 9)
    res = recognize_ball_or_sphere(b, budget=300, seed=2)
    assert res.verdict is Shape.BALL
    assert len(apply_sequence(b, res.certificate)) == 1


def test_dimension_three_budget_exhaustion():
    k = subdivide(sphere(3), Simplex(1, 2), 9)
    res = recognize_ball_or_sphere(k, budget=0)
    assert res.verdict is Shape.UNKNOWN


def test_dimension_three_link_obstruction():
    # suspension of the torus: the two cone points have torus links
    susp = join(torus7(), Complex((8,), (9,)))
    res = recognize_ball_or_sphere(susp, budget=50)
    assert res.verdict is Shape.NEITHER
    assert "link" in res.diagnostics


def test_dimension_three_euler_obstruction():
    # disjoint union is caught by connectivity; a closed complex with chi != 0
    # in odd dimension cannot be a sphere
    k = sphere(3)
    assert recognize_ball_or_sphere(k + _shift(sphere(3), 20), budget=10).verdict is Shape.NEITHER


def _shift(k, offset):
    return Complex(*(Simplex(*(v + offset for v in g.vertices)) for g in k.generators))


def test_verdict_invariant_under_moves_dim_le_2():
    rng = random.Random(7)
    for k in (cycle(5), path(4), octahedron(), torus7(), Complex((1, 2, 3), (2, 3, 4))):
        base = recognize_ball_or_sphere(k).verdict
        faces = sorted(f for g in k.generators for f in g.faces() if f.dimension >= 1)
        a = faces[rng.randrange(len(faces))]
        split = subdivide(k, a, max(k.vertices) + 1)
        assert recognize_ball_or_sphere(split).verdict is base
        welds = weldable_pairs(k)
        if welds:
            a, v = welds[rng.randrange(len(welds))]
            assert recognize_ball_or_sphere(weld(k, a, v)).verdict is base


def test_is_stellar_manifold_fixtures():
    assert is_stellar_manifold(octahedron()).verdict.is_yes
    assert is_stellar_manifold(torus7()).verdict.is_yes
    assert is_stellar_manifold(projective_plane6()).verdict.is_yes
    assert is_stellar_manifold(sphere(3)).verdict.is_yes
    assert is_stellar_manifold(Complex((1, 2, 3))).verdict.is_yes


def test_is_stellar_manifold_rejects_pinch():
    report = is_stellar_manifold(Complex((1, 2, 3), (1, 4, 5)))
    assert report.verdict.is_no
    assert report.per_vertex[1].verdict is Shape.NEITHER
    assert report.per_vertex[2].verdict is Shape.BALL


def test_is_stellar_manifold_requires_uniform():
    with pytest.raises(NotUniform):
        is_stellar_manifold(Complex((1,), (2, 3)))


def test_residual_of_vertex_in_closed_manifold_is_manifold():
    for m in (sphere(1), sphere(2), sphere(3), octahedron(), torus7(), projective_plane6()):
        assert boundary(m).is_zero
        for v in sorted(m.vertices):
            q = residual(Simplex(v), m)
            assert is_stellar_manifold(q).verdict.is_yes


def test_certificates_on_sphere_results_verify():
    # every certificate-carrying result must replay to the model shape
    cases = [cycle(7), path(6), sphere(2), subdivide(sphere(3), Simplex(1, 2), 9)]
    for k in cases:
        res = recognize_ball_or_sphere(k, budget=300, seed=3)
        if res.certificate is None:
            continue
        end = apply_sequence(k, res.certificate)
        if res.verdict is Shape.SPHERE:
            assert _is_simplex_boundary(end)
        elif res.verdict is Shape.BALL:
            assert len(end) == 1
