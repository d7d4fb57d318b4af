"""Tests for realizing catalogued polytopes as vertex actions."""

import pytest

from hypertope_extensions.catalog.families import (
    CELL24,
    CELL120,
    CELL600,
    DODECAHEDRON,
    cube,
    orthoplex,
    polygon,
)
from hypertope_extensions.catalog.realize import (
    central_involution,
    coxeter_matrix,
    realize,
)
from hypertope_extensions.errors import ResourceLimitExceeded
from hypertope_extensions.fp.presentation import string_matrix
from hypertope_extensions.perm.permutation import Permutation, compose


def _assert_central(polytope):
    alpha = polytope.alpha

    assert alpha.is_involution()
    assert all(alpha(vertex) != vertex for vertex in range(polytope.degree))
    assert all(alpha.commutes_with(tau) for tau in polytope.taus)


class TestRealize:
    """Test cases for realize."""

    def test_square(self, square):
        """Test the square on four vertices."""
        assert square.degree == 4
        assert square.group.order == 8
        assert square.method == "cosets"
        rotation = compose(square.taus[0], square.taus[1])
        assert rotation.order() == 4
        assert square.alpha == rotation.power(2)

    def test_icosahedron(self, icosahedron):
        """Test the icosahedron and its vertex stabilizer."""
        assert icosahedron.degree == 12
        assert icosahedron.group.order == 120
        assert icosahedron.stabilizer.order == 10
        assert coxeter_matrix(icosahedron.taus) == string_matrix((3, 5))

    def test_base_vertex_fixed(self, icosahedron):
        """Test that the stabilizer generators fix the base vertex."""
        base = icosahedron.base_vertex

        assert all(tau(base) == base for tau in icosahedron.taus[1:])
        assert icosahedron.taus[0](base) != base

    def test_central_involution(self, icosahedron):
        """Test alpha is a central fixed-point-free involution."""
        alpha = central_involution(icosahedron)

        assert alpha == icosahedron.alpha
        assert alpha.is_involution()
        assert not alpha.fixed_points()
        assert all(alpha.commutes_with(tau) for tau in icosahedron.taus)
        assert icosahedron.antipode(icosahedron.antipode(3)) == 3

    def test_cube_models_agree(self, cube3):
        """Test that the coordinate and coset models have the same group."""
        cosets = realize(cube(3), method="cosets")

        assert cube3.method == "coordinates"
        assert cube3.group.order == cosets.group.order == 48
        assert coxeter_matrix(cube3.taus) == coxeter_matrix(cosets.taus)

    def test_cube_coordinates(self, cube3):
        """Test that alpha negates every coordinate."""
        assert [cube3.alpha(vertex) for vertex in range(8)] == [
            vertex ^ 7 for vertex in range(8)
        ]

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_orthoplex(self, n):
        """Test cross-polytopes."""
        polytope = realize(orthoplex(n))

        assert polytope.degree == 2 * n
        assert polytope.group.order == orthoplex(n).expected_order
        _assert_central(polytope)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_cubes(self, n):
        """Test n-cubes in the coordinate model."""
        polytope = realize(cube(n))

        assert polytope.degree == 2**n
        assert polytope.group.order == cube(n).expected_order
        _assert_central(polytope)

    @pytest.mark.parametrize("p", range(2, 9))
    def test_polygons(self, p):
        """Test 2p-gons."""
        polytope = realize(polygon(p))

        assert polytope.degree == 2 * p
        assert polytope.group.order == 4 * p
        _assert_central(polytope)
        assert polytope.alpha.cycles() == [
            (vertex, polytope.alpha(vertex))
            for vertex in range(2 * p)
            if vertex < polytope.alpha(vertex)
        ]

    @pytest.mark.parametrize("descriptor", [DODECAHEDRON, CELL24, CELL600])
    def test_exceptional(self, descriptor):
        """Test the exceptional polytopes up to the 600-cell."""
        polytope = realize(descriptor)

        assert polytope.degree == descriptor.vertex_count
        assert polytope.group.order == descriptor.expected_order
        assert coxeter_matrix(polytope.taus) == string_matrix(descriptor.schlafli)

    @pytest.mark.slow
    def test_cell120(self):
        """Test the 120-cell on 600 vertices."""
        polytope = realize(CELL120)

        assert polytope.degree == 600
        assert polytope.group.order == 14400

    def test_coordinates_only_for_cube(self):
        """Test that other families have no coordinate model."""
        with pytest.raises(ValueError):
            realize(polygon(2), method="coordinates")

    def test_coset_limit(self):
        """Test that a tripped coset limit is reported."""
        with pytest.raises(ResourceLimitExceeded) as info:
            realize(DODECAHEDRON, coset_limit=5)

        assert info.value.limit == 5


class TestCoxeterMatrix:
    """Test cases for coxeter_matrix."""

    def test_non_involution(self):
        """Test that generators must be involutions."""
        with pytest.raises(ValueError):
            coxeter_matrix([Permutation.from_cycles(3, [(0, 1, 2)])])
