"""Tests for halving extensions."""

import pytest

from hypertope_extensions.catalog.families import orthoplex
from hypertope_extensions.catalog.realize import realize
from hypertope_extensions.diagonals import diagonal_classes
from hypertope_extensions.extend import build_extension
from hypertope_extensions.flags import LayerStatus
from hypertope_extensions.fp.formatter import FORMATTER
from hypertope_extensions.halve import (
    halved_labels,
    halved_type_label,
    halving_identities,
    halving_presentation,
    realize_halving,
    verify_halving,
    y_matrix,
)


class TestDiagram:
    """Test cases for the halved diagram."""

    def test_y_matrix_rank_three(self):
        """Test the triangle diagram of {4,4}."""
        assert y_matrix((4, 4)) == [[1, 2, 4], [2, 1, 4], [4, 4, 1]]

    def test_y_matrix_rank_four(self):
        """Test the Y-shaped diagram of {4,3,4}."""
        assert y_matrix((4, 3, 4)) == [
            [1, 2, 3, 2],
            [2, 1, 3, 2],
            [3, 3, 1, 4],
            [2, 2, 4, 1],
        ]

    def test_type_labels(self):
        """Test the type labels of halved groups."""
        assert halved_type_label((4, 4)) == "{4,4}"
        assert halved_type_label((4, 3, 4)) == "{3/3,4}"
        assert halved_type_label((4, 3, 3, 5)) == "{3/3,3,5}"

    def test_labels(self):
        """Test the generator labels."""
        assert halved_labels(4) == ("rt0", "r1", "r2", "r3")


class TestRealizeHalving:
    """Test cases for realize_halving."""

    def test_square(self, square_halving):
        """Test the halving of the torus map {4,4}_(4,0)."""
        assert square_halving.concrete.order == 64
        assert square_halving.expected_order == 64
        assert square_halving.diagram_matches
        assert square_halving.name == "H(2^{{4},G(2)})"
        assert square_halving.type_label == "{4,4}"
        assert square_halving.presentation.labels == ("rt0", "r1", "r2")

    def test_generators(self, square_extension, square_halving):
        """Test that only the first generator changes."""
        rhos = square_extension.generators

        assert square_halving.generators[0] == rhos[0] * rhos[1] * rhos[0]
        assert square_halving.generators[1:] == rhos[1:]

    def test_octahedron(self, octahedron_extension):
        """Test the halving of the octahedron extension."""
        halving = realize_halving(octahedron_extension)
        lines = FORMATTER.format(halving.presentation).splitlines()

        assert halving.concrete.order == 1536
        assert halving.type_label == "{3/3,4}"
        assert "( rt0 r2 r3 r2 r1 )^4" in lines

    def test_cube(self, cube3_halving):
        """Test the halving of the cube extension."""
        identities = halving_identities(cube3_halving)

        assert cube3_halving.concrete.order == 6144
        assert cube3_halving.diagram_matches
        assert len(identities) == 3
        assert all(identities.values())

    def test_orthoplex_presentation(self):
        """Test the chain relator of a larger cross-polytope."""
        polytope = realize(orthoplex(4))
        artifact = build_extension(polytope, diagonal_classes(polytope), 2)

        text = FORMATTER.format(halving_presentation(artifact))

        assert text.splitlines()[0] == "gens 5"
        assert "( rt0 r2 r3 r4 r3 r2 r1 )^4" in text.splitlines()


class TestVerifyHalving:
    """Test cases for verify_halving."""

    def test_square(self, square_halving):
        """Test all layers of the square halving."""
        report = verify_halving(square_halving)

        assert [layer.status for layer in report.layers] == [LayerStatus.PASSED] * 3
        assert report.get("L3").value == 64
        assert report.subject == "H(2^{{4},G(2)})"

    def test_not_enumerated(self, cube3_halving):
        """Test that L3 can be left out."""
        report = verify_halving(cube3_halving, enumerate_presentation=False)

        assert report.status("L1") is LayerStatus.PASSED
        assert report.status("L2") is LayerStatus.PASSED
        assert report.get("L3").detail == "not requested"

    def test_enumeration_limit(self, square_halving):
        """Test that a tripped coset limit skips L3."""
        report = verify_halving(square_halving, tc_limit=5)

        assert report.status("L3") is LayerStatus.SKIPPED

    @pytest.mark.slow
    def test_cube(self, cube3_halving):
        """Test the cube halving by full enumeration."""
        report = verify_halving(cube3_halving)

        assert report.get("L3").value == 6144
