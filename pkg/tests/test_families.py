"""Tests for the polytope catalogue."""

import pytest

from hypertope_extensions.catalog.families import (
    EXCEPTIONAL,
    catalog_rows,
    cube,
    descriptor,
    format_catalog,
    orthoplex,
    polygon,
)
from hypertope_extensions.flags import Family
from tests.fixtures import EXCEPTIONAL_ROWS


class TestFamilies:
    """Test cases for family descriptors."""

    def test_polygon(self):
        """Test the 2p-gon."""
        square = polygon(2)

        assert square.schlafli == (4,)
        assert square.vertex_count == 4
        assert square.expected_order == 8
        assert square.alpha_exponent == 2
        assert square.diagonal_exponents == (1, 2)
        assert square.name == "polygon(2)"
        assert square.type_label == "{4}"
        assert square.rank == 2

    def test_orthoplex(self):
        """Test the cross-polytope."""
        octahedron = orthoplex(3)

        assert octahedron.schlafli == (3, 4)
        assert octahedron.vertex_count == 6
        assert octahedron.expected_order == 48
        assert orthoplex(5).schlafli == (3, 3, 3, 4)
        assert orthoplex(5).expected_order == 3840

    def test_cube(self):
        """Test the hypercube."""
        tesseract = cube(4)

        assert tesseract.schlafli == (4, 3, 3)
        assert tesseract.vertex_count == 16
        assert tesseract.expected_order == 384
        assert tesseract.diagonal_exponents == (1, 2, 3, 4)
        assert tesseract.half_vertex_count == 8

    @pytest.mark.parametrize(
        "family, schlafli, vertices, alpha, order", EXCEPTIONAL_ROWS
    )
    def test_exceptional(self, family, schlafli, vertices, alpha, order):
        """Test the exceptional polytopes."""
        row = EXCEPTIONAL[Family(family)]

        assert row.schlafli == schlafli
        assert row.vertex_count == vertices
        assert row.alpha_exponent == alpha
        assert row.expected_order == order
        assert row.parameter is None

    def test_words_and_labels(self):
        """Test the beta and alpha words."""
        icosahedron = EXCEPTIONAL[Family.ICOSAHEDRON]

        assert icosahedron.beta_word == (0, 1, 2)
        assert icosahedron.alpha_word == (0, 1, 2) * 5
        assert icosahedron.alpha_label == "(t0t1t2)^5"

    def test_parameter_ranges(self):
        """Test that degenerate parameters are rejected."""
        with pytest.raises(ValueError):
            polygon(1)
        with pytest.raises(ValueError):
            orthoplex(2)
        with pytest.raises(ValueError):
            cube(2)

    def test_provenance(self):
        """Test the source named for each row and its diagonal classes."""
        assert polygon(3).provenance.startswith("Table 1")
        assert polygon(3).diagonal_provenance.startswith("Sec 3.1")
        assert cube(4).diagonal_provenance.startswith("Sec 3.3")
        assert orthoplex(3).diagonal_provenance.startswith("derived")
        assert [
            EXCEPTIONAL[family].diagonal_provenance.split(":")[0]
            for family in (
                Family.ICOSAHEDRON,
                Family.DODECAHEDRON,
                Family.CELL24,
                Family.CELL600,
                Family.CELL120,
            )
        ] == ["Sec 4.1", "Sec 4.2", "Sec 4.3", "Sec 4.4", "Sec 4.5"]


class TestDescriptor:
    """Test cases for descriptor lookup."""

    def test_lookup(self):
        """Test lookup by family name."""
        assert descriptor("polygon", p=5) == polygon(5)
        assert descriptor(Family.CUBE, n=3) == cube(3)
        assert descriptor("cell24").vertex_count == 24

    def test_missing_parameters(self):
        """Test families without their parameter."""
        with pytest.raises(ValueError):
            descriptor("polygon")
        with pytest.raises(ValueError):
            descriptor("orthoplex")
        with pytest.raises(ValueError):
            descriptor("cube", p=3)

    def test_unknown_family(self):
        """Test an unknown family name."""
        with pytest.raises(ValueError):
            descriptor("simplex")


class TestCatalog:
    """Test cases for catalogue listing."""

    def test_rows(self):
        """Test the rows within the bounds."""
        rows = catalog_rows(max_n=4, max_p=3)

        assert [row.name for row in rows] == [
            "polygon(2)",
            "polygon(3)",
            "orthoplex(3)",
            "orthoplex(4)",
            "cube(3)",
            "cube(4)",
            "icosahedron",
            "dodecahedron",
            "cell24",
            "cell600",
            "cell120",
        ]

    def test_format(self):
        """Test the aligned text table."""
        lines = format_catalog(catalog_rows(max_n=3, max_p=2)).splitlines()

        assert lines[0].split() == ["family", "type", "vertices", "alpha", "order"]
        assert lines[1].split() == ["polygon(2)", "{4}", "4", "(t0t1)^2", "8"]
        assert lines[-1].split() == [
            "cell120",
            "{5,3,3}",
            "600",
            "(t0t1t2t3)^15",
            "14400",
        ]
        assert all(line == line.rstrip() for line in lines)
