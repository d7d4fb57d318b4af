"""Tests for presentations."""

import pytest

from hypertope_extensions.errors import GeneratorIndexError
from hypertope_extensions.fp.presentation import (
    Presentation,
    coxeter_presentation,
    coxeter_relators,
    default_labels,
    label_index,
    string_matrix,
)
from hypertope_extensions.fp.words import Gen, Power, flatten, gens, seq


class TestPresentation:
    """Test cases for the Presentation class."""

    def test_default_labels(self):
        """Test generator labels."""
        assert default_labels(3) == ("r0", "r1", "r2")
        assert Presentation(2).labels == ("r0", "r1")
        assert label_index("rt0") == 0
        assert label_index("r12") == 12

    def test_label_count(self):
        """Test that one label per generator is required."""
        with pytest.raises(ValueError):
            Presentation(2, (), ("r0",))

    def test_out_of_range_relator(self):
        """Test that relators are validated."""
        with pytest.raises(GeneratorIndexError):
            Presentation.create(2, [Power(gens(0, 2), 3)])

    def test_create_drops_duplicates(self):
        """Test that rotated duplicates and trivial relators are dropped."""
        presentation = Presentation.create(
            3,
            [
                Power(gens(0, 1), 3),
                Power(gens(1, 0), 3),
                Power(Gen(0), 2),
                Power(gens(1, 2), 4),
            ],
        )

        assert len(presentation.relators) == 2
        assert presentation.relators[0] == Power(gens(0, 1), 3)

    def test_words_start_with_involutions(self):
        """Test that words lead with the implicit involution relators."""
        presentation = Presentation.create(2, [Power(gens(0, 1), 5)])

        assert presentation.words() == [(0, 0), (1, 1), (0, 1) * 5]

    def test_equivalent_to(self):
        """Test word-for-word equivalence."""
        first = Presentation.create(
            3, [Power(gens(0, 1), 4), Power(seq(Gen(2), Gen(1)), 3)]
        )
        second = Presentation.create(3, [Power(gens(1, 2), 3), Power(gens(1, 0), 4)])

        assert first.equivalent_to(second)
        assert not first.equivalent_to(first.with_relators([Power(gens(0, 2), 2)]))

    def test_with_relators(self):
        """Test adding relators keeps labels and drops duplicates."""
        presentation = Presentation.create(2, [Power(gens(0, 1), 4)], ["rt0", "r1"])

        extended = presentation.with_relators(
            [Power(gens(1, 0), 4), Power(gens(0, 1, 0, 1, 0), 2)]
        )

        assert extended.labels == ("rt0", "r1")
        assert len(extended.relators) == 1


class TestCoxeter:
    """Test cases for Coxeter presentations."""

    def test_string_matrix(self):
        """Test the string diagram matrix."""
        assert string_matrix((4, 3)) == [[1, 4, 2], [4, 1, 3], [2, 3, 1]]

    def test_coxeter_relators(self):
        """Test one relator per pair."""
        relators = coxeter_relators(string_matrix((3, 5)))

        assert [flatten(relator) for relator in relators] == [
            (0, 1) * 3,
            (0, 2) * 2,
            (1, 2) * 5,
        ]

    def test_coxeter_presentation(self):
        """Test labels and relator count."""
        presentation = coxeter_presentation(string_matrix((3, 3, 5)))

        assert presentation.ngens == 4
        assert len(presentation.relators) == 6
