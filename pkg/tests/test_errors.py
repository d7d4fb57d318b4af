"""Tests for hypertope_extensions.errors module."""

from hypertope_extensions.errors import (
    DegreeMismatchError,
    GeneratorIndexError,
    HypertopeError,
    InvariantViolation,
    LayerFailure,
    PresentationSyntaxError,
    RepresentativeError,
    ResourceLimitExceeded,
    UnclassifiableResidueError,
)


class TestErrors:
    """Test cases for the error hierarchy."""

    def test_hierarchy(self):
        """Test that every error is a HypertopeError."""
        errors = [
            DegreeMismatchError(2, 3),
            GeneratorIndexError(4, 3),
            ResourceLimitExceeded("cosets", 10),
            InvariantViolation("check"),
            RepresentativeError("cube(3)", [1, 2]),
            UnclassifiableResidueError(40, 3),
            PresentationSyntaxError("bad"),
            LayerFailure("L1", "reason"),
        ]

        assert all(isinstance(error, HypertopeError) for error in errors)

    def test_resource_limit(self):
        """Test the attributes of a tripped limit."""
        error = ResourceLimitExceeded("vertex coset enumeration", 100)

        assert error.resource == "vertex coset enumeration"
        assert error.limit == 100
        assert "100" in str(error)

    def test_invariant_violation(self):
        """Test the message with and without detail."""
        assert str(InvariantViolation("alpha-central")) == (
            "Invariant 'alpha-central' violated."
        )
        error = InvariantViolation("degree", "4 != 5")
        assert error.check == "degree"
        assert str(error).endswith("4 != 5")

    def test_representative_error(self):
        """Test the listed exponents."""
        error = RepresentativeError("icosahedron", (1, 3), "missing class")

        assert error.exponents == [1, 3]
        assert "[1, 3]" in str(error)

    def test_unclassifiable_residue(self):
        """Test the attributes of an unclassifiable residue."""
        error = UnclassifiableResidueError(72, 2)

        assert error.order == 72
        assert error.translation_order == 2

    def test_syntax_error_position(self):
        """Test the default and explicit positions."""
        assert PresentationSyntaxError("bad").line == 0
        error = PresentationSyntaxError("bad", line=3, column=7)
        assert (error.line, error.column) == (3, 7)

    def test_layer_failure(self):
        """Test the message of a failed layer."""
        error = LayerFailure("L2", "order mismatch")

        assert error.layer == "L2"
        assert str(error) == "Layer L2 failed: order mismatch"
