"""Tests for subgroup intersection."""

import numpy as np
import pytest

from hypertope_extensions.errors import DegreeMismatchError, ResourceLimitExceeded
from hypertope_extensions.perm.chain import build_chain
from hypertope_extensions.perm.intersection import subgroup_intersection
from hypertope_extensions.perm.permutation import Permutation


def _transposition(degree, a, b):
    return Permutation.from_cycles(degree, [(a, b)])


class TestSubgroupIntersection:
    """Test cases for subgroup_intersection."""

    def test_same_group(self):
        """Test intersecting a group with itself."""
        group = build_chain([_transposition(4, 0, 1), _transposition(4, 1, 2)])

        assert subgroup_intersection(group, group).order == 6

    def test_nested_groups(self):
        """Test that a subgroup is its own intersection with the whole."""
        whole = build_chain([_transposition(4, 0, 1), _transposition(4, 1, 2)])
        part = build_chain([_transposition(4, 0, 1)])

        assert subgroup_intersection(whole, part).order == 2
        assert subgroup_intersection(part, whole).order == 2

    def test_disjoint_supports(self):
        """Test groups on disjoint points meet trivially."""
        left = build_chain([_transposition(6, 0, 1), _transposition(6, 1, 2)])
        right = build_chain([_transposition(6, 3, 4), _transposition(6, 4, 5)])

        assert subgroup_intersection(left, right).is_trivial()

    def test_two_symmetric_groups(self):
        """Test Sym{0,1,2} and Sym{1,2,3} meet in Sym{1,2}."""
        left = build_chain([_transposition(4, 0, 1), _transposition(4, 1, 2)])
        right = build_chain([_transposition(4, 1, 2), _transposition(4, 2, 3)])

        meet = subgroup_intersection(left, right)

        assert meet.order == 2
        assert _transposition(4, 1, 2) in meet

    def test_degree_mismatch(self):
        """Test groups of different degrees."""
        with pytest.raises(DegreeMismatchError):
            subgroup_intersection(
                build_chain([_transposition(3, 0, 1)]),
                build_chain([_transposition(4, 0, 1)]),
            )

    def test_node_limit(self):
        """Test that a tiny node limit trips."""
        rng = np.random.default_rng(2)
        left = build_chain([Permutation(rng.permutation(9)) for _ in range(2)])
        right = build_chain(
            [
                Permutation.from_cycles(9, [(0, 1, 2)]),
                Permutation.from_cycles(9, [(3, 4, 5, 6, 7, 8)]),
            ]
        )
        if left.is_subgroup_of(right) or right.is_subgroup_of(left):
            pytest.skip("Nested groups need no search.")

        with pytest.raises(ResourceLimitExceeded):
            subgroup_intersection(left, right, limit=1)

    def test_against_element_sets(self):
        """Test random intersections against the sets of elements."""
        rng = np.random.default_rng(23)
        for _ in range(50):
            degree = int(rng.integers(3, 7))
            left = build_chain(
                [
                    Permutation(rng.permutation(degree))
                    for _ in range(int(rng.integers(1, 3)))
                ]
            )
            right = build_chain(
                [
                    Permutation(rng.permutation(degree))
                    for _ in range(int(rng.integers(1, 3)))
                ]
            )
            expected = set(left.elements()) & set(right.elements())
            meet = subgroup_intersection(left, right)
            assert meet.order == len(expected)
            assert set(meet.elements()) == expected
