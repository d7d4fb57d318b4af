"""Tests for permutations."""

import numpy as np
import pytest
from sympy.combinatorics import Permutation as SymPermutation

from hypertope_extensions.errors import DegreeMismatchError
from hypertope_extensions.perm.permutation import (
    Permutation,
    compose,
    orbit_with_transversal,
    orbits,
    product,
)

CASES = 1000


def _random_permutation(rng: np.random.Generator, degree: int) -> Permutation:
    return Permutation(rng.permutation(degree))


class TestPermutation:
    """Test cases for the Permutation class."""

    def test_compose_applies_left_operand_first(self):
        """Test that (0 1) composed with (1 2) sends 0 to 2."""
        p = Permutation.from_cycles(3, [(0, 1)])
        q = Permutation.from_cycles(3, [(1, 2)])

        assert compose(p, q).images.tolist() == [2, 0, 1]
        assert (p * q)(0) == 2

    def test_invalid_images(self):
        """Test that non-bijections are rejected."""
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])
        with pytest.raises(ValueError):
            Permutation([0, 3, 1])
        with pytest.raises(ValueError):
            Permutation([[0, 1], [1, 0]])

    def test_degree_mismatch(self):
        """Test composing permutations of different degrees."""
        with pytest.raises(DegreeMismatchError) as info:
            compose(Permutation.identity(3), Permutation.identity(4))

        assert info.value.left == 3
        assert info.value.right == 4

    def test_identity(self):
        """Test identity properties."""
        identity = Permutation.identity(5)

        assert identity.is_identity()
        assert not identity.is_involution()
        assert identity.order() == 1
        assert identity.cycles() == []
        assert str(identity) == "()"

    def test_cycles_and_str(self):
        """Test cycle decomposition."""
        perm = Permutation([1, 2, 0, 4, 3, 5])

        assert perm.cycles() == [(0, 1, 2), (3, 4)]
        assert str(perm) == "(0 1 2)(3 4)"
        assert perm.order() == 6
        assert perm.fixed_points() == [5]
        assert perm.moved_points() == [0, 1, 2, 3, 4]

    def test_from_cycles(self):
        """Test building from cycles."""
        perm = Permutation.from_cycles(5, [(0, 3, 1), (2, 4)])

        assert perm.images.tolist() == [3, 0, 4, 1, 2]

    def test_power_and_inverse(self):
        """Test powers, including negative ones."""
        perm = Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])

        assert perm**5 == Permutation.identity(5)
        assert perm**-1 == ~perm
        assert (perm**2)(0) == 2
        assert (perm**-2)(0) == 3

    def test_involution(self):
        """Test involution detection."""
        assert Permutation.from_cycles(4, [(0, 1), (2, 3)]).is_involution()
        assert not Permutation.from_cycles(3, [(0, 1, 2)]).is_involution()

    def test_conjugate(self):
        """Test conjugation by another permutation."""
        p = Permutation.from_cycles(3, [(0, 1)])
        q = Permutation.from_cycles(3, [(1, 2)])

        assert p.conjugate(q) == Permutation.from_cycles(3, [(0, 2)])

    def test_hash_and_order(self):
        """Test equal permutations hash alike and sort by images."""
        first = Permutation([1, 0, 2])
        second = Permutation(np.array([1, 0, 2]))

        assert first == second
        assert len({first, second}) == 1
        assert Permutation.identity(3) < first

    def test_images_are_read_only(self):
        """Test that the image array cannot be mutated."""
        perm = Permutation([1, 0])

        with pytest.raises(ValueError):
            perm.images[0] = 0

    def test_product(self):
        """Test the product of a sequence."""
        perms = [Permutation.from_cycles(4, [(i, i + 1)]) for i in range(3)]

        assert product(perms, 4) == compose(compose(perms[0], perms[1]), perms[2])
        assert product([], 4).is_identity()


class TestPermutationProperties:
    """Seeded random cases against pointwise and sympy oracles."""

    def test_composition_pointwise(self):
        """Test composition against pointwise application."""
        rng = np.random.default_rng(7)
        for _ in range(CASES):
            degree = int(rng.integers(1, 12))
            p = _random_permutation(rng, degree)
            q = _random_permutation(rng, degree)
            composed = compose(p, q)
            assert all(composed(x) == q(p(x)) for x in range(degree))

    def test_associativity_and_inverse(self):
        """Test associativity and inverses."""
        rng = np.random.default_rng(11)
        for _ in range(CASES):
            degree = int(rng.integers(1, 10))
            p, q, r = (_random_permutation(rng, degree) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            assert (p * ~p).is_identity()
            assert (~p * p).is_identity()

    def test_order_against_sympy(self):
        """Test order and cycles against sympy."""
        rng = np.random.default_rng(13)
        for _ in range(CASES):
            degree = int(rng.integers(1, 15))
            perm = _random_permutation(rng, degree)
            oracle = SymPermutation(perm.images.tolist())
            assert perm.order() == oracle.order()
            assert perm.power(perm.order()).is_identity()
            assert sorted(len(cycle) for cycle in perm.cycles()) == sorted(
                len(cycle) for cycle in oracle.cyclic_form
            )

    def test_composition_against_sympy(self):
        """Test that sympy multiplies in the same order."""
        rng = np.random.default_rng(17)
        for _ in range(CASES):
            degree = int(rng.integers(1, 10))
            p = _random_permutation(rng, degree)
            q = _random_permutation(rng, degree)
            oracle = SymPermutation(p.images.tolist()) * SymPermutation(
                q.images.tolist()
            )
            assert (p * q).images.tolist() == oracle.array_form


class TestOrbits:
    """Test cases for orbit computations."""

    def test_orbit_with_transversal(self):
        """Test orbit order and transversal correctness."""
        gens = [
            Permutation.from_cycles(6, [(0, 1)]),
            Permutation.from_cycles(6, [(1, 2), (4, 5)]),
        ]

        orbit, transversal = orbit_with_transversal(gens, 0)

        assert orbit == [0, 1, 2]
        assert all(transversal[point](0) == point for point in orbit)

    def test_orbit_errors(self):
        """Test empty generators and bad points."""
        with pytest.raises(ValueError):
            orbit_with_transversal([], 0)
        with pytest.raises(ValueError):
            orbit_with_transversal([Permutation.identity(3)], 3)
        with pytest.raises(DegreeMismatchError):
            orbit_with_transversal(
                [Permutation.identity(3), Permutation.identity(4)], 0
            )

    def test_orbits_partition(self):
        """Test the orbit partition."""
        gens = [Permutation.from_cycles(7, [(0, 3), (4, 6)])]

        assert orbits(gens, 7) == [[0, 3], [1], [2], [4, 6], [5]]
