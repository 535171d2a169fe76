"""Tests for h-vector predicates and the partial order (hvec, models)."""

from __future__ import annotations

import itertools

import pytest

from artinian_hvec.core.errors import InvalidInputError
from artinian_hvec.core.hvec import (
    compare,
    first_difference,
    first_half,
    is_differentiable,
    is_o_sequence,
    is_symmetric,
    is_unimodal,
    maximal_elements,
)
from artinian_hvec.core.models import Comparison, HVector, SocleVector


def hv(text: str) -> HVector:
    return HVector.parse(text)


# ---------------------------------------------------------------------------
# 1. Parsing and validation
# ---------------------------------------------------------------------------


class TestParsing:
    def test_canonical_round_trip(self):
        assert str(hv("( 1, 3,6 ,10 )")) == "(1,3,6,10)"

    def test_leading_one_required(self):
        with pytest.raises(InvalidInputError):
            hv("(2,3)")

    def test_positive_entries(self):
        with pytest.raises(InvalidInputError):
            hv("(1,3,0)")

    def test_malformed(self):
        with pytest.raises(InvalidInputError):
            hv("1,3,6")
        with pytest.raises(InvalidInputError):
            hv("(1,x)")

    def test_socle_vector_rules(self):
        s = SocleVector.parse("(0,0,0,3,0,0,0,0,1)")
        assert s.socle_type == 4
        assert s.two_entry().p == 3
        with pytest.raises(InvalidInputError):
            SocleVector.parse("(1,0,1)")
        with pytest.raises(InvalidInputError):
            SocleVector.parse("(0,1,0)")
        with pytest.raises(InvalidInputError):
            SocleVector.parse("(0,1)")


# ---------------------------------------------------------------------------
# 2. O-sequences and differences
# ---------------------------------------------------------------------------


class TestOSequence:
    def test_examples(self):
        assert not is_o_sequence([1, 3, 6, 6, 9])
        assert is_o_sequence(hv("(1,3,6,10,15)"))
        assert is_o_sequence([1, 2, 3, 1, 1])

    def test_zero_must_stay_zero(self):
        assert is_o_sequence([1, 2, 0, 0])
        assert not is_o_sequence([1, 2, 0, 1])


class TestDifferences:
    def test_first_difference(self):
        assert first_difference(hv("(1,4,10,16,25)")) == [1, 3, 6, 6, 9]
        assert first_difference(hv("(1,1,1,1)")) == [1, 0, 0, 0]
        assert first_difference(hv("(1,3,6,7)")) == [1, 2, 3, 1]

    def test_is_differentiable(self):
        assert not is_differentiable(hv("(1,4,10,16,25)"))
        assert is_differentiable(hv("(1,3,6,7,8)"))
        assert is_differentiable(hv("(1,1)"))

    def test_decreasing_not_differentiable(self):
        assert not is_differentiable(hv("(1,3,2)"))

    def test_differentiable_implies_o_sequence(self):
        # every sequence (1, v_1, ..., v_k) with k <= 5 and entries <= 12
        differentiable = 0
        for k in range(1, 6):
            for tail in itertools.product(range(13), repeat=k):
                values = (1, *tail)
                if is_differentiable(values):
                    differentiable += 1
                    assert is_o_sequence(values), values
        assert differentiable > 1000

    def test_first_half(self):
        assert first_half(hv("(1,3,6,7,8,7,6,3,1)")) == hv("(1,3,6,7,8)")
        assert first_half(hv("(1,3,3,1)")) == hv("(1,3)")


class TestShape:
    def test_symmetric(self):
        assert is_symmetric(hv("(1,3,5,7,9,7,5,3,1)"))
        assert not is_symmetric(hv("(1,3,6,10,8,7,6,3,1)"))
        assert is_symmetric(hv("(1)"))

    def test_unimodal(self):
        assert is_unimodal(hv("(1,3,6,10,8,7,6,3,1)"))
        assert is_unimodal(hv("(1,1,1)"))
        assert not is_unimodal(hv("(1,3,2,3,1)"))


# ---------------------------------------------------------------------------
# 3. Partial order
# ---------------------------------------------------------------------------


class TestCompare:
    def test_incomparable(self):
        assert compare(hv("(1,3,6,10,8,7,6,3,1)"), hv("(1,3,6,10,9,7,5,3,1)")) is (
            Comparison.INCOMPARABLE
        )

    def test_equal(self):
        h = hv("(1,3,5,3,1)")
        assert compare(h, h) is Comparison.EQUAL

    def test_greater_and_less(self):
        big, small = hv("(1,3,6,10,15,10,6,3,1)"), hv("(1,3,6,10,9,7,5,3,1)")
        assert compare(big, small) is Comparison.GREATER_OR_EQUAL
        assert compare(small, big) is Comparison.LESS_OR_EQUAL

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            compare(hv("(1,2,1)"), hv("(1,2)"))


class TestOrderLaws:
    VECTORS = [HVector((1, *tail)) for tail in itertools.product(range(1, 4), repeat=3)]
    AT_LEAST = (Comparison.EQUAL, Comparison.GREATER_OR_EQUAL)

    def test_reflexive(self):
        for h in self.VECTORS:
            assert compare(h, h) is Comparison.EQUAL

    def test_mirrored(self):
        mirror = {
            Comparison.EQUAL: Comparison.EQUAL,
            Comparison.GREATER_OR_EQUAL: Comparison.LESS_OR_EQUAL,
            Comparison.LESS_OR_EQUAL: Comparison.GREATER_OR_EQUAL,
            Comparison.INCOMPARABLE: Comparison.INCOMPARABLE,
        }
        for h, g in itertools.product(self.VECTORS, repeat=2):
            assert compare(g, h) is mirror[compare(h, g)]

    def test_antisymmetric(self):
        for h, g in itertools.product(self.VECTORS, repeat=2):
            if compare(h, g) in self.AT_LEAST and compare(g, h) in self.AT_LEAST:
                assert h == g

    def test_transitive(self):
        for h, g, k in itertools.product(self.VECTORS, repeat=3):
            if compare(h, g) in self.AT_LEAST and compare(g, k) in self.AT_LEAST:
                assert compare(h, k) in self.AT_LEAST, (h, g, k)


class TestMaximalElements:
    def test_dominated_vector_dropped(self):
        vectors = [
            hv("(1,3,6,10,8,7,6,3,1)"),
            hv("(1,3,6,10,9,7,5,3,1)"),
            hv("(1,3,6,9,6,6,6,3,1)"),
        ]
        assert maximal_elements(vectors) == vectors[:2]

    def test_singleton(self):
        assert maximal_elements([hv("(1,2,1)")]) == [hv("(1,2,1)")]

    def test_chain(self):
        chain = [hv("(1,1,1)"), hv("(1,2,1)"), hv("(1,2,2)")]
        assert maximal_elements(chain) == [hv("(1,2,2)")]

    def test_duplicates_collapse(self):
        assert maximal_elements([hv("(1,2,1)"), hv("(1,2,1)")]) == [hv("(1,2,1)")]

    def test_empty(self):
        assert maximal_elements([]) == []

    def test_pairwise_incomparable_output(self):
        import itertools

        vectors = [
            HVector((1, a, b, 1))
            for a in range(1, 4)
            for b in range(1, 7)
            if b <= a * (a + 1) // 2
        ]
        maxima = maximal_elements(vectors)
        for h, g in itertools.combinations(maxima, 2):
            assert compare(h, g) is Comparison.INCOMPARABLE
        for v in vectors:
            above = (Comparison.EQUAL, Comparison.GREATER_OR_EQUAL)
            assert any(compare(m, v) in above for m in maxima)
