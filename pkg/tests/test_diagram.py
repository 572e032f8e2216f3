"""Diagrams: validation, generators, concatenation, components, flips,
enumeration, and serialization."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fcdiag import (
    CrossingError,
    Diagram,
    IndexOutOfRangeError,
    NotMatchingError,
    ParseError,
    StringMismatchError,
    catalan,
    concatenate,
    diagram_from_json,
    diagram_to_svg,
    enumerate_diagrams,
    parse_diagram,
)
from helpers import diagram_list


def E(strings, i):
    return Diagram.generator(strings, i)


class TestConstruction:
    def test_identity(self):
        d = Diagram.identity(3)
        assert d.arrows() == ((0, 3), (1, 4), (2, 5))
        assert d.to_text() == "strings=3;1-1',2-2',3-3'"

    def test_generator(self):
        assert E(2, 1).to_text() == "strings=2;1-2,1'-2'"
        e = E(6, 3)
        assert e.to_text() == "strings=6;1-1',2-2',3-4,5-5',6-6',3'-4'"

    def test_generator_index_range(self):
        with pytest.raises(IndexOutOfRangeError):
            E(6, 0)
        with pytest.raises(IndexOutOfRangeError):
            E(6, 6)

    def test_crossing_rejected(self):
        # 1-2' and 2-1' intersect
        with pytest.raises(CrossingError, match="cross"):
            Diagram.from_arrows(2, [(0, 3), (1, 2)])

    def test_crossing_carries_witness(self):
        try:
            Diagram.from_arrows(2, [(0, 3), (1, 2)])
        except CrossingError as exc:
            assert {exc.first, exc.second} == {(0, 3), (1, 2)}
        else:
            pytest.fail("expected CrossingError")

    def test_not_matching_rejected(self):
        with pytest.raises(NotMatchingError, match="unmatched"):
            Diagram.from_arrows(2, [(0, 2)])
        with pytest.raises(NotMatchingError, match="twice"):
            Diagram.from_arrows(2, [(0, 2), (0, 3)])

    def test_partner_array_checked(self):
        with pytest.raises(NotMatchingError):
            Diagram(2, (1, 0, 3, 2, 4, 5))  # wrong length
        with pytest.raises(NotMatchingError, match="itself"):
            Diagram(2, (0, 2, 1, 3))


class TestConcatenate:
    @pytest.mark.parametrize("k,i", [(2, 1), (5, 2), (8, 7)])
    def test_squares_contract(self, k, i):
        assert concatenate(E(k, i), E(k, i)) == (E(k, i), 1)

    def test_sandwich_relation(self):
        d, m1 = concatenate(E(3, 1), E(3, 2))
        d, m2 = concatenate(d, E(3, 1))
        assert (d, m1 + m2) == (E(3, 1), 0)

    def test_identity_neutral(self):
        for d in diagram_list(4):
            assert concatenate(Diagram.identity(4), d) == (d, 0)
            assert concatenate(d, Diagram.identity(4)) == (d, 0)

    def test_string_mismatch(self):
        with pytest.raises(StringMismatchError):
            concatenate(E(2, 1), E(3, 1))

    def test_far_generators_commute(self):
        assert concatenate(E(5, 1), E(5, 4)) == concatenate(E(5, 4), E(5, 1))

    def test_loop_additivity_random(self):
        rng = random.Random(7)
        pools = {k: diagram_list(k) for k in (2, 3, 4, 5, 6)}
        for _ in range(2000):
            k = rng.choice(list(pools))
            d1, d2, d3 = (rng.choice(pools[k]) for _ in range(3))
            left, a = concatenate(d1, d2)
            left, b = concatenate(left, d3)
            right, c = concatenate(d2, d3)
            right, e = concatenate(d1, right)
            assert left == right and a + b == c + e


class TestComponents:
    def test_identity_all_vertical(self):
        comp = Diagram.identity(4).components()
        assert not comp.top_arcs and not comp.bottom_arcs and not comp.positive
        assert len(comp.vertical_or_negative) == 4
        assert comp.size == 0
        assert comp.starts == comp.ends == frozenset()

    def test_generator(self):
        comp = E(5, 2).components()
        assert comp.top_arcs == {(1, 2)}
        assert comp.bottom_arcs == {(6, 7)}
        assert not comp.positive
        assert comp.starts == {2} and comp.ends == {2}
        assert comp.size == 1

    def test_single_block_diagram(self):
        # the diagram of the run [1,3] on 4 strings
        d = parse_diagram("strings=4;1-2,3-1',4-2',3'-4'")
        comp = d.components()
        assert comp.top_arcs == {(0, 1)}
        assert comp.bottom_arcs == {(6, 7)}
        assert comp.vertical_or_negative == {(2, 4), (3, 5)}
        assert comp.starts == {1} and comp.ends == {3}

    @pytest.mark.parametrize("k", range(1, 7))
    def test_counts_balance(self, k):
        for d in diagram_list(k):
            comp = d.components()
            assert len(comp.top_arcs) == len(comp.bottom_arcs)
            assert len(comp.starts) == len(comp.ends) == comp.size
            assert comp.size == len(comp.top_arcs) + len(comp.positive)


class TestFlips:
    def test_generator_symmetries(self):
        assert E(4, 2).flip_vertical() == E(4, 2)
        assert E(6, 1).flip_horizontal() == E(6, 5)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_involutions(self, k):
        for d in diagram_list(k):
            assert d.flip_vertical().flip_vertical() == d
            assert d.flip_horizontal().flip_horizontal() == d

    def test_vertical_flip_reverses_concatenation(self):
        d12, _ = concatenate(E(3, 1), E(3, 2))
        d21, _ = concatenate(E(3, 2), E(3, 1))
        assert d12.flip_vertical() == d21


class TestEnumeration:
    @pytest.mark.parametrize("k,count", [(1, 1), (2, 2), (3, 5), (5, 42), (7, 429)])
    def test_catalan_counts(self, k, count):
        assert len(diagram_list(k)) == count == catalan(k)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_distinct(self, k):
        assert len(set(diagram_list(k))) == len(diagram_list(k))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_reconstruction_from_row_arcs(self, k):
        # a diagram is determined by its same-row arcs: the free dots pair up
        # left to right
        for d in diagram_list(k):
            comp = d.components()
            partner = [-1] * (2 * k)
            for x, y in comp.top_arcs | comp.bottom_arcs:
                partner[x], partner[y] = y, x
            free_top = [t for t in range(k) if partner[t] == -1]
            free_bot = [b for b in range(k, 2 * k) if partner[b] == -1]
            for a, b in zip(free_top, free_bot, strict=True):
                partner[a], partner[b] = b, a
            assert Diagram(k, tuple(partner)) == d

    @pytest.mark.parametrize("k", range(2, 6))
    def test_row_arcs_persist_under_concatenation(self, k):
        pool = diagram_list(k)
        for d1 in pool:
            for d2 in pool:
                comp = concatenate(d1, d2)[0].components()
                assert d1.components().top_arcs <= comp.top_arcs
                assert d2.components().bottom_arcs <= comp.bottom_arcs


class TestSerialization:
    @pytest.mark.parametrize("k", range(1, 6))
    def test_text_roundtrip(self, k):
        for d in diagram_list(k):
            assert parse_diagram(d.to_text()) == d

    @pytest.mark.parametrize("k", range(1, 6))
    def test_json_roundtrip(self, k):
        for d in diagram_list(k):
            assert diagram_from_json(d.to_json()) == d

    def test_json_numbering(self):
        assert E(2, 1).to_json() == {"strings": 2, "partner": [2, 1, 4, 3]}

    @pytest.mark.parametrize("bad", ["", "strings=2", "strings=2;1-2", "strings=2;1-5,1'-2'"])
    def test_parse_rejects_junk(self, bad):
        with pytest.raises((ParseError, NotMatchingError)):
            parse_diagram(bad)

    def test_svg_is_deterministic(self):
        d = E(4, 2)
        svg = diagram_to_svg(d)
        assert svg == diagram_to_svg(d)
        assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
        assert svg.count("<circle") == 8

    @given(st.integers(min_value=1, max_value=5))
    def test_svg_renders_all_enumerated(self, k):
        for d in diagram_list(k):
            assert "<path" in diagram_to_svg(d) or k == 1
