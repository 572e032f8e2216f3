"""The multiplication-compatible correspondence and its two algorithms."""

import pytest

from fcdiag import (
    Diagram,
    FCElement,
    IndexOutOfRangeError,
    concatenate,
    diagram_to_fc,
    dplus_condition,
    enumerate_diagrams,
    fc_to_diagram,
    fc_to_diagram_reference,
    monomial_product,
    parse_diagram,
    parse_fc,
)
from helpers import diagram_list, fc_list

W_EXAMPLE = parse_fc("n=5:[4,5][3,3][1,1]")


class TestPositiveArrowPredicate:
    def test_adjacent_blocks(self):
        # j_1 = i_2 + 1 with i_1 = i_2 + 1 forces the arrow
        w = parse_fc("n=3:[2,2][1,1]")
        assert dplus_condition(w, 2, 1)

    def test_example_has_none(self):
        p = W_EXAMPLE.size
        assert not any(
            dplus_condition(W_EXAMPLE, s, t) for s in range(2, p + 1) for t in range(1, s)
        )

    def test_start_gap_blocks_arrow(self):
        w = parse_fc("n=4:[3,3][1,1]")
        assert not dplus_condition(w, 2, 1)

    def test_chained_case(self):
        # the saturated window [2,3] lets block 3 reach past block 2
        w = parse_fc("n=4:[3,4][2,3][1,1]")
        assert dplus_condition(w, 3, 1)
        assert not dplus_condition(w, 2, 1)
        assert not dplus_condition(w, 3, 2)

    def test_index_range_enforced(self):
        with pytest.raises(IndexOutOfRangeError):
            dplus_condition(W_EXAMPLE, 1, 1)
        with pytest.raises(IndexOutOfRangeError):
            dplus_condition(W_EXAMPLE, 4, 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_predicate_matches_reference_arrows(self, n):
        # (s, t) passes the predicate exactly when the oracle diagram has the
        # positive arrow tail i_s, head (j_t + 1)'
        for w in fc_list(n):
            positive = fc_to_diagram_reference(w).components().positive
            for s in range(2, w.size + 1):
                for t in range(1, s):
                    arrow = (w.pairs[s - 1][0] - 1, (n + 1) + w.pairs[t - 1][1])
                    assert dplus_condition(w, s, t) == (arrow in positive)


class TestDirectAlgorithm:
    def test_generator_image(self):
        d, _ = fc_to_diagram(FCElement(1, ((1, 1),)))
        assert d == Diagram.generator(2, 1)

    def test_single_block(self):
        d, _ = fc_to_diagram(parse_fc("n=3:[1,3]"))
        assert d == parse_diagram("strings=4;1-2,3-1',4-2',3'-4'")

    def test_positive_arrow_drawn(self):
        d, trace = fc_to_diagram(parse_fc("n=3:[2,2][1,1]"))
        assert d == parse_diagram("strings=4;1-3',2-3,4-4',1'-2'")
        assert trace.positive_pairs == ((2, 1),)

    def test_worked_example(self):
        d, trace = fc_to_diagram(W_EXAMPLE)
        assert d == parse_diagram("strings=6;1-2,3-6,4-5,1'-2',3'-4',5'-6'")
        assert trace.positive_pairs == ()
        assert [f for _, f in trace.top_sets] == [5, 6, 2]
        assert [g for _, g in trace.bottom_sets] == [5, 3, 1]

    def test_identity(self):
        d, trace = fc_to_diagram(FCElement(4))
        assert d == Diagram.identity(5)
        assert trace.positive_pairs == ()

    @pytest.mark.parametrize("n", range(0, 7))
    def test_equals_concatenation_oracle(self, n):
        for w in fc_list(n):
            assert fc_to_diagram(w)[0] == fc_to_diagram_reference(w)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_start_end_data(self, n):
        for w in fc_list(n):
            comp = fc_to_diagram(w)[0].components()
            assert comp.starts == {i for i, _ in w.pairs}
            assert comp.ends == {j for _, j in w.pairs}
            assert comp.size == w.size


class TestReader:
    def test_identity_diagram(self):
        assert diagram_to_fc(Diagram.identity(5)) == FCElement(4)

    def test_generator_diagram(self):
        assert diagram_to_fc(Diagram.generator(6, 3)) == FCElement(5, ((3, 3),))

    def test_worked_example(self):
        d = parse_diagram("strings=6;1-2,3-6,4-5,1'-2',3'-4',5'-6'")
        assert diagram_to_fc(d) == W_EXAMPLE

    @pytest.mark.parametrize("n", range(0, 8))
    def test_roundtrip_from_elements(self, n):
        for w in fc_list(n):
            assert diagram_to_fc(fc_to_diagram(w)[0]) == w

    @pytest.mark.parametrize("k", range(1, 8))
    def test_roundtrip_from_diagrams(self, k):
        for d in diagram_list(k):
            assert fc_to_diagram(diagram_to_fc(d))[0] == d


class TestTrace:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_candidate_sets(self, n):
        for w in fc_list(n):
            d, trace = fc_to_diagram(w)
            comp = d.components()
            positive_tails = {x + 1 for x, _ in comp.positive}
            positive_heads = {y - n for _, y in comp.positive}  # 1-based bottom index
            for r in range(1, w.size + 1):
                cands, f = trace.top_sets[r - 1]
                assert (not cands) == (w.pairs[r - 1][0] in positive_tails)
                if cands:
                    assert f == min(cands)
                    assert (w.pairs[r - 1][0] - 1, f - 1) in comp.top_arcs
                bcands, g = trace.bottom_sets[r - 1]
                assert (not bcands) == (w.pairs[r - 1][1] + 1 in positive_heads)
                if bcands:
                    assert g == max(bcands)
                    assert (n + g, n + 1 + w.pairs[r - 1][1]) in comp.bottom_arcs


class TestStructuralProperties:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_uniqueness_of_start_end_data(self, n):
        pool = diagram_list(n + 1)
        for w in fc_list(n):
            i_set = frozenset(i for i, _ in w.pairs)
            j_set = frozenset(j for _, j in w.pairs)
            matches = [
                d
                for d in pool
                if d.components().starts == i_set and d.components().ends == j_set
            ]
            assert matches == [fc_to_diagram(w)[0]]

    @pytest.mark.parametrize("n", range(0, 7))
    def test_rotation_matches_delta_involution(self, n):
        for w in fc_list(n):
            rotated = fc_to_diagram(w)[0].flip_vertical().flip_horizontal()
            assert rotated == fc_to_diagram(w.delta_involution())[0]

    @pytest.mark.parametrize("n", range(0, 5))
    def test_multiplication_compatibility(self, n):
        elements = fc_list(n)
        images = {w: fc_to_diagram(w)[0] for w in elements}
        for w1 in elements:
            for w2 in elements:
                product, loops = concatenate(images[w1], images[w2])
                w3, m = monomial_product(w1, w2)
                assert m == loops
                assert images[w3] == product
