"""Hall commutator enumeration and graded bases."""
import pytest

from zassenhaus.dimensions import dims_table, w_free_closed
from zassenhaus.groupspec import Free
from zassenhaus.hall import (
    Bracket,
    Generator,
    basis_text_lines,
    hall_commutators,
    hall_key,
    render,
    weight,
    zassenhaus_basis,
)


def _is_hall(c, layers):
    """Structural audit straight from the defining condition."""
    if isinstance(c, Generator):
        return True
    ok = (
        _is_hall(c.left, layers)
        and _is_hall(c.right, layers)
        and hall_key(c.left) > hall_key(c.right)
    )
    if isinstance(c.left, Bracket):
        ok = ok and hall_key(c.right) >= hall_key(c.left.right)
    return ok


class TestLayers:
    def test_rank2_sizes(self):
        layers = hall_commutators(2, 10)
        assert [len(layers[w]) for w in range(1, 11)] == [
            2, 1, 2, 3, 6, 9, 18, 30, 56, 99,
        ]

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_sizes_are_necklace_numbers(self, d):
        layers = hall_commutators(d, 10)
        for n in range(1, 11):
            assert len(layers[n]) == w_free_closed(d, n)

    def test_small_layers_exactly(self):
        layers = hall_commutators(2, 3)
        assert [render(c) for c in layers[1]] == ["x1", "x2"]
        assert [render(c) for c in layers[2]] == ["[x1,x2]"]
        assert [render(c) for c in layers[3]] == ["[[x1,x2],x1]", "[[x1,x2],x2]"]

    def test_layers_sorted_greatest_first(self):
        layers = hall_commutators(3, 7)
        for n in range(1, 8):
            keys = [hall_key(c) for c in layers[n]]
            assert keys == sorted(keys, reverse=True)
            assert len(set(keys)) == len(keys)

    def test_all_weights_correct(self):
        layers = hall_commutators(2, 8)
        for n in range(1, 9):
            assert all(weight(c) == n for c in layers[n])

    def test_hall_condition_holds_everywhere(self):
        layers = hall_commutators(3, 8)
        for layer in layers[1:]:
            for c in layer:
                assert _is_hall(c, layers)

    def test_generator_order(self):
        # x1 is the greatest generator
        assert hall_key(Generator(1)) > hall_key(Generator(2))

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            hall_commutators(0, 3)
        with pytest.raises(ValueError):
            hall_commutators(2, 0)


class TestBasis:
    def test_weight2_rank2_p2(self):
        basis = zassenhaus_basis(2, 2, 2)
        assert basis_text_lines(basis, 2) == ["x1^2", "x2^2", "[x1,x2]"]

    def test_rank1_p3_degree3(self):
        basis = zassenhaus_basis(1, 3, 3)
        assert basis_text_lines(basis, 3) == ["x1^3"]

    def test_rank2_p2_degree4_count(self):
        assert len(zassenhaus_basis(2, 2, 4)) == 6

    def test_rank3_p3_degree3_count(self):
        assert len(zassenhaus_basis(3, 3, 3)) == 11

    def test_block_structure(self):
        # degree 12 = 4 * 3 at p = 2: commutator weights 3, 6, 12
        basis = zassenhaus_basis(2, 2, 12)
        blocks = {}
        for el in basis:
            blocks.setdefault((weight(el.commutator), el.p_exponent), 0)
            blocks[(weight(el.commutator), el.p_exponent)] += 1
        assert set(blocks) == {(3, 2), (6, 1), (12, 0)}
        assert blocks[(3, 2)] == w_free_closed(2, 3)
        assert blocks[(6, 1)] == w_free_closed(2, 6)
        assert blocks[(12, 0)] == w_free_closed(2, 12)

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_count_equals_dimension(self, p, d):
        table = dims_table(Free(d), p, 12)
        for n in range(1, 13):
            assert len(zassenhaus_basis(d, p, n)) == table.c[n]

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            zassenhaus_basis(0, 2, 2)
        with pytest.raises(ValueError):
            zassenhaus_basis(2, 4, 2)
        with pytest.raises(ValueError):
            zassenhaus_basis(2, 2, 0)
