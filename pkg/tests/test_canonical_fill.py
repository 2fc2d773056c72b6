import pytest
from hypothesis import given

from qshift.canonical_fill import (
    PathEndpoints,
    canonical_filling,
    components,
    compute_layers,
    layer_has_disconnection,
    path_endpoints,
)
from qshift.errors import NotAPath
from qshift.shapes import Cell, make_skew, skew_classes, skew_pairs, strict_partitions
from qshift.tableaux import content, enumerate_amenable, is_valid_gsyt, render_tableau, row_word
from qshift.words import format_word, is_amenable
from strategies import skew_shapes

EXAMPLE = make_skew((7, 5, 3, 2, 1), (4, 1))


def test_layers_examples():
    (only,) = compute_layers(make_skew((2, 1), (1,)))
    assert only.k == 1 and only.cells == {Cell(1, 2), Cell(2, 2)}
    assert [len(layer.cells) for layer in compute_layers(make_skew((3, 2, 1)))] == [3, 2, 1]
    layers = compute_layers(EXAMPLE)
    assert [layer.k for layer in layers] == [1, 2, 3]
    assert layers[2].cells == {Cell(4, 5), Cell(5, 5)}
    assert compute_layers(make_skew(())) == []


def test_filling_of_the_worked_example():
    t = canonical_filling(EXAMPLE)
    assert render_tableau(t) == (
        ".  .  .  .  1' 1  1\n"
        ".  .  1' 1  1  2\n"
        ".  .  1  2' 2\n"
        ".  .  .  2  3'\n"
        ".  .  .  .  3\n"
    )
    assert content(t) == (7, 4, 2)
    w = row_word(t)
    assert len(w) == 13
    assert is_amenable(w)


def test_filling_small_cases():
    t = canonical_filling(make_skew((2, 1), (1,)))
    assert format_word(row_word(t)) == "1 1'"
    assert canonical_filling(make_skew(())).entries == {}


def test_disconnection_examples():
    assert layer_has_disconnection(make_skew((3, 1), (2,)))
    assert not layer_has_disconnection(make_skew((2, 1), (1,)))
    assert layer_has_disconnection(EXAMPLE)
    assert not any(layer_has_disconnection(make_skew(lam)) for lam in strict_partitions(15, 1))


def test_components_ignore_diagonal_contact():
    assert len(components({Cell(1, 1), Cell(2, 2)})) == 2
    assert len(components({Cell(1, 1), Cell(1, 2), Cell(2, 2)})) == 1
    assert components([]) == ()


def test_path_endpoints_examples():
    drawn = [(1, 4), (1, 5), (1, 6), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4)]
    ends = path_endpoints(Cell(*c) for c in drawn)
    assert ends == PathEndpoints(Cell(1, 6), Cell(3, 1))
    assert path_endpoints({Cell(2, 3)}) == PathEndpoints(Cell(2, 3), Cell(2, 3))
    assert path_endpoints({Cell(1, 1), Cell(2, 1), Cell(3, 1)}) == PathEndpoints(Cell(1, 1), Cell(3, 1))


def test_path_endpoints_rejects_non_paths():
    with pytest.raises(NotAPath):
        path_endpoints(set())
    with pytest.raises(NotAPath):
        path_endpoints({Cell(1, 1), Cell(2, 2)})
    with pytest.raises(NotAPath):
        path_endpoints({Cell(1, 1), Cell(1, 2), Cell(2, 1), Cell(2, 2)})
    with pytest.raises(NotAPath):
        # a down-right zigzag has two candidate first boxes
        path_endpoints({Cell(1, 1), Cell(1, 2), Cell(2, 2), Cell(2, 3)})
    with pytest.raises(NotAPath):
        path_endpoints({Cell(1, 1), Cell(1, 2), Cell(1, 3), Cell(2, 2)})
    # the usual up-right border strip is fine
    ends = path_endpoints({Cell(2, 1), Cell(2, 2), Cell(1, 2), Cell(1, 3)})
    assert ends == PathEndpoints(Cell(1, 3), Cell(2, 1))


@given(skew_shapes(max_part=8))
def test_layers_partition_the_shape(shape):
    layers = compute_layers(shape)
    seen = set()
    for layer in layers:
        assert layer.cells
        assert not (layer.cells & seen)
        seen |= layer.cells
        assert frozenset().union(*layer.components) == layer.cells
    assert seen == shape.cells


@given(skew_shapes(max_part=8))
def test_every_component_is_a_path(shape):
    for layer in compute_layers(shape):
        for comp in layer.components:
            ends = path_endpoints(comp)
            assert ends.first in comp and ends.last in comp


def test_next_layer_is_the_down_right_shift():
    for shape in skew_pairs(12):
        layers = compute_layers(shape)
        for prev, cur in zip(layers, layers[1:]):
            expect = {c for c in shape.cells if Cell(c.row - 1, c.col - 1) in prev.cells}
            assert cur.cells == expect


def test_box_above_lies_in_same_or_previous_layer():
    for shape in skew_classes(12, connected=True):
        layer_of = {c: layer.k for layer in compute_layers(shape) for c in layer.cells}
        for (r, c), k in layer_of.items():
            if k == 1:
                continue
            up = Cell(r - 1, c)
            assert up in layer_of
            assert layer_of[up] in (k, k - 1)
            if layer_of[up] == k - 1:
                assert layer_of.get(Cell(r - 1, c - 1)) == k - 1


@given(skew_shapes(max_part=6, max_cells=9))
def test_filling_is_one_of_the_amenable_tableaux(shape):
    t = canonical_filling(shape)
    assert is_valid_gsyt(t)
    assert is_amenable(row_word(t))
    assert t in set(enumerate_amenable(shape))
