from itertools import combinations

import pytest
from pydantic import ValidationError

from caterpillar.chains import (
    ChainElement,
    GeneratorTuple,
    WeightData,
    WeylIndex,
    chain_of_tuple,
    enumerate_x,
    enumerate_y,
    factor_generators,
    glue,
    multidegree_census,
    swap,
    swap_relations,
    tuple_from_legs,
    tuple_of_chain,
    weights_of_tuple,
    weyl_tuple,
    y_decomposition,
    zero_split,
)
from caterpillar.errors import BoundaryMismatch, InputError, LevelExceeded, NoInternalZero, SizeGuardExceeded
from caterpillar.pieri import InterlacingPattern, Orientation

SHAPES = [(m, a, b) for m in (2, 3, 4) for a in range(2, 5) for b in range(2, 5) if a + b <= 6]


def t(m, a, b, *entries):
    return GeneratorTuple(m=m, a=a, b=b, entries=entries)


def test_enumerate_x_examples():
    assert [x.entries for x in enumerate_x(3, 2, 2)] == [
        (0, 0, 0),
        (0, 2, 0),
        (0, 2, 2),
        (2, 1, 2),
        (2, 2, 0),
        (2, 2, 2),
    ]
    assert len(enumerate_x(2, 2, 2)) == 8


def test_enumerate_y_examples():
    assert [y.entries for y in enumerate_y(3, 2, 2)] == [
        (0, 2, 0),
        (0, 2, 2),
        (2, 1, 2),
        (2, 2, 0),
        (2, 2, 2),
    ]
    assert len(enumerate_y(2, 2, 2)) == 6


@pytest.mark.parametrize("m, a, b", SHAPES)
def test_y_is_the_unbroken_part_of_x(m, a, b):
    xs = enumerate_x(m, a, b)
    ys = enumerate_y(m, a, b)
    assert [x.entries for x in xs] == sorted(x.entries for x in xs)
    assert any(x.is_zero() for x in xs)
    assert set(ys) <= set(xs)
    assert all(not y.is_zero() for y in ys)


@pytest.mark.parametrize(
    "a, b",
    [(1, 2), (2, 1), (0, 0)],
)
def test_small_shapes_are_rejected(a, b):
    with pytest.raises(InputError):
        enumerate_x(3, a, b)


def test_enumeration_respects_the_size_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_x(3, 2, 2, max_objects=5)


@pytest.mark.parametrize(
    "entries",
    [(1, 0, 0), (0, 1, 0), (0, 0, 3), (0, 0)],
)
def test_invalid_tuples_are_rejected(entries):
    with pytest.raises(ValidationError):
        GeneratorTuple(m=3, a=2, b=2, entries=entries)


def test_weights_of_tuple_examples():
    assert weights_of_tuple(t(3, 2, 2, 2, 1, 2)) == WeightData(r=(1, 1), s=(1, 1), level=1)
    assert weights_of_tuple(t(3, 2, 2, 0, 0, 0)) == WeightData(r=(0, 0), s=(0, 0), level=1)
    assert weights_of_tuple(t(3, 2, 2, 0, 2, 2)) == WeightData(r=(0, 1), s=(0, 1), level=1)


@pytest.mark.parametrize("m, a, b", SHAPES)
def test_weights_of_tuple_matches_its_chain(m, a, b):
    for x in enumerate_x(m, a, b):
        chain = chain_of_tuple(x)
        assert chain.weight_data() == weights_of_tuple(x)
        assert tuple_of_chain(chain) == x


def test_factor_generators_orientations():
    gens = factor_generators(t(3, 3, 2, 2, 1, 0, 0))
    assert [g.orientation for g in gens] == [Orientation.NORMAL, Orientation.NORMAL, Orientation.DUAL]
    assert [str(g) for g in gens] == ["[2,1]", "[1,0]", "[0,0]"]


def test_glue_examples():
    zero = glue([InterlacingPattern.zero(3), InterlacingPattern.zero(3, Orientation.DUAL)], 0)
    assert zero.level == 0
    assert zero.weight_data() == WeightData(r=(0, 0), s=(0, 0), level=0)

    factors = chain_of_tuple(t(3, 2, 2, 2, 1, 2)).factors
    assert glue(factors, 1).weight_data() == WeightData(r=(1, 1), s=(1, 1), level=1)
    with pytest.raises(LevelExceeded) as err:
        glue(factors, 0)
    assert err.value.position == 1


def test_glue_reports_boundary_mismatches():
    normal = InterlacingPattern(m=3, top=(1, 1, 0), bottom=(1, 0))
    with pytest.raises(BoundaryMismatch) as err:
        glue([normal, InterlacingPattern.zero(3, Orientation.DUAL)])
    assert err.value.position == 1

    not_a_leaf = InterlacingPattern(m=3, top=(1, 0, 0), bottom=(0, 0))
    with pytest.raises(BoundaryMismatch) as err:
        glue([not_a_leaf, InterlacingPattern.zero(3, Orientation.DUAL)])
    assert err.value.position == 1

    dual_end = InterlacingPattern(m=3, top=(1, 0, 0), bottom=(0, 0), orientation=Orientation.DUAL)
    with pytest.raises(BoundaryMismatch) as err:
        glue([InterlacingPattern.zero(3), dual_end])
    assert err.value.position == 2


def test_chain_elements_check_boundaries_on_construction():
    normal = InterlacingPattern(m=3, top=(1, 1, 0), bottom=(1, 0))
    with pytest.raises(BoundaryMismatch) as err:
        ChainElement(m=3, a=2, b=2, factors=(normal, InterlacingPattern.zero(3, Orientation.DUAL)))
    assert err.value.position == 1

    factors = chain_of_tuple(t(3, 2, 2, 2, 1, 2)).factors
    assert ChainElement(m=3, a=2, b=2, factors=factors, level=1) == glue(factors, 1)


def test_glue_rejects_out_of_order_factors():
    with pytest.raises(InputError):
        glue([InterlacingPattern.zero(3, Orientation.DUAL), InterlacingPattern.zero(3)])
    with pytest.raises(InputError):
        glue([InterlacingPattern.zero(3)])


@pytest.mark.parametrize("m, a, b", SHAPES)
def test_chain_sums_have_summed_weight_data(m, a, b):
    xs = enumerate_x(m, a, b)
    for u, v in zip(xs, reversed(xs)):
        total = chain_of_tuple(u) + chain_of_tuple(v)
        assert total.level == 2
        assert total.weight_data() == weights_of_tuple(u) + weights_of_tuple(v)
        assert glue(total.factors, 2) == total


def test_swap_examples():
    assert swap(t(2, 2, 2, 0, 0, 0), t(2, 2, 2, 1, 0, 1), 2) == (t(2, 2, 2, 0, 0, 1), t(2, 2, 2, 1, 0, 0))
    with pytest.raises(InputError):
        swap(t(2, 2, 2, 0, 0, 0), t(2, 2, 2, 1, 1, 1), 2)


@pytest.mark.parametrize(
    "m, lhs, rhs",
    [
        (2, ((0, 0, 0), (1, 0, 1)), ((0, 0, 1), (1, 0, 0))),
        (3, ((0, 2, 0), (2, 2, 2)), ((0, 2, 2), (2, 2, 0))),
    ],
)
def test_swap_relation_examples(m, lhs, rhs):
    relations = {
        frozenset([tuple(x.entries for x in rel.lhs), tuple(x.entries for x in rel.rhs)])
        for rel in swap_relations(m, 2, 2)
    }
    assert frozenset([lhs, rhs]) in relations


@pytest.mark.parametrize("m, a, b", SHAPES)
@pytest.mark.parametrize("leveled", [True, False])
def test_swap_relations_are_balanced(m, a, b, leveled):
    for rel in swap_relations(m, a, b, leveled):
        u, v = rel.lhs
        x, y = rel.rhs
        assert weights_of_tuple(u) + weights_of_tuple(v) == weights_of_tuple(x) + weights_of_tuple(y)
        assert chain_of_tuple(u) + chain_of_tuple(v) == chain_of_tuple(x) + chain_of_tuple(y)
        assert rel.lhs != rel.rhs
        assert (u.entries, v.entries) < (x.entries, y.entries)
        if not leveled:
            assert all(z.in_y() for z in (u, v, x, y))


def test_swap_relation_format():
    rel = swap_relations(2, 2, 2)[0]
    assert str(rel).startswith("((") and ")=((" in str(rel)


@pytest.mark.parametrize(
    "m, a, b, entries, left, right",
    [
        (3, 3, 3, (2, 1, 0, 1, 2), (2, 1, 0, 0, 0), (0, 0, 0, 1, 2)),
        (2, 2, 2, (1, 0, 1), (1, 0, 0), (0, 0, 1)),
    ],
)
def test_zero_split_examples(m, a, b, entries, left, right):
    x, y = zero_split(GeneratorTuple(m=m, a=a, b=b, entries=entries))
    assert (x.entries, y.entries) == (left, right)
    assert weights_of_tuple(x) + weights_of_tuple(y) == weights_of_tuple(
        GeneratorTuple(m=m, a=a, b=b, entries=entries)
    ) + weights_of_tuple(GeneratorTuple(m=m, a=a, b=b, entries=(0,) * len(entries)))


@pytest.mark.parametrize("entries", [(0, 0, 0), (0, 2, 2), (2, 1, 2)])
def test_zero_split_needs_an_internal_zero(entries):
    with pytest.raises(NoInternalZero):
        zero_split(GeneratorTuple(m=3, a=2, b=2, entries=entries))


@pytest.mark.parametrize("m, a, b", SHAPES)
def test_every_tuple_splits_into_y_tuples(m, a, b):
    for x in enumerate_x(m, a, b):
        parts = y_decomposition(x)
        assert all(p.in_y() for p in parts)
        if x.is_zero():
            assert parts == []
            continue
        total = weights_of_tuple(parts[0])
        for p in parts[1:]:
            total = total + weights_of_tuple(p)
        assert (total.r, total.s) == (weights_of_tuple(x).r, weights_of_tuple(x).s)
        if x.in_y():
            assert parts == [x]


def test_weyl_examples():
    pair = weyl_tuple(2, 2, 2, WeylIndex(kind="pair", indices=(1, 1)))
    assert pair.entries == (1, 1, 0)
    assert weights_of_tuple(pair).r == (1, 0)
    assert weights_of_tuple(pair).s == (1, 0)

    det = weyl_tuple(3, 3, 2, WeylIndex(kind="I", indices=(1, 2, 3)))
    assert det.entries == (2, 1, 0, 0)
    assert weights_of_tuple(det).r == (1, 1, 1)
    assert weights_of_tuple(det).s == (0, 0)


@pytest.mark.parametrize(
    "index",
    [
        WeylIndex(kind="I", indices=()),
        WeylIndex(kind="I", indices=(1, 2)),
        WeylIndex(kind="I", indices=(1, 1, 2)),
        WeylIndex(kind="J", indices=(1, 2, 3)),
        WeylIndex(kind="pair", indices=(4, 1)),
        WeylIndex(kind="other", indices=(1, 1)),
    ],
)
def test_weyl_rejects_bad_index_sets(index):
    with pytest.raises(InputError):
        weyl_tuple(3, 3, 2, index)


@pytest.mark.parametrize("m, a, b", [(2, 2, 2), (2, 3, 3), (3, 3, 3), (3, 4, 2), (4, 4, 4)])
def test_weyl_tuples_lie_in_y(m, a, b):
    images = []
    for kind, bound in (("I", a), ("J", b)):
        for subset in combinations(range(1, bound + 1), m):
            images.append(weyl_tuple(m, a, b, WeylIndex(kind=kind, indices=subset)))
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            images.append(weyl_tuple(m, a, b, WeylIndex(kind="pair", indices=(i, j))))
    assert images
    assert all(x.in_y() for x in images)


def test_tuple_from_legs():
    assert tuple_from_legs(3, 2, 2, (1, 1), (1, 1)).entries == (2, 1, 2)
    assert tuple_from_legs(3, 2, 2, (1, 0), (0, 0)) is None
    with pytest.raises(InputError):
        tuple_from_legs(3, 2, 2, (2, 0), (0, 0))


@pytest.mark.parametrize("m, a, b", SHAPES)
def test_census_is_multiplicity_free(m, a, b):
    census = multidegree_census(m, a, b)
    assert sum(census.values()) == len(enumerate_x(m, a, b))
    assert all(count == 1 for count in census.values())


def test_tuple_of_chain_needs_level_one():
    u = chain_of_tuple(t(3, 2, 2, 2, 1, 2))
    with pytest.raises(InputError):
        tuple_of_chain(u + u)
