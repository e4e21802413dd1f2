import pytest
from pydantic import ValidationError

from caterpillar.errors import InputError
from caterpillar.weights import GlWeight, SlWeight, dual, gl_lift, sl_reduce


@pytest.mark.parametrize(
    "m, entries, expected",
    [
        (3, (1, 0), (1, 1)),
        (3, (2, 0), (2, 2)),
        (3, (2, 1), (2, 1)),
        (4, (3, 1, 0), (3, 3, 2)),
        (2, (5,), (5,)),
    ],
)
def test_dual_examples(m, entries, expected):
    assert dual(SlWeight(m=m, entries=entries)).entries == expected


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dual_is_an_involution(m, weights):
    for w in weights(m, 6):
        assert dual(dual(w)) == w


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_dual_swaps_fundamental_weights(m):
    for k in range(m + 1):
        assert dual(SlWeight.fundamental(m, k)) == SlWeight.fundamental(m, m - k)


def test_fundamental_ends_are_zero():
    assert SlWeight.fundamental(3, 0).is_zero()
    assert SlWeight.fundamental(3, 3).is_zero()
    assert SlWeight.fundamental(4, 2).entries == (1, 1, 0)
    with pytest.raises(InputError):
        SlWeight.fundamental(3, 4)


def test_sl_reduce_and_gl_lift():
    assert sl_reduce(GlWeight(m=3, entries=(3, 2, 1))).entries == (2, 1)
    assert gl_lift(SlWeight(m=3, entries=(2, 1)), 1).entries == (3, 2, 1)
    assert gl_lift(SlWeight.zero(4), 2).entries == (2, 2, 2, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_sl_reduce_undoes_gl_lift(m, weights):
    for w in weights(m, 4):
        for c in range(6):
            assert sl_reduce(gl_lift(w, c)) == w


def test_gl_lift_rejects_negative_shift():
    with pytest.raises(InputError):
        gl_lift(SlWeight(m=3, entries=(1, 0)), -1)


@pytest.mark.parametrize(
    "m, entries",
    [
        (3, (1, 2)),
        (3, (1,)),
        (3, (-1, -1)),
        (1, ()),
    ],
)
def test_invalid_weights_are_rejected(m, entries):
    with pytest.raises(ValidationError):
        SlWeight(m=m, entries=entries)


def test_parse_and_format():
    assert SlWeight.parse("2,1") == SlWeight(m=3, entries=(2, 1))
    assert SlWeight.parse("0", 4) == SlWeight.zero(4)
    assert str(SlWeight.zero(3)) == "0"
    assert str(SlWeight(m=4, entries=(2, 2, 1))) == "2,2,1"
    with pytest.raises(InputError):
        SlWeight.parse("1,a")
    with pytest.raises(InputError):
        SlWeight.parse("1,0", 4)


def test_addition_requires_equal_rank():
    w = SlWeight(m=3, entries=(2, 1)) + SlWeight(m=3, entries=(1, 1))
    assert w.entries == (3, 2)
    assert w.size == 5
    with pytest.raises(InputError):
        SlWeight(m=3, entries=(1, 0)) + SlWeight(m=4, entries=(1, 0, 0))


def test_weights_are_hashable_values():
    assert len({SlWeight(m=3, entries=(1, 0)), SlWeight.parse("1,0")}) == 1
