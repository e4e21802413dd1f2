import pytest

from caterpillar.errors import InputError
from caterpillar.pieri import pieri_dim
from caterpillar.verify.oracles import is_horizontal_strip, lr_strip_oracle, sl2_fusion, sl2_fusion_oracle
from caterpillar.weights import SlWeight


def w(*entries):
    return SlWeight(m=len(entries) + 1, entries=entries)


def test_horizontal_strips():
    assert is_horizontal_strip([2, 1, 0], [1, 0, 0])
    assert is_horizontal_strip([3, 1], [1, 1])
    assert not is_horizontal_strip([2, 2], [1, 0])
    assert is_horizontal_strip([], [])


def test_lr_oracle_examples():
    assert lr_strip_oracle(w(1, 0), 1, w(2, 2)) == 1
    assert lr_strip_oracle(w(1, 0), 2, w(1, 0)) == 0
    assert lr_strip_oracle(w(1, 0), 1, w(1, 1)) == 0
    assert lr_strip_oracle(w(0, 0), 0, w(0, 0)) == 1
    with pytest.raises(InputError):
        lr_strip_oracle(w(1, 0), -1, w(1, 0))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_pieri_dim_matches_lr_oracle(m, weights):
    for lam in weights(m, 4):
        for eta in weights(m, 4):
            for r in range(7):
                assert pieri_dim(lam, r, eta) == lr_strip_oracle(lam, r, eta), (lam, r, eta)


def test_sl2_fusion_rules():
    assert sl2_fusion(1, 1, 0, 1) == 1
    assert sl2_fusion(1, 1, 2, 1) == 0
    assert sl2_fusion(1, 1, 2, None) == 1
    assert sl2_fusion(1, 1, 1, None) == 0
    assert sl2_fusion(3, 0, 1, None) == 0


def test_sl2_fusion_oracle_examples():
    assert sl2_fusion_oracle([1, 1, 1, 1], 1) == 1
    assert sl2_fusion_oracle([1, 1, 1, 1], 2) == 2
    assert sl2_fusion_oracle([1, 1, 1, 1], None) == 2
    assert sl2_fusion_oracle([1, 1, 1, 1, 1, 1], None) == 5
    with pytest.raises(InputError):
        sl2_fusion_oracle([1, 1], None)
    with pytest.raises(InputError):
        sl2_fusion_oracle([1, -1, 0], None)
