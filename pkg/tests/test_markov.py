import pytest

from caterpillar.errors import InputError, SizeGuardExceeded
from caterpillar.verify.markov import all_connected, markov_check


@pytest.mark.parametrize("m, a, b", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 2, 3), (3, 3, 2)])
@pytest.mark.parametrize("leveled", [True, False])
def test_swaps_connect_every_fiber(m, a, b, leveled):
    reports = markov_check(m, a, b, leveled=leveled, max_degree=3)
    assert reports
    assert all_connected(reports)
    assert all(rep.disconnecting_pair is None for rep in reports)


def test_degree_one_fibers_are_single_generators():
    reports = markov_check(3, 2, 2, max_degree=1)
    assert len(reports) == 6
    assert all(rep.fiber_size == 1 and rep.degree == 1 for rep in reports)
    assert all(rep.multidegree.level == 1 for rep in reports)


def test_nontrivial_fiber_has_a_swap_path():
    reports = markov_check(2, 2, 2, max_degree=2)
    fiber = next(rep for rep in reports if rep.fiber_size > 1)
    assert fiber.connected
    assert fiber.witness_path is not None
    assert len(fiber.witness_path) >= 2
    assert fiber.multidegree.level == 2


def test_unleveled_fibers_have_no_level():
    reports = markov_check(3, 2, 2, leveled=False, max_degree=2)
    assert all(rep.multidegree.level is None for rep in reports)


def test_markov_rejects_bad_input():
    with pytest.raises(InputError):
        markov_check(3, 2, 2, max_degree=0)
    with pytest.raises(SizeGuardExceeded):
        markov_check(3, 2, 2, max_degree=3, max_objects=10)
