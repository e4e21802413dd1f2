import pytest

from caterpillar.errors import InputError
from caterpillar.kpieri import FactorKind
from caterpillar.verify.gorenstein import factor_kinds, generator_sum_witnesses, gorenstein_check


def test_factor_kinds():
    assert factor_kinds(3, 4) == [
        FactorKind.PPB,
        FactorKind.BPB,
        FactorKind.BPSTAR_B,
        FactorKind.BPSTAR_B,
        FactorKind.BPSTAR_PSTAR,
    ]


def test_generator_sums_glue_for_m2():
    witnesses, mismatches = generator_sum_witnesses(2, 2, 2, leveled=True)
    assert mismatches == []
    assert [wit.level for wit in witnesses] == [4, 4]
    assert witnesses[0].boundary_1 == "2"


def test_generator_sums_fail_with_a_middle_factor():
    witnesses, mismatches = generator_sum_witnesses(3, 3, 2, leveled=True)
    assert 1 in mismatches
    assert [wit.level for wit in witnesses][:2] == [4, 6]
    assert witnesses[0].boundary_1 == "3,2"
    assert witnesses[1].boundary_1 == "4,2"


def test_m2_is_gorenstein():
    report = gorenstein_check(2, 2, 2, max_degree=5)
    assert report.condition_holds
    assert not report.degenerate
    assert report.witness_degree == 4
    assert report.samples_tested > 0
    assert report.sampled_interior_ok is True


def test_m3_condition_holds_without_middle_factors():
    report = gorenstein_check(3, 2, 2, max_degree=4)
    assert report.condition_holds
    assert report.sampled_interior_ok is not False


@pytest.mark.parametrize("a, b", [(3, 2), (2, 3)])
def test_middle_factor_has_no_interior_below_degree_six(a, b):
    report = gorenstein_check(3, a, b, max_degree=4)
    assert not report.condition_holds
    assert report.degenerate
    assert report.interior_found == 0
    assert report.sampled_interior_ok is None


@pytest.mark.parametrize("a, b", [(3, 2), (2, 3)])
def test_middle_factor_interior_is_a_witness_translate(a, b):
    report = gorenstein_check(3, a, b, max_degree=7)
    assert not report.condition_holds
    assert not report.degenerate
    assert report.witness_degree == 6
    assert report.samples_tested > 0
    assert report.sampled_interior_ok is True


def test_zero_degree_search_is_degenerate():
    report = gorenstein_check(2, 2, 2, max_degree=0)
    assert report.degenerate
    assert report.witness is None
    assert report.sampled_interior_ok is None


def test_reports_are_deterministic():
    first = gorenstein_check(2, 2, 2, max_degree=5, sample_count=10, seed=7)
    second = gorenstein_check(2, 2, 2, max_degree=5, sample_count=10, seed=7)
    assert first == second
    assert first.model_dump_json() == second.model_dump_json()


def test_gorenstein_rejects_bad_input():
    with pytest.raises(InputError):
        gorenstein_check(2, 2, 2, max_degree=-1)
    with pytest.raises(InputError):
        gorenstein_check(2, 1, 2)
