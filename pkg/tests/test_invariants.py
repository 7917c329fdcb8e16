import pytest

from chdiag.epd import mirror, parse_epd, shadow_to_base_pd
from chdiag.invariants import (
    ValidityDomainError, bracket_state_sum, component_count, gon_census, is_trivial_unlink,
    is_unit_times_unlink, kauffman_bracket, writhe,
)
from chdiag.polynomial import DELTA, LaurentPolynomial as P
from chdiag.shadows import enumerate_shadows

from conftest import FIGURE_EIGHT, HOPF, TREFOIL


def test_trefoil():
    code = parse_epd(TREFOIL)
    assert kauffman_bracket(code) == P({5: -1, -3: -1, -7: 1})
    assert writhe(code) == 3
    assert not is_trivial_unlink(code)


def test_figure_eight_is_amphichiral():
    code = parse_epd(FIGURE_EIGHT)
    b = kauffman_bracket(code)
    assert b == P({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})
    assert b == b.invert_variable()
    assert writhe(code) == 0


def test_hopf():
    code = parse_epd(HOPF)
    assert component_count(code) == 2
    assert kauffman_bracket(code) == P({4: -1, -4: -1})
    assert not is_trivial_unlink(code)


@pytest.mark.parametrize("text", ["X[1,2,2,1]", "X[2,2,1,1]"])
def test_kinks_are_unknots(text):
    code = parse_epd(text)
    b = kauffman_bracket(code)
    assert b in (P({3: -1}), P({-3: -1}))
    assert b == P({3 * writhe(code): (-1) ** writhe(code)})
    assert is_trivial_unlink(code)


def test_free_loops_multiply_by_delta():
    code = parse_epd(TREFOIL)
    assert kauffman_bracket(code, 2) == kauffman_bracket(code) * DELTA ** 2


def test_mirror_inverts_variable():
    for text in (TREFOIL, FIGURE_EIGHT, HOPF):
        code = parse_epd(text)
        assert kauffman_bracket(mirror(code)) == kauffman_bracket(code).invert_variable()


def test_bracket_matches_state_sum_on_base_codes():
    for n in range(2, 7):
        for pm in enumerate_shadows(n):
            code = shadow_to_base_pd(pm)
            assert kauffman_bracket(code) == bracket_state_sum(code)


def test_unit_times_unlink():
    assert is_unit_times_unlink(DELTA.shift(6) * -1, 2) == (True, 6)
    assert is_unit_times_unlink(P({5: -1, -3: -1, -7: 1}), 1) == (False, 0)
    assert is_unit_times_unlink(P(), 1) == (False, 0)


def test_marked_code_rejected(example_1):
    with pytest.raises(ValueError):
        kauffman_bracket(example_1)


def test_unlink_test_domain_guard():
    from chdiag.invariants import MAX_UNLINK_TEST_CROSSINGS
    from chdiag.epd import EPDCode, CrossingRecord
    n = MAX_UNLINK_TEST_CROSSINGS + 1
    fake = EPDCode(tuple(CrossingRecord("X", (1, 1, 1, 1)) for _ in range(n)))
    with pytest.raises(ValidityDomainError):
        is_trivial_unlink(fake)


def test_gon_census(example_1):
    census = gon_census(example_1)
    assert len(census) == example_1.n + 2
    assert sum(census) == 4 * example_1.n
