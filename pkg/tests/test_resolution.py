import pytest

from chdiag.epd import ShadowLabeling, mirror, parse_epd, switch
from chdiag.invariants import bracket_state_sum, kauffman_bracket
from chdiag.planar_map import hopf_shadow
from chdiag.resolution import is_admissible, resolve


def test_example_1_resolutions(example_1):
    plus, minus = resolve(example_1, 1), resolve(example_1, -1)
    assert plus.diagram.n == minus.diagram.n == 9
    assert plus.components + minus.components - example_1.m == 3
    assert is_admissible(example_1)


def test_bad_sign(example_1):
    with pytest.raises(ValueError):
        resolve(example_1, 0)


def test_all_marked_hopf():
    lab = ShadowLabeling.of(hopf_shadow())
    yy = lab.code([2, 2])
    yz = lab.code([2, 3])
    for code in (yy, yz):
        for sign in (1, -1):
            res = resolve(code, sign)
            assert res.diagram.n == 0
            assert res.free_loops == res.components
    # the two saddles of a torus: one circle on each side
    assert {resolve(yy, 1).components, resolve(yy, -1).components} == {1}
    assert is_admissible(yy)


def test_pd_code_is_its_own_resolution():
    code = parse_epd("X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]")
    assert resolve(code, 1).diagram.n == 3
    assert not is_admissible(code)


def test_switch_swaps_resolutions(example_1):
    s = switch(example_1)
    assert resolve(s, 1).components == resolve(example_1, -1).components
    assert resolve(s, -1).components == resolve(example_1, 1).components


def test_admissibility_invariant_under_mirror_and_switch(small_diagrams):
    for code, adm in small_diagrams[::7]:
        assert is_admissible(mirror(code)) == adm
        assert is_admissible(switch(code)) == adm


def test_resolution_brackets_match_state_sum(small_diagrams):
    # every classical diagram met on the way, n <= 6
    for code, _ in small_diagrams:
        for sign in (1, -1):
            res = resolve(code, sign)
            if res.diagram.n:
                assert kauffman_bracket(res.diagram, res.free_loops) == \
                    bracket_state_sum(res.diagram, res.free_loops)
