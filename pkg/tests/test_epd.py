from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from chdiag.epd import (
    EPDSyntaxError, LabelMultiplicityError, ShadowLabeling, TopologyError, assignments,
    classical_mirror, coherent, enumerate_diagrams, is_orbit_representative, mirror,
    parse_epd, shadow_to_base_pd, strand_circuits, switch,
)
from chdiag.planar_map import canonical_code, hopf_shadow
from chdiag.shadows import enumerate_shadows

from conftest import EXAMPLE_1


def test_parse_example_1(example_1):
    assert example_1.n == 10
    assert example_1.m == 1


def test_parse_kink():
    code = parse_epd("X[1,2,2,1]")
    assert code.n == 1


@pytest.mark.parametrize("text", ["X[1,2,3,4]", "X[1,1,2,3]"])
def test_label_multiplicity(text):
    with pytest.raises(LabelMultiplicityError):
        parse_epd(text)


@pytest.mark.parametrize("text,pos", [
    ("X[1,2,2,1] ,X[3,4,4,3]", 10),
    ("X[1, 2,2,1]x", 11),
    ("W[1,2,2,1]", 0),
    ("X[0,1,1,0]", 0),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(EPDSyntaxError) as info:
        parse_epd(text)
    assert info.value.pos == pos


def test_whitespace_after_commas_only():
    parse_epd("X[1,\n2, 2,\t1]")
    with pytest.raises(EPDSyntaxError):
        parse_epd(" X[1,2,2,1]")


def test_disconnected_code_rejected():
    with pytest.raises(TopologyError):
        parse_epd("X[1,2,2,1],X[3,4,4,3]")


def test_serialize_normalizes(example_1):
    text = example_1.serialize()
    assert " " not in text
    again = parse_epd(text)
    assert again.serialize() == text
    mins = [min(r.quad) for r in again.crossings]
    assert mins == sorted(mins)


def test_mirror_and_switch(example_1):
    names = Counter(r.name for r in mirror(example_1).crossings)
    assert names == {"X": 9, "Z": 1}
    assert switch(switch(example_1)) == example_1
    pd = parse_epd("X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]")
    assert all(m.quad == (o.quad[1], o.quad[2], o.quad[3], o.quad[0])
               for m, o in zip(mirror(pd).crossings, pd.crossings))
    assert classical_mirror(example_1).m == example_1.m


def test_mirror_is_involution_up_to_rotation(example_1):
    # rotating a quad by one twice is the same crossing read from the other strand end
    twice = mirror(mirror(example_1))
    assert [r.name for r in twice.crossings] == [r.name for r in example_1.crossings]
    assert twice.to_map().n == example_1.n


def test_shadow_base_round_trip():
    for n in range(2, 7):
        for pm in enumerate_shadows(n):
            code = shadow_to_base_pd(pm)
            assert code.m == 0
            assert canonical_code(code.to_map()) == canonical_code(pm)
            parse_epd(str(code))


def test_labels_increase_along_circuits():
    for pm in enumerate_shadows(6):
        code = shadow_to_base_pd(pm)
        for circ in strand_circuits(code):
            labels = [code.crossings[k].quad[i] for k, i in circ]
            assert labels == list(range(labels[0], labels[0] + len(labels)))


def test_hopf_base():
    code = shadow_to_base_pd(hopf_shadow())
    assert sorted(code.labels()) == [1, 2, 3, 4]
    assert len(strand_circuits(code)) == 2


def test_assignment_counts_match_orbit_formula():
    for n in range(1, 7):
        assert sum(1 for _ in assignments(n)) == 4 ** (n - 1) + 2 ** (n - 1)


def test_assignments_one_per_orbit():
    # orbits of classical flip x marker switch, brute force at n = 4
    def images(s):
        flip = {0: 1, 1: 0, 2: 2, 3: 3}
        sw = {0: 0, 1: 1, 2: 3, 3: 2}
        out = {s, tuple(flip[x] for x in s), tuple(sw[x] for x in s)}
        out.add(tuple(sw[flip[x]] for x in s))
        return out

    reps = set(assignments(4))
    orbits = {frozenset(images(s)) for s in product(range(4), repeat=4)}
    assert len(reps) == len(orbits)
    assert all(len(o & reps) == 1 for o in orbits)


def test_enumerate_never_emits_a_mirror_pair():
    # mirror flips every classical type and swaps every marker
    image = {0: 1, 1: 0, 2: 3, 3: 2}
    for n in range(1, 6):
        reps = set(assignments(n))
        for s in reps:
            m = tuple(image[x] for x in s)
            assert m == s or m not in reps


def test_marker_filter():
    pm = hopf_shadow()
    only2 = list(enumerate_diagrams(pm, {2}))
    assert all(c.m == 2 for c in only2)
    # four Y/Z patterns on two vertices, halved by switch
    assert len(only2) == 2
    total = sum(1 for _ in enumerate_diagrams(pm))
    assert total == 4 + 2


def test_orbit_representative_predicate():
    assert is_orbit_representative((0, 1, 2, 3))
    assert not is_orbit_representative((1, 0))
    assert not is_orbit_representative((3, 2))


def test_coherent_keeps_structure(example_1):
    c, old = coherent(example_1, with_labels=True)
    assert [r.name for r in c.crossings] == [r.name for r in example_1.crossings]
    assert canonical_code(c.to_map()) == canonical_code(example_1.to_map())
    assert sorted(old) == list(range(1, 21))
    assert sorted(old.values()) == list(range(1, 21))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_labeling_codes_parse(data):
    n = data.draw(st.integers(2, 6))
    shadows = enumerate_shadows(n).shadows
    pm = shadows[data.draw(st.integers(0, len(shadows) - 1))]
    states = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    code = ShadowLabeling.of(pm).code(states)
    assert parse_epd(str(code)).serialize() == code.serialize()
