import xml.etree.ElementTree as ET
from itertools import combinations

import numpy as np

from chdiag.epd import mirror
from chdiag.pipeline import higher_genus_hard_diagram
from chdiag.render import layout, render_svg
from chdiag.shadows import enumerate_shadows
from chdiag.epd import shadow_to_base_pd

NS = "{http://www.w3.org/2000/svg}"


def _classes(svg):
    root = ET.fromstring(svg)
    return [el.get("class") for el in root.iter() if el.get("class")]


def test_example_1_glyphs(example_1):
    cls = _classes(render_svg(example_1))
    assert cls.count("vertex") == 10
    assert cls.count("marker") == 1
    assert cls.count("strand") == 40


def test_deterministic(example_1):
    assert render_svg(example_1) == render_svg(example_1)


def test_mirror_keeps_layout(example_1):
    a, b = layout(example_1), layout(mirror(example_1))
    for v in a[0]:
        assert np.allclose(a[0][v], b[0][v])
    assert render_svg(mirror(example_1)) != render_svg(example_1)


def _cross(p1, p2, q1, q2):
    def orient(a, b, c):
        return np.sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    return (orient(p1, p2, q1) * orient(p1, p2, q2) < 0 and
            orient(q1, q2, p1) * orient(q1, q2, p2) < 0)


def _planar(code):
    verts, mids = layout(code)
    pm = code.to_map()
    segs = []
    for d, e in pm.edges():
        segs.append((verts[d >> 2], mids[d]))
        segs.append((verts[e >> 2], mids[d]))
    return not any(_cross(*s, *t) for s, t in combinations(segs, 2))


def test_drawings_are_planar(example_1):
    assert _planar(example_1)
    assert _planar(higher_genus_hard_diagram(2))
    for pm in enumerate_shadows(6):
        assert _planar(shadow_to_base_pd(pm))
