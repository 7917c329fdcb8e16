"""SVG drawings of ch-diagrams.

Vertices, edge midpoints and face centres of the underlying map form a
triangulation.  The largest face is put outside with its boundary on a
circle; every other point sits at the average of its neighbours (Tutte), so
the drawing is planar and depends only on the code.
"""

from __future__ import annotations

import math

import numpy as np

from .epd import EPDCode
from .planar_map import rot

SIZE = 400.0
GAP = 0.28      # fraction of a half-edge left blank next to an over strand
MARKER = 0.05   # marker half-length in unit-disc coordinates


def layout(code: EPDCode) -> tuple[dict[int, np.ndarray], dict[int, np.ndarray]]:
    """Positions of vertices and of edge midpoints (keyed by the smaller dart)."""
    pm = code.to_map()
    n = pm.n
    faces = pm.faces()
    # chosen from vertex data only, so rotating quads (mirror) keeps the layout
    outer = min(range(len(faces)), key=lambda i: (-faces[i].size, sorted(faces[i].vertices)))
    face_of = pm.face_index()
    edges = pm.edges()
    eid = {}
    for k, (d, e) in enumerate(edges):
        eid[d] = eid[e] = n + k
    fid = {i: n + len(edges) + j for j, i in enumerate(i for i in range(len(faces)) if i != outer)}
    total = n + len(edges) + len(fid)

    nbrs: list[set[int]] = [set() for _ in range(total)]

    def link(a: int, b: int) -> None:
        nbrs[a].add(b)
        nbrs[b].add(a)

    for d in range(4 * n):
        link(d >> 2, eid[d])
        f = face_of[d]
        if f != outer:
            link(fid[f], d >> 2)
            link(fid[f], eid[d])

    # outer boundary: vertices and midpoints along the outer face, in order
    ring = []
    darts = faces[outer].darts
    first = min(range(len(darts)), key=lambda j: darts[j] >> 2)
    for d in darts[first:] + darts[:first]:
        ring.append(d >> 2)
        ring.append(eid[d])
    pos = np.zeros((total, 2))
    fixed = np.zeros(total, dtype=bool)
    for j, node in enumerate(ring):
        t = 2 * math.pi * j / len(ring)
        pos[node] = (math.cos(t), math.sin(t))
        fixed[node] = True
    free = np.nonzero(~fixed)[0]
    if len(free):
        index = {v: i for i, v in enumerate(free)}
        lap = np.zeros((len(free), len(free)))
        rhs = np.zeros((len(free), 2))
        for v in free:
            i = index[v]
            lap[i, i] = len(nbrs[v])
            for w in nbrs[v]:
                if fixed[w]:
                    rhs[i] += pos[w]
                else:
                    lap[i, index[w]] -= 1
        pos[free] = np.linalg.solve(lap, rhs)

    # darts must turn counterclockwise around every vertex; reflect otherwise
    v0 = 0
    angles = [math.atan2(*(pos[eid[4 * v0 + i]] - pos[v0])[::-1]) for i in range(4)]
    turn = sum(((angles[(i + 1) % 4] - angles[i]) % (2 * math.pi)) for i in range(4))
    if turn > 2 * math.pi + 1e-6:
        pos[:, 0] *= -1
    verts = {v: pos[v] for v in range(n)}
    mids = {d: pos[eid[d]] for d, _ in edges}
    return verts, mids


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(code: EPDCode) -> str:
    """Standalone SVG: gaps on the lower strand at X vertices, a bar along
    the marker at Y and Z vertices."""
    pm = code.to_map()
    verts, mids = layout(code)
    mid_of = {}
    for d, e in pm.edges():
        mid_of[d] = mid_of[e] = mids[d]
    scale = SIZE / 2 - 20

    def xy(p: np.ndarray) -> tuple[str, str]:
        return _fmt(SIZE / 2 + scale * p[0]), _fmt(SIZE / 2 - scale * p[1])

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(SIZE)}" height="{int(SIZE)}" '
           f'viewBox="0 0 {int(SIZE)} {int(SIZE)}">',
           '<rect width="100%" height="100%" fill="white"/>']
    for d in range(4 * pm.n):
        v = d >> 2
        p, q = verts[v], mid_of[d]
        if code.crossings[v].name == "X" and d % 2 == 0:
            p = p + (q - p) * GAP
        (x1, y1), (x2, y2) = xy(p), xy(q)
        out.append(f'<line class="strand" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="black" stroke-width="2"/>')
    for v in range(pm.n):
        rec = code.crossings[v]
        cx, cy = xy(verts[v])
        if rec.name == "X":
            out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="2" fill="none"/>')
            continue
        out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="3" fill="black"/>')
        # Y markers fill corners (0,1) and (2,3); Z markers the other two
        i = 0 if rec.name == "Y" else 1
        dirs = []
        for c in (i, i + 2):
            a = mid_of[4 * v + c] - verts[v]
            b = mid_of[rot(4 * v + c)] - verts[v]
            a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
            bis = a + b
            nrm = np.linalg.norm(bis)
            dirs.append(bis / nrm if nrm > 1e-9 else np.array([-a[1], a[0]]))
        half = min(np.linalg.norm(mid_of[4 * v + j] - verts[v]) for j in range(4))
        ends = [verts[v] + dr * min(MARKER, half * 0.8) for dr in dirs]
        (x1, y1), (x2, y2) = xy(ends[0]), xy(ends[1])
        out.append(f'<line class="marker" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                   f'stroke="red" stroke-width="4"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
