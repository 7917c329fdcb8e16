"""Base surface of a ch-diagram: components, Euler characteristic, orientability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .epd import EPDCode
from .resolution import resolve


@dataclass(frozen=True)
class SurfaceClass:
    components: int
    euler: int
    orientable: bool

    @property
    def tag(self) -> str:
        return "Ori" if self.orientable else "Non"


def _label_classes(code: EPDCode) -> dict[int, int]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in code.crossings:
        a, b, c, d = r.quad
        for x in r.quad:
            find(x)
        if r.marked:
            for x in (b, c, d):
                parent[find(x)] = find(a)
        else:
            parent[find(c)] = find(a)
            parent[find(d)] = find(b)
    return {x: find(x) for x in parent}


def surface_component_count(code: EPDCode) -> int:
    return len(set(_label_classes(code).values()))


def euler_characteristic(code: EPDCode) -> int:
    """Minima plus maxima minus saddles: c(L+) + c(L-) - m."""
    return resolve(code, 1).components + resolve(code, -1).components - code.m


def abstract_orient(code: EPDCode) -> list[tuple[str, str, str, str]] | None:
    """Label every slot T (edge points toward the record) or F.

    Each edge gets T at one end and F at the other.  At X records opposite
    slots differ; at Y/Z records opposite slots agree and neighbours differ.
    Returns ``None`` when no such labeling exists (non-orientable surface).
    """
    occ = code.occurrences()
    n = code.n
    lab: dict[tuple[int, int], bool] = {}
    # constraints: (place, place, must_differ)
    adj: dict[tuple[int, int], list[tuple[tuple[int, int], bool]]] = {}

    def link(p, q, differ):
        adj.setdefault(p, []).append((q, differ))
        adj.setdefault(q, []).append((p, differ))

    for places in occ.values():
        link(places[0], places[1], True)
    for k, r in enumerate(code.crossings):
        link((k, 0), (k, 2), not r.marked)
        link((k, 1), (k, 3), not r.marked)
        if r.marked:
            link((k, 0), (k, 1), True)
    for k in range(n):
        for i in range(4):
            start = (k, i)
            if start in lab:
                continue
            lab[start] = True
            dq = deque([start])
            while dq:
                p = dq.popleft()
                for q, differ in adj.get(p, ()):
                    want = lab[p] != differ
                    if q not in lab:
                        lab[q] = want
                        dq.append(q)
                    elif lab[q] != want:
                        return None
    return [tuple("T" if lab[(k, i)] else "F" for i in range(4)) for k in range(n)]


_X_OK = {("T", "F", "F", "T"), ("F", "F", "T", "T"), ("T", "T", "F", "F"), ("F", "T", "T", "F")}
_M_OK = {("T", "F", "T", "F"), ("F", "T", "F", "T")}


def is_orientable(code: EPDCode) -> bool:
    labels = abstract_orient(code)
    if labels is None:
        return False
    return all(lb in (_M_OK if r.marked else _X_OK) for r, lb in zip(code.crossings, labels))


def classify(code: EPDCode) -> SurfaceClass:
    return SurfaceClass(surface_component_count(code), euler_characteristic(code), is_orientable(code))


def nontrivial_candidate_filter(n: int, m: int) -> bool:
    """Whether a ch-diagram with ``n`` crossings, ``m`` of them marked, can
    present a nontrivial surface-link at all (needs 2 <= m <= n - 4)."""
    return 2 <= m <= n - 4


def yoshikawa_name(code: EPDCode, index: int, surface: SurfaceClass | None = None) -> str:
    s = surface or classify(code)
    return f"{code.n}^{{{s.components},{s.euler},{s.tag}}}_{{{code.m},{index}}}"
