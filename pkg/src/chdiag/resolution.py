"""Positive/negative resolutions of marked graph diagrams and admissibility."""

from __future__ import annotations

from dataclasses import dataclass

from .epd import CrossingRecord, EPDCode, coherent
from .invariants import component_count, is_trivial_unlink

# pairs of quad positions joined when smoothing; Z uses the other pairing
_PAIRS = {
    ("Y", 1): ((0, 1), (2, 3)),
    ("Y", -1): ((1, 2), (3, 0)),
    ("Z", 1): ((1, 2), (3, 0)),
    ("Z", -1): ((0, 1), (2, 3)),
}


@dataclass(frozen=True)
class Resolution:
    sign: int
    diagram: EPDCode
    # circles left without any crossing
    free_loops: int = 0

    @property
    def components(self) -> int:
        return component_count(self.diagram, self.free_loops)


def resolve(code: EPDCode, sign: int) -> Resolution:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in code.crossings:
        for x in r.quad:
            find(x)
        if r.marked:
            for i, j in _PAIRS[(r.name, sign)]:
                parent[find(r.quad[i])] = find(r.quad[j])
    kept = [r for r in code.crossings if not r.marked]
    used = {find(x) for r in kept for x in r.quad}
    free = len({find(x) for x in parent} - used)
    relabel: dict[int, int] = {}
    recs = []
    for r in kept:
        q = []
        for x in r.quad:
            root = find(x)
            if root not in relabel:
                relabel[root] = len(relabel) + 1
            q.append(relabel[root])
        recs.append(CrossingRecord("X", tuple(q)))
    diagram = EPDCode(tuple(recs))
    if recs:
        diagram = coherent(diagram)
    return Resolution(sign, diagram, free)


def is_admissible(code: EPDCode) -> bool:
    """Both resolutions are diagrams of trivial links."""
    return all(is_trivial_unlink(res.diagram, res.free_loops)
               for res in (resolve(code, 1), resolve(code, -1)))
