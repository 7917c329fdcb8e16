"""PD and EPD codes: data model, text grammar and generation from shadows.

An EPD code is a list of records ``N[a,b,c,d]`` with ``N`` in ``X, Y, Z`` and
the edge labels read counterclockwise.  For ``X`` the record starts at the
incoming lower strand.  ``Y`` and ``Z`` are marked vertices; ``Y[a,b,c,d]``
carries its marker in the corners ``(a,b)`` and ``(c,d)``, ``Z`` in ``(b,c)``
and ``(d,a)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .planar_map import MapError, PlaneMap

NAMES = ("X", "Y", "Z")

# decoration states used for assignments over a shadow
X0, X1, Y, Z = 0, 1, 2, 3


class EPDError(ValueError):
    pass


class EPDSyntaxError(EPDError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class LabelMultiplicityError(EPDError):
    pass


class TopologyError(EPDError):
    pass


@dataclass(frozen=True)
class CrossingRecord:
    name: str
    quad: tuple[int, int, int, int]

    def __str__(self) -> str:
        return f"{self.name}[{','.join(map(str, self.quad))}]"

    @property
    def marked(self) -> bool:
        return self.name != "X"


@dataclass(frozen=True)
class EPDCode:
    crossings: tuple[CrossingRecord, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def m(self) -> int:
        return sum(1 for c in self.crossings if c.marked)

    @property
    def is_pd(self) -> bool:
        return self.m == 0

    def __str__(self) -> str:
        return ",".join(map(str, self.crossings))

    def normalized(self) -> "EPDCode":
        return EPDCode(tuple(sorted(self.crossings, key=lambda r: (min(r.quad), r.quad, r.name))))

    def serialize(self) -> str:
        return str(self.normalized())

    def labels(self) -> list[int]:
        return sorted({x for r in self.crossings for x in r.quad})

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """label -> the two (record index, slot) places it occupies."""
        occ: dict[int, list[tuple[int, int]]] = {}
        for k, r in enumerate(self.crossings):
            for i, x in enumerate(r.quad):
                occ.setdefault(x, []).append((k, i))
        return occ

    def to_map(self) -> PlaneMap:
        """Underlying 4-valent map; dart ``4k+i`` is slot ``i`` of record ``k``."""
        occ = self.occurrences()
        opp = [0] * (4 * self.n)
        for (k1, i1), (k2, i2) in occ.values():
            opp[4 * k1 + i1] = 4 * k2 + i2
            opp[4 * k2 + i2] = 4 * k1 + i1
        return PlaneMap(tuple(opp))


PDCode = EPDCode


# ---------------------------------------------------------------------------
# grammar

_INT = r"([1-9][0-9]*)"
_ENTRY = re.compile(r"([XYZ])\[" + r",[ \t\r\n]*".join([_INT] * 4) + r"\]")
_SEP = re.compile(r",[ \t\r\n]*")


def parse_epd(text: str, check_topology: bool = True) -> EPDCode:
    """Parse ``X[..],Y[..],...`` into a validated code.

    Whitespace is allowed only after the separating commas.
    """
    pos = 0
    recs = []
    while True:
        mt = _ENTRY.match(text, pos)
        if not mt:
            raise EPDSyntaxError("expected entry like X[1,2,3,4]", pos)
        recs.append(CrossingRecord(mt.group(1), tuple(int(mt.group(g)) for g in range(2, 6))))
        pos = mt.end()
        if pos == len(text):
            break
        ms = _SEP.match(text, pos)
        if not ms:
            raise EPDSyntaxError("expected ',' between entries", pos)
        pos = ms.end()
    code = EPDCode(tuple(recs))
    validate(code, check_topology)
    return code


def validate(code: EPDCode, check_topology: bool = True) -> None:
    counts: dict[int, int] = {}
    for r in code.crossings:
        if r.name not in NAMES or len(r.quad) != 4:
            raise EPDError(f"malformed record {r}")
        for x in r.quad:
            counts[x] = counts.get(x, 0) + 1
    bad = sorted(x for x, c in counts.items() if c != 2)
    if bad:
        raise LabelMultiplicityError(f"labels not appearing exactly twice: {bad}")
    if sorted(counts) != list(range(1, 2 * code.n + 1)):
        raise LabelMultiplicityError(f"labels must be exactly 1..{2 * code.n}")
    if check_topology:
        try:
            code.to_map()
        except MapError as e:
            raise TopologyError(str(e)) from None


# ---------------------------------------------------------------------------
# transformations


def _rotate(q: Sequence[int], k: int) -> tuple[int, int, int, int]:
    return tuple(q[(i + k) % 4] for i in range(4))


def mirror(code: EPDCode) -> EPDCode:
    """Flip every classical crossing (rotate by one) and swap Y and Z."""
    out = []
    for r in code.crossings:
        if r.name == "X":
            out.append(CrossingRecord("X", _rotate(r.quad, 1)))
        else:
            out.append(CrossingRecord("Z" if r.name == "Y" else "Y", r.quad))
    return EPDCode(tuple(out))


def switch(code: EPDCode) -> EPDCode:
    """Swap Y and Z, leaving classical crossings alone."""
    return EPDCode(tuple(
        r if r.name == "X" else CrossingRecord("Z" if r.name == "Y" else "Y", r.quad)
        for r in code.crossings))


def classical_mirror(code: EPDCode) -> EPDCode:
    return switch(mirror(code))


def strand_circuits(code: EPDCode) -> list[list[tuple[int, int]]]:
    """Straight-ahead circuits (slot i continues to slot i+2 at every record),
    each as the list of (record, entry slot) in traversal order.  Circuits
    start at the smallest label and head toward its smaller neighbour."""
    occ = code.occurrences()
    quads = [r.quad for r in code.crossings]
    seen: set[int] = set()
    out = []
    for lab in sorted(occ):
        if lab in seen:
            continue
        (k1, i1), (k2, i2) = occ[lab]
        n1 = quads[k1][(i1 + 2) % 4]
        n2 = quads[k2][(i2 + 2) % 4]
        head = (k1, i1) if (n1, k1, i1) <= (n2, k2, i2) else (k2, i2)
        circ = []
        cur = head
        cur_lab = lab
        while True:
            seen.add(cur_lab)
            circ.append(cur)
            k, i = cur
            nxt = quads[k][(i + 2) % 4]
            a, b = occ[nxt]
            cur = b if a == (k, (i + 2) % 4) else a
            cur_lab = nxt
            if cur == head:
                break
        out.append(circ)
    return out


def coherent(code: EPDCode, with_labels: bool = False):
    """Relabel along straight-ahead circuits (consecutive increasing labels)
    and start every X record at its incoming lower strand.

    Classical crossing types, names and planar structure are unchanged; Y/Z
    records start at their incoming slot of the same parity.  With
    ``with_labels`` also return the map new label -> old label.
    """
    occ = code.occurrences()
    new_label: dict[tuple[int, int], int] = {}
    lab = 0
    heads: set[tuple[int, int]] = set()
    for circ in strand_circuits(code):
        for (k, i) in circ:
            lab += 1
            heads.add((k, i))
            new_label[(k, i)] = lab
    # every label is named by the head place it enters
    lab_of_place: dict[tuple[int, int], int] = {}
    for places in occ.values():
        a, b = places
        h = a if a in heads else b
        lab_of_place[a] = lab_of_place[b] = new_label[h]
    out = []
    for k, r in enumerate(code.crossings):
        q = [lab_of_place[(k, i)] for i in range(4)]
        start = 0 if (k, 0) in heads else 2
        out.append(CrossingRecord(r.name, _rotate(q, start)))
    if with_labels:
        old = {new_label[h]: code.crossings[h[0]].quad[h[1]] for h in heads}
        return EPDCode(tuple(out)), old
    return EPDCode(tuple(out))


# ---------------------------------------------------------------------------
# shadows -> codes


@dataclass(frozen=True)
class ShadowLabeling:
    """Edge labels of a shadow increasing along its straight-ahead circuits.

    ``label[d]`` is the label of the edge through dart ``d``; ``incoming[d]``
    tells whether the circuit orientation enters the vertex through ``d``.
    """
    shadow: PlaneMap
    label: tuple[int, ...]
    incoming: tuple[bool, ...]

    @classmethod
    def of(cls, pm: PlaneMap) -> "ShadowLabeling":
        label = [0] * len(pm.opp)
        incoming = [False] * len(pm.opp)
        lab = 0
        for start in range(len(pm.opp)):
            if label[start]:
                continue
            d = start  # leaving a vertex along d
            while not label[d]:
                lab += 1
                t = pm.opp[d]
                label[d] = label[t] = lab
                incoming[t] = True
                d = (t & ~3) | ((t + 2) & 3)
        return cls(pm, tuple(label), tuple(incoming))

    def record(self, v: int, state: int) -> CrossingRecord:
        base = 4 * v
        if state in (X0, X1):
            s = state if self.incoming[base + state] else state + 2
            name = "X"
        else:
            s = 0 if self.incoming[base] else 2
            name = "Y" if state == Y else "Z"
        return CrossingRecord(name, tuple(self.label[base + ((s + i) & 3)] for i in range(4)))

    def code(self, states: Sequence[int]) -> EPDCode:
        return EPDCode(tuple(self.record(v, s) for v, s in enumerate(states)))


def shadow_to_base_pd(shadow: PlaneMap) -> EPDCode:
    """All-X code of the shadow, under strands on slots 0/2 of every vertex."""
    return ShadowLabeling.of(shadow).code([X0] * shadow.n)


def is_orbit_representative(states: Sequence[int]) -> bool:
    """Minimal member of its orbit under flipping all classical types and
    under swapping all markers: first classical vertex is X0, first marked is Y."""
    first_x = next((s for s in states if s < 2), X0)
    first_m = next((s for s in states if s >= 2), Y)
    return first_x == X0 and first_m == Y


def assignments(n: int, marker_counts: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Orbit representatives of ``{X0,X1,Y,Z}^n`` in lexicographic order."""
    wanted = None if marker_counts is None else set(marker_counts)

    def rec(prefix: list[int], seen_x: bool, seen_m: bool, marks: int):
        if len(prefix) == n:
            if wanted is None or marks in wanted:
                yield tuple(prefix)
            return
        for s in (X0, X1, Y, Z):
            if s == X1 and not seen_x:
                continue
            if s == Z and not seen_m:
                continue
            prefix.append(s)
            yield from rec(prefix, seen_x or s < 2, seen_m or s >= 2, marks + (s >= 2))
            prefix.pop()

    yield from rec([], False, False, 0)


def enumerate_diagrams(base: EPDCode | PlaneMap,
                       marker_counts: Iterable[int] | None = None) -> Iterator[EPDCode]:
    """All decorations of the base shadow, one per orbit of classical mirror
    and switch, restricted to the requested numbers of marked vertices."""
    pm = base if isinstance(base, PlaneMap) else base.to_map()
    lab = ShadowLabeling.of(pm)
    for states in assignments(pm.n, marker_counts):
        yield lab.code(states)


def decoration_of(code: EPDCode) -> list[tuple[str, int]]:
    """Per record: ('X', parity of the under slots) or ('M', parity of the
    marker corners, corner (i, i+1) being number i)."""
    out = []
    for r in code.crossings:
        if r.name == "X":
            out.append(("X", 0))
        else:
            out.append(("M", 0 if r.name == "Y" else 1))
    return out
