"""Yoshikawa move opportunities that do not increase the crossing count.

Two independent routes are kept.  The ``detect_omega*`` functions read the
EPD code arithmetically: shared labels and 1-based quad positions on the
coherently relabeled code.  :func:`geometric_move_oracle` works on the plane
map instead, using faces, over/under heights and the regions that markers
sit in.  The test-suite requires both to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional

from .epd import EPDCode, coherent
from .planar_map import PlaneMap, canonical_code, hopf_shadow, rot

MOVES = ("omega2", "omega3", "omega4", "omega5", "omega7")


@dataclass(frozen=True)
class MoveWitness:
    move: str
    crossings: tuple[int, ...]
    edges: tuple[int, ...]


# ---------------------------------------------------------------------------
# code-level detectors


class _CodeView:
    """Label adjacency of a coherent code, positions 1-based."""

    def __init__(self, code: EPDCode):
        self.code, self.old_label = coherent(code, with_labels=True)
        self.names = [r.name for r in self.code.crossings]
        self.occ = self.code.occurrences()
        self.between: dict[frozenset, list[int]] = {}
        for lab, ((k1, _), (k2, _)) in self.occ.items():
            if k1 != k2:
                self.between.setdefault(frozenset((k1, k2)), []).append(lab)

    def witness(self, move: str, ks, labs) -> MoveWitness:
        return MoveWitness(move, tuple(sorted(ks)), tuple(sorted(self.old_label[x] for x in labs)))

    def pos(self, lab: int, k: int) -> int:
        return next(i for (kk, i) in self.occ[lab] if kk == k) + 1

    def pos_pair(self, lab: int) -> tuple[int, int]:
        (_, i1), (_, i2) = self.occ[lab]
        return tuple(sorted((i1 + 1, i2 + 1)))

    def bigons(self):
        for pair, labs in self.between.items():
            for l1, l2 in combinations(sorted(labs), 2):
                yield tuple(sorted(pair)), l1, l2

    def triangles(self):
        """Triangular faces as ((p, q, r), (l_pq, l_qr, l_rp))."""
        n = self.code.n
        seen = set()
        for p, q, r in combinations(range(n), 3):
            for lpq in self.between.get(frozenset((p, q)), ()):
                for lqr in self.between.get(frozenset((q, r)), ()):
                    for lrp in self.between.get(frozenset((r, p)), ()):
                        turns = set()
                        for inn, out, k in ((lpq, lqr, q), (lqr, lrp, r), (lrp, lpq, p)):
                            turns.add((self.pos(out, k) - self.pos(inn, k)) % 4)
                        if turns in ({1}, {3}):
                            key = frozenset((lpq, lqr, lrp))
                            if key not in seen:
                                seen.add(key)
                                yield (p, q, r), (lpq, lqr, lrp)


_OMEGA2_PATTERNS = {
    frozenset({(2, 2), (1, 3)}),
    frozenset({(1, 3), (4, 4)}),
}

_TRIANGLE_PATTERNS = [
    ((1, 3), (4, 4), (1, 4)), ((1, 3), (2, 4), (3, 4)), ((1, 3), (2, 2), (2, 3)),
    ((1, 3), (2, 4), (1, 2)), ((1, 3), (4, 4), (3, 4)), ((1, 3), (2, 4), (2, 3)),
    ((1, 3), (2, 2), (1, 2)), ((1, 3), (2, 4), (1, 4)),
]
_TRIANGLE_KEYS = {tuple(sorted(p)) for p in _TRIANGLE_PATTERNS}


def detect_omega2(code: EPDCode) -> Optional[MoveWitness]:
    """Two edges between the same two X records with positions {2,2},{1,3}
    or {1,3},{4,4}."""
    v = _CodeView(code)
    for (p, q), l1, l2 in v.bigons():
        if v.names[p] == v.names[q] == "X":
            if frozenset({v.pos_pair(l1), v.pos_pair(l2)}) in _OMEGA2_PATTERNS:
                return v.witness("omega2", (p, q), (l1, l2))
    return None


def detect_omega3(code: EPDCode) -> Optional[MoveWitness]:
    """Triangle of three X records whose edge positions match the list."""
    v = _CodeView(code)
    for ks, labs in v.triangles():
        if all(v.names[k] == "X" for k in ks):
            if tuple(sorted(v.pos_pair(lab) for lab in labs)) in _TRIANGLE_KEYS:
                return v.witness("omega3", ks, labs)
    return None


def detect_omega4(code: EPDCode) -> Optional[MoveWitness]:
    """Triangle with exactly one marked record whose X-to-X edge keeps one
    parity at both ends (the passing strand is over, or under, both times)."""
    v = _CodeView(code)
    for ks, labs in v.triangles():
        marked = [k for k in ks if v.names[k] != "X"]
        if len(marked) != 1:
            continue
        for lab in labs:
            (k1, _), (k2, _) = v.occ[lab]
            if marked[0] in (k1, k2):
                continue
            a, b = v.pos_pair(lab)
            if a % 2 == b % 2:
                return v.witness("omega4", ks, labs)
    return None


def detect_omega5(code: EPDCode) -> Optional[MoveWitness]:
    """Two edges between the same two records, exactly one of them X."""
    v = _CodeView(code)
    for (p, q), l1, l2 in v.bigons():
        if (v.names[p] == "X") != (v.names[q] == "X"):
            return v.witness("omega5", (p, q), (l1, l2))
    return None


def detect_omega7(code: EPDCode) -> Optional[MoveWitness]:
    """An edge between marked records: equal names at positions of different
    parity, or different names at positions of equal parity."""
    v = _CodeView(code)
    for lab, ((k1, i1), (k2, i2)) in sorted(v.occ.items()):
        if k1 == k2 or v.names[k1] == "X" or v.names[k2] == "X":
            continue
        same_name = v.names[k1] == v.names[k2]
        same_parity = i1 % 2 == i2 % 2
        if same_name != same_parity:
            return v.witness("omega7", (k1, k2), (lab,))
    return None


DETECTORS: dict[str, Callable[[EPDCode], Optional[MoveWitness]]] = {
    "omega2": detect_omega2,
    "omega3": detect_omega3,
    "omega4": detect_omega4,
    "omega5": detect_omega5,
    "omega7": detect_omega7,
}


# ---------------------------------------------------------------------------
# geometric oracle


class _Geometry:
    def __init__(self, code: EPDCode):
        self.code = code
        self.pm: PlaneMap = code.to_map()
        self.faces = self.pm.faces()
        self.face_of = self.pm.face_index()
        self.names = [r.name for r in code.crossings]
        self.label = [x for r in code.crossings for x in r.quad]

    def classical(self, v: int) -> bool:
        return self.names[v] == "X"

    @staticmethod
    def under(d: int) -> bool:
        # X records hold the lower strand in slots 0 and 2
        return d % 2 == 0

    def marker_face(self, d: int) -> int:
        """Face holding the marker corner next to dart ``d``."""
        v, i = d >> 2, d & 3
        parity = 0 if self.names[v] == "Y" else 1
        corner = i if i % 2 == parity else (i - 1) % 4
        return self.face_of[rot(4 * v + corner)]

    def witness(self, move: str, darts) -> MoveWitness:
        vs = tuple(sorted({d >> 2 for d in darts}))
        return MoveWitness(move, vs, tuple(sorted({self.label[d] for d in darts})))


def _oracle_omega2(g: _Geometry):
    for f in g.faces:
        if f.size != 2:
            continue
        d1, d2 = f.darts
        u, v = d1 >> 2, d2 >> 2
        if u == v or not (g.classical(u) and g.classical(v)):
            continue
        # the strand along d1 stays on one level across both crossings
        if g.under(d1) == g.under(g.pm.opp[d1]):
            return g.witness("omega2", f.darts)
    return None


def _oracle_triangle(g: _Geometry, marked_wanted: int, move: str):
    for f in g.faces:
        if f.size != 3 or len(set(f.vertices)) != 3:
            continue
        marked = [v for v in f.vertices if not g.classical(v)]
        if len(marked) != marked_wanted:
            continue
        for d in f.darts:
            t = g.pm.opp[d]
            if not (g.classical(d >> 2) and g.classical(t >> 2)):
                continue
            if g.under(d) == g.under(t):
                return g.witness(move, f.darts)
    return None


def _oracle_omega5(g: _Geometry):
    for f in g.faces:
        if f.size != 2:
            continue
        u, v = f.vertices
        if u != v and g.classical(u) != g.classical(v):
            return g.witness("omega5", f.darts)
    return None


def _oracle_omega7(g: _Geometry):
    for d, t in g.pm.edges():
        u, v = d >> 2, t >> 2
        if u == v or g.classical(u) or g.classical(v):
            continue
        if g.marker_face(d) == g.marker_face(t):
            return g.witness("omega7", (d, t))
    return None


def geometric_move_oracle(code: EPDCode, move: str) -> Optional[MoveWitness]:
    """Local pattern match on the plane map.

    omega2: bigon face of two crossings with one strand on top at both;
    omega3: triangular face of three crossings that is not alternating;
    omega4: triangular face with one marked vertex where the opposite strand
    passes over (or under) both arms; omega5: bigon face of a crossing and a
    marked vertex; omega7: an edge whose two markers lie in the same region.
    """
    g = _Geometry(code)
    if move == "omega2":
        return _oracle_omega2(g)
    if move == "omega3":
        return _oracle_triangle(g, 0, "omega3")
    if move == "omega4":
        return _oracle_triangle(g, 1, "omega4")
    if move == "omega5":
        return _oracle_omega5(g)
    if move == "omega7":
        return _oracle_omega7(g)
    raise ValueError(f"unknown move {move!r}")


# ---------------------------------------------------------------------------
# decorated canonical codes and standard diagrams


def decoration_callback(code: EPDCode, flip_classical: bool = False, flip_markers: bool = False):
    """Per-vertex decoration relative to a traversal entry slot (see
    :func:`chdiag.planar_map.canonical_code`)."""
    kinds = []
    for r in code.crossings:
        if r.name == "X":
            kinds.append((0, 1 if flip_classical else 0))
        else:
            p = 0 if r.name == "Y" else 1
            kinds.append((1, p ^ 1 if flip_markers else p))

    def decor(v: int, e: int, o: int) -> int:
        kind, parity = kinds[v]
        if kind == 0:
            return 2 if (e - parity) % 2 == 0 else 1
        start = e if o == 1 else e - 1
        return 4 if (start - parity) % 2 == 0 else 3

    return decor


def decorated_code(code: EPDCode, include_reflection: bool = True) -> bytes:
    return canonical_code(code.to_map(), include_reflection, decoration_callback(code))


def class_code(code: EPDCode, include_reflection: bool = True) -> bytes:
    """Decorated canonical code minimized also over classical mirror and switch."""
    pm = code.to_map()
    return min(canonical_code(pm, include_reflection, decoration_callback(code, fc, fm))
               for fc in (False, True) for fm in (False, True))


@lru_cache(maxsize=None)
def standard_codes() -> frozenset[bytes]:
    """Decorated codes of the connected standard unlink diagrams that are
    prime and reduced: the two-saddle torus on the Hopf shadow."""
    from .epd import ShadowLabeling
    from .surface import classify

    lab = ShadowLabeling.of(hopf_shadow())
    out = set()
    for states in ((2, 2), (2, 3), (3, 2), (3, 3)):
        code = lab.code(states)
        s = classify(code)
        if s.components == 1 and s.euler == 0 and s.orientable:
            out.add(decorated_code(code))
    return frozenset(out)


def is_standard_unlink_diagram(code: EPDCode) -> bool:
    if code.n != 2 or code.m != 2:
        return False
    return decorated_code(code) in standard_codes()


def move_opportunities(code: EPDCode) -> dict[str, Optional[MoveWitness]]:
    return {name: det(code) for name, det in DETECTORS.items()}


def is_hard(code: EPDCode) -> bool:
    """No non-increasing move applies and the diagram is not standard.

    Kink-type moves cannot occur on prime reduced shadows and are not looked for.
    """
    if any(det(code) is not None for det in DETECTORS.values()):
        return False
    return not is_standard_unlink_diagram(code)


__all__ = [
    "MOVES", "DETECTORS", "MoveWitness", "detect_omega2", "detect_omega3", "detect_omega4", "detect_omega5",
    "detect_omega7", "geometric_move_oracle", "is_hard", "is_standard_unlink_diagram",
    "class_code", "decorated_code", "move_opportunities", "standard_codes",
]
