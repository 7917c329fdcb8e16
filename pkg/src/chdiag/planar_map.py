"""4-valent combinatorial maps on the sphere.

A map with ``n`` vertices has darts ``0 .. 4n-1``.  Dart ``d`` sits at vertex
``d // 4`` in slot ``d % 4``; slots are listed counterclockwise, so the vertex
rotation is implicit and only the edge involution ``opp`` is stored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

# decoration callback: (vertex, entry_slot, orientation) -> small int
Decoration = Callable[[int, int, int], int]


def rot(d: int, k: int = 1) -> int:
    """Dart ``k`` steps counterclockwise from ``d`` around its vertex."""
    return (d & ~3) | ((d + k) & 3)


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class FaceCycle:
    darts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d >> 2 for d in self.darts)


@dataclass(frozen=True)
class PlaneMap:
    opp: tuple[int, ...]
    _faces: tuple[FaceCycle, ...] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        opp = self.opp
        if len(opp) % 4:
            raise MapError("dart count must be a multiple of 4")
        for d, e in enumerate(opp):
            if not 0 <= e < len(opp) or e == d or opp[e] != d:
                raise MapError(f"opp is not a fixed-point-free involution at dart {d}")
        if not _connected(opp):
            raise MapError("map is disconnected")
        faces = _trace_faces(opp)
        object.__setattr__(self, "_faces", faces)
        if self.n - 2 * self.n + len(faces) != 2:
            raise MapError("map is not spherical (Euler characteristic != 2)")

    @property
    def n(self) -> int:
        return len(self.opp) // 4

    @property
    def num_edges(self) -> int:
        return 2 * self.n

    def edges(self) -> list[tuple[int, int]]:
        """Edges as dart pairs ``(d, opp[d])`` with ``d < opp[d]``."""
        return [(d, e) for d, e in enumerate(self.opp) if d < e]

    def faces(self) -> tuple[FaceCycle, ...]:
        return self._faces

    def face_index(self) -> list[int]:
        """``face_index()[d]`` is the face holding dart ``d``.

        The corner between slots ``i`` and ``i+1`` of a vertex belongs to the
        face of dart ``rot(4v+i)``.
        """
        idx = [0] * len(self.opp)
        for k, f in enumerate(self._faces):
            for d in f.darts:
                idx[d] = k
        return idx

    def reflected(self) -> "PlaneMap":
        """Mirror image: every rotation reversed (slot i -> slot -i)."""
        def r(d: int) -> int:
            return (d & ~3) | (-d & 3)
        opp = [0] * len(self.opp)
        for d, e in enumerate(self.opp):
            opp[r(d)] = r(e)
        return PlaneMap(tuple(opp))

    def relabeled(self, vertex_perm: Sequence[int], slot_shift: Sequence[int]) -> "PlaneMap":
        """Same map with vertex ``v`` renamed ``vertex_perm[v]`` and its slots
        rotated by ``slot_shift[v]``."""
        def m(d: int) -> int:
            v = d >> 2
            return 4 * vertex_perm[v] + ((d + slot_shift[v]) & 3)
        opp = [0] * len(self.opp)
        for d, e in enumerate(self.opp):
            opp[m(d)] = m(e)
        return PlaneMap(tuple(opp))


def _connected(opp: Sequence[int]) -> bool:
    n = len(opp) // 4
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for s in range(4):
            w = opp[4 * v + s] >> 2
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _trace_faces(opp: Sequence[int]) -> tuple[FaceCycle, ...]:
    seen = [False] * len(opp)
    faces = []
    for start in range(len(opp)):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = rot(opp[d])
        faces.append(FaceCycle(tuple(cyc)))
    return tuple(faces)


def faces(pm: PlaneMap) -> tuple[FaceCycle, ...]:
    """Face cycles in order of their smallest dart."""
    return pm.faces()


# ---------------------------------------------------------------------------
# canonical codes


def _bfs_code(opp: Sequence[int], start: int, o: int, decor: Decoration | None,
              best: list[int] | None) -> list[int] | None:
    n = len(opp) >> 2
    num = [-1] * n
    entry = [0] * n
    v0 = start >> 2
    num[v0] = 0
    entry[v0] = start & 3
    order = [v0]
    code: list[int] = []
    nb = len(best) if best is not None else 0
    equal = best is not None
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        e = entry[v]
        chunk = []
        if decor is not None:
            chunk.append(decor(v, e, o))
        for k in range(4):
            t = opp[4 * v + ((e + o * k) & 3)]
            w = t >> 2
            if num[w] < 0:
                num[w] = len(order)
                entry[w] = t & 3
                order.append(w)
            chunk.append(num[w])
            chunk.append((o * ((t & 3) - entry[w])) & 3)
        if equal:
            base = len(code)
            for j, x in enumerate(chunk):
                if base + j >= nb:
                    break
                y = best[base + j]
                if x < y:
                    equal = False
                    break
                if x > y:
                    return None
        code.extend(chunk)
    return code


def canonical_code(pm: PlaneMap, include_reflection: bool = True,
                   decor: Decoration | None = None) -> bytes:
    """Minimum BFS traversal code over all start darts (and both orientations).

    ``decor`` adds one integer per vertex describing a decoration relative to
    the dart the traversal entered through; it must be expressed in terms of
    the entry slot and the orientation (+1 counterclockwise, -1 reflected).
    """
    opp = pm.opp
    best: list[int] | None = None
    for o in ((1, -1) if include_reflection else (1,)):
        for s in range(len(opp)):
            c = _bfs_code(opp, s, o, decor, best)
            if c is not None and (best is None or c < best):
                best = c
    return bytes(best or [])


def map_from_code(code: bytes, decorated: bool = False) -> PlaneMap:
    """Rebuild a map from its (undecorated or decorated) canonical code."""
    step = 9 if decorated else 8
    n = len(code) // step
    opp = [0] * (4 * n)
    for v in range(n):
        chunk = code[v * step + (1 if decorated else 0):(v + 1) * step]
        for k in range(4):
            opp[4 * v + k] = 4 * chunk[2 * k] + chunk[2 * k + 1]
    return PlaneMap(tuple(opp))


# ---------------------------------------------------------------------------
# primeness


def has_loop(pm: PlaneMap) -> bool:
    return any(d >> 2 == e >> 2 for d, e in enumerate(pm.opp))


def has_nugatory(pm: PlaneMap) -> bool:
    """A face touching the same vertex twice marks a nugatory crossing."""
    for f in pm.faces():
        vs = f.vertices
        if len(set(vs)) != len(vs):
            return True
    return False


def _components_without(pm: PlaneMap, removed: set[int]) -> int:
    n = pm.n
    seen = [False] * n
    comps = 0
    for r in range(n):
        if seen[r]:
            continue
        comps += 1
        seen[r] = True
        dq = deque([r])
        while dq:
            v = dq.popleft()
            for s in range(4):
                d = 4 * v + s
                if d in removed:
                    continue
                w = pm.opp[d] >> 2
                if not seen[w]:
                    seen[w] = True
                    dq.append(w)
    return comps


def has_two_edge_cut(pm: PlaneMap) -> bool:
    edges = pm.edges()
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            removed = {*edges[i], *edges[j]}
            if _components_without(pm, removed) > 1:
                return True
    return False


def is_prime_reduced_shadow(pm: PlaneMap) -> bool:
    if pm.n < 2:
        return False
    return not (has_loop(pm) or has_nugatory(pm) or has_two_edge_cut(pm))


# ---------------------------------------------------------------------------
# small named maps used as seeds and fixtures


def hopf_shadow() -> PlaneMap:
    """Two vertices joined by four parallel edges."""
    return PlaneMap(tuple([4 + (-i & 3) for i in range(4)] + [(-i & 3) for i in range(4)]))


def one_vertex_loop() -> PlaneMap:
    """The figure-eight curve: one vertex, two loops (a kinked circle)."""
    return PlaneMap((1, 0, 3, 2))

