"""Vectorized evaluation of every decoration of one shadow at once.

Each vertex of a shadow is smoothed either ``h`` (slots (0,1),(2,3)) or ``v``
(slots (1,2),(3,0)), or passed straight through (``s``).  A decoration is a
vector of states X0, X1, Y, Z.  In the positive resolution a Y vertex is
smoothed ``h`` and a Z vertex ``v``; X0 expands as ``A h + A^-1 v`` and X1 as
``A v + A^-1 h``.  The negative resolution swaps Y and Z, so a single tensor
of brackets over all decorations serves both resolutions.

The tensor only screens: a pattern passes when its bracket is a unit times
the unlink bracket with the right number of components.  Anything reported
as hard is re-checked with the scalar code by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

import numpy as np

from .epd import X0, X1, Y, Z, EPDCode, ShadowLabeling
from .moves import MOVES
from .planar_map import PlaneMap, rot

H, V, S = 0, 1, 2
_PAIRS = {H: ((0, 1), (2, 3)), V: ((1, 2), (3, 0)), S: ((0, 2), (1, 3))}


def loop_count(pm: PlaneMap, smoothing: Iterable[int]) -> int:
    """Number of circles after smoothing each vertex as h, v or s."""
    parent = list(range(len(pm.opp)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d, e in enumerate(pm.opp):
        if d < e:
            parent[find(d)] = find(e)
    for v, s in enumerate(smoothing):
        for i, j in _PAIRS[s]:
            parent[find(4 * v + i)] = find(4 * v + j)
    return len({find(d) for d in range(len(pm.opp))})


def delta_power(k: int) -> np.ndarray:
    """Coefficients of delta^k, lowest exponent -2k first, step one."""
    coeffs = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for e, c in coeffs.items():
            nxt[e + 2] = nxt.get(e + 2, 0) - c
            nxt[e - 2] = nxt.get(e - 2, 0) - c
        coeffs = nxt
    out = np.zeros(4 * k + 1, dtype=np.int64)
    for e, c in coeffs.items():
        out[e + 2 * k] = c
    return out


def bracket_tensor(pm: PlaneMap, alphabet: tuple[int, ...]) -> tuple[np.ndarray, int]:
    """Brackets of the positive resolutions of all decorations over ``alphabet``.

    Returns ``(T, off)`` with ``T`` of shape ``(len(alphabet)**n, width)``;
    column ``i`` holds the coefficient of ``A^(i - off)``.  Rows follow
    ``itertools.product(alphabet, repeat=n)``.
    """
    n = pm.n
    loops = np.array([loop_count(pm, s) for s in product((H, V), repeat=n)])
    lmax = int(loops.max())
    off = 2 * (lmax - 1) + n
    width = 2 * off + 1
    t = np.zeros((2 ** n, width), dtype=np.int64)
    for row, c in enumerate(loops):
        p = delta_power(int(c) - 1)
        lo = off - 2 * (int(c) - 1)
        t[row, lo:lo + len(p)] = p
    t = t.reshape((2,) * n + (width,))
    for axis in range(n):
        h = np.take(t, 0, axis=axis)
        v = np.take(t, 1, axis=axis)
        parts = []
        for st in alphabet:
            if st == X0:
                parts.append(np.roll(h, 1, axis=-1) + np.roll(v, -1, axis=-1))
            elif st == X1:
                parts.append(np.roll(v, 1, axis=-1) + np.roll(h, -1, axis=-1))
            elif st == Y:
                parts.append(h)
            else:
                parts.append(v)
        t = np.stack(parts, axis=axis)
    return t.reshape(len(alphabet) ** n, width), off


def unit_screen(brackets: np.ndarray, comps: np.ndarray, off: int) -> np.ndarray:
    """Rows equal to ``(-1)^(k/3) A^k delta^(c-1)`` with ``k`` a multiple of 3.

    Necessary for the writhe-normalized bracket to be that of an unlink.
    """
    ok = np.zeros(len(brackets), dtype=bool)
    if not len(brackets):
        return ok
    nz = brackets != 0
    first = np.argmax(nz, axis=1)
    count = nz.sum(axis=1)
    width = brackets.shape[1]
    for c in np.unique(comps):
        rows = np.nonzero((comps == c) & (count == c))[0]
        if not len(rows):
            continue
        p = delta_power(int(c) - 1)
        idx = first[rows, None] + np.arange(len(p))[None, :]
        inside = idx[:, -1] < width
        rows, idx = rows[inside], idx[inside]
        window = np.take_along_axis(brackets[rows], idx, axis=1)
        sign = window[:, 0] * p[0]
        same = np.all(window == p[None, :] * sign[:, None], axis=1)
        # exponent of the lowest term relative to that of delta^(c-1)
        k = first[rows] - off + 2 * (int(c) - 1)
        good = same & (k % 3 == 0) & (sign == np.where((k // 3) % 2 == 0, 1, -1))
        ok[rows[good]] = True
    return ok


def _under(slot: int, st: int) -> bool:
    return st in (X0, X1) and (slot - st) % 2 == 0


def _marker_face(face_of, d: int, st: int) -> int:
    v, j = d >> 2, d & 3
    parity = 0 if st == Y else 1
    corner = j if j % 2 == parity else (j - 1) % 4
    return face_of[rot(4 * v + corner)]


def move_structures(pm: PlaneMap):
    """Local move tests as (move, vertices, predicate on their states)."""
    out = []
    opp = pm.opp
    face_of = pm.face_index()
    classical = (X0, X1)
    for f in pm.faces():
        vs = f.vertices
        if len(set(vs)) != len(vs):
            continue
        if f.size == 2:
            d1 = f.darts[0]

            def om2(su, sv, d1=d1):
                return su in classical and sv in classical and \
                    _under(d1 & 3, su) == _under(opp[d1] & 3, sv)

            def om5(su, sv):
                return (su in classical) != (sv in classical)

            out.append(("omega2", vs, om2))
            out.append(("omega5", vs, om5))
        elif f.size == 3:
            darts = f.darts

            def tri(wanted, *sts, darts=darts):
                marked = sum(1 for s in sts if s not in classical)
                if marked != wanted:
                    return False
                st = dict(zip((d >> 2 for d in darts), sts))
                for d in darts:
                    a, b = st[d >> 2], st[opp[d] >> 2]
                    if a in classical and b in classical and \
                            _under(d & 3, a) == _under(opp[d] & 3, b):
                        return True
                return False

            out.append(("omega3", vs, lambda *s, tri=tri: tri(0, *s)))
            out.append(("omega4", vs, lambda *s, tri=tri: tri(1, *s)))
    for d, t in pm.edges():
        u, v = d >> 2, t >> 2
        if u == v:
            continue

        def om7(su, sv, d=d, t=t):
            return su not in classical and sv not in classical and \
                _marker_face(face_of, d, su) == _marker_face(face_of, t, sv)

        out.append(("omega7", (u, v), om7))
    return out


@dataclass
class ShadowEvaluation:
    """Screened data for the selected decorations of one shadow.

    ``patterns[r]`` holds the states of row ``r``; ``moves`` maps each move
    name to a boolean array.  ``screened`` is the vectorized admissibility
    screen, exact only after the scalar re-check.
    """
    shadow: PlaneMap
    labeling: ShadowLabeling
    patterns: np.ndarray
    m: np.ndarray
    screened: np.ndarray
    euler: np.ndarray
    moves: dict[str, np.ndarray]

    def code(self, row: int) -> EPDCode:
        return self.labeling.code([int(s) for s in self.patterns[row]])

    @property
    def no_move(self) -> np.ndarray:
        out = np.ones(len(self.patterns), dtype=bool)
        for mask in self.moves.values():
            out &= ~mask
        return out

    @property
    def hard_candidates(self) -> np.ndarray:
        return np.nonzero(self.screened & self.no_move)[0]


def _representatives(p: np.ndarray) -> np.ndarray:
    is_x = p < 2
    has_x = is_x.any(axis=1)
    has_m = (~is_x).any(axis=1)
    rows = np.arange(len(p))
    fx = p[rows, np.argmax(is_x, axis=1)]
    fm = p[rows, np.argmax(~is_x, axis=1)]
    return (~has_x | (fx == X0)) & (~has_m | (fm == Y))


def evaluate_shadow(pm: PlaneMap, marker_counts: Optional[Iterable[int]] = None) -> ShadowEvaluation:
    """Screen every orbit representative decoration of ``pm``."""
    n = pm.n
    wanted = None if marker_counts is None else set(marker_counts)
    if wanted == {0}:
        alphabet = (X0, X1)
    elif wanted == {n}:
        alphabet = (Y, Z)
    else:
        alphabet = (X0, X1, Y, Z)
    size = len(alphabet)
    p = np.array(list(product(alphabet, repeat=n)), dtype=np.int8).reshape(-1, n)
    m = (p >= 2).sum(axis=1)
    sel = _representatives(p)
    if wanted is not None:
        sel &= np.isin(m, sorted(wanted))
    rows = np.nonzero(sel)[0]
    p, m = p[rows], m[rows]

    # rows of the switched patterns (Y <-> Z) give the negative resolutions
    sw = np.where(p == Y, Z, np.where(p == Z, Y, p))
    digit = np.zeros(4, dtype=np.int64)
    digit[list(alphabet)] = np.arange(size)
    weights = size ** np.arange(n - 1, -1, -1)
    sw_rows = (digit[sw] * weights).sum(axis=1)

    tensor, off = bracket_tensor(pm, alphabet)
    plus = tensor[rows]
    minus = tensor[sw_rows]
    del tensor

    # components of each resolution: X straight through, Y h, Z v (plus)
    smooth_plus = np.where(p < 2, S, np.where(p == Y, H, V))
    smooth_minus = np.where(p < 2, S, np.where(p == Y, V, H))
    key3 = 3 ** np.arange(n - 1, -1, -1)
    kp = (smooth_plus.astype(np.int64) * key3).sum(axis=1)
    km = (smooth_minus.astype(np.int64) * key3).sum(axis=1)
    cache: dict[int, int] = {}
    for key, sm in zip(np.concatenate([kp, km]), np.concatenate([smooth_plus, smooth_minus])):
        if int(key) not in cache:
            cache[int(key)] = loop_count(pm, [int(s) for s in sm])
    cp = np.array([cache[int(k)] for k in kp], dtype=np.int64)
    cm = np.array([cache[int(k)] for k in km], dtype=np.int64)

    screened = unit_screen(plus, cp, off) & unit_screen(minus, cm, off)
    euler = cp + cm - m

    moves = {name: np.zeros(len(p), dtype=bool) for name in MOVES}
    for name, vs, pred in move_structures(pm):
        table = np.zeros((4,) * len(vs), dtype=bool)
        for sts in product(range(4), repeat=len(vs)):
            table[sts] = pred(*sts)
        moves[name] |= table[tuple(p[:, v] for v in vs)]

    return ShadowEvaluation(pm, ShadowLabeling.of(pm), p, m, screened, euler, moves)
