"""Generation of prime reduced link shadows.

Every prime reduced shadow with ``n + 1`` crossings smooths, at any chosen
crossing, to a prime reduced shadow with ``n`` crossings (one of the two
smoothings works: deletion/contraction of a connected cycle matroid in the
checkerboard graph keeps it connected for at least one of the two).  So the
whole class is reached from the 2-crossing Hopf shadow by the inverse
operation: pinch two edge-sides of one face together into a new crossing.
Isomorphs are rejected by the reflection-inclusive canonical code.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .planar_map import (
    PlaneMap,
    canonical_code,
    hopf_shadow,
    is_prime_reduced_shadow,
    map_from_code,
)


@dataclass(frozen=True)
class ShadowSet:
    n: int
    shadows: tuple[PlaneMap, ...]

    def __len__(self) -> int:
        return len(self.shadows)

    def __iter__(self) -> Iterator[PlaneMap]:
        return iter(self.shadows)


def pinch(pm: PlaneMap, d1: int, d2: int) -> PlaneMap:
    """Join the edges of darts ``d1`` and ``d2`` (both read along one face,
    face on their right) by a new crossing placed inside that face."""
    opp = list(pm.opp)
    t1, t2 = opp[d1], opp[d2]
    x = len(opp)
    opp.extend([d1, t2, d2, t1])
    opp[d1], opp[t2], opp[d2], opp[t1] = x, x + 1, x + 2, x + 3
    return PlaneMap(tuple(opp))


def children(pm: PlaneMap) -> Iterator[PlaneMap]:
    for f in pm.faces():
        ds = f.darts
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                if pm.opp[ds[i]] == ds[j]:
                    continue
                yield pinch(pm, ds[i], ds[j])


def _grow(codes: list[bytes]) -> list[bytes]:
    found: set[bytes] = set()
    for code in codes:
        for child in children(map_from_code(code)):
            c = canonical_code(child, include_reflection=True)
            if c in found:
                continue
            if is_prime_reduced_shadow(child):
                found.add(c)
    return sorted(found)


_LEVELS: dict[int, list[bytes]] = {}


def shadow_codes(n: int) -> list[bytes]:
    """Canonical codes of all prime reduced shadows with ``n`` crossings, sorted."""
    if n < 2:
        raise ValueError("no prime reduced shadow has fewer than 2 crossings")
    if n not in _LEVELS:
        if n == 2:
            _LEVELS[2] = [canonical_code(hopf_shadow())]
        else:
            _LEVELS[n] = _grow(shadow_codes(n - 1))
    return list(_LEVELS[n])


def enumerate_shadows(n: int) -> ShadowSet:
    """All prime reduced shadows with ``n`` crossings up to sphere maps and
    reflection, each given in its canonical labeling, in canonical-code order."""
    return ShadowSet(n, tuple(map_from_code(c) for c in shadow_codes(n)))


def write_cache(codes: Iterable[bytes], path: str | Path) -> None:
    with open(path, "w") as fh:
        for c in codes:
            fh.write(c.hex() + "\n")


def read_cache(path: str | Path) -> list[bytes]:
    with open(path) as fh:
        return [bytes.fromhex(line.strip()) for line in fh if line.strip()]
