"""Classical link invariants of PD codes: bracket, writhe, unlink test."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .epd import EPDCode, strand_circuits
from .polynomial import DELTA, LaurentPolynomial

MAX_BRACKET_CROSSINGS = 16
# the Jones polynomial separates unlinks from everything else up to here
MAX_UNLINK_TEST_CROSSINGS = 12


class ValidityDomainError(ValueError):
    pass


def _classical(code: EPDCode) -> None:
    if code.m:
        raise ValueError("expected a PD code (all records named X)")


def component_count(code: EPDCode, free_loops: int = 0) -> int:
    return len(strand_circuits(code)) + free_loops


def _smoothing(q: Sequence[int], a_type: bool) -> tuple[tuple[int, int], tuple[int, int]]:
    # A-regions lie counterclockwise of the over strand: A joins (a,b),(c,d)
    a, b, c, d = q
    return ((a, b), (c, d)) if a_type else ((a, d), (b, c))


def _crossing_order(quads: list[tuple[int, ...]]) -> list[int]:
    """Greedy order keeping the set of half-processed labels small."""
    remaining = set(range(len(quads)))
    open_labels: Counter = Counter()
    order = []
    while remaining:
        best = min(remaining, key=lambda k: (-sum(1 for x in quads[k] if open_labels[x]), k))
        remaining.discard(best)
        order.append(best)
        for x in quads[best]:
            open_labels[x] += 1
            if open_labels[x] == 2:
                del open_labels[x]
    return order


def _join(match: dict[int, int], pairs) -> tuple[dict[int, int], int]:
    """Glue arcs (label pairs) onto a matching of half-absorbed labels.

    Returns the new matching and the number of circles closed.
    """
    m = dict(match)
    loops = 0
    for p, q in pairs:
        if p == q:
            loops += 1
            continue
        if m.get(p) == q:
            del m[p], m[q]
            loops += 1
            continue
        if p in m:
            ep = m.pop(p)
            del m[ep]
        else:
            ep = p
        if q in m:
            eq = m.pop(q)
            del m[eq]
        else:
            eq = q
        m[ep] = eq
        m[eq] = ep
    return m, loops


def kauffman_bracket(code: EPDCode, free_loops: int = 0) -> LaurentPolynomial:
    """Kauffman bracket with <O> = 1 and each extra circle a factor of delta.

    Crossings are absorbed one at a time; partial states are the matchings
    of labels with one endpoint absorbed, merged across states.
    """
    _classical(code)
    if code.n > MAX_BRACKET_CROSSINGS:
        raise ValidityDomainError(f"bracket limited to {MAX_BRACKET_CROSSINGS} crossings")
    if code.n == 0:
        return DELTA ** max(free_loops - 1, 0) if free_loops else LaurentPolynomial.const(1)
    quads = [r.quad for r in code.crossings]
    # state: (frozen matching, loops) -> {A exponent: coefficient}
    states: dict[tuple[frozenset, int], dict[int, int]] = {(frozenset(), 0): {0: 1}}
    for k in _crossing_order(quads):
        nxt: dict[tuple[frozenset, int], dict[int, int]] = {}
        for (fm, loops), poly in states.items():
            match = {}
            for a, b in fm:
                match[a] = b
                match[b] = a
            for a_type, shift in ((True, 1), (False, -1)):
                m2, closed = _join(match, _smoothing(quads[k], a_type))
                key = (frozenset((a, b) for a, b in m2.items() if a < b), loops + closed)
                acc = nxt.setdefault(key, {})
                for e, c in poly.items():
                    acc[e + shift] = acc.get(e + shift, 0) + c
        states = nxt
    total = LaurentPolynomial()
    for (fm, loops), poly in states.items():
        assert not fm
        total = total + LaurentPolynomial(poly) * DELTA ** (loops + free_loops - 1)
    return total


def bracket_state_sum(code: EPDCode, free_loops: int = 0) -> LaurentPolynomial:
    """Plain 2^n state sum; test oracle only."""
    _classical(code)
    quads = [r.quad for r in code.crossings]
    n = len(quads)
    if n == 0:
        return DELTA ** max(free_loops - 1, 0)
    labels = sorted({x for q in quads for x in q})
    idx = {x: i for i, x in enumerate(labels)}
    total = LaurentPolynomial()
    for s in range(1 << n):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for k, q in enumerate(quads):
            a_type = not (s >> k) & 1
            a_count += a_type
            for p, r in _smoothing(q, a_type):
                parent[find(idx[p])] = find(idx[r])
        loops = len({find(i) for i in range(len(labels))})
        total = total + DELTA ** (loops + free_loops - 1) * LaurentPolynomial.monomial(2 * a_count - n)
    return total


def crossing_signs(code: EPDCode) -> list[int]:
    """Signs of the crossings with each component oriented along its
    circuit from the smallest label toward its smaller neighbour."""
    _classical(code)
    heads: set[tuple[int, int]] = set()
    for circ in strand_circuits(code):
        heads.update(circ)
    signs = []
    for k in range(code.n):
        under_forward = (k, 0) in heads        # under strand runs a -> c
        over_forward = (k, 3) in heads         # over strand runs d -> b
        signs.append(1 if under_forward == over_forward else -1)
    return signs


def writhe(code: EPDCode) -> int:
    return sum(crossing_signs(code))


def is_unit_times_unlink(poly: LaurentPolynomial, components: int) -> tuple[bool, int]:
    """Whether ``poly == +-A^k * delta^(components-1)``; returns (flag, k)."""
    if not poly:
        return False, 0
    target = DELTA ** (components - 1)
    shift = poly.min_degree() - target.min_degree()
    for sign in (1, -1):
        if poly == target.shift(shift) * sign:
            return True, shift
    return False, 0


def is_trivial_unlink(code: EPDCode, free_loops: int = 0) -> bool:
    """Writhe-normalized bracket equals that of the unlink with the same
    number of components."""
    _classical(code)
    if code.n > MAX_UNLINK_TEST_CROSSINGS:
        raise ValidityDomainError(
            f"unlink test only valid up to {MAX_UNLINK_TEST_CROSSINGS} classical crossings, got {code.n}")
    c = component_count(code, free_loops)
    if code.n == 0:
        return True
    w = writhe(code)
    expected = (DELTA ** (c - 1)).shift(3 * w) * (-1 if w % 2 else 1)
    return kauffman_bracket(code, free_loops) == expected


def gon_census(code: EPDCode) -> list[int]:
    """Sorted face sizes of the underlying map."""
    return sorted(f.size for f in code.to_map().faces())
