"""Distance-d Johnson graphs J^d(n, m).

Vertices are the m-hands of an n-card deck; two distinct hands are adjacent
when they share at least ``m - d`` cards. The graph is never built explicitly:
adjacency is a predicate and cliques are produced on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Optional

from .deck import Card, Hand, complement, enumerate_hands, hand_index, hand_masks
from .errors import InvalidArcError, InvalidDimensionError, InvalidVertexError


@dataclass(frozen=True)
class GraphSpec:
    n: int
    m: int
    d: int = 1

    def __post_init__(self):
        if not 0 <= self.d <= self.m <= self.n:
            raise InvalidDimensionError(f"need 0 <= d <= m <= n, got d={self.d} m={self.m} n={self.n}")

    @property
    def threshold(self) -> int:
        """Minimum intersection size of adjacent vertices."""
        return self.m - self.d

    def __str__(self) -> str:
        return f"J^{self.d}({self.n},{self.m})"


@dataclass(frozen=True)
class Arc:
    """One shift: ``out_card`` leaves ``start`` and ``in_card`` enters. Its weight is ``in_card - out_card``."""

    start: Hand
    in_card: Card
    out_card: Card

    @property
    def end(self) -> Hand:
        return shift(self.start, self.in_card, self.out_card)

    @property
    def weight(self) -> int:
        return self.in_card - self.out_card


def _check_vertex(spec: GraphSpec, h: Hand) -> None:
    if len(h) != spec.m or h.mask >> spec.n:
        raise InvalidVertexError(f"{h!r} is not a vertex of {spec}")


def adjacent(spec: GraphSpec, a: Hand, a2: Hand) -> bool:
    _check_vertex(spec, a)
    _check_vertex(spec, a2)
    if a.mask == a2.mask:
        return False
    return (a.mask & a2.mask).bit_count() >= spec.threshold


def clique_of(spec: GraphSpec, excluded: Hand) -> list[Hand]:
    """All m-hands avoiding ``excluded``, in canonical order.

    With ``|excluded| = n - m - d`` these are exactly the hands B (holding
    ``excluded``) considers possible for A, and they form a clique of J^d.
    """
    if excluded.mask >> spec.n:
        raise InvalidDimensionError(f"{excluded!r} not inside a deck of {spec.n}")
    return [Hand(mask, spec.n) for mask in hand_masks(spec.n, spec.m) if not mask & excluded.mask]


def shift(a: Hand, i: Card, j: Card) -> Hand:
    """Replace card ``j`` of ``a`` by card ``i``."""
    if i in a or j not in a or not 0 <= i < a.n:
        raise InvalidArcError(f"cannot shift {j} -> {i} in {a}")
    return Hand((a.mask & ~(1 << j)) | (1 << i), a.n)


@dataclass(frozen=True)
class ZeroSumPath:
    """Two shifts ``z1 -> y1`` then ``z2 -> y2`` whose weights cancel modulo n."""

    arcs: tuple[Arc, Arc]
    step: int
    wrapped: bool

    def __str__(self) -> str:
        first, second = self.arcs
        return (f"{first.start} -[{first.in_card},{first.out_card}]-> {first.end}"
                f" -[{second.in_card},{second.out_card}]-> {second.end}")


def zero_sum_two_arc(a: Hand, z1: Card, z2: Card, forbidden: Hand, n: int,
                     wrap: bool = False) -> Optional[tuple[Hand, ZeroSumPath]]:
    """Move ``z1`` up and ``z2`` down by the same amount, keeping the sum mod n.

    Cards are read on the cycle Z_n. The step ``i`` ranges over
    ``1 .. floor(l/2)`` where ``l`` counts the cards strictly between ``z1``
    and ``z2`` going upward from ``z1``; the smallest step whose targets lie
    outside ``a`` and ``forbidden`` wins. With ``wrap=True`` the other arc of
    the cycle (``z1`` down, ``z2`` up) is tried when the first one fails.
    """
    if z1 == z2 or z1 not in a or z2 not in a:
        raise InvalidArcError(f"z1={z1}, z2={z2} must be distinct cards of {a}")
    if not a.isdisjoint(forbidden):
        raise InvalidArcError(f"{a} meets the forbidden set {forbidden}")
    blocked = a.mask | forbidden.mask

    def attempt(lo: int, hi: int, sign: int) -> Optional[tuple[Hand, ZeroSumPath]]:
        span = (sign * (hi - lo) - 1) % n
        for i in range(1, span // 2 + 1):
            y1 = (lo + sign * i) % n
            y2 = (hi - sign * i) % n
            if blocked >> y1 & 1 or blocked >> y2 & 1:
                continue
            first = Arc(a, y1, lo)
            second = Arc(first.end, y2, hi)
            return second.end, ZeroSumPath((first, second), i, sign < 0)
        return None

    found = attempt(z1, z2, +1)
    if found is None and wrap:
        found = attempt(z1, z2, -1)
    return found


def reach_path(a: Hand, target: Hand) -> list[Arc]:
    """Shifts turning ``a`` into ``target`` (same size), pairing missing and extra cards in order."""
    if len(a) != len(target):
        raise InvalidVertexError("hands of different sizes are never connected")
    outs = (a - target).cards
    ins = (target - a).cards
    arcs = []
    cur = a
    for i, j in zip(ins, outs):
        arc = Arc(cur, i, j)
        arcs.append(arc)
        cur = arc.end
    return arcs


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    degree: int
    diameter: int
    max_clique_sizes: Optional[tuple[int, int]]

    def lines(self) -> list[str]:
        out = [f"vertex_count={self.vertex_count}", f"degree={self.degree}", f"diameter={self.diameter}"]
        if self.max_clique_sizes is not None:
            out.append("max_clique_sizes=" + ",".join(map(str, self.max_clique_sizes)))
        return out


def _bfs_eccentricity(spec: GraphSpec) -> int:
    masks = hand_masks(spec.n, spec.m)
    index = hand_index(spec.n, spec.m)
    dist = {masks[0]: 0}
    queue = deque([masks[0]])
    while queue:
        cur = queue.popleft()
        for other in masks:
            if other not in dist and (cur & other).bit_count() >= spec.threshold:
                dist[other] = dist[cur] + 1
                queue.append(other)
    if len(dist) != len(index):
        raise InvalidDimensionError(f"{spec} is disconnected")
    return max(dist.values())


def graph_stats(spec: GraphSpec) -> GraphStats:
    n, m, d = spec.n, spec.m, spec.d
    count = comb(n, m)
    degree = sum(comb(m, k) * comb(n - m, k) for k in range(1, d + 1))
    if count == 1:
        diameter = 0
    elif d == 0:
        raise InvalidDimensionError(f"{spec} has no edges")
    elif d == 1:
        diameter = min(m, n - m)
    else:
        # vertex-transitive, so one eccentricity is the diameter
        diameter = _bfs_eccentricity(spec)
    cliques = (n - m + 1, m + 1) if d == 1 else None
    return GraphStats(count, degree, diameter, cliques)


def max_clique(spec: GraphSpec) -> list[Hand]:
    """A largest member of the two standard clique families, canonical first.

    One family is the m-subsets of a fixed (m+d)-set, the other the m-sets
    containing a fixed (m-d)-set. Ties go to the first family.
    """
    n, m, d = spec.n, spec.m, spec.d
    first = comb(min(m + d, n), m)
    second = comb(n - m + d, d)
    if first >= second:
        return clique_of(spec, complement(Hand((1 << min(m + d, n)) - 1, n), n))
    core = (1 << (m - d)) - 1
    return [h for h in enumerate_hands(n, m) if h.mask & core == core]
