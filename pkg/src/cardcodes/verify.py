"""Informativeness, minimal informativeness and safety of a coloring.

Every check returns a :class:`Report`. Failing checks carry witnesses that
can be re-validated against the coloring on their own (``witness.holds``).

The informative and safety checks work on 0/1 incidence matrices: whether a
hand avoids an eavesdropper hand, or lies inside B's complement, is a zero
entry of a matrix product. :func:`check_ca2_ca3` walks the hands with plain
bit masks instead and serves as an independent cross-check of
:func:`check_safe`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Literal, Optional, Union

import numpy as np

from .coloring import Coloring
from .deck import Hand, Signature, complement, hand_masks, incidence
from .errors import InvalidDimensionError, UndefinedPredicateError

# rows of eavesdropper / B hands handled per matrix product
_CHUNK = 1024


@dataclass(frozen=True)
class ProperViolation:
    """Two hands B cannot tell apart that carry the same message."""

    a: Hand
    a2: Hand
    message: int

    kind = "PROPER"

    def holds(self, col: Coloring, sig: Signature) -> bool:
        inter = (self.a.mask & self.a2.mask).bit_count()
        return (self.a != self.a2 and inter >= sig.a - sig.d
                and col[self.a] == col[self.a2] == self.message)

    def line(self) -> str:
        return f"{self.kind} a={self.a} a2={self.a2} M={self.message}"


@dataclass(frozen=True)
class MonochromeClique:
    """Every hand B holding ``b`` considers possible carries ``message``."""

    b: Hand
    message: int

    kind = "MONOCHROME"

    def holds(self, col: Coloring, sig: Signature) -> bool:
        return all(col[h] == self.message for h in col.hands if h.isdisjoint(self.b))

    def line(self) -> str:
        return f"{self.kind} b={self.b} M={self.message}"


@dataclass(frozen=True)
class SafetyViolation:
    """After hearing ``message``, C holding ``c`` knows whether A holds card ``y``.

    ``direction`` is ``"contains"`` when every possible hand has ``y`` and
    ``"excludes"`` when none has.
    """

    c: Hand
    y: int
    message: int
    direction: Literal["contains", "excludes"]

    kind = "UNSAFE"

    def holds(self, col: Coloring, sig: Signature) -> bool:
        if self.y in self.c:
            return False
        possible = [h for h in col.hands if h.isdisjoint(self.c) and col[h] == self.message]
        if not possible:
            return False
        want = self.direction == "contains"
        return all((self.y in h) == want for h in possible)

    def line(self) -> str:
        return f"{self.kind} c={self.c} y={self.y} M={self.message} dir={self.direction}"


@dataclass(frozen=True)
class CA2Violation:
    """All hands of ``message`` avoiding ``c`` share ``card``."""

    c: Hand
    card: int
    message: int

    kind = "CA2"

    def holds(self, col: Coloring, sig: Signature) -> bool:
        possible = [h for h in col.hands if h.isdisjoint(self.c) and col[h] == self.message]
        return bool(possible) and all(self.card in h for h in possible)

    def line(self) -> str:
        return f"{self.kind} c={self.c} y={self.card} M={self.message}"


@dataclass(frozen=True)
class CA3Violation:
    """No hand of ``message`` avoiding ``c`` has ``card``, although ``card`` is outside ``c``."""

    c: Hand
    card: int
    message: int

    kind = "CA3"

    def holds(self, col: Coloring, sig: Signature) -> bool:
        possible = [h for h in col.hands if h.isdisjoint(self.c) and col[h] == self.message]
        return bool(possible) and self.card not in self.c and all(self.card not in h for h in possible)

    def line(self) -> str:
        return f"{self.kind} c={self.c} y={self.card} M={self.message}"


Witness = Union[ProperViolation, MonochromeClique, SafetyViolation, CA2Violation, CA3Violation]


@dataclass
class Report:
    name: str
    verdict: bool
    witnesses: list = field(default_factory=list)
    checked_count: int = 0

    def __bool__(self) -> bool:
        return self.verdict

    def line(self) -> str:
        return (f"check={self.name} verdict={'pass' if self.verdict else 'fail'} "
                f"checked={self.checked_count} witnesses={len(self.witnesses)}")


def _require_match(col: Coloring, sig: Signature) -> None:
    if (col.n, col.a) != (sig.n, sig.a):
        raise InvalidDimensionError(
            f"coloring is for J({col.n},{col.a}) but signature {sig} gives J({sig.n},{sig.a})")


def eavesdropper_hands(sig: Signature, weak: bool = False) -> tuple[int, ...]:
    """Masks of C's possible hands; the single empty hand when ``c = 0`` or ``weak``."""
    return (0,) if weak else hand_masks(sig.n, sig.c)


def check_informative(col: Coloring, sig: Signature, all_witnesses: bool = False) -> Report:
    """Proper coloring of J^{c+r}(n, a): no two hands sharing ``a - c - r`` cards get one message.

    By default only the first offending pair (canonical order) of each message is reported.
    """
    _require_match(col, sig)
    report = Report("informative", True)
    if sig.d == 0:
        return report
    H = incidence(sig.n, sig.a)
    hands = col.hands
    threshold = sig.a - sig.d
    for msg in col.messages:
        idx = np.flatnonzero(col.array == msg)
        report.checked_count += comb(len(idx), 2)
        if len(idx) < 2:
            continue
        sub = H[idx]
        inter = sub @ sub.T
        bad = np.argwhere(np.triu(inter >= threshold - 0.5, k=1))
        if len(bad):
            report.verdict = False
            pairs = bad if all_witnesses else bad[:1]
            for i, j in pairs:
                report.witnesses.append(ProperViolation(hands[idx[i]], hands[idx[j]], msg))
    return report


def check_min_informative(col: Coloring, sig: Signature) -> Report:
    """Every clique of hands B considers possible sees at least two messages.

    Each monochrome clique is reported, keyed by B's hand.
    """
    _require_match(col, sig)
    if sig.d < 1:
        raise UndefinedPredicateError("minimal informativeness needs c + r >= 1")
    H = incidence(sig.n, sig.a)
    B = incidence(sig.n, sig.b)
    colors = col.array
    big = int(colors.max()) + 1
    b_masks = hand_masks(sig.n, sig.b)
    report = Report("min_informative", True, checked_count=len(b_masks))
    for start in range(0, len(b_masks), _CHUNK):
        inside = (B[start:start + _CHUNK] @ H.T) < 0.5
        hi = np.where(inside, colors, -1).max(axis=1)
        lo = np.where(inside, colors, big).min(axis=1)
        for row in np.flatnonzero(hi == lo):
            report.verdict = False
            report.witnesses.append(MonochromeClique(Hand(b_masks[start + row], sig.n), int(hi[row])))
    return report


def check_safe(col: Coloring, sig: Signature, all_witnesses: bool = False, weak: bool = False) -> Report:
    """For every C hand ``c``, card ``y`` outside it and message ``M`` possible for ``c``,
    some hand of ``M`` avoiding ``c`` holds ``y`` and another does not.

    ``weak=True`` checks against an eavesdropper holding no cards regardless of
    ``sig.c``. By default each failing ``(c, M)`` reports only its smallest ``y``.
    """
    _require_match(col, sig)
    n = sig.n
    H = incidence(n, sig.a)
    c_masks = eavesdropper_hands(sig, weak)
    if weak:
        C = np.zeros((1, n), dtype=np.float32)
    else:
        C = incidence(n, sig.c)
    colors = col.array
    report = Report("safe", True)
    found = []
    for msg in col.messages:
        idx = np.flatnonzero(colors == msg)
        sub = H[idx]
        for start in range(0, len(c_masks), _CHUNK):
            cs = C[start:start + _CHUNK]
            avoid = ((cs @ sub.T) < 0.5).astype(np.float32)
            total = avoid.sum(axis=1)
            holding = avoid @ sub
            possible = total > 0
            outside = cs < 0.5
            report.checked_count += int((outside[possible]).sum())
            always = possible[:, None] & outside & (holding >= total[:, None] - 0.5)
            never = possible[:, None] & outside & (holding < 0.5)
            for row, y in np.argwhere(always | never):
                direction = "contains" if always[row, y] else "excludes"
                found.append((start + row, msg, int(y), direction))
    found.sort()
    seen = set()
    for row, msg, y, direction in found:
        if not all_witnesses and (row, msg) in seen:
            continue
        seen.add((row, msg))
        report.witnesses.append(SafetyViolation(Hand(c_masks[row], n), y, msg, direction))
    report.verdict = not found
    return report


def check_ca2_ca3(col: Coloring, sig: Signature, all_witnesses: bool = False, weak: bool = False) -> Report:
    """For every C hand ``c`` and message ``M`` with avoiding hands ``X``:
    the hands in ``X`` share no card (CA2) and together cover everything outside ``c`` (CA3).

    Works on bit masks, hand by hand. Without ``all_witnesses`` only the
    smallest offending card per ``(c, M, condition)`` is listed.
    """
    _require_match(col, sig)
    n = sig.n
    full = (1 << n) - 1
    masks = hand_masks(n, sig.a)
    report = Report("ca2_ca3", True)
    for cm in eavesdropper_hands(sig, weak):
        union: dict[int, int] = {}
        inter: dict[int, int] = {}
        for mask, msg in zip(masks, col.colors):
            if mask & cm:
                continue
            union[msg] = union.get(msg, 0) | mask
            inter[msg] = inter.get(msg, full) & mask
        c_hand = Hand(cm, n)
        outside = full & ~cm
        for msg in sorted(union):
            report.checked_count += 1
            shared = Hand(inter[msg], n).cards
            uncovered = Hand(outside & ~union[msg], n).cards
            if shared or uncovered:
                report.verdict = False
            if not all_witnesses:
                shared, uncovered = shared[:1], uncovered[:1]
            report.witnesses.extend(CA2Violation(c_hand, x, msg) for x in shared)
            report.witnesses.extend(CA3Violation(c_hand, x, msg) for x in uncovered)
    return report


@dataclass(frozen=True)
class SolvabilityBounds:
    """Outcome of the necessary conditions for an informative and safe protocol.

    ``status`` is ``"impossible"`` when some condition rules it out,
    ``"possible"`` for the degenerate ``c + r = 0`` case (the constant
    protocol works), and ``"unknown"`` otherwise.
    """

    status: Literal["impossible", "possible", "unknown"]
    reasons: tuple[str, ...] = ()

    @property
    def informative_safe_possible(self) -> Optional[bool]:
        return {"impossible": False, "possible": True, "unknown": None}[self.status]


def check_solvability_bounds(sig: Signature) -> SolvabilityBounds:
    a, b, c, r, n = sig.a, sig.b, sig.c, sig.r, sig.n
    reasons = []
    if c >= b:
        reasons.append(f"c={c} >= b={b}: C's cliques are cliques of B's graph")
    if c >= 1 and c + r >= min(a, n - a) - 1:
        reasons.append(f"c+r={c + r} >= min(a, n-a)-1={min(a, n - a) - 1} with c >= 1")
    if a == 1 and c + r >= 1:
        reasons.append("a=1: a safe protocol must be constant, hence not informative")
    if reasons:
        return SolvabilityBounds("impossible", tuple(reasons))
    if c + r == 0:
        return SolvabilityBounds("possible", ("c+r=0: B already knows A's hand, the constant protocol works",))
    return SolvabilityBounds("unknown")


def full_check(col: Coloring, sig: Signature) -> dict[str, Report]:
    """Informative, safe and, when defined, minimally informative reports."""
    out = {"informative": check_informative(col, sig), "safe": check_safe(col, sig)}
    if sig.d >= 1:
        out["min_informative"] = check_min_informative(col, sig)
    return out


def hands_avoiding(col: Coloring, excluded: Hand, message: int) -> list[Hand]:
    """Hands of ``message`` disjoint from ``excluded``, canonical order."""
    return [h for h, m in zip(col.hands, col.colors) if m == message and h.isdisjoint(excluded)]


def complement_hand(h: Hand) -> Hand:
    return complement(h, h.n)
