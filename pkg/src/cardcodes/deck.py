"""Decks, hands, signatures and deals.

A deck is ``{0, ..., n-1}``. Hands are immutable bit-membership sets; bit ``i``
of :attr:`Hand.mask` is set when card ``i`` is held. Hands of the same size sort
lexicographically by their ascending card lists, which is the canonical order
used for files, enumeration and tie-breaking everywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidDimensionError

Card = int

MAX_DECK = 64


def _cards_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, eq=True)
class Hand:
    """A set of cards from a deck of ``n`` cards."""

    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_DECK:
            raise InvalidDimensionError(f"deck size {self.n} outside [0, {MAX_DECK}]")
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidDimensionError(f"hand {self.mask:#x} has cards outside deck of {self.n}")

    @classmethod
    def of(cls, cards: Iterable[int], n: int) -> "Hand":
        mask = 0
        for x in cards:
            x = int(x)
            if not 0 <= x < n:
                raise InvalidDimensionError(f"card {x} not in deck of {n}")
            mask |= 1 << x
        return cls(mask, n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Hand":
        """Read the text form ``"0,1,3"`` (``"-"`` for the empty hand)."""
        text = text.strip()
        if text in ("-", ""):
            return cls(0, n)
        try:
            cards = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise InvalidDimensionError(f"malformed hand {text!r}") from None
        if len(set(cards)) != len(cards):
            raise InvalidDimensionError(f"repeated card in {text!r}")
        return cls.of(cards, n)

    @property
    def cards(self) -> tuple[int, ...]:
        return _cards_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.cards)

    def __contains__(self, card) -> bool:
        return 0 <= card < self.n and bool(self.mask >> card & 1)

    def __lt__(self, other: "Hand") -> bool:
        return (len(self), self.cards) < (len(other), other.cards)

    def __and__(self, other: "Hand") -> "Hand":
        return Hand(self.mask & other.mask, max(self.n, other.n))

    def __or__(self, other: "Hand") -> "Hand":
        return Hand(self.mask | other.mask, max(self.n, other.n))

    def __sub__(self, other: "Hand") -> "Hand":
        return Hand(self.mask & ~other.mask, self.n)

    def __xor__(self, other: "Hand") -> "Hand":
        return Hand(self.mask ^ other.mask, max(self.n, other.n))

    def isdisjoint(self, other: "Hand") -> bool:
        return not self.mask & other.mask

    def issubset(self, other: "Hand") -> bool:
        return not self.mask & ~other.mask

    def __str__(self) -> str:
        return ",".join(map(str, self.cards)) if self.mask else "-"

    def __repr__(self) -> str:
        return f"Hand({{{str(self) if self.mask else ''}}}, n={self.n})"


@dataclass(frozen=True)
class Signature:
    """Public hand sizes: A gets ``a``, B gets ``b``, C gets ``c``, ``r`` cards stay undealt."""

    a: int
    b: int
    c: int
    r: int = 0

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidDimensionError("A and B must each get at least one card")
        if self.c < 0 or self.r < 0:
            raise InvalidDimensionError("c and r must be non-negative")
        if self.n > MAX_DECK:
            raise InvalidDimensionError(f"deck of {self.n} cards exceeds {MAX_DECK}")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.r

    @property
    def d(self) -> int:
        """Distance parameter of B's indistinguishability graph, ``c + r``."""
        return self.c + self.r

    @classmethod
    def parse(cls, text: str) -> "Signature":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) not in (3, 4):
            raise InvalidDimensionError(f"signature must be a,b,c[,r], got {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise InvalidDimensionError(f"malformed signature {text!r}") from None
        return cls(*values)

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.r}"


def make_signature(a: int, b: int, c: int, r: int = 0) -> Signature:
    return Signature(a, b, c, r)


@dataclass(frozen=True)
class Deal:
    hand_a: Hand
    hand_b: Hand
    hand_c: Hand


def deal_valid(sig: Signature, deal: Deal) -> bool:
    """True iff the three hands are pairwise disjoint and sized as ``sig`` says."""
    a, b, c = deal.hand_a, deal.hand_b, deal.hand_c
    if any(h.mask >> sig.n for h in (a, b, c)):
        return False
    if (len(a), len(b), len(c)) != (sig.a, sig.b, sig.c):
        return False
    return not (a.mask & b.mask or a.mask & c.mask or b.mask & c.mask)


def complement(hand: Hand, n: int) -> Hand:
    full = (1 << n) - 1
    if hand.mask & ~full:
        raise InvalidDimensionError(f"{hand!r} does not fit in a deck of {n}")
    return Hand(full & ~hand.mask, n)


@lru_cache(maxsize=None)
def hand_masks(n: int, m: int) -> tuple[int, ...]:
    """Masks of all ``m``-subsets of ``{0..n-1}`` in canonical order."""
    if not 0 <= m <= n:
        raise InvalidDimensionError(f"cannot choose {m} cards from {n}")
    return tuple(sum(1 << x for x in combo) for combo in combinations(range(n), m))


@lru_cache(maxsize=None)
def hand_index(n: int, m: int) -> dict[int, int]:
    """Position of each ``m``-subset mask in the canonical order."""
    return {mask: i for i, mask in enumerate(hand_masks(n, m))}


@lru_cache(maxsize=None)
def incidence(n: int, m: int) -> np.ndarray:
    """Read-only 0/1 matrix, one row per ``m``-hand (canonical order), one column per card."""
    masks = hand_masks(n, m)
    mat = np.zeros((len(masks), n), dtype=np.float32)
    for row, mask in enumerate(masks):
        for x in _cards_of(mask):
            mat[row, x] = 1.0
    mat.setflags(write=False)
    return mat


def enumerate_hands(n: int, m: int) -> list[Hand]:
    """All ``m``-hands of an ``n``-card deck, lexicographically ordered."""
    return [Hand(mask, n) for mask in hand_masks(n, m)]


def all_deals(sig: Signature) -> Iterator[Deal]:
    """Every valid deal of ``sig``; A's hand varies slowest."""
    n = sig.n
    full = (1 << n) - 1
    for am in hand_masks(n, sig.a):
        rest_b = [x for x in range(n) if not am >> x & 1]
        for bcombo in combinations(rest_b, sig.b):
            bm = sum(1 << x for x in bcombo)
            rest_c = [x for x in range(n) if not (am | bm) >> x & 1]
            for ccombo in combinations(rest_c, sig.c):
                cm = sum(1 << x for x in ccombo)
                yield Deal(Hand(am, n), Hand(bm, n), Hand(cm & full, n))
