"""What B concludes from A's announcement.

B holds ``b_hand`` and hears ``msg``. The hands A might hold are the
a-subsets of B's complement carrying that message. With an informative
coloring exactly one remains; with a minimally informative one B can still
name a small set of cards that meets every candidate.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .coloring import Coloring
from .deck import Card, Hand, Signature, complement
from .errors import (AmbiguousAnnouncementError, InconsistentAnnouncementError, InvalidDimensionError,
                     NotMinimallyInformativeError, UndefinedPredicateError)


def _candidates(b_hand: Hand, msg: int, col: Coloring, sig: Signature) -> tuple[list[Hand], list[Hand]]:
    """(clique of b_hand, the clique members carrying msg)."""
    if len(b_hand) != sig.b or b_hand.mask >> sig.n:
        raise InvalidDimensionError(f"{b_hand} is not a {sig.b}-hand of a deck of {sig.n}")
    if (col.n, col.a) != (sig.n, sig.a):
        raise InvalidDimensionError(f"coloring is for J({col.n},{col.a}), signature gives J({sig.n},{sig.a})")
    clique = [h for h in col.hands if h.isdisjoint(b_hand)]
    matching = [h for h in clique if col[h] == msg]
    if not matching:
        raise InconsistentAnnouncementError(f"no hand avoiding {b_hand} carries message {msg}")
    return clique, matching


def decode_full(b_hand: Hand, msg: int, col: Coloring, sig: Signature) -> Hand:
    _, matching = _candidates(b_hand, msg, col, sig)
    if len(matching) > 1:
        raise AmbiguousAnnouncementError(
            f"message {msg} fits {len(matching)} hands avoiding {b_hand}: " + " ".join(map(str, matching)))
    return matching[0]


def decode_min(b_hand: Hand, msg: int, col: Coloring, sig: Signature) -> Hand:
    """Lexicographically smallest ``(c+r)``-subset of B's complement meeting every candidate hand."""
    if sig.d < 1:
        raise UndefinedPredicateError("decode_min needs c + r >= 1")
    _, matching = _candidates(b_hand, msg, col, sig)
    rest = complement(b_hand, sig.n)
    for cards in combinations(rest.cards, sig.d):
        s = Hand.of(cards, sig.n)
        if all(not h.isdisjoint(s) for h in matching):
            return s
    raise NotMinimallyInformativeError(f"every hand avoiding {b_hand} carries message {msg}")


def learned_card(b_hand: Hand, msg: int, col: Coloring, sig: Signature) -> Card:
    """The card of A's hand B can name when ``c + r = 1``."""
    if sig.d != 1:
        raise UndefinedPredicateError("a single learned card needs c + r = 1")
    return decode_min(b_hand, msg, col, sig).cards[0]


def constructed_set(b_hand: Hand, msg: int, col: Coloring, sig: Signature) -> Optional[Hand]:
    """A meeting set built from a clique hand of another message, or None if there is none.

    Any a-hand of the clique outside the message leaves ``c + r`` cards of
    B's complement, and every other a-hand of the clique must use one of them.
    """
    clique, matching = _candidates(b_hand, msg, col, sig)
    rest = complement(b_hand, sig.n)
    for h in clique:
        if col[h] != msg:
            return rest - h
    return None


def clique_partition(col: Coloring, sig: Signature, excluded: Hand) -> dict[int, list[Hand]]:
    """The hands avoiding ``excluded``, grouped by message (ascending), canonical order within."""
    out: dict[int, list[Hand]] = {}
    for h, msg in zip(col.hands, col.colors):
        if h.isdisjoint(excluded):
            out.setdefault(msg, []).append(h)
    return dict(sorted(out.items()))
