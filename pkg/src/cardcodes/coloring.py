"""The protocol table: one message id per a-hand, plus its text file format.

File layout::

    # cardcodes-coloring v1
    n=7 a=3
    0,1,2 0
    0,1,3 4
    ...

one line per hand. The writer emits hands in canonical order; the reader
accepts any order but insists every hand appears exactly once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Union

import numpy as np

from .deck import Hand, enumerate_hands, hand_index, hand_masks
from .errors import ColoringFormatError, InvalidDimensionError, InvalidVertexError

HEADER = "# cardcodes-coloring v1"
MAX_MESSAGE_ID = 2**31


@dataclass(frozen=True)
class Coloring:
    """A total map from the a-hands of an n-card deck to non-negative message ids.

    ``colors[i]`` is the message of the i-th hand in canonical order.
    ``metadata`` is informational only and takes no part in equality.
    """

    n: int
    a: int
    colors: tuple[int, ...]
    metadata: Mapping = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        expected = len(hand_masks(self.n, self.a))
        if len(self.colors) != expected:
            raise InvalidDimensionError(f"coloring has {len(self.colors)} entries, J({self.n},{self.a}) has {expected} vertices")
        if any(c < 0 for c in self.colors):
            raise InvalidDimensionError("message ids must be non-negative")

    @classmethod
    def from_function(cls, n: int, a: int, fn: Callable[[Hand], int], metadata=None) -> "Coloring":
        colors = tuple(int(fn(h)) for h in enumerate_hands(n, a))
        return cls(n, a, colors, dict(metadata or {}))

    @classmethod
    def from_classes(cls, n: int, a: int, classes: Mapping[int, Iterable[Hand]], metadata=None) -> "Coloring":
        index = hand_index(n, a)
        colors: list[Optional[int]] = [None] * len(index)
        for msg, hands in classes.items():
            for h in hands:
                pos = index.get(h.mask)
                if pos is None or h.n != n:
                    raise InvalidVertexError(f"{h!r} is not an {a}-hand of a deck of {n}")
                if colors[pos] is not None:
                    raise InvalidDimensionError(f"hand {h} assigned twice")
                colors[pos] = msg
        missing = [str(Hand(hand_masks(n, a)[i], n)) for i, c in enumerate(colors) if c is None]
        if missing:
            raise InvalidDimensionError(f"hands without a message: {', '.join(missing)}")
        return cls(n, a, tuple(colors), dict(metadata or {}))

    @cached_property
    def hands(self) -> list[Hand]:
        return enumerate_hands(self.n, self.a)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.colors, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __getitem__(self, hand: Hand) -> int:
        pos = hand_index(self.n, self.a).get(hand.mask)
        if pos is None or len(hand) != self.a:
            raise InvalidVertexError(f"{hand!r} is not an {self.a}-hand of a deck of {self.n}")
        return self.colors[pos]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def messages(self) -> list[int]:
        return sorted(set(self.colors))

    @property
    def message_count(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[Hand]]:
        """Color classes, keyed by message in ascending order, hands in canonical order."""
        out: dict[int, list[Hand]] = {m: [] for m in self.messages}
        for h, msg in zip(self.hands, self.colors):
            out[msg].append(h)
        return out

    def class_sizes(self) -> list[int]:
        """Class sizes in ascending message order."""
        counts = np.bincount(self.array)
        return [int(counts[m]) for m in self.messages]

    def is_normalized(self) -> bool:
        return self.messages == list(range(self.message_count))

    def normalized(self) -> "Coloring":
        """Relabel messages to ``0..k-1`` preserving their order; old labels go to ``metadata['original_ids']``."""
        if self.is_normalized():
            return self
        relabel = {old: new for new, old in enumerate(self.messages)}
        meta = dict(self.metadata)
        meta["original_ids"] = {new: old for old, new in relabel.items()}
        return Coloring(self.n, self.a, tuple(relabel[c] for c in self.colors), meta)

    def relabeled(self, fn: Callable[[int], int], **metadata) -> "Coloring":
        meta = dict(self.metadata)
        meta.update(metadata)
        return Coloring(self.n, self.a, tuple(int(fn(c)) for c in self.colors), meta)

    def to_text(self) -> str:
        lines = [HEADER, f"n={self.n} a={self.a}"]
        lines.extend(f"{h} {msg}" for h, msg in zip(self.hands, self.colors))
        return "\n".join(lines) + "\n"


_SIZE_LINE = re.compile(r"n=(\d+) a=(\d+)")
_ENTRY_LINE = re.compile(r"(-|\d+(?:,\d+)*) (\d+)")


def parse_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or lines[0] != HEADER:
        raise ColoringFormatError(f"first line must be {HEADER!r}")
    m = _SIZE_LINE.fullmatch(lines[1])
    if not m:
        raise ColoringFormatError(f"second line must be 'n=<int> a=<int>', got {lines[1]!r}")
    n, a = int(m.group(1)), int(m.group(2))
    if not 0 <= a <= n or n > 64:
        raise ColoringFormatError(f"bad dimensions n={n} a={a}")
    index = hand_index(n, a)
    colors: list[Optional[int]] = [None] * len(index)
    for lineno, line in enumerate(lines[2:], start=3):
        em = _ENTRY_LINE.fullmatch(line)
        if not em:
            raise ColoringFormatError(f"line {lineno}: expected '<hand> <message-id>', got {line!r}")
        try:
            hand = Hand.parse(em.group(1), n)
        except InvalidDimensionError as exc:
            raise ColoringFormatError(f"line {lineno}: {exc}") from None
        pos = index.get(hand.mask)
        if pos is None:
            raise ColoringFormatError(f"line {lineno}: {hand} is not an {a}-hand")
        if colors[pos] is not None:
            raise ColoringFormatError(f"line {lineno}: duplicate hand {hand}")
        msg = int(em.group(2))
        if msg >= MAX_MESSAGE_ID:
            raise ColoringFormatError(f"line {lineno}: message id {msg} >= 2^31")
        colors[pos] = msg
    missing = sum(c is None for c in colors)
    if missing:
        raise ColoringFormatError(f"{missing} hands have no message")
    return Coloring(n, a, tuple(colors))


def read_coloring(path: Union[str, Path]) -> Coloring:
    return parse_coloring(Path(path).read_text())


def write_coloring(col: Coloring, path: Union[str, Path]) -> None:
    Path(path).write_text(col.to_text())
