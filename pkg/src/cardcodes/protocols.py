"""Announcement functions and transforms on colorings.

The raw protocols map a hand to a message value:

* :func:`chi_modn` -- sum of the cards modulo the deck size,
* :func:`chi_2` -- parity of that sum,
* :func:`chi_gf` -- the first ``d`` elementary symmetric polynomials of the
  field weights of the hand, over a prime field.

:func:`tabulate` turns any of them into a :class:`~cardcodes.coloring.Coloring`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from math import ceil, comb
from typing import Callable, Optional, Sequence

from sympy import isprime, nextprime

from .coloring import Coloring
from .deck import Hand, Signature, complement, enumerate_hands
from .errors import InvalidDimensionError, InvalidFieldError, OutOfScopeError, UndefinedPredicateError


def chi_modn(n: int, hand: Hand) -> int:
    if hand.mask >> n:
        raise InvalidDimensionError(f"{hand} has cards outside a deck of {n}")
    return sum(hand.cards) % n


def chi_2(hand: Hand) -> int:
    return sum(hand.cards) % 2


@dataclass(frozen=True)
class FieldWeights:
    """Distinct elements of GF(q) attached to the cards; ``w[i]`` belongs to card ``i``."""

    q: int
    w: tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.q):
            raise InvalidFieldError(f"q={self.q} is not prime")
        if self.q < len(self.w):
            raise InvalidFieldError(f"q={self.q} is smaller than the deck ({len(self.w)} cards)")
        if len(set(self.w)) != len(self.w) or any(not 0 <= x < self.q for x in self.w):
            raise InvalidFieldError("weights must be distinct residues mod q")

    @classmethod
    def default(cls, n: int, q: Optional[int] = None) -> "FieldWeights":
        """Identity weights over ``q`` (least prime >= n unless given)."""
        if q is None:
            q = 2 if n <= 2 else (n if isprime(n) else int(nextprime(n)))
        return cls(q, tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.w)


def elementary_symmetric(values: Sequence[int], d: int, q: int) -> tuple[int, ...]:
    """``(e_1, ..., e_d)`` of ``values`` reduced mod ``q``."""
    e = [1] + [0] * d
    for x in values:
        for j in range(d, 0, -1):
            e[j] = (e[j] + x * e[j - 1]) % q
    return tuple(e[1:])


def chi_gf(weights: FieldWeights, d: int, hand: Hand) -> tuple[int, ...]:
    if d < 1:
        raise InvalidDimensionError("d must be at least 1")
    if hand.mask >> weights.n:
        raise InvalidDimensionError(f"{hand} has cards outside a deck of {weights.n}")
    return elementary_symmetric([weights.w[i] for i in hand.cards], d, weights.q)


def encode_vector(vec: Sequence[int], q: int) -> int:
    """Base-q integer with the first component as most significant digit."""
    code = 0
    for x in vec:
        code = code * q + x
    return code


def tabulate(kind: Callable[[Hand], object], sig: Signature, **metadata) -> Coloring:
    """Evaluate ``kind`` on every a-hand and relabel its values to ``0..k-1`` in sorted order.

    The raw values go to ``metadata['original_ids']``.
    """
    hands = enumerate_hands(sig.n, sig.a)
    raw = [kind(h) for h in hands]
    values = sorted(set(raw))
    ids = {v: i for i, v in enumerate(values)}
    meta = dict(metadata)
    meta["signature"] = str(sig)
    meta["original_ids"] = dict(enumerate(values))
    return Coloring(sig.n, sig.a, tuple(ids[v] for v in raw), meta)


def modn_coloring(sig: Signature) -> Coloring:
    return tabulate(partial(chi_modn, sig.n), sig, protocol="modn")


def parity_coloring(sig: Signature) -> Coloring:
    return tabulate(chi_2, sig, protocol="mod2")


def gf_coloring(sig: Signature, d: int, weights: Optional[FieldWeights] = None) -> Coloring:
    """Tabulated :func:`chi_gf`; the message vectors are kept in ``original_ids``."""
    weights = weights or FieldWeights.default(sig.n)
    if weights.n != sig.n:
        raise InvalidFieldError(f"{weights.n} weights for a deck of {sig.n}")
    col = tabulate(partial(chi_gf, weights, d), sig, protocol=f"gf(d={d},q={weights.q})")
    meta = dict(col.metadata)
    meta["vectors"] = meta["original_ids"]
    meta["original_ids"] = {i: encode_vector(v, weights.q) for i, v in meta["vectors"].items()}
    return Coloring(col.n, col.a, col.colors, meta)


def complement_coloring(col: Coloring) -> Coloring:
    """Coloring of the (n-a)-hands giving each hand the message of its complement."""
    n = col.n
    colors = tuple(col[complement(h, n)] for h in enumerate_hands(n, n - col.a))
    return Coloring(n, n - col.a, colors, dict(col.metadata, complemented=True))


def dual_protocol(col: Coloring, sig: Signature, strict: bool = True) -> tuple[Coloring, Signature]:
    """Complement transform from ``(a, b, c, r)`` to ``(b+1, a-1, c, r)``.

    Informativeness and safety carry over only when ``c + r = 1``; other
    signatures are refused unless ``strict=False``, in which case the new
    signature is ``(n-a, a-c-r, c, r)`` and only informativeness is preserved.
    """
    if (col.n, col.a) != (sig.n, sig.a):
        raise InvalidDimensionError(f"coloring is for J({col.n},{col.a}), signature gives J({sig.n},{sig.a})")
    if sig.d != 1 and strict:
        raise OutOfScopeError("duality is only established for c + r = 1")
    new_sig = Signature(sig.n - sig.a, sig.a - sig.d, sig.c, sig.r)
    return complement_coloring(col), new_sig


def reduce_protocol(col: Coloring, sig: Signature) -> Coloring:
    """Merge messages modulo ``ceil(m / (p-1))`` with ``p = C(a+c+r, a)`` the size of B's clique.

    Applied to an informative and safe coloring with ``m`` messages, the
    result is minimally informative and safe.
    """
    if sig.d < 1:
        raise UndefinedPredicateError("reduction needs c + r >= 1")
    if (col.n, col.a) != (sig.n, sig.a):
        raise InvalidDimensionError(f"coloring is for J({col.n},{col.a}), signature gives J({sig.n},{sig.a})")
    col = col.normalized()
    p = comb(sig.a + sig.d, sig.a)
    modulus = ceil(col.message_count / (p - 1))
    return col.relabeled(lambda m: m % modulus, reduced_modulus=modulus, clique_size=p)
