"""Hand-listed colorings of J(7,3) and J(4,2) used as reference protocols.

Each listing is validated on load: every hand must appear exactly once.
"""

from __future__ import annotations

from .coloring import Coloring
from .deck import Hand, Signature
from .errors import UnknownFixtureError

# Hands are written as digit strings, one string per hand.
_LISTINGS = {
    # proper 6-coloring of J(7,3); class 5 has no hand with card 0
    "six_chi": ("3,3,1,0", [
        "012 034 056 135 146 236 245",
        "016 024 035 123 145 256 346",
        "015 023 046 124 136 345",
        "013 026 045 125 234 356",
        "014 025 036 126 456",
        "134 156 235 246",
    ]),
    # six_chi with 012 moved to class 5: safe when C holds nothing
    "six_chi1": ("3,3,0,1", [
        "034 056 135 146 236 245",
        "016 024 035 123 145 256 346",
        "015 023 046 124 136 345",
        "013 026 045 125 234 356",
        "014 025 036 126 456",
        "012 134 156 235 246",
    ]),
    # informative and safe for (3,3,1), class sizes 7,7,6,5,5,5
    "six_chi2": ("3,3,1,0", [
        "013 026 045 124 156 235 346",
        "015 023 046 126 134 245 356",
        "016 024 035 123 145 256",
        "012 036 135 234 456",
        "056 034 125 146 236",
        "014 025 136 246 345",
    ]),
    # minimally informative and safe 2-coloring of J(7,3)
    "two_msg_331": ("3,3,1,0", [
        "012 013 014 015 016 023 024 025 036 046 056 126 134 135 "
        "234 236 245 246 345 356 456",
        "026 034 035 045 123 124 125 136 145 146 156 235 256 346",
    ]),
    # safe proper coloring of J(4,2) with C holding nothing
    "j42_safe": ("2,1,0,1", [
        "01 23",
        "02 13",
        "03 12",
    ]),
}

_NOTES = {
    "six_chi": "source listing of class 2 carries an empty entry between 124 and 136; "
               "it is dropped, and the remaining 35 hands cover J(7,3) exactly once",
}

FIXTURE_NAMES = tuple(_LISTINGS)


def builtin_fixture(name: str) -> tuple[Coloring, Signature]:
    """The named reference coloring and the signature it was listed for."""
    if name.startswith("fixture:"):
        name = name[len("fixture:"):]
    try:
        sig_text, rows = _LISTINGS[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None
    sig = Signature.parse(sig_text)
    classes = {
        msg: [Hand.of((int(ch) for ch in word), sig.n) for word in row.split()]
        for msg, row in enumerate(rows)
    }
    meta = {"fixture": name, "signature": sig_text}
    if name in _NOTES:
        meta["transcription"] = _NOTES[name]
    return Coloring.from_classes(sig.n, sig.a, classes, meta), sig
