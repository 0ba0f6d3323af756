"""Branch weights in N u {inf}.

An infinite weight means the corresponding branch locus is removed, so the
matching power relator is dropped.  It is kept as a distinct singleton and
never encoded as a large integer.
"""

from __future__ import annotations

from fractions import Fraction


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("orbicover.INF")


INF = _Infinity()


def is_inf(w) -> bool:
    return w is INF


def reciprocal(w) -> Fraction:
    """1/w with 1/inf = 0."""
    if w is INF:
        return Fraction(0)
    if w <= 0:
        raise ValueError(f"weight must be positive, got {w}")
    return Fraction(1, w)


def parse_weight(token):
    if isinstance(token, str):
        t = token.strip().lower()
        if t in ("inf", "infinity", "oo"):
            return INF
        return int(t)
    return token


def format_weight(w) -> str:
    return "inf" if w is INF else str(w)
