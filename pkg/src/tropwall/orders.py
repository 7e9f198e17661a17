"""Monomial orders and weight orders.

Every order is exposed as a sort key on exponent tuples: the *leading*
term of a polynomial is the term with the largest key.  Weight vectors use
the minimum convention, so the leading term of a weight order is a term of
minimal weight, ties broken by the base order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Optional, Sequence, Tuple

BASE_ORDERS = ("lex", "revlex", "grlex", "grevlex")
_ALIASES = {"graded-lex": "grlex", "deglex": "grlex", "graded-revlex": "grevlex", "degrevlex": "grevlex"}


def integral_weight(w: Sequence) -> Tuple[int, ...]:
    """Positive rescaling of a rational vector to an integer vector."""
    fr = [Fraction(a) for a in w]
    m = 1
    for a in fr:
        m = lcm(m, a.denominator)
    return tuple(int(a * m) for a in fr)


@dataclass(frozen=True)
class OrderDescriptor:
    """``weights`` (possibly empty) refined by the base order ``tiebreak``.

    ``varorder`` optionally permutes variable priority for the base order:
    it lists variable indices from most to least significant.
    """

    tiebreak: str = "grevlex"
    weights: Tuple[Tuple[Fraction, ...], ...] = ()
    varorder: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        tb = _ALIASES.get(self.tiebreak, self.tiebreak)
        if tb not in BASE_ORDERS:
            raise ValueError(f"unknown monomial order {self.tiebreak!r}")
        object.__setattr__(self, "tiebreak", tb)
        ws = tuple(tuple(Fraction(a) for a in w) for w in self.weights)
        if len({len(w) for w in ws}) > 1:
            raise ValueError("weight rows of different lengths")
        object.__setattr__(self, "weights", ws)
        if self.varorder is not None:
            object.__setattr__(self, "varorder", tuple(int(i) for i in self.varorder))

    @property
    def kind(self) -> str:
        return "weight" if self.weights else self.tiebreak

    @classmethod
    def weight(cls, w: Sequence, tiebreak: str = "grevlex") -> "OrderDescriptor":
        return cls(tiebreak, (tuple(w),))

    @classmethod
    def weight_rows(cls, rows, tiebreak: str = "grevlex") -> "OrderDescriptor":
        return cls(tiebreak, tuple(tuple(r) for r in rows))

    def refine(self, w: Sequence) -> "OrderDescriptor":
        """Prepend a weight vector (it takes priority over the current order)."""
        return OrderDescriptor(self.tiebreak, (tuple(w),) + self.weights, self.varorder)

    def is_well_order(self) -> bool:
        # under the min convention a weight row must be <= 0 to respect x^a | x^b
        return all(a <= 0 for w in self.weights for a in w)

    def check_arity(self, n: int):
        for w in self.weights:
            if len(w) != n:
                raise ValueError(f"weight {list(map(str, w))} has length {len(w)}, ring has {n} variables")
        if self.varorder is not None and sorted(self.varorder) != list(range(n)):
            raise ValueError("varorder is not a permutation of the variables")

    def key(self, n: int) -> Callable[[Tuple[int, ...]], tuple]:
        self.check_arity(n)
        return _compile_key(self, n)

    def __str__(self):
        base = self.tiebreak
        if self.varorder is not None:
            base += "{" + ",".join(map(str, self.varorder)) + "}"
        if not self.weights:
            return base
        rows = ";".join("[" + ",".join(str(a) for a in w) + "]" for w in self.weights)
        return f"w:{rows}+{base}"


@lru_cache(maxsize=512)
def _compile_key(order: OrderDescriptor, n: int):
    perm = order.varorder or tuple(range(n))
    tb = order.tiebreak
    if order.varorder is None and tb == "lex":
        base = tuple
    elif order.varorder is None and tb == "grevlex":
        def base(e):
            return (sum(e),) + tuple(-a for a in reversed(e))
    elif tb == "lex":
        def base(e):
            return tuple(e[i] for i in perm)
    elif tb == "revlex":
        rp = perm[::-1]

        def base(e):
            return tuple(e[i] for i in rp)
    elif tb == "grlex":
        def base(e):
            return (sum(e),) + tuple(e[i] for i in perm)
    else:
        rp = perm[::-1]

        def base(e):
            return (sum(e),) + tuple(-e[i] for i in rp)
    if not order.weights:
        return base
    ws = [integral_weight(w) for w in order.weights]

    def key(e):
        return tuple(-sum(a * b for a, b in zip(w, e)) for w in ws) + base(e)
    return key


_ORDER_RE = re.compile(r"^\s*(?:w\s*:\s*(?P<w>.*?)\s*\+\s*)?(?P<base>[A-Za-z-]+)\s*$")


def parse_order(text: str) -> OrderDescriptor:
    """Parse ``lex``, ``grevlex``, ``w:[1,0]+lex`` or ``w:[1,0];[0,-1]+grlex``."""
    m = _ORDER_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse order {text!r}")
    rows = []
    if m.group("w"):
        for chunk in re.findall(r"\[([^\]]*)\]", m.group("w")):
            rows.append(tuple(Fraction(x.strip()) for x in chunk.split(",") if x.strip()))
        if not rows:
            raise ValueError(f"cannot parse weights in {text!r}")
    return OrderDescriptor(m.group("base"), tuple(rows))


def as_order(spec) -> OrderDescriptor:
    if isinstance(spec, OrderDescriptor):
        return spec
    if isinstance(spec, str):
        return parse_order(spec)
    raise TypeError(f"not an order: {spec!r}")


LEX = OrderDescriptor("lex")
REVLEX = OrderDescriptor("revlex")
GRLEX = OrderDescriptor("grlex")
GREVLEX = OrderDescriptor("grevlex")
