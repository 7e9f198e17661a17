"""Exact multivariate polynomials over the rationals, plus a small text grammar.

Terms are stored as a mapping from exponent tuples to nonzero ``Fraction``
coefficients.  Values are treated as immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class RingMismatchError(ValueError):
    pass


class ParseError(ValueError):
    """Syntax error in polynomial text; ``offset`` is a byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class UnknownVariableError(ParseError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable {name!r}", offset)
        self.name = name


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


def grlex_key(exp: Exponent):
    return (sum(exp), exp)


class Polynomial:
    """A polynomial in ``ring`` (a tuple of variable names).

    With ``laurent=True`` negative exponents are allowed.
    """

    __slots__ = ("ring", "terms", "laurent", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping[Exponent, object] | None = None,
                 laurent: bool = False):
        self.ring = tuple(ring)
        self.laurent = laurent
        n = len(self.ring)
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise RingMismatchError(f"exponent {exp} has wrong arity for ring {self.ring}")
            if not laurent and any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp} outside a Laurent ring")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms, laurent=False) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p.laurent = laurent
        p._hash = None
        return p

    # construction helpers

    @classmethod
    def zero(cls, ring, laurent=False):
        return cls._raw(tuple(ring), {}, laurent)

    @classmethod
    def constant(cls, ring, c, laurent=False):
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): c}, laurent)

    @classmethod
    def var(cls, ring, name, laurent=False):
        ring = tuple(ring)
        exp = [0] * len(ring)
        exp[ring.index(name)] = 1
        return cls._raw(ring, {tuple(exp): Fraction(1)}, laurent)

    @classmethod
    def monomial(cls, ring, exp, coeff=1, laurent=False):
        return cls(ring, {tuple(exp): coeff}, laurent)

    # basic queries

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.sorted_terms())

    def sorted_terms(self):
        """Terms in descending graded-lex order (the printing order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def monomials(self):
        return [e for e, _ in self.sorted_terms()]

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def degrees(self):
        return sorted({sum(e) for e in self.terms})

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [self.ring[i] for i in sorted(used)]

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.ring, other, self.laurent)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Polynomial._raw(self.ring, t, self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        t: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Polynomial._raw(self.ring, t, self.laurent or other.laurent)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or not self.laurent:
                raise ValueError("negative powers only for Laurent monomials")
            (e, c), = self.terms.items()
            return Polynomial._raw(self.ring, {tuple(k * a for a in e): c ** k}, True)
        result = Polynomial.constant(self.ring, 1, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return Polynomial.zero(self.ring, self.laurent)
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()}, self.laurent)

    def mul_monomial(self, exp, coeff=1) -> "Polynomial":
        coeff = as_fraction(coeff)
        t = {tuple(a + b for a, b in zip(e, exp)): c * coeff for e, c in self.terms.items()}
        laurent = self.laurent or any(a < 0 for e in t for a in e)
        return Polynomial._raw(self.ring, t, laurent)

    def monic(self, order_key=None) -> "Polynomial":
        if not self.terms:
            return self
        lead = max(self.terms, key=order_key or grlex_key)
        return self.scale(1 / self.terms[lead])

    # comparisons and hashing

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self.sorted_terms())))
        return self._hash

    # structural operations

    def is_homogeneous(self):
        """Return ``(True, d)`` when every term has total degree d, else ``(False, None)``."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        degs = {sum(e) for e in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def is_weighted_homogeneous(self, w) -> bool:
        vals = {sum(a * b for a, b in zip(e, w)) for e in self.terms}
        return len(vals) <= 1

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise RingMismatchError("point has wrong dimension")
        pt = [as_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, a in zip(pt, e):
                if a:
                    v *= x ** a
            total += v
        return total

    def specialize(self, name: str, value) -> "Polynomial":
        """Substitute a rational value for one variable and drop it from the ring."""
        i = self.ring.index(name)
        value = as_fraction(value)
        ring = self.ring[:i] + self.ring[i + 1:]
        t: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] and not value:
                continue
            ne = e[:i] + e[i + 1:]
            v = t.get(ne, 0) + c * value ** e[i]
            if v:
                t[ne] = v
            else:
                t.pop(ne, None)
        return Polynomial._raw(ring, t, self.laurent)

    def substitute_monomial_scaling(self, w, param: str = "t") -> "Polynomial":
        """Map x_i to t^{w_i} x_i; the result lives in ``ring + (param,)``."""
        if len(w) != self.nvars:
            raise RingMismatchError("weight has wrong dimension")
        if param in self.ring:
            raise ValueError(f"parameter {param!r} already in ring")
        w = [int(a) for a in w]
        t = {}
        laurent = self.laurent
        for e, c in self.terms.items():
            k = sum(a * b for a, b in zip(e, w))
            laurent = laurent or k < 0
            t[e + (k,)] = c
        return Polynomial._raw(self.ring + (param,), t, laurent)

    def change_ring(self, ring: Sequence[str]) -> "Polynomial":
        """Re-express in a ring containing every variable actually used."""
        ring = tuple(ring)
        idx = []
        for i, name in enumerate(self.ring):
            if name in ring:
                idx.append(ring.index(name))
            else:
                idx.append(None)
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(ring)
            for i, a in enumerate(e):
                if a:
                    if idx[i] is None:
                        raise RingMismatchError(f"variable {self.ring[i]!r} missing from {ring}")
                    ne[idx[i]] = a
            t[tuple(ne)] = c
        return Polynomial._raw(ring, t, self.laurent)

    def homogenize(self, var: str) -> "Polynomial":
        """Homogenize with a new variable appended to the ring."""
        if not self.terms:
            return Polynomial.zero(self.ring + (var,))
        d = self.degree()
        t = {e + (d - sum(e),): c for e, c in self.terms.items()}
        return Polynomial._raw(self.ring + (var,), t, self.laurent)

    def dehomogenize(self, var: str) -> "Polynomial":
        return self.specialize(var, 1)

    def clear_denominators(self) -> "Polynomial":
        """Multiply by a Laurent monomial so all exponents are >= 0 and no variable divides every term."""
        if not self.terms:
            return Polynomial.zero(self.ring)
        n = self.nvars
        low = [min(e[i] for e in self.terms) for i in range(n)]
        t = {tuple(a - b for a, b in zip(e, low)): c for e, c in self.terms.items()}
        return Polynomial._raw(self.ring, t, False)

    def content_normalized(self) -> "Polynomial":
        """Scale to a primitive integer polynomial with positive leading (printing order) coefficient."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        s = Fraction(den, g)
        if self.sorted_terms()[0][1] < 0:
            s = -s
        return self.scale(s)

    # printing

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, ring={','.join(self.ring)})"


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(ring, exp) -> str:
    parts = []
    for name, a in zip(ring, exp):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for i, (exp, c) in enumerate(f.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(f.ring, exp)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# parsing

class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self, pos=None) -> int:
        pos = self.pos if pos is None else pos
        return len(self.text[:pos].encode("utf-8"))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected integer", self.offset())
        return int(self.text[start:self.pos])

    def ident(self):
        self.skip()
        m = IDENT_RE.match(self.text, self.pos)
        if not m:
            raise ParseError("expected variable name", self.offset())
        self.pos = m.end()
        return m.group(0), m.start()


def parse_polynomial(text: str, ring: Sequence[str], laurent: bool = False) -> Polynomial:
    """Parse ``text`` in the polynomial grammar over the variables ``ring``.

    >>> str(parse_polynomial("p12*p34 - p13*p24 + p14*p23", ["p12", "p13", "p14", "p23", "p24", "p34"]))
    'p12*p34 - p13*p24 + p14*p23'
    """
    ring = tuple(ring)
    index = {name: i for i, name in enumerate(ring)}
    n = len(ring)
    lx = _Lexer(text)
    terms: Dict[Exponent, Fraction] = {}

    def add(exp, c):
        v = terms.get(exp, 0) + c
        if v:
            terms[exp] = v
        else:
            terms.pop(exp, None)

    def factor(exp):
        name, start = lx.ident()
        if name not in index:
            raise UnknownVariableError(name, lx.offset(start))
        power = 1
        if lx.take("^"):
            neg = lx.take("-")
            power = lx.integer()
            if neg:
                if not laurent:
                    raise ParseError("negative exponent outside a Laurent ring", lx.offset())
                power = -power
        exp[index[name]] += power

    def term(sign):
        exp = [0] * n
        coeff = Fraction(1)
        ch = lx.peek()
        if ch.isdigit():
            num = lx.integer()
            den = 1
            if lx.take("/"):
                den = lx.integer()
                if den == 0:
                    raise ParseError("zero denominator", lx.offset())
            coeff = Fraction(num, den)
            star = lx.take("*")
            if not lx.peek().isalpha():
                if star:
                    raise ParseError("expected variable name", lx.offset())
                add(tuple(exp), sign * coeff)
                return
        elif not ch.isalpha():
            raise ParseError("expected term", lx.offset())
        factor(exp)
        while lx.take("*"):
            factor(exp)
        add(tuple(exp), sign * coeff)

    sign = -1 if lx.take("-") else 1
    if sign == 1:
        lx.take("+")
    term(sign)
    while True:
        ch = lx.peek()
        if ch == "+":
            lx.pos += 1
            term(1)
        elif ch == "-":
            lx.pos += 1
            term(-1)
        elif ch == "":
            break
        else:
            raise ParseError(f"unexpected character {ch!r}", lx.offset())
    return Polynomial._raw(ring, terms, laurent)


def parse_polynomials(text: str, ring: Sequence[str], laurent: bool = False):
    """Parse generators separated by newlines, commas or semicolons; ``#`` starts a comment."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for chunk in re.split(r"[,;]", line):
            if chunk.strip():
                out.append(parse_polynomial(chunk, ring, laurent))
    return out


def infer_ring(text: str) -> Tuple[str, ...]:
    """Variables occurring in ``text``, in order of first appearance."""
    seen = []
    for m in IDENT_RE.finditer(text):
        if m.group(0) not in seen:
            seen.append(m.group(0))
    return tuple(seen)


class Ideal:
    """Generators plus a cache of reduced Groebner bases keyed by order."""

    def __init__(self, ring: Sequence[str], generators: Iterable[Polynomial] = (), laurent: bool = False):
        self.ring = tuple(ring)
        self.laurent = laurent
        gens = []
        for g in generators:
            if g.ring != self.ring:
                raise RingMismatchError(f"generator ring {g.ring} differs from {self.ring}")
            if g.terms and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self.gb_cache: Dict[object, object] = {}

    @classmethod
    def from_text(cls, texts, ring, laurent=False):
        if isinstance(texts, str):
            polys = parse_polynomials(texts, ring, laurent)
        else:
            polys = [parse_polynomial(t, ring, laurent) for t in texts]
        return cls(ring, polys, laurent)

    @property
    def nvars(self):
        return len(self.ring)

    def is_zero(self):
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous()[0] for g in self.generators)

    def is_principal(self) -> bool:
        return len(self.generators) <= 1

    def polynomial(self, text) -> Polynomial:
        return parse_polynomial(text, self.ring, self.laurent)

    def __repr__(self):
        return "Ideal<" + ", ".join(str(g) for g in self.generators) + ">"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"
