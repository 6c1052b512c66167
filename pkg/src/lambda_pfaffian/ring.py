"""Sparse multivariate polynomials with integer coefficients.

A polynomial is a mapping from monomials to nonzero ``int`` coefficients.
A monomial is a tuple of ``(VarId, exponent)`` pairs sorted by variable.

The variable set is closed::

    l  < p < q < t < x[1] < y[1] < x[2] < y[2] < ... < a[1,2] < a[1,3] < ...

Monomials are ordered lexicographically with the *largest* variable most
significant: ``u > v`` iff at the largest variable where the exponents
differ, ``u`` has the higher exponent.  With this order the generic 4x4
Pfaffian prints as ``a[1,2]*a[3,4] - l*a[1,3]*a[2,4] + l*a[1,4]*a[2,3]``
and ``(1-l)^2`` prints as ``l^2 - 2*l + 1``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import DivisionByZero, InexactDivision, ParseError

__all__ = [
    "VarId",
    "LAMBDA",
    "P",
    "Q",
    "T",
    "x",
    "y",
    "entry",
    "Polynomial",
    "add",
    "mul",
    "substitute",
    "exact_div",
    "canonical_string",
    "parse_polynomial",
]


_LAMBDA, _P, _Q, _T, _XY, _ENTRY = range(6)


class VarId(NamedTuple):
    """A variable.  Tuple comparison gives the documented total order."""

    kind: int
    i: int = 0
    j: int = 0

    @property
    def name(self) -> str:
        if self.kind == _XY:
            return "%s[%d]" % ("y" if self.j else "x", self.i)
        if self.kind == _ENTRY:
            return "a[%d,%d]" % (self.i, self.j)
        return "lpqt"[self.kind]

    def __str__(self):
        return self.name


LAMBDA = VarId(_LAMBDA)
P = VarId(_P)
Q = VarId(_Q)
T = VarId(_T)


def x(i: int) -> VarId:
    if i < 1:
        raise ValueError("x index must be positive")
    return VarId(_XY, i, 0)


def y(i: int) -> VarId:
    if i < 1:
        raise ValueError("y index must be positive")
    return VarId(_XY, i, 1)


def entry(i: int, j: int) -> VarId:
    if not 1 <= i < j:
        raise ValueError("entry a[%d,%d] needs 1 <= i < j" % (i, j))
    return VarId(_ENTRY, i, j)


Monomial = tuple  # tuple[tuple[VarId, int], ...], sorted by VarId
ONE_MONO: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial):
    """Return a / b, or None if b does not divide a."""
    d = dict(a)
    for v, e in b:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def _mono_key(m: Monomial):
    return m[::-1]


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


Coercible = Union["Polynomial", int]


class Polynomial:
    """Immutable polynomial in canonical form (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        if terms:
            self._terms = {m: c for m, c in terms.items() if c}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, v: VarId, exp: int = 1) -> "Polynomial":
        if exp < 0:
            raise ValueError("negative exponent")
        return cls._raw({((v, exp),) if exp else ONE_MONO: 1})

    @classmethod
    def monomial(cls, coeff: int, powers: Iterable[tuple[VarId, int]]) -> "Polynomial":
        d: dict[VarId, int] = {}
        for v, e in powers:
            d[v] = d.get(v, 0) + e
        mono = tuple(sorted((v, e) for v, e in d.items() if e))
        return cls._raw({mono: coeff} if coeff else {})

    @staticmethod
    def coerce(a: Coercible) -> "Polynomial":
        if isinstance(a, Polynomial):
            return a
        if isinstance(a, int):
            return Polynomial.const(a)
        raise TypeError("cannot convert %r to Polynomial" % (a,))

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return self._terms.get(ONE_MONO, 0)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def degree(self, v: VarId) -> int:
        if not self._terms:
            return -1
        return max(dict(m).get(v, 0) for m in self._terms)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_mono_key)
        return m, self._terms[m]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in decreasing monomial order."""
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def coefficients_in(self, v: VarId) -> dict[int, "Polynomial"]:
        """Split as sum_k v^k * c_k; returns {k: c_k}."""
        out: dict[int, dict] = {}
        for m, c in self._terms.items():
            k = 0
            rest = []
            for w, e in m:
                if w == v:
                    k = e
                else:
                    rest.append((w, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: Polynomial._raw(t) for k, t in out.items()}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Coercible) -> "Polynomial":
        other = Polynomial.coerce(other)
        if len(other._terms) > len(self._terms):
            a, b = other, self
        else:
            a, b = self, other
        out = dict(a._terms)
        for m, c in b._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other: Coercible) -> "Polynomial":
        return Polynomial.coerce(other) + (-self)

    def __mul__(self, other: Coercible) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = Polynomial.coerce(other)
        out: dict = {}
        get = out.get
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, mapping: Mapping[VarId, Coercible]) -> "Polynomial":
        return substitute(self, mapping)

    def __str__(self):
        return canonical_string(self)

    def __repr__(self):
        return "Polynomial(%r)" % canonical_string(self)


# -- module-level operations --------------------------------------------------


def add(a: Coercible, b: Coercible) -> Polynomial:
    return Polynomial.coerce(a) + b


def mul(a: Coercible, b: Coercible) -> Polynomial:
    return Polynomial.coerce(a) * b


def substitute(a: Polynomial, mapping: Mapping[VarId, Coercible]) -> Polynomial:
    """Apply the ring homomorphism fixing every variable not in ``mapping``."""
    if not mapping:
        return a
    images = {v: Polynomial.coerce(p) for v, p in mapping.items()}
    powers: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = images[v] ** e
        return powers[key]

    out = Polynomial()
    for m, c in a.items():
        kept = []
        term = Polynomial.const(c)
        for v, e in m:
            if v in images:
                term = term * power(v, e)
            else:
                kept.append((v, e))
        if kept:
            term = term * Polynomial._raw({tuple(kept): 1})
        out = out + term
    return out


def exact_div(num: Coercible, den: Coercible) -> Polynomial:
    """Quotient ``q`` with ``num == den * q``.

    Raises DivisionByZero for ``den == 0`` and InexactDivision when no
    polynomial quotient exists.
    """
    num = Polynomial.coerce(num)
    den = Polynomial.coerce(den)
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    lm, lc = den.leading_term()
    den_terms = list(den.items())
    rem = dict(num._terms)
    quot: dict = {}
    while rem:
        m = max(rem, key=_mono_key)
        c = rem[m]
        qm = _mono_div(m, lm)
        if qm is None or c % lc:
            raise InexactDivision("%s is not divisible by %s" % (num, den))
        qc = c // lc
        quot[qm] = quot.get(qm, 0) + qc
        for dm, dc in den_terms:
            pm = _mono_mul(qm, dm)
            v = rem.get(pm, 0) - qc * dc
            if v:
                rem[pm] = v
            else:
                rem.pop(pm, None)
    q = Polynomial(quot)
    if den * q != num:
        raise InexactDivision("verification failed for %s / %s" % (num, den))
    return q


def _render_mono(m: Monomial) -> str:
    return "*".join(v.name if e == 1 else "%s^%d" % (v.name, e) for v, e in m)


def canonical_string(a: Polynomial) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for k, (m, c) in enumerate(a.sorted_terms()):
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _render_mono(m)
        else:
            body = "%d*%s" % (mag, _render_mono(m))
        if k == 0:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# -- parser -----------------------------------------------------------------

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<int>\d+)
      | (?P<entry>a\s*\[\s*(\d+)\s*,\s*(\d+)\s*\])
      | (?P<xy>([xy])\s*\[\s*(\d+)\s*\])
      | (?P<sym>[lpqt])(?![\w\[])
      | (?P<op>[-+*^()])
    )""",
    re.VERBOSE,
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            mt = _TOKEN.match(text, pos)
            if not mt or mt.end() == pos:
                raise ParseError("unexpected character %r" % text[pos], pos)
            start = mt.start(mt.lastgroup)
            kind = mt.lastgroup
            if kind == "int":
                val = int(mt.group("int"))
            elif kind == "entry":
                i, j = int(mt.group(3)), int(mt.group(4))
                if not 1 <= i < j:
                    raise ParseError("entry a[%d,%d] needs 1 <= i < j" % (i, j), start)
                val = entry(i, j)
                kind = "var"
            elif kind == "xy":
                i = int(mt.group(7))
                if i < 1:
                    raise ParseError("index must be positive", start)
                val = x(i) if mt.group(6) == "x" else y(i)
                kind = "var"
            elif kind == "sym":
                val = {"l": LAMBDA, "p": P, "q": Q, "t": T}[mt.group("sym")]
                kind = "var"
            else:
                val = mt.group("op")
            self.tokens.append((kind, val, start))
            pos = mt.end()
        self.tokens.append(("end", None, n))
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r" % op, pos)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        result = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.unary()
            else:
                return acc

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base**exp
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            return Polynomial.const(val)
        if kind == "var":
            return Polynomial.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError("unexpected %r" % (val,), pos)


def parse_polynomial(s: str) -> Polynomial:
    return _Parser(s).parse()
