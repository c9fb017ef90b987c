"""Exact arithmetic in the field Q(s) of rational functions in a formal s with s^2 = q.

Every coefficient in the engine lives here.  A QScalar is a ratio of
integer-coefficient Laurent polynomials in s, kept in a canonical form so that
equality is plain structural equality:

  * the denominator is an ordinary polynomial (lowest exponent 0) with positive
    leading coefficient; any pure s-power is pushed into the numerator shift;
  * numerator and denominator share no polynomial factor (primitive-PRS gcd)
    and no integer content.

Rational numbers embed with the denominator holding the integer (so 1/2 is
num=(1,), den=(2,)), which keeps the half-sums of the cocycle and of normal
ordering exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class QFieldError(ArithmeticError):
    """Domain error inside Q(s) arithmetic."""


class SpecializationError(QFieldError):
    """Denominator vanishes at the requested s0."""


# ---------------------------------------------------------------------------
# dense int-tuple polynomial helpers; index i holds the coefficient of s^i
# (plus an external shift for Laurent numerators)


def _strip(c: list[int]) -> tuple[tuple[int, ...], int]:
    """Drop leading/trailing zeros; return (coeffs, index of first kept coeff)."""
    lo = 0
    hi = len(c)
    while lo < hi and c[lo] == 0:
        lo += 1
    while hi > lo and c[hi - 1] == 0:
        hi -= 1
    return tuple(c[lo:hi]), lo


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _content(a: tuple[int, ...]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _primitive(a: tuple[int, ...]) -> tuple[int, ...]:
    g = _content(a)
    if g in (0, 1):
        return a
    return tuple(c // g for c in a)


def _pdiv_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Exact polynomial quotient a/b; caller guarantees divisibility in Q[s]."""
    if not a:
        return ()
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + db]
        if c % lb != 0:
            raise QFieldError("inexact polynomial division")
        q = c // lb
        out[k] = q
        if q:
            for j, bj in enumerate(b):
                rem[k + j] -= q * bj
    if any(rem):
        raise QFieldError("inexact polynomial division")
    return tuple(out)


def _prem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Pseudo-remainder of a by b (both nonzero, deg a >= deg b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        lead = rem[k + db]
        if lead == 0:
            continue
        # scale so the leading term cancels without fractions
        for i in range(len(rem)):
            rem[i] *= lb
        for j, bj in enumerate(b):
            rem[k + j] -= lead * bj
    stripped, lo = _strip(rem)
    return tuple([0] * lo) + stripped if stripped else ()


def _pgcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive gcd via primitive-PRS pseudo-remainders, positive leading coeff."""
    a = _primitive(a)
    b = _primitive(b)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if not a:
        return ()
    if a[-1] < 0:
        a = tuple(-c for c in a)
    return a


class QScalar:
    """Canonical element of Q(s).  Value: s^shift * num(s) / den(s)."""

    __slots__ = ("num", "shift", "den")

    def __init__(self, num: tuple[int, ...], shift: int, den: tuple[int, ...]):
        # private: inputs must already be canonical; use the factory helpers
        self.num = num
        self.shift = shift
        self.den = den

    # -- construction -------------------------------------------------------

    @staticmethod
    def make(num, num_shift: int = 0, den=(1,), den_shift: int = 0) -> "QScalar":
        num, dlo = _strip(list(num))
        num_shift += dlo
        den, dlo2 = _strip(list(den))
        den_shift += dlo2
        if not den:
            raise QFieldError("zero denominator")
        if not num:
            return _ZERO
        shift = num_shift - den_shift
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = gcd(_content(num), _content(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        return QScalar(num, shift, den)

    @staticmethod
    def from_int(v: int) -> "QScalar":
        if v == 0:
            return _ZERO
        return QScalar((v,), 0, (1,))

    @staticmethod
    def from_fraction(v) -> "QScalar":
        f = Fraction(v)
        if f == 0:
            return _ZERO
        return QScalar((f.numerator,), 0, (f.denominator,))

    @staticmethod
    def s_power(k: int) -> "QScalar":
        return QScalar((1,), k, (1,))

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.shift == 0 and self.den == (1,)

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "QScalar") -> "QScalar":
        if not isinstance(other, QScalar):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        lo = min(self.shift, other.shift)
        a = [0] * max(self.shift - lo + len(self.num), other.shift - lo + len(other.num))
        b = list(a)
        for i, c in enumerate(self.num):
            a[self.shift - lo + i] = c
        for i, c in enumerate(other.num):
            b[other.shift - lo + i] = c
        if self.den == other.den:
            return QScalar.make([x + y for x, y in zip(a, b)], lo, self.den)
        n1 = _pmul(tuple(a), other.den)
        n2 = _pmul(tuple(b), self.den)
        n = [0] * max(len(n1), len(n2))
        for i, c in enumerate(n1):
            n[i] += c
        for i, c in enumerate(n2):
            n[i] += c
        return QScalar.make(n, lo, _pmul(self.den, other.den))

    def __neg__(self) -> "QScalar":
        if not self.num:
            return self
        return QScalar(tuple(-c for c in self.num), self.shift, self.den)

    def __sub__(self, other: "QScalar") -> "QScalar":
        return self + (-other)

    def __mul__(self, other: "QScalar") -> "QScalar":
        if not isinstance(other, QScalar):
            return NotImplemented
        if not self.num or not other.num:
            return _ZERO
        if self.den == (1,) and other.den == (1,):
            return QScalar.make(
                _pmul(self.num, other.num), self.shift + other.shift, (1,)
            )
        return QScalar.make(
            _pmul(self.num, other.num),
            self.shift + other.shift,
            _pmul(self.den, other.den),
        )

    def inv(self) -> "QScalar":
        if not self.num:
            raise QFieldError("inversion of zero")
        # swap: den has lowest exponent 0 already; the numerator's shift flips
        return QScalar.make(self.den, -self.shift, self.num, 0)

    def __truediv__(self, other: "QScalar") -> "QScalar":
        return self * other.inv()

    def __pow__(self, k: int) -> "QScalar":
        if k == 0:
            return _ONE
        base = self if k > 0 else self.inv()
        out = _ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- comparison / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QScalar):
            return NotImplemented
        return (
            self.num == other.num
            and self.shift == other.shift
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.shift, self.den))

    # -- evaluation ------------------------------------------------------------

    def specialize(self, s0) -> Fraction:
        s0 = Fraction(s0)
        if s0 in (0, 1, -1):
            raise SpecializationError("s0 must avoid {0, 1, -1}")
        if not self.num:
            return Fraction(0)
        nv = Fraction(0)
        p = Fraction(1)
        for c in self.num:
            nv += c * p
            p *= s0
        dv = Fraction(0)
        p = Fraction(1)
        for c in self.den:
            dv += c * p
            p *= s0
        if dv == 0:
            raise SpecializationError("denominator vanishes at s0")
        return nv / dv * s0**self.shift

    # -- printing / parsing -----------------------------------------------------

    def __str__(self) -> str:
        if not self.num:
            return "0"
        ns = _poly_str(self.num, self.shift)
        if self.den == (1,):
            return ns
        return "(%s)/(%s)" % (ns, _poly_str(self.den, 0))

    def __repr__(self) -> str:
        return "QScalar(%s)" % self

    @staticmethod
    def parse(text: str) -> "QScalar":
        return _parse(text)


def _poly_str(coeffs: tuple[int, ...], shift: int) -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        e = i + shift
        if e == 0:
            t = str(abs(c))
        else:
            se = "s" if e == 1 else "s^%d" % e
            t = se if abs(c) == 1 else "%d*%s" % (abs(c), se)
        if not parts:
            parts.append(("-" if c < 0 else "") + t)
        else:
            parts.append(("-" if c < 0 else "+") + t)
    return "".join(parts)


_ZERO = QScalar((), 0, (1,))
_ONE = QScalar((1,), 0, (1,))
HALF = QScalar((1,), 0, (2,))


# ---------------------------------------------------------------------------
# spec-named operation surface


def qs_add(a: QScalar, b: QScalar) -> QScalar:
    return a + b


def qs_mul(a: QScalar, b: QScalar) -> QScalar:
    return a * b


def qs_inv(a: QScalar) -> QScalar:
    return a.inv()


def qs_qpow(k) -> QScalar:
    """q^k = s^(2k) for half-integer k."""
    e = Fraction(k) * 2
    if e.denominator != 1:
        raise QFieldError("2k must be an integer")
    return QScalar.s_power(int(e))


def qs_specialize(a: QScalar, s0) -> Fraction:
    return a.specialize(s0)


def omega(flavor: str, b: int) -> QScalar:
    """The normal-ordering constant: 0 at b=0, else the flavor-dependent ratio.

    omega("int", b) = (q^b + 1) / (2 (1 - q^b)) and omega("half", b) =
    q^(b/2) / (1 - q^b); both are antisymmetric in b.  The overall sign is
    pinned by the commutators of the quadratic oscillator action: brackets
    landing on diagonal torus generators must reproduce these constants
    exactly, which fixes the branch that makes the action a representation.
    """
    if b == 0:
        return _ZERO
    if flavor == "int":
        # (q^b + 1) / (2 (1 - q^b))
        num = [0] * (2 * abs(b) + 1)
        num[0] = -1
        num[-1] = -1
        den = [0] * (2 * abs(b) + 1)
        den[0] = -2
        den[-1] = 2
        r = QScalar.make(num, 0, den)
        return r if b > 0 else QScalar.make([-c for c in num], 0, den)
    if flavor == "half":
        # q^(b/2) / (1 - q^b) = -s^b / (s^(2b) - 1); antisymmetric in b
        den = [0] * (2 * abs(b) + 1)
        den[0] = -1
        den[-1] = 1
        if b > 0:
            return QScalar.make((-1,), b, den)
        return QScalar.make((1,), -b, den)
    raise ValueError("flavor must be 'int' or 'half'")


# ---------------------------------------------------------------------------
# literal parser:  expr := poly | poly "/" poly  with +,-,*,/,^, parens, s, rationals


class _Parser:
    def __init__(self, text: str):
        self.toks = self._lex(text)
        self.pos = 0

    @staticmethod
    def _lex(text: str):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("int", int(text[i:j])))
                i = j
            elif ch in "+-*/^()s":
                toks.append((ch, ch))
                i += 1
            else:
                raise QFieldError("bad character %r in scalar literal" % ch)
        toks.append(("end", None))
        return toks

    def peek(self):
        return self.toks[self.pos][0]

    def take(self, kind=None):
        k, v = self.toks[self.pos]
        if kind is not None and k != kind:
            raise QFieldError("expected %s, got %s" % (kind, k))
        self.pos += 1
        return v

    def parse(self) -> QScalar:
        v = self.expr()
        if self.peek() != "end":
            raise QFieldError("trailing input in scalar literal")
        return v

    def expr(self) -> QScalar:
        v = self.term()
        while self.peek() in "+-":
            op = self.take()
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self) -> QScalar:
        v = self.factor()
        while True:
            k = self.peek()
            if k == "*":
                self.take()
                v = v * self.factor()
            elif k == "/":
                self.take()
                v = v / self.factor()
            elif k in ("int", "s", "("):
                # juxtaposition like "2s"
                v = v * self.factor()
            else:
                return v

    def factor(self) -> QScalar:
        k = self.peek()
        if k == "-":
            self.take()
            return -self.factor()
        if k == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            e = self.take("int")
            return base ** (-e if neg else e)
        return base

    def atom(self) -> QScalar:
        k = self.peek()
        if k == "int":
            return QScalar.from_int(self.take())
        if k == "s":
            self.take()
            return QScalar.s_power(1)
        if k == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise QFieldError("unexpected token %s in scalar literal" % k)


def _parse(text: str) -> QScalar:
    return _Parser(text).parse()


ZERO = _ZERO
ONE = _ONE
