"""The quantum torus C_q[t0^{+-1}, t1^{+-1}] with twisted product and bar anti-involution.

Elements are sparse QScalar-linear combinations of monomials t0^a t1^b.  The
product twists by (t0^a t1^b)(t0^c t1^d) = q^{bc} t0^{a+c} t1^{b+d}, and
bar(t0^a t1^b) = q^{-ab} t0^a t1^{-b}.
"""

from __future__ import annotations

from .qfield import ONE, QScalar, qs_qpow


class TorusElement:
    """Finite C_q-combination of t0^a t1^b, keyed by (a, b)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], QScalar] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @staticmethod
    def monomial(a: int, b: int, coeff: QScalar = ONE) -> "TorusElement":
        return TorusElement({(int(a), int(b)): coeff})

    @staticmethod
    def unit() -> "TorusElement":
        return TorusElement({(0, 0): ONE})

    @staticmethod
    def zero() -> "TorusElement":
        return TorusElement()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TorusElement") -> "TorusElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            nv = v if w is None else w + v
            if nv.is_zero():
                out.pop(k, None)
            else:
                out[k] = nv
        return TorusElement(out)

    def __neg__(self) -> "TorusElement":
        return TorusElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def scale(self, c: QScalar) -> "TorusElement":
        if c.is_zero():
            return TorusElement()
        return TorusElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        out: dict[tuple[int, int], QScalar] = {}
        for (a, b), x in self.terms.items():
            for (c, d), y in other.terms.items():
                key = (a + c, b + d)
                v = x * y * qs_qpow(b * c)
                w = out.get(key)
                nv = v if w is None else w + v
                if nv.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = nv
        return TorusElement(out)

    def bar(self) -> "TorusElement":
        out: dict[tuple[int, int], QScalar] = {}
        for (a, b), x in self.terms.items():
            key = (a, -b)
            v = x * qs_qpow(-a * b)
            w = out.get(key)
            nv = v if w is None else w + v
            if nv.is_zero():
                out.pop(key, None)
            else:
                out[key] = nv
        return TorusElement(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            parts.append("%s*t0^%d*t1^%d" % (c, a, b))
        return "+".join(parts)

    def __repr__(self) -> str:
        return "TorusElement(%s)" % self

    def to_json(self):
        return [
            {"a": a, "b": b, "coeff": str(self.terms[(a, b)])}
            for (a, b) in sorted(self.terms)
        ]


def torus_mul(x: TorusElement, y: TorusElement) -> TorusElement:
    return x * y


def torus_bar(x: TorusElement) -> TorusElement:
    return x.bar()


def torus_add(x: TorusElement, y: TorusElement) -> TorusElement:
    return x + y


def torus_scale(c: QScalar, x: TorusElement) -> TorusElement:
    return x.scale(c)
