"""Matrix Lie algebras over the quantum torus and their central extensions.

Elements of gl_N(C_q), so_N(C_q) and sp_{2N}(C_q) are stored inside the
ambient gl as sparse matrices with TorusElement entries, together with a
QScalar coefficient of the central element c.  The bracket is the matrix
commutator plus the 2-cocycle that pairs E_{i,j}t0^a t1^b against
E_{j,i}t0^{-a}t1^{-b} with weight (a/2)q^{-ab}.

The so/sp defining relations (J*A + bar(A)^t*J = 0 for the antidiagonal or
split skew form J) are checked by `membership`, not encoded structurally.

Generator specs are plain tuples:

    ("E", i, j, a, b)   E_{i,j}t0^a t1^b in gl_m
    ("e", i, j, a, b)   e_{i,j}(a,b) in so_m
    ("f"|"g"|"h", i, j, a, b)   the sp_{2m} families
    ("c",)              the central element

`embed_generators` realizes the three dual pairs inside sp_{2N}(C_q) with
N = m*n via the interleaving index pi(i, r) = i + (r-1)m, lifting the
toroidal member's central element to n copies of the ambient one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .qfield import HALF, ONE, QScalar, ZERO, qs_qpow
from .torus import TorusElement


class AlgebraError(ValueError):
    """Bad indices, malformed generator specs, or mismatched ambient sizes."""


class UnsupportedFlavorError(AlgebraError):
    """The requested triangular structure does not exist for this flavor."""


_FAMILY_KINDS = {"gl": ("E",), "so": ("e",), "sp": ("f", "g", "h")}
_PAIRS = ("gl_gl", "so_sp", "sp_so")
_FLAVORS = ("int", "half")


def _acc(entries: dict, key, val) -> None:
    cur = entries.get(key)
    new = val if cur is None else cur + val
    if new:
        entries[key] = new
    else:
        entries.pop(key, None)


class ToroidalElement:
    """Sparse matrix over the quantum torus plus a central coefficient."""

    __slots__ = ("size", "entries", "central")

    def __init__(self, size: int, entries=None, central: QScalar = ZERO):
        self.size = int(size)
        if self.size < 1:
            raise AlgebraError("ambient size must be positive, got %d" % size)
        clean: dict[tuple[int, int], TorusElement] = {}
        for (i, j), v in (entries or {}).items():
            if not (1 <= i <= self.size and 1 <= j <= self.size):
                raise AlgebraError(
                    "entry (%d,%d) outside ambient size %d" % (i, j, self.size)
                )
            if v:
                clean[(i, j)] = v
        self.entries = clean
        self.central = central

    def is_zero(self) -> bool:
        return not self.entries and self.central.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "ToroidalElement") -> "ToroidalElement":
        if self.size != other.size:
            raise AlgebraError(
                "mismatched ambient sizes %d and %d" % (self.size, other.size)
            )
        out = dict(self.entries)
        for k, v in other.entries.items():
            _acc(out, k, v)
        return ToroidalElement(self.size, out, self.central + other.central)

    def __neg__(self) -> "ToroidalElement":
        return ToroidalElement(
            self.size, {k: -v for k, v in self.entries.items()}, -self.central
        )

    def __sub__(self, other: "ToroidalElement") -> "ToroidalElement":
        return self + (-other)

    def scale(self, c: QScalar) -> "ToroidalElement":
        if c.is_zero():
            return ToroidalElement(self.size)
        return ToroidalElement(
            self.size, {k: v.scale(c) for k, v in self.entries.items()},
            self.central * c,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ToroidalElement):
            return NotImplemented
        return (
            self.size == other.size
            and self.entries == other.entries
            and self.central == other.central
        )

    def __str__(self) -> str:
        parts = []
        for (i, j) in sorted(self.entries):
            parts.append("E[%d,%d]*(%s)" % (i, j, self.entries[(i, j)]))
        if not self.central.is_zero():
            parts.append("(%s)*c" % self.central)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return "ToroidalElement(size=%d: %s)" % (self.size, self)

    def to_json(self):
        return {
            "size": self.size,
            "entries": [
                {"i": i, "j": j, "torus": self.entries[(i, j)].to_json()}
                for (i, j) in sorted(self.entries)
            ],
            "central": str(self.central),
        }


def zero_element(size: int) -> ToroidalElement:
    return ToroidalElement(size)


def central_element(size: int, coeff: QScalar = ONE) -> ToroidalElement:
    return ToroidalElement(size, {}, coeff)


def matrix_unit(size, i, j, a=0, b=0, coeff: QScalar = ONE) -> ToroidalElement:
    """E_{i,j} t0^a t1^b scaled by coeff, inside the ambient gl_size."""
    return ToroidalElement(size, {(i, j): TorusElement.monomial(a, b, coeff)})


def family_ambient(family: str, m: int) -> int:
    """Ambient matrix size of gl_m, so_m, or sp_{2m}."""
    if family not in _FAMILY_KINDS:
        raise AlgebraError("unknown family %r" % (family,))
    return 2 * m if family == "sp" else m


def gen(kind: str, i: int, j: int, a: int, b: int, m: int) -> ToroidalElement:
    """Generator of gl_m (kind E), so_m (kind e), or sp_{2m} (kinds f, g, h).

    e_{i,j}(a,b) = E_{i,j}x - E_{m+1-j,m+1-i}bar(x)
    f_{i,j}(a,b) = E_{i,j}x - E_{m+j,m+i}bar(x)
    g_{i,j}(a,b) = E_{i,m+j}x + E_{j,m+i}bar(x)
    h_{i,j}(a,b) = -E_{m+i,j}x - E_{m+j,i}bar(x)

    with x = t0^a t1^b.  Coinciding positions are accumulated, so for
    example g_{i,i}(0,0) = 2 E_{i,m+i} and e_{i,m+1-i}(a,0) = 0.
    """
    if m < 1:
        raise AlgebraError("size parameter must be positive, got %d" % m)
    if not (1 <= i <= m and 1 <= j <= m):
        raise AlgebraError("index (%d,%d) out of range 1..%d" % (i, j, m))
    x = TorusElement.monomial(a, b)
    xbar = x.bar()
    d: dict[tuple[int, int], TorusElement] = {}
    if kind == "E":
        _acc(d, (i, j), x)
        return ToroidalElement(m, d)
    if kind == "e":
        _acc(d, (i, j), x)
        _acc(d, (m + 1 - j, m + 1 - i), -xbar)
        return ToroidalElement(m, d)
    if kind == "f":
        _acc(d, (i, j), x)
        _acc(d, (m + j, m + i), -xbar)
    elif kind == "g":
        _acc(d, (i, m + j), x)
        _acc(d, (j, m + i), xbar)
    elif kind == "h":
        _acc(d, (m + i, j), -x)
        _acc(d, (m + j, i), -xbar)
    else:
        raise AlgebraError("unknown generator kind %r" % (kind,))
    return ToroidalElement(2 * m, d)


def _unpack_spec(spec):
    if not isinstance(spec, tuple) or len(spec) != 5:
        raise AlgebraError("malformed generator spec %r" % (spec,))
    kind, i, j, a, b = spec
    return kind, int(i), int(j), int(a), int(b)


def gen_from_spec(family: str, m: int, spec) -> ToroidalElement:
    """Realize a generator spec, including ("c",), in the family's ambient."""
    if spec == ("c",):
        return central_element(family_ambient(family, m))
    kind, i, j, a, b = _unpack_spec(spec)
    if kind not in _FAMILY_KINDS.get(family, ()):
        raise AlgebraError("kind %r does not belong to family %r" % (kind, family))
    return gen(kind, i, j, a, b, m)


def _cocycle(x: ToroidalElement, y: ToroidalElement) -> QScalar:
    total = ZERO
    for (i, j), u in x.entries.items():
        v = y.entries.get((j, i))
        if v is None:
            continue
        for (a, b), cu in u.terms.items():
            if a == 0:
                continue
            cv = v.terms.get((-a, -b))
            if cv is None:
                continue
            w = QScalar.from_fraction(Fraction(a, 2)) * qs_qpow(-a * b)
            total = total + cu * cv * w
    return total


def bracket(x: ToroidalElement, y: ToroidalElement) -> ToroidalElement:
    """Matrix commutator plus the central 2-cocycle; c itself is central."""
    if x.size != y.size:
        raise AlgebraError(
            "mismatched ambient sizes %d and %d" % (x.size, y.size)
        )
    yrows: dict[int, list] = {}
    for (k, j), v in y.entries.items():
        yrows.setdefault(k, []).append((j, v))
    xrows: dict[int, list] = {}
    for (k, j), v in x.entries.items():
        xrows.setdefault(k, []).append((j, v))
    ent: dict[tuple[int, int], TorusElement] = {}
    for (i, k), u in x.entries.items():
        for j, v in yrows.get(k, ()):
            _acc(ent, (i, j), u * v)
    for (i, k), u in y.entries.items():
        for j, v in xrows.get(k, ()):
            _acc(ent, (i, j), -(u * v))
    return ToroidalElement(x.size, ent, _cocycle(x, y))


def involution_form(tag: str, size: int) -> dict[tuple[int, int], int]:
    """Matrix of the form J defining so (antidiagonal) or sp (split skew)."""
    if tag == "so":
        return {(i, size + 1 - i): 1 for i in range(1, size + 1)}
    if tag == "sp":
        if size % 2:
            raise AlgebraError("sp ambient size must be even, got %d" % size)
        half = size // 2
        d = {(i, half + i): 1 for i in range(1, half + 1)}
        d.update({(half + i, i): -1 for i in range(1, half + 1)})
        return d
    raise AlgebraError("unknown membership tag %r" % (tag,))


def membership(x: ToroidalElement, tag: str) -> bool:
    """True iff J*A + bar(A)^t*J = 0 for the tag's form J."""
    form = involution_form(tag, x.size)
    resid: dict[tuple[int, int], TorusElement] = {}
    for (r, k), sgn in form.items():
        for (k2, c), v in x.entries.items():
            if k2 == k:
                _acc(resid, (r, c), v if sgn == 1 else -v)
    for (k, r), v in x.entries.items():
        vb = v.bar()
        for (k2, c), sgn in form.items():
            if k2 == k:
                _acc(resid, (r, c), vb if sgn == 1 else -vb)
    return not resid


def pi_index(i: int, r: int, m: int) -> int:
    """Interleaving index i + (r-1)m shared by the three dual-pair embeddings."""
    return i + (r - 1) * m


def _check_range(i, j, hi):
    if not (1 <= i <= hi and 1 <= j <= hi):
        raise AlgebraError("index (%d,%d) out of range 1..%d" % (i, j, hi))


def embed_generators(pair: str, side: str, m: int, n: int, spec):
    """Image of a source generator as a list of (coeff, spec) in sp_{2N}(C_q).

    N = m*n.  The finite member (gl_gl: gl_n, so_sp: so_n, sp_so: sp_{2n})
    maps through constant matrices; the toroidal member (gl_m(C_q),
    sp_{2m}(C_q), so_m(C_q)) carries the torus degrees, and its central
    element maps to n times the ambient central element.
    """
    if pair not in _PAIRS:
        raise AlgebraError("unknown pair %r" % (pair,))
    if side not in ("finite", "toroidal"):
        raise AlgebraError("unknown side %r" % (side,))
    if m < 1 or n < 1:
        raise AlgebraError("pair parameters must be positive, got m=%d n=%d" % (m, n))
    if spec == ("c",):
        if side != "toroidal":
            raise AlgebraError("the finite member has no central element")
        return [(QScalar.from_int(n), ("c",))]
    if isinstance(spec, tuple) and len(spec) == 3:
        spec = spec + (0, 0)
    kind, i, j, a, b = _unpack_spec(spec)

    if side == "finite":
        if (a, b) != (0, 0):
            raise AlgebraError("finite-side generators carry no torus degrees")
        _check_range(i, j, n)
        out = []
        if pair == "gl_gl":
            if kind != "E":
                raise AlgebraError("gl_gl finite side uses kind E, got %r" % kind)
            for k in range(1, m + 1):
                out.append((ONE, ("f", pi_index(k, i, m), pi_index(k, j, m), 0, 0)))
        elif pair == "so_sp":
            if kind != "e":
                raise AlgebraError("so_sp finite side uses kind e, got %r" % kind)
            for k in range(1, m + 1):
                out.append((ONE, ("f", pi_index(k, i, m), pi_index(k, j, m), 0, 0)))
                out.append(
                    (-ONE, ("f", pi_index(k, n + 1 - j, m), pi_index(k, n + 1 - i, m), 0, 0))
                )
        else:
            if kind == "f":
                for k in range(1, m + 1):
                    out.append((ONE, ("f", pi_index(k, i, m), pi_index(k, j, m), 0, 0)))
            elif kind == "g":
                for k in range(1, m + 1):
                    out.append((ONE, ("g", pi_index(k, i, m), pi_index(m + 1 - k, j, m), 0, 0)))
            elif kind == "h":
                for k in range(1, m + 1):
                    out.append((ONE, ("h", pi_index(k, i, m), pi_index(m + 1 - k, j, m), 0, 0)))
            else:
                raise AlgebraError("sp_so finite side uses kinds f/g/h, got %r" % kind)
        return out

    _check_range(i, j, m)
    out = []
    if pair == "gl_gl":
        if kind != "E":
            raise AlgebraError("gl_gl toroidal side uses kind E, got %r" % kind)
        for k in range(1, n + 1):
            out.append((ONE, ("f", pi_index(i, k, m), pi_index(j, k, m), a, b)))
    elif pair == "so_sp":
        if kind == "f":
            for k in range(1, n + 1):
                out.append((ONE, ("f", pi_index(i, k, m), pi_index(j, k, m), a, b)))
        elif kind == "g":
            for k in range(1, n + 1):
                out.append((ONE, ("g", pi_index(i, k, m), pi_index(j, n + 1 - k, m), a, b)))
        elif kind == "h":
            for k in range(1, n + 1):
                out.append((ONE, ("h", pi_index(i, k, m), pi_index(j, n + 1 - k, m), a, b)))
        else:
            raise AlgebraError("so_sp toroidal side uses kinds f/g/h, got %r" % kind)
    else:
        if kind != "e":
            raise AlgebraError("sp_so toroidal side uses kind e, got %r" % kind)
        corr = -qs_qpow(-a * b)
        for k in range(1, n + 1):
            out.append((ONE, ("f", pi_index(i, k, m), pi_index(j, k, m), a, b)))
            out.append(
                (corr, ("f", pi_index(m + 1 - j, k, m), pi_index(m + 1 - i, k, m), a, -b))
            )
    return out


def embed(pair: str, side: str, m: int, n: int, spec) -> ToroidalElement:
    """Image of a source generator as an explicit sp_{2N}(C_q) element."""
    big = m * n
    out = zero_element(2 * big)
    for coeff, g in embed_generators(pair, side, m, n, spec):
        if g == ("c",):
            out = out + central_element(2 * big, coeff)
        else:
            kind, u, v, a, b = g
            out = out + gen(kind, u, v, a, b, big).scale(coeff)
    return out


def decompose_element(family: str, m: int, x: ToroidalElement):
    """Rewrite an element as (terms, central) over canonical generator specs.

    Canonical keys: gl uses every (i,j); so uses the lexicographically
    smaller of (i,j) and its mirror (m+1-j, m+1-i), with b >= 1 on the
    self-mirrored antidiagonal; sp uses every (i,j) for f and i <= j for
    g and h, with b >= 0 when i = j.  Raises AlgebraError when x does not
    lie in the family (wrong ambient size or failed defining relation).
    """
    if x.size != family_ambient(family, m):
        raise AlgebraError(
            "ambient size %d does not match %s with parameter %d"
            % (x.size, family, m)
        )
    terms: list = []
    if family == "gl":
        for (i, j) in sorted(x.entries):
            v = x.entries[(i, j)]
            for (a, b) in sorted(v.terms):
                terms.append((v.terms[(a, b)], ("E", i, j, a, b)))
        return terms, x.central
    if family == "so":
        if not membership(x, "so"):
            raise AlgebraError("element fails the so defining relation")
        for (i, j) in sorted(x.entries):
            mirror = (m + 1 - j, m + 1 - i)
            if (i, j) > mirror:
                continue
            v = x.entries[(i, j)]
            for (a, b) in sorted(v.terms):
                if (i, j) == mirror and b <= 0:
                    continue
                terms.append((v.terms[(a, b)], ("e", i, j, a, b)))
    else:
        if family != "sp":
            raise AlgebraError("unknown family %r" % (family,))
        if not membership(x, "sp"):
            raise AlgebraError("element fails the sp defining relation")
        for (r, c) in sorted(x.entries):
            v = x.entries[(r, c)]
            if r <= m and c <= m:
                for (a, b) in sorted(v.terms):
                    terms.append((v.terms[(a, b)], ("f", r, c, a, b)))
            elif r <= m < c:
                i, j = r, c - m
                if i > j:
                    continue
                for (a, b) in sorted(v.terms):
                    if i == j:
                        if b < 0:
                            continue
                        coeff = v.terms[(a, b)] * HALF if b == 0 else v.terms[(a, b)]
                        terms.append((coeff, ("g", i, i, a, b)))
                    else:
                        terms.append((v.terms[(a, b)], ("g", i, j, a, b)))
            elif c <= m < r:
                i, j = r - m, c
                if i > j:
                    continue
                for (a, b) in sorted(v.terms):
                    if i == j:
                        if b < 0:
                            continue
                        coeff = v.terms[(a, b)] * HALF if b == 0 else v.terms[(a, b)]
                        terms.append((-coeff, ("h", i, i, a, b)))
                    else:
                        terms.append((-v.terms[(a, b)], ("h", i, j, a, b)))
    recon = central_element(x.size, x.central)
    for coeff, spec in terms:
        recon = recon + gen_from_spec(family, m, spec).scale(coeff)
    if not recon == x:
        raise AlgebraError("decomposition failed to reconstruct the element")
    return terms, x.central


def sp_decompose(x: ToroidalElement):
    """Decompose an sp element over the canonical f/g/h generator keys."""
    if x.size % 2:
        raise AlgebraError("sp ambient size must be even, got %d" % x.size)
    return decompose_element("sp", x.size // 2, x)


def embed_element(pair: str, side: str, m: int, n: int, x: ToroidalElement) -> ToroidalElement:
    """Extend the generator embedding linearly to a full source element."""
    family, param = source_algebra(pair, side, m, n)
    terms, central = decompose_element(family, param, x)
    big = m * n
    out = zero_element(2 * big)
    for coeff, spec in terms:
        out = out + embed(pair, side, m, n, spec).scale(coeff)
    if not central.is_zero():
        out = out + central_element(2 * big, central * QScalar.from_int(n))
    return out


def source_algebra(pair: str, side: str, m: int, n: int):
    """(family, size parameter) of a dual-pair member's source algebra."""
    if pair not in _PAIRS:
        raise AlgebraError("unknown pair %r" % (pair,))
    if side == "finite":
        return {"gl_gl": ("gl", n), "so_sp": ("so", n), "sp_so": ("sp", n)}[pair]
    if side == "toroidal":
        return {"gl_gl": ("gl", m), "so_sp": ("sp", m), "sp_so": ("so", m)}[pair]
    raise AlgebraError("unknown side %r" % (side,))


def cocycle_scale(pair: str, n: int) -> QScalar:
    """Factor relating bracket cocycles across the toroidal-side embedding.

    For toroidal-side elements x, y the central part of [embed(x), embed(y)]
    equals this factor times the central part of [x, y] in the source
    ambient.  Every embedded f/g/h image doubles each source matrix unit
    across the n interleaved blocks, giving 2n, except for so_sp whose sp
    source is itself built from doubled units, giving n.  Module actions use
    the plain n lift of the central element instead (embed_generators); the
    gap is absorbed by the normal-ordering constants of the oscillator
    action.
    """
    if pair not in _PAIRS:
        raise AlgebraError("unknown pair %r" % (pair,))
    return QScalar.from_int(n if pair == "so_sp" else 2 * n)


def classify(family: str, flavor: str, spec) -> str:
    """Triangular class (plus, zero, minus) of a hat-algebra generator.

    The order is the one induced by the flavor's simple root base: positive
    t0-degree always raises, and at t0-degree zero the finite root decides,
    with the g/h families swapping roles between the two flavors.
    """
    if flavor not in _FLAVORS:
        raise AlgebraError("unknown flavor %r" % (flavor,))
    if family not in _FAMILY_KINDS:
        raise AlgebraError("unknown family %r" % (family,))
    if family == "so" and flavor == "int":
        raise UnsupportedFlavorError("so supports only the half-integer flavor")
    if spec == ("c",):
        return "zero"
    kind, i, j, a, b = _unpack_spec(spec)
    if kind not in _FAMILY_KINDS[family]:
        raise AlgebraError("kind %r does not belong to family %r" % (kind, family))
    if a > 0:
        return "plus"
    if a < 0:
        return "minus"
    if kind in ("E", "e", "f"):
        if i < j:
            return "plus"
        if i > j:
            return "minus"
        return "zero"
    if kind == "g":
        return "plus" if flavor == "half" else "minus"
    return "plus" if flavor == "int" else "minus"


@dataclass(frozen=True)
class GradedLabel:
    """Finite root in the eps coordinates together with the t0-degree."""

    root: tuple[int, ...]
    t0_degree: int

    def __add__(self, other: "GradedLabel") -> "GradedLabel":
        if len(self.root) != len(other.root):
            raise AlgebraError("mismatched root ranks")
        return GradedLabel(
            tuple(u + v for u, v in zip(self.root, other.root)),
            self.t0_degree + other.t0_degree,
        )


def family_rank(family: str, m: int) -> int:
    """Number of eps coordinates: m for gl_m and sp_{2m}, floor(m/2) for so_m."""
    if family not in _FAMILY_KINDS:
        raise AlgebraError("unknown family %r" % (family,))
    return m // 2 if family == "so" else m


def ambient_weight(family: str, m: int, r: int):
    """eps-weight of ambient row/column index r, as a coefficient list."""
    rank = family_rank(family, m)
    v = [0] * rank
    if family == "gl":
        v[r - 1] = 1
    elif family == "sp":
        if r <= m:
            v[r - 1] = 1
        else:
            v[r - m - 1] = -1
    else:
        if r <= m // 2:
            v[r - 1] = 1
        elif m % 2 == 1 and r == (m + 1) // 2:
            pass
        else:
            v[m - r] = -1
    return v


def graded_label(family: str, m: int, spec) -> GradedLabel:
    """Root-and-degree label of a generator under the canonical Z-grading."""
    rank = family_rank(family, m)
    if spec == ("c",):
        return GradedLabel((0,) * rank, 0)
    kind, i, j, a, b = _unpack_spec(spec)
    if kind not in _FAMILY_KINDS[family]:
        raise AlgebraError("kind %r does not belong to family %r" % (kind, family))
    _check_range(i, j, m)
    wi = ambient_weight(family, m, i)
    wj = ambient_weight(family, m, j)
    if kind in ("E", "e", "f"):
        root = tuple(u - v for u, v in zip(wi, wj))
    elif kind == "g":
        root = tuple(u + v for u, v in zip(wi, wj))
    else:
        root = tuple(-u - v for u, v in zip(wi, wj))
    return GradedLabel(root, a)


def element_labels(family: str, m: int, x: ToroidalElement):
    """Set of GradedLabels carried by the entries (and central part) of x."""
    rank = family_rank(family, m)
    if x.size != family_ambient(family, m):
        raise AlgebraError(
            "ambient size %d does not match %s with parameter %d"
            % (x.size, family, m)
        )
    labels = set()
    for (r, c), v in x.entries.items():
        wr = ambient_weight(family, m, r)
        wc = ambient_weight(family, m, c)
        root = tuple(u - w for u, w in zip(wr, wc))
        for (a, b) in v.terms:
            labels.add(GradedLabel(root, a))
    if not x.central.is_zero():
        labels.add(GradedLabel((0,) * rank, 0))
    return labels


def simple_roots(family: str, m: int, flavor: str):
    """Simple root base of the flavor's triangular order, in eps coordinates."""
    if flavor not in _FLAVORS:
        raise AlgebraError("unknown flavor %r" % (flavor,))
    rank = family_rank(family, m)

    def diff(i):
        v = [0] * rank
        v[i - 1] += 1
        v[i] -= 1
        return tuple(v)

    def unit(i, scale=1):
        v = [0] * rank
        v[i - 1] = scale
        return tuple(v)

    if family == "gl":
        return [diff(i) for i in range(1, rank)]
    if family == "sp":
        diffs = [diff(i) for i in range(1, rank)]
        if flavor == "half":
            return diffs + [unit(rank, 2)]
        return [unit(1, -2)] + diffs
    if family == "so":
        if flavor != "half":
            raise UnsupportedFlavorError("so supports only the half-integer flavor")
        diffs = [diff(i) for i in range(1, rank)]
        if rank == 0:
            return []
        if m % 2 == 0:
            return diffs + [unit(rank, 2)]
        return diffs + [unit(rank, 1)]
    raise AlgebraError("unknown family %r" % (family,))


def canonical_genspecs(family: str, m: int, a_max: int, b_max: int,
                       include_central: bool = False):
    """Canonical generator keys with |a| <= a_max and |b| <= b_max.

    Redundant keys are skipped: so keeps the lexicographically smaller of
    (i,j) and its mirror, with b >= 1 on the self-mirrored antidiagonal;
    sp keeps i <= j for g and h, with b >= 0 when i = j.
    """
    if family not in _FAMILY_KINDS:
        raise AlgebraError("unknown family %r" % (family,))
    arange = range(-a_max, a_max + 1)
    brange = range(-b_max, b_max + 1)
    out = []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if family == "gl":
                out.extend(("E", i, j, a, b) for a in arange for b in brange)
            elif family == "so":
                mirror = (m + 1 - j, m + 1 - i)
                if (i, j) > mirror:
                    continue
                if (i, j) == mirror:
                    out.extend(
                        ("e", i, j, a, b)
                        for a in arange for b in range(1, b_max + 1)
                    )
                else:
                    out.extend(("e", i, j, a, b) for a in arange for b in brange)
            else:
                out.extend(("f", i, j, a, b) for a in arange for b in brange)
                if i < j:
                    out.extend(("g", i, j, a, b) for a in arange for b in brange)
                    out.extend(("h", i, j, a, b) for a in arange for b in brange)
                elif i == j:
                    out.extend(
                        ("g", i, j, a, b)
                        for a in arange for b in range(0, b_max + 1)
                    )
                    out.extend(
                        ("h", i, j, a, b)
                        for a in arange for b in range(0, b_max + 1)
                    )
    if include_central:
        out.append(("c",))
    return out


_GEN_RE = re.compile(
    r"^([Eefgh])\[(-?\d+),(-?\d+)\]\((-?\d+),(-?\d+)\)$"
)


def format_genspec(spec) -> str:
    """Literal form of a generator spec, like f[1,2](1,-1) or c."""
    if spec == ("c",):
        return "c"
    kind, i, j, a, b = _unpack_spec(spec)
    return "%s[%d,%d](%d,%d)" % (kind, i, j, a, b)


def parse_genspec(text: str):
    t = text.strip()
    if t == "c":
        return ("c",)
    mo = _GEN_RE.match(t)
    if not mo:
        raise AlgebraError("cannot parse generator literal %r" % (text,))
    return (
        mo.group(1),
        int(mo.group(2)),
        int(mo.group(3)),
        int(mo.group(4)),
        int(mo.group(5)),
    )
