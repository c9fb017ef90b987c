"""Oscillator Fock modules and the quadratic boson action.

The level lattice is either the integers ("int" flavor) or the
half-integers ("half" flavor).  Modes psi_i(k), psibar_i(k) with
1 <= i <= N satisfy u(k) v(r) - v(r) u(k) = <u, v> delta_{k+r,0} with
<psibar_i, psi_j> = +delta_{ij} and <psi_j, psibar_i> = -delta_{ij};
all other pairs commute.  The Fock module is spanned by sorted
creation monomials applied to the vacuum, where a mode creates iff its
level is negative, or is zero for a psi mode in the int flavor.

Coefficients are QScalar throughout; every operation also accepts
s0-specialized vectors whose coefficients are Fraction, selected by
passing s0 to the constants.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .qfield import HALF, ONE, ZERO, QScalar, omega, qs_qpow, qs_specialize
from .algebras import AlgebraError, UnsupportedFlavorError, embed_generators, sp_decompose

PSI = 0
PSIBAR = 1

_SPECIES_NAMES = {PSI: "psi", PSIBAR: "psibar"}
_FLAVORS = ("int", "half")


class FockError(ValueError):
    """Invalid mode, flavor, or generator data for a Fock computation."""


@dataclass(frozen=True)
class FockKind:
    """Shape of a Fock module: N oscillator pairs over one level lattice."""

    N: int
    flavor: str

    def __post_init__(self):
        if self.N < 1:
            raise FockError("N must be positive, got %r" % (self.N,))
        if self.flavor not in _FLAVORS:
            raise FockError("flavor must be one of %r" % (_FLAVORS,))

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 2) if self.flavor == "int" else Fraction(0)


def mode(species: int, index: int, level) -> tuple:
    """A mode key (species, index, level) with the level as a Fraction."""
    if species not in (PSI, PSIBAR):
        raise FockError("species must be PSI or PSIBAR")
    return (species, index, Fraction(level))


def _check_mode(kind: FockKind, md) -> None:
    species, index, level = md
    if species not in (PSI, PSIBAR):
        raise FockError("species must be PSI or PSIBAR")
    if not 1 <= index <= kind.N:
        raise FockError("index %r out of range 1..%d" % (index, kind.N))
    level = Fraction(level)
    if kind.flavor == "int" and level.denominator != 1:
        raise FockError("level %s is not an integer" % (level,))
    if kind.flavor == "half" and level.denominator != 2:
        raise FockError("level %s is not a half-integer" % (level,))


def is_creation(md, flavor: str) -> bool:
    species, _, level = md
    return level < 0 or (level == 0 and species == PSI and flavor == "int")


def _contraction(u, w) -> int:
    """<u, w> delta_{k+r,0} for modes u, w; zero unless species differ."""
    su, iu, ku = u
    sw, iw, kw = w
    if iu != iw or ku + kw != 0:
        return 0
    if su == PSIBAR and sw == PSI:
        return 1
    if su == PSI and sw == PSIBAR:
        return -1
    return 0


# ----------------------------------------------------------- scalar plumbing
# Coefficients are either QScalar (symbolic) or Fraction (specialized at s0).


def _sc_is_zero(c) -> bool:
    if isinstance(c, QScalar):
        return c.is_zero()
    return c == 0


def _sc_add(x, y):
    return x + y


def _sc_int_mul(k: int, c):
    if isinstance(c, QScalar):
        return QScalar.from_int(k) * c
    return k * c


def _const(value: QScalar, s0):
    """A QScalar constant, specialized to a Fraction when s0 is given."""
    if s0 is None:
        return value
    return qs_specialize(value, s0)


def _sc_const_mul(value: QScalar, c, s0):
    if s0 is None:
        return value * c
    return qs_specialize(value, s0) * c


# ----------------------------------------------------------------- vectors


class FockVector:
    """Sparse vector over sorted creation monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if not _sc_is_zero(c):
                    clean[mono] = c
        self.terms = clean

    @staticmethod
    def zero() -> "FockVector":
        return FockVector()

    @staticmethod
    def vacuum(coeff=ONE) -> "FockVector":
        return FockVector({(): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            if mono in out:
                out[mono] = _sc_add(out[mono], c)
            else:
                out[mono] = c
        return FockVector(out)

    def __neg__(self) -> "FockVector":
        return FockVector({m: _sc_int_mul(-1, c) for m, c in self.terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        return FockVector({m: v * c for m, v in self.terms.items()})

    def scale_const(self, value: QScalar, s0=None) -> "FockVector":
        return FockVector(
            {m: _sc_const_mul(value, c, s0) for m, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            parts.append("%s*%s" % (self.terms[mono], format_monomial(mono)))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return "FockVector(%s)" % (self,)

    def to_json(self):
        out = []
        for mono in sorted(self.terms):
            out.append(
                {
                    "coeff": str(self.terms[mono]),
                    "modes": [
                        {
                            "species": _SPECIES_NAMES[s],
                            "index": i,
                            "level": str(k),
                        }
                        for (s, i, k) in mono
                    ],
                }
            )
        return out


def _insert(mono: tuple, md) -> tuple:
    return tuple(sorted(mono + (md,)))


def mode_apply(kind: FockKind, md, v: FockVector) -> FockVector:
    """Left multiplication by one mode."""
    _check_mode(kind, md)
    md = (md[0], md[1], Fraction(md[2]))
    out: dict = {}
    if is_creation(md, kind.flavor):
        for mono, c in v.terms.items():
            key = _insert(mono, md)
            out[key] = _sc_add(out[key], c) if key in out else c
        return FockVector(out)
    for mono, c in v.terms.items():
        for pos, other in enumerate(mono):
            pairing = _contraction(md, other)
            if pairing == 0:
                continue
            key = mono[:pos] + mono[pos + 1 :]
            piece = _sc_int_mul(pairing, c)
            out[key] = _sc_add(out[key], piece) if key in out else piece
    return FockVector(out)


def _pair_apply(kind: FockKind, u_md, w_md, v: FockVector, s0=None) -> FockVector:
    """Normal-ordered quadratic :u w: applied to v.

    The ordering rule keys on the level r of the second mode: plain
    order u(k) w(r) for r > 0, reversed for r < 0, and the half-sum
    (u w + w u) / 2 at r = 0.
    """
    r = w_md[2]
    if r > 0:
        return mode_apply(kind, u_md, mode_apply(kind, w_md, v))
    if r < 0:
        return mode_apply(kind, w_md, mode_apply(kind, u_md, v))
    uw = mode_apply(kind, u_md, mode_apply(kind, w_md, v))
    wu = mode_apply(kind, w_md, mode_apply(kind, u_md, v))
    return (uw + wu).scale_const(HALF, s0)


_RHO_SPECIES = {
    "f": (PSI, PSIBAR),
    "g": (PSI, PSI),
    "h": (PSIBAR, PSIBAR),
}


def _lattice_range(flavor: str, lo, hi):
    """Lattice points r with lo <= r <= hi."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    if flavor == "int":
        r = Fraction(math.ceil(lo))
    else:
        r = Fraction(1, 2) + math.ceil(lo - Fraction(1, 2))
    out = []
    while r <= hi:
        out.append(r)
        r += 1
    return out


def _support_candidates(kind: FockKind, spec, mono) -> list:
    """Candidate r values for one quadratic sum term on one monomial.

    Contains every r where both modes of :u(a-r) w(r): create, every r
    where an annihilation level negates a level present in the monomial,
    and r = 0 for the diagonal f family at a = 0 in the int flavor,
    whose half-sum produces a scalar.
    """
    fam, i, j, a, b = spec
    u_species, w_species = _RHO_SPECIES[fam]
    cands = set()
    if a < 0 or (a == 0 and kind.flavor == "int"):
        for r in _lattice_range(kind.flavor, Fraction(a), Fraction(0)):
            u_md = (u_species, i, Fraction(a) - r)
            w_md = (w_species, j, r)
            if is_creation(u_md, kind.flavor) and is_creation(w_md, kind.flavor):
                cands.add(r)
    for (s, idx, k) in set(mono):
        if idx == j and s != w_species:
            cands.add(-k)
        if idx == i and s != u_species:
            cands.add(Fraction(a) + k)
    if kind.flavor == "int" and fam == "f" and i == j and a == 0:
        cands.add(Fraction(0))
    return sorted(cands)


def rho_support(kind: FockKind, spec, mono) -> list:
    """The r values whose normal-ordered term acts nonzero on the monomial."""
    fam, i, j, a, b = spec
    u_species, w_species = _RHO_SPECIES[fam]
    single = FockVector({tuple(mono): ONE})
    out = []
    for r in _support_candidates(kind, spec, mono):
        u_md = (u_species, i, Fraction(a) - r)
        w_md = (w_species, j, r)
        if not _pair_apply(kind, u_md, w_md, single).is_zero():
            out.append(r)
    return out


def rho_apply(kind: FockKind, spec, v: FockVector, s0=None) -> FockVector:
    """Action of one quadratic generator (or the central element) on v.

    f_{ij}(a,b) acts by sum_r q^{-br} :psi_i(a-r) psibar_j(r): together
    with the constant -delta_{ij} delta_{a,0} omega(b); g uses psi psi,
    h uses psibar psibar, and the central element acts by -1.
    """
    if spec == ("c",):
        return v.scale_const(-ONE, s0)
    fam, i, j, a, b = spec
    if fam not in _RHO_SPECIES:
        raise FockError("unknown quadratic family %r" % (fam,))
    if not (1 <= i <= kind.N and 1 <= j <= kind.N):
        raise FockError("indices (%r, %r) out of range 1..%d" % (i, j, kind.N))
    u_species, w_species = _RHO_SPECIES[fam]
    out = FockVector.zero()
    for mono, c in v.terms.items():
        single = FockVector({mono: c})
        for r in _support_candidates(kind, spec, mono):
            u_md = (u_species, i, Fraction(a) - r)
            w_md = (w_species, j, r)
            piece = _pair_apply(kind, u_md, w_md, single, s0)
            if b * r != 0:
                piece = piece.scale_const(qs_qpow(-b * r), s0)
            out = out + piece
    if fam == "f" and i == j and a == 0 and b != 0:
        out = out + v.scale_const(-omega(kind.flavor, b), s0)
    return out


def rho_element_apply(kind: FockKind, x, v: FockVector, s0=None) -> FockVector:
    """Action of a full sp element, decomposed over canonical generators."""
    terms, central = sp_decompose(x)
    out = FockVector.zero()
    for coeff, spec in terms:
        out = out + rho_apply(kind, spec, v, s0).scale_const(coeff, s0)
    if not central.is_zero():
        out = out + v.scale_const(-central, s0)
    return out


def embedded_apply(pair: str, side: str, m: int, n: int, flavor: str, spec, v: FockVector, s0=None) -> FockVector:
    """Action of a dual-pair source generator through the big oscillator.

    The central element of the toroidal member acts by -n.  For gl_gl in
    the int flavor the finite diagonal action carries an extra -m/2 shift.
    """
    if flavor not in _FLAVORS:
        raise FockError("flavor must be one of %r" % (_FLAVORS,))
    if pair == "sp_so" and flavor == "int":
        raise UnsupportedFlavorError("sp_so supports only the half-integer flavor")
    kind = FockKind(m * n, flavor)
    out = FockVector.zero()
    for coeff, amb_spec in embed_generators(pair, side, m, n, spec):
        out = out + rho_apply(kind, amb_spec, v, s0).scale_const(coeff, s0)
    if (
        pair == "gl_gl"
        and side == "finite"
        and flavor == "int"
        and spec != ("c",)
        and spec[1] == spec[2]
    ):
        shift = QScalar.from_fraction(Fraction(-m, 2))
        out = out + v.scale_const(shift, s0)
    return out


# ----------------------------------------------------------------- grading


def monomial_energy(mono) -> Fraction:
    return sum((-k for (_, _, k) in mono), Fraction(0))


def monomial_zero_modes(mono) -> int:
    return sum(1 for (_, _, k) in mono if k == 0)


@dataclass(frozen=True)
class EnergyReport:
    homogeneous: bool
    energy: object
    length: int
    zero_modes: int
    components: dict


def energy(v: FockVector) -> EnergyReport:
    """Per-energy components of v, with length and zero-mode statistics."""
    components: dict = {}
    for mono, c in v.terms.items():
        e = monomial_energy(mono)
        components.setdefault(e, {})[mono] = c
    components = {e: FockVector(t) for e, t in components.items()}
    energies = sorted(components)
    homogeneous = len(energies) <= 1
    if len(energies) == 1:
        value = energies[0]
    elif not energies:
        value = Fraction(0)
    else:
        value = None
    length = max((len(mono) for mono in v.terms), default=0)
    zero_modes = max((monomial_zero_modes(mono) for mono in v.terms), default=0)
    return EnergyReport(homogeneous, value, length, zero_modes, components)


# ----------------------------------------------------------------- literals


def format_mode(md) -> str:
    s, i, k = md
    return "%s[%d](%s)" % (_SPECIES_NAMES[s], i, k)


def format_monomial(mono) -> str:
    if not mono:
        return "|0>"
    return "*".join(format_mode(md) for md in mono) + "|0>"


_MODE_RE = re.compile(r"(psi|psibar)\[(\d+)\]\((-?\d+(?:/\d+)?)\)")


def parse_monomial(text: str) -> tuple:
    body = text.strip()
    if not body.endswith("|0>"):
        raise FockError("monomial literal must end with |0>")
    body = body[: -len("|0>")].rstrip("*")
    if not body:
        return ()
    modes = []
    for part in body.split("*"):
        mt = _MODE_RE.fullmatch(part.strip())
        if mt is None:
            raise FockError("bad mode literal %r" % (part,))
        species = PSI if mt.group(1) == "psi" else PSIBAR
        modes.append((species, int(mt.group(2)), Fraction(mt.group(3))))
    return tuple(sorted(modes))
