"""Joint highest-weight vectors for the dual-pair actions on Fock modules.

Single-subscript modes phi^k_a and phibar^k_a relabel the oscillators by

    phi^k_{(r + 1/2 - eps)m - i + 1/2 - eps}    = psi_i^k(r)
    phibar^k_{(r - 1/2 + eps)m + i - 1/2 - eps} = psibar_i^k(r)

for 1 <= i <= m, with eps = 1/2 in the int flavor and 0 in the half
flavor.  The subscript a then runs over all integers (int) or all
half-integers (half), and a mode creates exactly when a < 0.  Two phi
modes always commute, as do two phibar modes; a phibar against a phi
commutes unless they share a superscript and the subscripts sum to
-2 eps.

Determinants in these modes produce the joint highest-weight vectors:
family A uses a square block of phi entries, family Abar a block of
phibar entries, family B mixes phi columns with phibar columns whose
superscripts run downward, and family Bbar (even n only) swaps the two
middle superscripts inside row n/2 of B.  build_hwv assembles the labeled vectors as
products of such determinants applied to the vacuum, eta_eval returns
the exact Cartan eigenvalue of the centrally extended diagonal
generators on them, and verify_hwv replays every defining
highest-weight condition inside a truncation window.  run_lemma
mechanically checks the commutation identities between the quadratic
sums and the determinants, branch by branch.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .qfield import ONE, QScalar, ZERO, omega, qs_qpow
from .algebras import (
    UnsupportedFlavorError,
    canonical_genspecs,
    classify,
    format_genspec,
    pi_index,
)
from .fock import (
    PSI,
    PSIBAR,
    FockKind,
    FockVector,
    embedded_apply,
    is_creation,
    mode_apply,
)
from .weights import (
    WeightLabel,
    bar_label,
    depth,
    group_element_apply,
    monomial_weight,
    o_label_partition,
)

_FLAVORS = ("int", "half")
_PAIRS = ("gl_gl", "so_sp", "sp_so")
_PAIR_GROUP = {"gl_gl": "GL", "so_sp": "O", "sp_so": "Sp"}
_PAIR_FAMILY = {"gl_gl": "gl", "so_sp": "sp", "sp_so": "so"}
_PAIR_CARTAN = {"gl_gl": "E", "so_sp": "f", "sp_so": "e"}
_DET_FAMILIES = ("A", "Abar", "B", "Bbar")
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


class HwvError(ValueError):
    """Invalid data for a highest-weight construction or check."""


def _eps(flavor: str) -> Fraction:
    if flavor == "int":
        return Fraction(1, 2)
    if flavor == "half":
        return Fraction(0)
    raise HwvError("flavor must be one of %r" % (_FLAVORS,))


def _lattice_window(flavor: str, bound: int) -> list:
    """All legal levels r with |r| < bound + 1, smallest first."""
    if flavor == "int":
        return [Fraction(t) for t in range(-bound, bound + 1)]
    return [Fraction(2 * t + 1, 2) for t in range(-bound, bound)]


@dataclass(frozen=True)
class PhiIndex:
    """One single-subscript mode: species, superscript k, subscript a."""

    species: int
    superscript: int
    subscript: Fraction

    def __post_init__(self):
        if self.species not in (PSI, PSIBAR):
            raise HwvError("species must be PSI or PSIBAR")
        if self.superscript < 1:
            raise HwvError("superscript must be positive")
        object.__setattr__(self, "subscript", Fraction(self.subscript))

    def __str__(self) -> str:
        name = "phi" if self.species == PSI else "phibar"
        return "%s^%d_{%s}" % (name, self.superscript, self.subscript)


def phi_map(i: int, k: int, r, species: int, m: int, flavor: str) -> PhiIndex:
    """Single-subscript index of psi_i^k(r) or psibar_i^k(r)."""
    eps = _eps(flavor)
    if not 1 <= i <= m:
        raise HwvError("index %r out of range 1..%d" % (i, m))
    r = Fraction(r)
    if (r + Fraction(1, 2) - eps).denominator != 1:
        raise HwvError("level %s is off the %s lattice" % (r, flavor))
    if species == PSI:
        a = (r + Fraction(1, 2) - eps) * m - i + Fraction(1, 2) - eps
    elif species == PSIBAR:
        a = (r - Fraction(1, 2) + eps) * m + i - Fraction(1, 2) - eps
    else:
        raise HwvError("species must be PSI or PSIBAR")
    return PhiIndex(species, k, a)


def phi_inverse(phi: PhiIndex, m: int, flavor: str) -> tuple:
    """The pair (i, r) with phi naming psi_i^k(r) or psibar_i^k(r)."""
    eps = _eps(flavor)
    marker = phi.subscript + Fraction(1, 2) + eps
    if marker.denominator != 1:
        raise HwvError(
            "subscript %s is not attainable in the %s flavor"
            % (phi.subscript, flavor)
        )
    x = int(marker)
    if phi.species == PSI:
        i = m - ((x - 1) % m)
        t = (x - 1 + i) // m
        r = Fraction(t) - Fraction(1, 2) + eps
    else:
        i = ((x - 1) % m) + 1
        t = (x - i) // m
        r = Fraction(t) + Fraction(1, 2) - eps
    return (i, r)


def phi_mode(phi: PhiIndex, m: int, flavor: str) -> tuple:
    """The Fock mode (species, index, level) a PhiIndex stands for."""
    i, r = phi_inverse(phi, m, flavor)
    return (phi.species, pi_index(i, phi.superscript, m), r)


def ell_split(ell: int, m: int) -> tuple:
    """Write ell = ell1 * m + ell2 with ell1 >= 0 and 1 <= ell2 <= m."""
    if ell < 1:
        raise HwvError("ell must be positive")
    ell2 = ((ell - 1) % m) + 1
    ell1 = (ell - ell2) // m
    return (ell1, ell2)


def ell_bars(ell: int, m: int) -> tuple:
    """Column split (ellbar1, ellbar2) of a mixed determinant of size ell."""
    ell1, ell2 = ell_split(ell, m)
    if ell1 % 2 == 0:
        return ((ell1 // 2) * m + ell2, (ell1 // 2) * m)
    return (((ell1 + 1) // 2) * m, ((ell1 - 1) // 2) * m + ell2)


def alpha(r, a: int, i: int, m: int, flavor: str) -> int:
    """Column position (a - r + 1/2 - eps)m - i + 1 of a phi insertion."""
    val = (Fraction(a) - Fraction(r) + Fraction(1, 2) - _eps(flavor)) * m - i + 1
    if val.denominator != 1:
        raise HwvError("alpha(%s, %s, %s) is not an integer" % (r, a, i))
    return int(val)


def beta(r, a: int, j: int, m: int, flavor: str) -> int:
    """Column position (r + a - 1/2 + eps)m + j of a phibar insertion."""
    val = (Fraction(r) + Fraction(a) - Fraction(1, 2) + _eps(flavor)) * m + j
    if val.denominator != 1:
        raise HwvError("beta(%s, %s, %s) is not an integer" % (r, a, j))
    return int(val)


@dataclass(frozen=True)
class DeterminantSpec:
    """Shape of one creation determinant acting on F(Z)^(m x n)."""

    family: str
    ell: int
    m: int
    n: int
    flavor: str

    def __post_init__(self):
        if self.family not in _DET_FAMILIES:
            raise HwvError("family must be one of %r" % (_DET_FAMILIES,))
        if self.m < 1 or self.n < 1:
            raise HwvError("m and n must be positive")
        if not 1 <= self.ell <= self.n:
            raise HwvError("ell %r out of range 1..%d" % (self.ell, self.n))
        if self.family == "Bbar":
            if self.n % 2 != 0:
                raise HwvError("Bbar determinants need even n")
            if self.ell != self.n // 2:
                raise HwvError("Bbar determinants need ell = n/2")
        _eps(self.flavor)


def _col_subscript(c: int, flavor: str) -> Fraction:
    """Subscript -c + 1/2 - eps of the c-th base column."""
    return Fraction(1, 2) - _eps(flavor) - c


def determinant_matrix(spec: DeterminantSpec) -> list:
    """Rows of signed PhiIndex entries whose determinant is the operator.

    Family A is ell x ell with entry phi^p at column subscript c; Abar is
    (n - ell + 1) x (n - ell + 1) with entries phibar^(n+1-p); B splits
    its ell columns as (ellbar1, ellbar2) with phi^p entries on the left
    block and phibar^(n+1-p) entries on the right; Bbar swaps the
    superscripts n/2 <-> n/2 + 1 in row n/2 of B.
    """
    fam, ell, m, n, flavor = spec.family, spec.ell, spec.m, spec.n, spec.flavor
    rows = []
    if fam == "A":
        for p in range(1, ell + 1):
            rows.append(
                tuple(
                    (1, PhiIndex(PSI, p, _col_subscript(c, flavor)))
                    for c in range(1, ell + 1)
                )
            )
        return rows
    if fam == "Abar":
        size = n - ell + 1
        for p in range(1, size + 1):
            rows.append(
                tuple(
                    (1, PhiIndex(PSIBAR, n + 1 - p, _col_subscript(c, flavor)))
                    for c in range(1, size + 1)
                )
            )
        return rows
    b1, b2 = ell_bars(ell, m)
    flip = n // 2 if fam == "Bbar" else 0
    for p in range(1, ell + 1):
        row = []
        # row n/2 of Bbar is the superscript swap n/2 <-> n/2 + 1 of row
        # n/2 of B, so only the superscripts change, not the species
        for c in range(1, b1 + 1):
            k = p + 1 if p == flip else p
            row.append((1, PhiIndex(PSI, k, _col_subscript(c, flavor))))
        for c in range(1, b2 + 1):
            k = n - p if p == flip else n + 1 - p
            row.append((1, PhiIndex(PSIBAR, k, _col_subscript(c, flavor))))
        rows.append(tuple(row))
    return rows


def _assert_entries_commute(matrix, flavor: str) -> None:
    """Reject matrices with a noncommuting pair off the diagonal blocks.

    The determinant is well defined only when entries in distinct rows
    and distinct columns commute; a phi against a phibar fails exactly
    when superscripts agree and subscripts sum to -2 eps.
    """
    eps2 = 2 * _eps(flavor)
    size = len(matrix)
    for p1, p2 in itertools.permutations(range(size), 2):
        for c1, c2 in itertools.permutations(range(size), 2):
            e1 = matrix[p1][c1][1]
            e2 = matrix[p2][c2][1]
            if e1.species == e2.species or e1.superscript != e2.superscript:
                continue
            if e1.subscript + e2.subscript == -eps2:
                raise HwvError(
                    "entries %s and %s do not commute" % (e1, e2)
                )


def _perm_sign(perm) -> int:
    sign = 1
    for u in range(len(perm)):
        for w in range(u + 1, len(perm)):
            if perm[u] > perm[w]:
                sign = -sign
    return sign


def matrix_apply(matrix, kind: FockKind, m: int, v: FockVector, s0=None) -> FockVector:
    """Apply the determinant of a signed PhiIndex matrix to a vector.

    Expands the Leibniz sum over permutations, applying each product
    rightmost row first; entries in distinct rows and columns must
    commute for the expansion to be order independent.
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise HwvError("matrix is not square")
    if size == 0:
        return v
    _assert_entries_commute(matrix, kind.flavor)
    out = FockVector.zero()
    for perm in itertools.permutations(range(size)):
        coeff = _perm_sign(perm)
        w = v
        for p in reversed(range(size)):
            sgn, phi = matrix[p][perm[p]]
            coeff *= sgn
            w = mode_apply(kind, phi_mode(phi, m, kind.flavor), w)
            if w.is_zero():
                break
        if w.is_zero():
            continue
        if coeff != 1:
            w = w.scale_const(QScalar.from_int(coeff), s0)
        out = out + w
    return out


def build_determinant(spec: DeterminantSpec, s0=None) -> FockVector:
    """The determinant applied to the vacuum: a sum of creation monomials."""
    matrix = determinant_matrix(spec)
    kind = FockKind(spec.m * spec.n, spec.flavor)
    return matrix_apply(matrix, kind, spec.m, FockVector.vacuum(), s0)


def creation_apply(op: FockVector, v: FockVector, flavor: str) -> FockVector:
    """Multiply by an operator written as a sum of creation monomials.

    Creation modes commute, so the product just merges mode multisets;
    both coefficient domains must agree (symbolic with symbolic,
    specialized with specialized).
    """
    for mono in op.terms:
        for md in mono:
            if not is_creation(md, flavor):
                raise HwvError("operator is not a creation sum: %r" % (md,))
    out: dict = {}
    for mo, co in op.terms.items():
        for mv, cv in v.terms.items():
            key = tuple(sorted(mo + mv))
            c = co * cv
            out[key] = out[key] + c if key in out else c
    return FockVector(out)


def _finite_rank(pair: str, label: WeightLabel) -> int:
    if label.group != _PAIR_GROUP[pair]:
        raise HwvError(
            "label %s does not name a %s weight" % (label, _PAIR_GROUP[pair])
        )
    return label.size // 2 if pair == "sp_so" else label.size


def hwv_factors(pair: str, label: WeightLabel, bar: bool = False) -> list:
    """Determinant factors (family, ell, exponent) of the labeled vector."""
    n = _finite_rank(pair, label)
    factors = []
    if bar:
        if pair != "so_sp":
            raise HwvError("bar vectors exist for the orthogonal pair only")
        if label.size % 2 != 0 or label.tilde:
            raise HwvError("bar vectors need a plain label with even n")
        mu = label.entries
        if depth(mu) != n // 2:
            raise HwvError("bar vectors need depth exactly n/2")
        for k in range(1, n // 2):
            factors.append(("B", k, mu[k - 1] - mu[k]))
        factors.append(("Bbar", n // 2, mu[n // 2 - 1]))
        return [(fam, ell, e) for fam, ell, e in factors if e > 0]
    if pair == "gl_gl":
        mu = label.entries
        p = sum(1 for x in mu if x > 0)
        s = n - sum(1 for x in mu if x < 0) + 1
        for k in range(1, p + 1):
            nxt = mu[k] if k < p else 0
            factors.append(("A", k, mu[k - 1] - nxt))
        for k in range(s, n + 1):
            prv = mu[k - 2] if k > s else 0
            factors.append(("Abar", k, prv - mu[k - 1]))
    elif pair == "sp_so":
        mu = label.entries[:n] + (0,)
        for k in range(1, n + 1):
            factors.append(("A", k, mu[k - 1] - mu[k]))
    else:
        mu = o_label_partition(label) + (0,)
        for k in range(1, n + 1):
            factors.append(("B", k, mu[k - 1] - mu[k]))
    return [(fam, ell, e) for fam, ell, e in factors if e > 0]


def build_hwv(pair: str, m: int, label: WeightLabel, flavor: str, bar: bool = False) -> FockVector:
    """The joint highest-weight vector of a label, as a Fock vector."""
    if pair not in _PAIRS:
        raise HwvError("pair must be one of %r" % (_PAIRS,))
    if pair == "sp_so" and flavor != "half":
        raise UnsupportedFlavorError(
            "the symplectic-orthogonal pair exists in the half flavor only"
        )
    n = _finite_rank(pair, label)
    v = FockVector.vacuum()
    for fam, ell, e in hwv_factors(pair, label, bar):
        op = build_determinant(DeterminantSpec(fam, ell, m, n, flavor))
        for _ in range(e):
            v = creation_apply(op, v, flavor)
    return v


def j_set(i: int, ell: int, m: int, flavor: str) -> tuple:
    """Levels r with 1 <= (r - 1/2 + eps)m + i <= ell."""
    eps = _eps(flavor)
    out = []
    for x in range(1, ell + 1):
        if (x - i) % m == 0:
            out.append(Fraction(x - i, m) + Fraction(1, 2) - eps)
    return tuple(out)


def jbar_set(i: int, ell: int, m: int, flavor: str) -> tuple:
    """Levels r with 1 <= (-r + 1/2 - eps)m - i + 1 <= ell."""
    eps = _eps(flavor)
    out = []
    for y in range(1, ell + 1):
        if (y + i - 1) % m == 0:
            out.append(Fraction(1, 2) - eps - Fraction(y + i - 1, m))
    return tuple(out)


def _power_sum(b: int, levels, sign: int) -> QScalar:
    total = ZERO
    for r in levels:
        total = total + qs_qpow(sign * b * Fraction(r))
    return total


def eta_eval(pair: str, m: int, label: WeightLabel, flavor: str, genspec) -> QScalar:
    """Exact Cartan eigenvalue of a diagonal generator on the labeled vector.

    Accepts the central element ("c",) or (kind, i, i, 0, b) with the
    kind letter of the pair's toroidal family.  The omega term is
    omitted at b = 0, where the level sums already include the zero
    modes.
    """
    if pair not in _PAIRS:
        raise HwvError("pair must be one of %r" % (_PAIRS,))
    if pair == "sp_so" and flavor != "half":
        raise UnsupportedFlavorError(
            "the symplectic-orthogonal pair exists in the half flavor only"
        )
    n = _finite_rank(pair, label)
    if genspec == ("c",):
        return QScalar.from_int(-n)
    if len(genspec) != 5:
        raise HwvError("generator %r is not diagonal toroidal" % (genspec,))
    kind, i, j, a, b = genspec
    if kind != _PAIR_CARTAN[pair] or i != j or a != 0 or not 1 <= i <= m:
        raise HwvError(
            "generator %s is outside the diagonal subalgebra of %s"
            % (format_genspec(genspec), pair)
        )
    eps = _eps(flavor)
    total = ZERO
    if pair == "gl_gl":
        mu = label.entries
        p = sum(1 for x in mu if x > 0)
        s = n - sum(1 for x in mu if x < 0) + 1
        for k in range(1, p + 1):
            d = mu[k - 1] - (mu[k] if k < p else 0)
            if d:
                total = total + QScalar.from_int(d) * _power_sum(
                    b, j_set(i, k, m, flavor), -1
                )
        for k in range(s, n + 1):
            d = mu[k - 1] - (mu[k - 2] if k > s else 0)
            if d:
                total = total + QScalar.from_int(d) * _power_sum(
                    b, jbar_set(i, n - k + 1, m, flavor), -1
                )
        scale = 1
    elif pair == "so_sp":
        mu = o_label_partition(label) + (0,)
        for k in range(1, n + 1):
            d = mu[k - 1] - mu[k]
            if not d:
                continue
            k1, k2 = ell_bars(k, m)
            part = _power_sum(b, j_set(i, k1, m, flavor), -1) - _power_sum(
                b, jbar_set(i, k2, m, flavor), -1
            )
            total = total + QScalar.from_int(d) * part
        scale = 1
    else:
        mu = label.entries[:n] + (0,)
        for k in range(1, n + 1):
            d = mu[k - 1] - mu[k]
            if not d:
                continue
            part = _power_sum(b, j_set(i, k, m, flavor), -1) - _power_sum(
                b, j_set(m + 1 - i, k, m, flavor), 1
            )
            total = total + QScalar.from_int(d) * part
        scale = 2
    if eps:
        total = total + QScalar.from_fraction(eps * n * scale)
    if b != 0:
        total = total - QScalar.from_int(n * scale) * omega(flavor, b)
    return total


@dataclass
class HwvReport:
    """Outcome of one verify_hwv run: a flat list of check dicts."""

    pair: str
    m: int
    n: int
    flavor: str
    label: str
    bar: bool
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c["status"] != "pass"]

    def to_json(self):
        return {
            "pair": self.pair,
            "m": self.m,
            "n": self.n,
            "flavor": self.flavor,
            "label": self.label,
            "bar": self.bar,
            "ok": self.ok,
            "checks": self.checks,
        }


def _check(checks, check_id, generator, ok, lhs="", rhs=""):
    checks.append(
        {
            "check_id": check_id,
            "generator": generator,
            "status": "pass" if ok else "fail",
            "lhs": str(lhs),
            "rhs": str(rhs),
        }
    )


def finite_raising(pair: str, n: int) -> list:
    """Raising generator specs of the pair's finite member at rank n."""
    if pair == "gl_gl":
        return [("E", p, p + 1) for p in range(1, n)]
    if pair == "so_sp":
        return [("e", p, s) for p in range(1, n + 1) for s in range(p + 1, n + 1)]
    out = [("f", p, s) for p in range(1, n + 1) for s in range(p + 1, n + 1)]
    out += [("g", p, s) for p in range(1, n + 1) for s in range(p, n + 1)]
    return out


def _torus_samples(pair: str, n: int) -> list:
    """Two (free_part, full_diagonal) samples on the pair's maximal torus."""
    out = []
    if pair == "so_sp":
        p = n // 2
        for variant in (0, 1):
            free = [Fraction(_PRIMES[t + variant]) for t in range(p)]
            if variant:
                free = [Fraction(1, int(x)) for x in free]
            full = list(free)
            if n % 2:
                full.append(Fraction(1))
            full.extend(Fraction(1) / x for x in reversed(free))
            out.append((free, tuple(full)))
        return out
    for variant in (0, 1):
        h = [
            Fraction(_PRIMES[t]) if (t + variant) % 2 == 0 else Fraction(1, _PRIMES[t])
            for t in range(n)
        ]
        out.append((h, tuple(h)))
    return out


def _group_weight(pair: str, label: WeightLabel, bar: bool, n: int) -> tuple:
    """Exponents of the free torus coordinates on the labeled vector."""
    if pair == "gl_gl":
        return label.entries
    if pair == "sp_so":
        return label.entries[:n]
    entries = bar_label(label.entries, n) if bar else label.entries
    return tuple(entries[: n // 2])


def verify_hwv(pair: str, m: int, label: WeightLabel, flavor: str, window=(2, 2), bar: bool = False) -> HwvReport:
    """Replay every defining highest-weight condition on a labeled vector.

    Checks, in order: the window of raising toroidal generators kills
    the vector; the finite raising generators kill it; each diagonal
    toroidal generator and the central element act by eta_eval; the
    vector is a weight vector for the finite diagonal torus, both
    monomial-wise and under sampled group elements; and for the
    orthogonal pair with even n the superscript flip tau carries the
    mixed determinant of size n/2 to its species-flipped partner.
    """
    a_max, b_max = window
    n = _finite_rank(pair, label)
    report = HwvReport(pair, m, n, flavor, str(label), bar)
    checks = report.checks
    v = build_hwv(pair, m, label, flavor, bar)
    family = _PAIR_FAMILY[pair]
    zero = FockVector.zero()

    for spec in canonical_genspecs(family, m, a_max, b_max):
        if classify(family, flavor, spec) != "plus":
            continue
        got = embedded_apply(pair, "toroidal", m, n, flavor, spec, v)
        _check(
            checks,
            "toroidal_raising",
            format_genspec(spec),
            got == zero,
            got,
            zero,
        )

    for spec in finite_raising(pair, n):
        got = embedded_apply(pair, "finite", m, n, flavor, spec, v)
        name = "%s[%d,%d]" % spec
        _check(checks, "finite_raising", name, got == zero, got, zero)

    cartan = [("c",)]
    kind_letter = _PAIR_CARTAN[pair]
    for i in range(1, m + 1):
        for b in range(-b_max, b_max + 1):
            cartan.append((kind_letter, i, i, 0, b))
    for spec in cartan:
        got = embedded_apply(pair, "toroidal", m, n, flavor, spec, v)
        want = v.scale_const(eta_eval(pair, m, label, flavor, spec))
        name = "c" if spec == ("c",) else format_genspec(spec)
        _check(checks, "cartan_eta", name, got == want, got, want)

    expected_w = _group_weight(pair, label, bar, n)
    if pair == "so_sp":
        ok = True
        seen = None
        for mono in v.terms:
            w = monomial_weight(mono, m, n)
            so_w = tuple(w[p - 1] - w[n - p] for p in range(1, n // 2 + 1))
            if so_w != tuple(expected_w):
                ok = False
                seen = so_w
                break
        _check(checks, "finite_torus_lie", "so_weight", ok, seen, tuple(expected_w))
    else:
        ok = True
        seen = None
        for mono in v.terms:
            w = monomial_weight(mono, m, n)
            if tuple(w) != tuple(expected_w):
                ok = False
                seen = w
                break
        _check(checks, "finite_torus_lie", "monomial_weight", ok, seen, tuple(expected_w))

    for free, full in _torus_samples(pair, n):
        factor = Fraction(1)
        for h, e in zip(free, expected_w):
            factor *= h ** e
        got = group_element_apply(("diag", full), pair, m, n, v)
        want = v.scale_const(QScalar.from_fraction(factor))
        _check(
            checks,
            "finite_torus_group",
            "diag(%s)" % (",".join(str(x) for x in full)),
            got == want,
            got,
            want,
        )

    if pair == "so_sp" and n % 2 == 0:
        b_half = build_determinant(DeterminantSpec("B", n // 2, m, n, flavor))
        bbar = build_determinant(DeterminantSpec("Bbar", n // 2, m, n, flavor))
        got = group_element_apply("tau", pair, m, n, b_half)
        _check(checks, "tau_conjugation", "B_{n/2}", got == bbar, got, bbar)

    return report


# --- mechanized commutation lemmas ---------------------------------------


def _sample_vectors(m: int, n: int, flavor: str) -> list:
    """Vacuum plus two fixed low-energy monomials, one of each species mix."""
    lo_psi = Fraction(0) if flavor == "int" else Fraction(-1, 2)
    lo_bar = Fraction(-1) if flavor == "int" else Fraction(-1, 2)
    N = m * n
    one = FockVector({((PSI, 1, lo_psi),): ONE})
    mixed = FockVector(
        {tuple(sorted(((PSI, N, lo_psi - 1), (PSIBAR, 1, lo_bar)))): ONE}
    )
    return [FockVector.vacuum(), one, mixed]


def _quadratic_sum_apply(case: str, m: int, n: int, flavor: str, i: int, j: int, a: int, r, v: FockVector) -> FockVector:
    """One term of the invariant quadratic sums, applied right factor first.

    case f: sum_k psi_i^k(a-r) psibar_j^k(r)
    case g: sum_k psi_i^k(a-r) psi_j^{n+1-k}(r)
    case h: sum_k psibar_i^k(a-r) psibar_j^{n+1-k}(r)
    """
    kind = FockKind(m * n, flavor)
    r = Fraction(r)
    lvl = Fraction(a) - r
    out = FockVector.zero()
    for k in range(1, n + 1):
        if case == "f":
            first = (PSI, pi_index(i, k, m), lvl)
            second = (PSIBAR, pi_index(j, k, m), r)
        elif case == "g":
            first = (PSI, pi_index(i, k, m), lvl)
            second = (PSI, pi_index(j, n + 1 - k, m), r)
        else:
            first = (PSIBAR, pi_index(i, k, m), lvl)
            second = (PSIBAR, pi_index(j, n + 1 - k, m), r)
        out = out + mode_apply(kind, first, mode_apply(kind, second, v))
    return out


def _with_column(matrix, col: int, entries) -> list:
    out = [list(row) for row in matrix]
    for p, e in enumerate(entries):
        out[p][col - 1] = e
    return [tuple(row) for row in out]


def _psi_column(size: int, sub: Fraction, sign: int) -> list:
    return [(sign, PhiIndex(PSI, p, sub)) for p in range(1, size + 1)]


def _psibar_column(size: int, n: int, sub: Fraction, sign: int) -> list:
    return [(sign, PhiIndex(PSIBAR, n + 1 - p, sub)) for p in range(1, size + 1)]


def _commutator_on(case_apply, matrix, kind: FockKind, m: int, v: FockVector) -> FockVector:
    return case_apply(matrix_apply(matrix, kind, m, v)) - matrix_apply(
        matrix, kind, m, case_apply(v)
    )


def _matrices_commute_on(m1, m2, kind: FockKind, m: int, samples) -> tuple:
    for v in samples:
        lhs = matrix_apply(m1, kind, m, matrix_apply(m2, kind, m, v))
        rhs = matrix_apply(m2, kind, m, matrix_apply(m1, kind, m, v))
        if lhs != rhs:
            return (False, lhs, rhs)
    return (True, None, None)


def _hyp(case: str, flavor: str, a: int, i: int, j: int) -> bool:
    if a > 0:
        return True
    if a != 0:
        return False
    if case == "f":
        return i < j
    if case == "g":
        return flavor == "half"
    return flavor == "int"


def _hyp_branches(case: str, flavor: str, m: int) -> set:
    out = {"a>0"}
    if case == "f":
        if m >= 2:
            out.add("a=0")
    elif case == "g":
        if flavor == "half":
            out.add("a=0")
    elif flavor == "int":
        out.add("a=0")
    return out


def _coverage_entry(checks, lemma: str, hit: set, required: set, cases: dict) -> None:
    _check(
        checks,
        lemma + ":coverage",
        "hypothesis branches",
        required <= hit,
        ",".join(sorted(hit)) or "none",
        ",".join(sorted(required)),
    )
    body = ",".join("%s=%d" % (k, cases[k]) for k in sorted(cases))
    _check(checks, lemma + ":cases", "piecewise cases", True, body or "none", "tally")


def _sub_of(value: int, flavor: str) -> Fraction:
    return Fraction(value) - Fraction(1, 2) - _eps(flavor)


def _flat_replacements(case: str, base, ell: int, m: int, n: int, flavor: str, i: int, j: int, a: int, r) -> list:
    """Replaced determinants named by one bracket against a mixed minor.

    Returns (branch_name, matrix) pairs for the summands that appear;
    an empty list means the bracket vanishes.
    """
    b1, b2 = ell_bars(ell, m)
    out = []
    if case == "f":
        bt = beta(r, 0, j, m, flavor)
        al = alpha(r, a, i, m, flavor)
        if 1 <= bt <= b1:
            col = _psi_column(ell, _sub_of(al, flavor), 1)
            out.append(("psi", _with_column(base, bt, col)))
        if 1 <= al <= b2:
            col = _psibar_column(ell, n, _sub_of(bt, flavor), -1)
            out.append(("psibar", _with_column(base, b1 + al, col)))
    elif case == "g":
        aj = alpha(-r, 0, j, m, flavor)
        ai = alpha(r, a, i, m, flavor)
        if 1 <= aj <= b2:
            col = _psi_column(ell, _sub_of(ai, flavor), -1)
            out.append(("left", _with_column(base, b1 + aj, col)))
        if 1 <= ai <= b2:
            col = _psi_column(ell, _sub_of(aj, flavor), -1)
            out.append(("right", _with_column(base, b1 + ai, col)))
    else:
        bj = beta(r, 0, j, m, flavor)
        bi = beta(-r, a, i, m, flavor)
        if 1 <= bj <= b1:
            col = _psibar_column(ell, n, _sub_of(bi, flavor), 1)
            out.append(("left", _with_column(base, bj, col)))
        if 1 <= bi <= b1:
            col = _psibar_column(ell, n, _sub_of(bj, flavor), 1)
            out.append(("right", _with_column(base, bi, col)))
    return out


def _bracket_lemma_mixed(case: str, lemma: str, m: int, n: int, flavor: str, a_max: int, r_max: int) -> list:
    """Bracket of one quadratic-sum term against every mixed minor."""
    checks = []
    kind = FockKind(m * n, flavor)
    samples = _sample_vectors(m, n, flavor)
    rwin = _lattice_window(flavor, r_max)
    hit = set()
    cases: dict = {}
    furthermore = []
    for ell in range(1, n // 2 + 1):
        base = determinant_matrix(DeterminantSpec("B", ell, m, n, flavor))
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for a in range(0, a_max + 1):
                    if not _hyp(case, flavor, a, i, j):
                        continue
                    hit.add("a>0" if a > 0 else "a=0")
                    ok = True
                    detail = ("", "")
                    where = ""
                    for r in rwin:
                        repl = _flat_replacements(
                            case, base, ell, m, n, flavor, i, j, a, r
                        )
                        tag = "+".join(name for name, _ in repl) or "zero"
                        cases[tag] = cases.get(tag, 0) + 1
                        for bname, mat in repl:
                            if (ell, bname) not in [f[:2] for f in furthermore]:
                                furthermore.append((ell, bname, mat, i, j, a, r))

                        def op(w, _i=i, _j=j, _a=a, _r=r):
                            return _quadratic_sum_apply(
                                case, m, n, flavor, _i, _j, _a, _r, w
                            )

                        for v in samples:
                            lhs = _commutator_on(op, base, kind, m, v)
                            rhs = FockVector.zero()
                            for _, mat in repl:
                                rhs = rhs + matrix_apply(mat, kind, m, v)
                            if lhs != rhs:
                                ok = False
                                detail = (lhs, rhs)
                                where = " r=%s" % (r,)
                                break
                        if not ok:
                            break
                    _check(
                        checks,
                        lemma + ":bracket",
                        "ell=%d i=%d j=%d a=%d%s" % (ell, i, j, a, where),
                        ok,
                        detail[0],
                        detail[1],
                    )
    for ell, bname, mat, i, j, a, r in furthermore:
        where = "ell=%d %s i=%d j=%d a=%d r=%s" % (ell, bname, i, j, a, r)
        got = matrix_apply(mat, kind, m, FockVector.vacuum())
        _check(checks, lemma + ":vacuum", where, got.is_zero(), got, FockVector.zero())
        for ellp in range(1, n - ell + 1):
            other = determinant_matrix(DeterminantSpec("B", ellp, m, n, flavor))
            ok, lhs, rhs = _matrices_commute_on(other, mat, kind, m, samples)
            _check(
                checks,
                lemma + ":commute_B",
                where + " ell'=%d" % (ellp,),
                ok,
                lhs,
                rhs,
            )
        if n % 2 == 0:
            bbar = determinant_matrix(DeterminantSpec("Bbar", n // 2, m, n, flavor))
            for ellpp in range(1, n // 2):
                small = determinant_matrix(DeterminantSpec("B", ellpp, m, n, flavor))
                for bname2, mat2 in _flat_replacements(
                    case, small, ellpp, m, n, flavor, i, j, a, r
                ):
                    if bname2 != bname:
                        continue
                    ok, lhs, rhs = _matrices_commute_on(bbar, mat2, kind, m, samples)
                    _check(
                        checks,
                        lemma + ":commute_Bbar",
                        where + " ell''=%d" % (ellpp,),
                        ok,
                        lhs,
                        rhs,
                    )
    _coverage_entry(checks, lemma, hit, _hyp_branches(case, flavor, m), cases)
    return checks


def _cancellation_lemma(case: str, lemma: str, m: int, n: int, flavor: str, a_max: int, r_max: int) -> list:
    """Quadratic-sum terms annihilate the deep mixed minors on the vacuum."""
    checks = []
    kind = FockKind(m * n, flavor)
    rwin = _lattice_window(flavor, r_max)
    hit = set()
    for ell in range(n // 2 + 1, n + 1):
        base = determinant_matrix(DeterminantSpec("B", ell, m, n, flavor))
        vec = matrix_apply(base, kind, m, FockVector.vacuum())
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for a in range(0, a_max + 1):
                    if not _hyp(case, flavor, a, i, j):
                        continue
                    hit.add("a>0" if a > 0 else "a=0")
                    ok = True
                    detail = ("", "")
                    where = ""
                    for r in rwin:
                        got = _quadratic_sum_apply(
                            case, m, n, flavor, i, j, a, r, vec
                        )
                        if not got.is_zero():
                            ok = False
                            detail = (got, FockVector.zero())
                            where = " r=%s" % (r,)
                            break
                    _check(
                        checks,
                        lemma + ":cancel",
                        "ell=%d i=%d j=%d a=%d%s" % (ell, i, j, a, where),
                        ok,
                        detail[0],
                        detail[1],
                    )
    _coverage_entry(checks, lemma, hit, _hyp_branches(case, flavor, m), {})
    return checks


def _lemma_dualpair1le1(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    samples = _sample_vectors(m, n, flavor)
    rwin = _lattice_window(flavor, r_max)
    hit = set()
    cases: dict = {}
    furthermore = []
    for ell in range(1, n + 1):
        base = determinant_matrix(DeterminantSpec("A", ell, m, n, flavor))
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for a in range(0, a_max + 1):
                    if not _hyp("f", flavor, a, i, j):
                        continue
                    hit.add("a>0" if a > 0 else "a=0")
                    ok = True
                    detail = ("", "")
                    where = ""
                    for r in rwin:
                        bt = beta(r, 0, j, m, flavor)
                        al = alpha(r, a, i, m, flavor)
                        inside = 1 <= bt <= ell
                        cases["inside" if inside else "zero"] = (
                            cases.get("inside" if inside else "zero", 0) + 1
                        )
                        mat = None
                        if inside:
                            col = _psi_column(ell, _sub_of(al, flavor), 1)
                            mat = _with_column(base, bt, col)
                            if not any(f[0] == ell for f in furthermore):
                                furthermore.append((ell, mat, i, j, a, r))

                        def op(w, _i=i, _j=j, _a=a, _r=r):
                            return _quadratic_sum_apply(
                                "f", m, n, flavor, _i, _j, _a, _r, w
                            )

                        for v in samples:
                            lhs = _commutator_on(op, base, kind, m, v)
                            rhs = (
                                matrix_apply(mat, kind, m, v)
                                if mat is not None
                                else FockVector.zero()
                            )
                            if lhs != rhs:
                                ok = False
                                detail = (lhs, rhs)
                                where = " r=%s" % (r,)
                                break
                        if not ok:
                            break
                    _check(
                        checks,
                        "dualpair1le1:bracket",
                        "ell=%d i=%d j=%d a=%d%s" % (ell, i, j, a, where),
                        ok,
                        detail[0],
                        detail[1],
                    )
    for ell, mat, i, j, a, r in furthermore:
        where = "ell=%d i=%d j=%d a=%d r=%s" % (ell, i, j, a, r)
        got = matrix_apply(mat, kind, m, FockVector.vacuum())
        _check(
            checks,
            "dualpair1le1:vacuum",
            where,
            got.is_zero(),
            got,
            FockVector.zero(),
        )
        for ellp in range(ell, n + 1):
            other = determinant_matrix(DeterminantSpec("A", ellp, m, n, flavor))
            ok, lhs, rhs = _matrices_commute_on(other, mat, kind, m, samples)
            _check(
                checks,
                "dualpair1le1:commute_A",
                where + " ell'=%d" % (ellp,),
                ok,
                lhs,
                rhs,
            )
        for ellpp in range(ell + 1, n + 1):
            other = determinant_matrix(DeterminantSpec("Abar", ellpp, m, n, flavor))
            ok, lhs, rhs = _matrices_commute_on(other, mat, kind, m, samples)
            _check(
                checks,
                "dualpair1le1:commute_Abar",
                where + " ell''=%d" % (ellpp,),
                ok,
                lhs,
                rhs,
            )
    _coverage_entry(checks, "dualpair1le1", hit, _hyp_branches("f", flavor, m), cases)
    return checks


def _lemma_dualpair1le1bar(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    samples = _sample_vectors(m, n, flavor)
    rwin = _lattice_window(flavor, r_max)
    hit = set()
    cases: dict = {}
    furthermore = []
    for ell in range(1, n + 1):
        size = n - ell + 1
        base = determinant_matrix(DeterminantSpec("Abar", ell, m, n, flavor))
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for a in range(0, a_max + 1):
                    if not _hyp("f", flavor, a, i, j):
                        continue
                    hit.add("a>0" if a > 0 else "a=0")
                    ok = True
                    detail = ("", "")
                    where = ""
                    for r in rwin:
                        bt = beta(r, 0, j, m, flavor)
                        al = alpha(r, a, i, m, flavor)
                        inside = 1 <= al <= size
                        cases["inside" if inside else "zero"] = (
                            cases.get("inside" if inside else "zero", 0) + 1
                        )
                        mat = None
                        if inside:
                            col = _psibar_column(size, n, _sub_of(bt, flavor), -1)
                            mat = _with_column(base, al, col)
                            if not any(f[0] == ell for f in furthermore):
                                furthermore.append((ell, mat, i, j, a, r))

                        def op(w, _i=i, _j=j, _a=a, _r=r):
                            return _quadratic_sum_apply(
                                "f", m, n, flavor, _i, _j, _a, _r, w
                            )

                        for v in samples:
                            lhs = _commutator_on(op, base, kind, m, v)
                            rhs = (
                                matrix_apply(mat, kind, m, v)
                                if mat is not None
                                else FockVector.zero()
                            )
                            if lhs != rhs:
                                ok = False
                                detail = (lhs, rhs)
                                where = " r=%s" % (r,)
                                break
                        if not ok:
                            break
                    _check(
                        checks,
                        "dualpair1le1bar:bracket",
                        "ell=%d i=%d j=%d a=%d%s" % (ell, i, j, a, where),
                        ok,
                        detail[0],
                        detail[1],
                    )
    for ell, mat, i, j, a, r in furthermore:
        where = "ell=%d i=%d j=%d a=%d r=%s" % (ell, i, j, a, r)
        got = matrix_apply(mat, kind, m, FockVector.vacuum())
        _check(
            checks,
            "dualpair1le1bar:vacuum",
            where,
            got.is_zero(),
            got,
            FockVector.zero(),
        )
        for ellp in range(ell, n + 1):
            other = determinant_matrix(DeterminantSpec("Abar", ellp, m, n, flavor))
            ok, lhs, rhs = _matrices_commute_on(other, mat, kind, m, samples)
            _check(
                checks,
                "dualpair1le1bar:commute_Abar",
                where + " ell'=%d" % (ellp,),
                ok,
                lhs,
                rhs,
            )
    _coverage_entry(
        checks, "dualpair1le1bar", hit, _hyp_branches("f", flavor, m), cases
    )
    return checks


def _lemma_dualpair1le2(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    samples = _sample_vectors(m, n, flavor)
    for fam in ("A", "Abar"):
        for ell in range(1, n + 1):
            base = determinant_matrix(DeterminantSpec(fam, ell, m, n, flavor))
            for p in range(1, n):

                def op(w, _p=p):
                    return embedded_apply(
                        "gl_gl", "finite", m, n, flavor, ("E", _p, _p + 1), w
                    )

                ok = True
                detail = ("", "")
                for v in samples:
                    got = _commutator_on(op, base, kind, m, v)
                    if not got.is_zero():
                        ok = False
                        detail = (got, FockVector.zero())
                        break
                _check(
                    checks,
                    "dualpair1le2:commute",
                    "%s ell=%d p=%d" % (fam, ell, p),
                    ok,
                    detail[0],
                    detail[1],
                )
    return checks


def _gl_mu(ell: int, n: int) -> WeightLabel:
    return WeightLabel("GL", n, (1,) * ell + (0,) * (n - ell))


def _gl_mubar(ell: int, n: int) -> WeightLabel:
    return WeightLabel("GL", n, (0,) * (ell - 1) + (-1,) * (n - ell + 1))


def _lemma_dualpair1le3(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    for fam in ("A", "Abar"):
        for ell in range(1, n + 1):
            vec = matrix_apply(
                determinant_matrix(DeterminantSpec(fam, ell, m, n, flavor)),
                kind,
                m,
                FockVector.vacuum(),
            )
            mu = _gl_mu(ell, n) if fam == "A" else _gl_mubar(ell, n)
            for free, full in _torus_samples("gl_gl", n):
                factor = Fraction(1)
                for h, e in zip(free, mu.entries):
                    factor *= h ** e
                got = group_element_apply(("diag", full), "gl_gl", m, n, vec)
                want = vec.scale_const(QScalar.from_fraction(factor))
                _check(
                    checks,
                    "dualpair1le3:torus",
                    "%s ell=%d diag(%s)" % (fam, ell, ",".join(str(x) for x in full)),
                    got == want,
                    got,
                    want,
                )
    return checks


def _lemma_dualpair1le4(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    for fam in ("A", "Abar"):
        for ell in range(1, n + 1):
            vec = matrix_apply(
                determinant_matrix(DeterminantSpec(fam, ell, m, n, flavor)),
                kind,
                m,
                FockVector.vacuum(),
            )
            mu = _gl_mu(ell, n) if fam == "A" else _gl_mubar(ell, n)
            specs = [("c",)]
            for i in range(1, m + 1):
                for b in range(-b_max, b_max + 1):
                    specs.append(("E", i, i, 0, b))
            for spec in specs:
                got = embedded_apply("gl_gl", "toroidal", m, n, flavor, spec, vec)
                want = vec.scale_const(eta_eval("gl_gl", m, mu, flavor, spec))
                name = "c" if spec == ("c",) else format_genspec(spec)
                _check(
                    checks,
                    "dualpair1le4:eta",
                    "%s ell=%d %s" % (fam, ell, name),
                    got == want,
                    got,
                    want,
                )
    return checks


def _lemma_dualpair2le1(m, n, flavor, a_max, b_max, r_max):
    return _bracket_lemma_mixed("f", "dualpair2le1", m, n, flavor, a_max, r_max)


def _lemma_dualpair2le2(m, n, flavor, a_max, b_max, r_max):
    return _cancellation_lemma("f", "dualpair2le2", m, n, flavor, a_max, r_max)


def _lemma_dualpair2le3(m, n, flavor, a_max, b_max, r_max):
    return _bracket_lemma_mixed("g", "dualpair2le3", m, n, flavor, a_max, r_max)


def _lemma_dualpair2le4(m, n, flavor, a_max, b_max, r_max):
    return _cancellation_lemma("g", "dualpair2le4", m, n, flavor, a_max, r_max)


def _lemma_dualpair2le5(m, n, flavor, a_max, b_max, r_max):
    checks = _bracket_lemma_mixed("h", "dualpair2le5", m, n, flavor, a_max, r_max)
    _check(
        checks,
        "dualpair2le5:note",
        "second commutation clause",
        True,
        "tested with the right-replaced minor (column beta(-r,a,i))",
        "the left-replaced minor is undefined when beta(r,0,j) leaves its block",
    )
    return checks


def _lemma_dualpair2le6(m, n, flavor, a_max, b_max, r_max):
    return _cancellation_lemma("h", "dualpair2le6", m, n, flavor, a_max, r_max)


def _lemma_dualpair2le7(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    samples = _sample_vectors(m, n, flavor)
    for ell in range(1, n + 1):
        base = determinant_matrix(DeterminantSpec("B", ell, m, n, flavor))
        for p in range(1, n):

            def op(w, _p=p):
                return embedded_apply(
                    "so_sp", "finite", m, n, flavor, ("e", _p, _p + 1), w
                )

            ok = True
            detail = ("", "")
            for v in samples:
                got = _commutator_on(op, base, kind, m, v)
                if not got.is_zero():
                    ok = False
                    detail = (got, FockVector.zero())
                    break
            _check(
                checks,
                "dualpair2le7:commute",
                "ell=%d p=%d" % (ell, p),
                ok,
                detail[0],
                detail[1],
            )
    return checks


def _lemma_dualpair2le8(m, n, flavor, a_max, b_max, r_max):
    checks = []
    kind = FockKind(m * n, flavor)
    for ell in range(1, n + 1):
        vec = matrix_apply(
            determinant_matrix(DeterminantSpec("B", ell, m, n, flavor)),
            kind,
            m,
            FockVector.vacuum(),
        )
        w = min(ell, n - ell)
        for free, full in _torus_samples("so_sp", n):
            factor = Fraction(1)
            for h in free[:w]:
                factor *= h
            got = group_element_apply(("diag", full), "so_sp", m, n, vec)
            want = vec.scale_const(QScalar.from_fraction(factor))
            _check(
                checks,
                "dualpair2le8:torus",
                "ell=%d diag(%s)" % (ell, ",".join(str(x) for x in full)),
                got == want,
                got,
                want,
            )
    return checks


def _lemma_dualpair2le9(m, n, flavor, a_max, b_max, r_max):
    from .weights import o_label_from_partition

    checks = []
    kind = FockKind(m * n, flavor)
    rwin = _lattice_window(flavor, r_max)
    for ell in range(1, n + 1):
        vec = matrix_apply(
            determinant_matrix(DeterminantSpec("B", ell, m, n, flavor)),
            kind,
            m,
            FockVector.vacuum(),
        )
        mu = o_label_from_partition(n, (1,) * ell)
        specs = [("c",)]
        for i in range(1, m + 1):
            for b in range(-b_max, b_max + 1):
                specs.append(("f", i, i, 0, b))
        for spec in specs:
            got = embedded_apply("so_sp", "toroidal", m, n, flavor, spec, vec)
            want = vec.scale_const(eta_eval("so_sp", m, mu, flavor, spec))
            name = "c" if spec == ("c",) else format_genspec(spec)
            _check(
                checks,
                "dualpair2le9:eta",
                "ell=%d %s" % (ell, name),
                got == want,
                got,
                want,
            )
        b1, b2 = ell_bars(ell, m)
        for i in range(1, m + 1):
            for r in rwin:
                # the case analysis holds for the vacuum-subtracted
                # normal-ordered terms, which equal the plain product at
                # r >= 0 and plain + n (the removed contraction) at r < 0
                got = _quadratic_sum_apply("f", m, n, flavor, i, i, 0, r, vec)
                if r < 0:
                    got = got + vec.scale_const(QScalar.from_int(n))
                if 1 <= beta(r, 0, i, m, flavor) <= b1:
                    want = vec
                elif 1 <= alpha(r, 0, i, m, flavor) <= b2:
                    want = -vec
                else:
                    want = FockVector.zero()
                _check(
                    checks,
                    "dualpair2le9:observe",
                    "ell=%d i=%d r=%s" % (ell, i, r),
                    got == want,
                    got,
                    want,
                )
    return checks


LEMMAS = {
    "dualpair1le1": _lemma_dualpair1le1,
    "dualpair1le1bar": _lemma_dualpair1le1bar,
    "dualpair1le2": _lemma_dualpair1le2,
    "dualpair1le3": _lemma_dualpair1le3,
    "dualpair1le4": _lemma_dualpair1le4,
    "dualpair2le1": _lemma_dualpair2le1,
    "dualpair2le2": _lemma_dualpair2le2,
    "dualpair2le3": _lemma_dualpair2le3,
    "dualpair2le4": _lemma_dualpair2le4,
    "dualpair2le5": _lemma_dualpair2le5,
    "dualpair2le6": _lemma_dualpair2le6,
    "dualpair2le7": _lemma_dualpair2le7,
    "dualpair2le8": _lemma_dualpair2le8,
    "dualpair2le9": _lemma_dualpair2le9,
}


def run_lemma(lemma_id: str, m: int, n: int, flavor: str, a_max: int = 2, b_max: int = 2, r_max: int = 2) -> list:
    """Mechanically check one commutation lemma; returns check dicts."""
    if lemma_id not in LEMMAS:
        raise HwvError(
            "unknown lemma %r; known: %s" % (lemma_id, ", ".join(sorted(LEMMAS)))
        )
    if m < 1 or n < 1:
        raise HwvError("m and n must be positive")
    _eps(flavor)
    return LEMMAS[lemma_id](m, n, flavor, a_max, b_max, r_max)
