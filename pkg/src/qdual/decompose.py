"""Desk-scale verification of the multiplicity-free dual-pair decomposition.

The module truncates an oscillator module to a finite window, finds every
joint singular vector by exact kernel computation at a rational
specialization s = s0, matches each singular line against the closed-form
highest-weight vectors, brute-forces the mutual centralizer property of the
embedded pairs, generates invariant-quadratic submodules, and balances the
graded dimension count degree by degree.

Windows: `max_energy` bounds the total energy of a creation monomial and
`max_zero_modes` caps the number of level-zero modes, which is what keeps
the integer-flavor energy-0 layer finite.  `a_max`/`b_max` bound the torus
degrees of the generators used as raising operators.

All linear algebra runs over plain rationals at s0 (default 2, so q = 4):
symbolic identity checks elsewhere cover the generic-q claims, and exact
elimination over Fraction is orders of magnitude faster than over the
rational function field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import (
    UnsupportedFlavorError,
    bracket,
    canonical_genspecs,
    classify,
    embed,
    gen_from_spec,
    pi_index,
    source_algebra,
)
from .fock import (
    PSI,
    PSIBAR,
    FockKind,
    FockVector,
    embedded_apply,
    mode,
    mode_apply,
    monomial_energy,
    monomial_zero_modes,
)
from .hwv import build_hwv, finite_raising
from .linalg import SpanReducer, dedupe_rows, kernel_basis, rank
from .qfield import QScalar, qs_specialize
from .weights import (
    WeightLabel,
    depth,
    dim_irrep,
    enumerate_labels,
    group_element_apply,
    monomial_weight,
    o_label_partition,
)


class DecomposeError(ValueError):
    """Bad window, unsupported pair/flavor, or out-of-window input."""


_PAIRS = ("gl_gl", "so_sp", "sp_so")
_LABEL_GROUP = {"gl_gl": "GL", "so_sp": "O", "sp_so": "Sp"}


@dataclass(frozen=True)
class TruncationWindow:
    """Finite truncation of a Fock module and its generator window."""

    max_energy: Fraction
    a_max: int = 2
    b_max: int = 2
    max_zero_modes: int | None = None

    def __post_init__(self):
        e = Fraction(self.max_energy)
        object.__setattr__(self, "max_energy", e)
        if e < 0:
            raise DecomposeError("max_energy must be nonnegative")
        if e.denominator not in (1, 2):
            raise DecomposeError("max_energy must be a half-integer")
        if self.a_max < 0 or self.b_max < 0:
            raise DecomposeError("generator window bounds must be nonnegative")
        if self.max_zero_modes is not None and self.max_zero_modes < 0:
            raise DecomposeError("max_zero_modes must be nonnegative")

    def to_json(self):
        return {
            "max_energy": str(self.max_energy),
            "a_max": self.a_max,
            "b_max": self.b_max,
            "max_zero_modes": self.max_zero_modes,
        }


def _spec_coeff(c, s0) -> Fraction:
    if isinstance(c, QScalar):
        return qs_specialize(c, s0)
    return Fraction(c)


def specialize_vector(v: FockVector, s0) -> FockVector:
    """Evaluate every coefficient at s = s0, yielding Fraction coefficients."""
    return FockVector({mono: _spec_coeff(c, s0) for mono, c in v.terms.items()})


def graded_basis(kind: FockKind, window: TruncationWindow) -> list:
    """Every creation monomial inside the window, by (energy, monomial) order."""
    if kind.flavor == "int" and window.max_zero_modes is None:
        raise DecomposeError(
            "integer flavor needs max_zero_modes; its energy-0 layer is "
            "infinite without a cap"
        )
    mods = []
    for index in range(1, kind.N + 1):
        for species in (PSI, PSIBAR):
            if kind.flavor == "half":
                level = Fraction(-1, 2)
            else:
                level = Fraction(0) if species == PSI else Fraction(-1)
            while -level <= window.max_energy:
                mods.append(mode(species, index, level))
                level -= 1
    mods.sort()
    cap = window.max_zero_modes
    out = []

    def rec(start, mono, e_left, z_left):
        out.append(tuple(mono))
        for t in range(start, len(mods)):
            md = mods[t]
            de = -md[2]
            dz = 1 if md[2] == 0 else 0
            if de > e_left:
                continue
            if z_left is not None and dz > z_left:
                continue
            mono.append(md)
            rec(t, mono, e_left - de, None if z_left is None else z_left - dz)
            mono.pop()

    rec(0, [], window.max_energy, cap)
    out.sort(key=lambda mn: (monomial_energy(mn), mn))
    return out


def _vec_in_window(v: FockVector, window: TruncationWindow) -> bool:
    for mono in v.terms:
        if monomial_energy(mono) > window.max_energy:
            return False
        if (
            window.max_zero_modes is not None
            and monomial_zero_modes(mono) > window.max_zero_modes
        ):
            return False
    return True


# ------------------------------------------------------- invariant closures


def _levels(flavor: str, max_energy) -> list:
    """Lattice levels whose modes can act nontrivially inside the window."""
    e = Fraction(max_energy)
    x = Fraction(1, 2) if flavor == "half" else Fraction(0)
    out = []
    while x <= e:
        out.append(-x)
        if x != 0:
            out.append(x)
        x += 1
    out.sort()
    return out


def invariant_quadratics(pair: str, m: int, n: int, flavor: str, max_energy) -> list:
    """Window of commutant-algebra generators as (tag, i, j, la, lb) tuples.

    Tag "f" is the psi/psibar sum over matched blocks, "g"/"h" are the
    same-species sums pairing block k with n+1-k, and "sp" is the twisted
    two-term difference; levels la, lb run over the active lattice window.
    """
    if pair not in _PAIRS:
        raise DecomposeError("unknown pair %r" % (pair,))
    tags = {"gl_gl": ("f",), "so_sp": ("f", "g", "h"), "sp_so": ("sp",)}[pair]
    levels = _levels(flavor, max_energy)
    out = []
    for tag in tags:
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                for la in levels:
                    for lb in levels:
                        out.append((tag, i, j, la, lb))
    return out


def invariant_quadratic_apply(kind: FockKind, m: int, n: int, quad, v: FockVector) -> FockVector:
    """Apply one invariant quadratic as a plain (unordered) product."""
    tag, i, j, la, lb = quad
    out = FockVector.zero()
    for k in range(1, n + 1):
        if tag == "f":
            pieces = [
                ((PSI, pi_index(i, k, m), la), (PSIBAR, pi_index(j, k, m), lb), 1)
            ]
        elif tag == "g":
            pieces = [
                ((PSI, pi_index(i, k, m), la), (PSI, pi_index(j, n + 1 - k, m), lb), 1)
            ]
        elif tag == "h":
            pieces = [
                (
                    (PSIBAR, pi_index(i, k, m), la),
                    (PSIBAR, pi_index(j, n + 1 - k, m), lb),
                    1,
                )
            ]
        elif tag == "sp":
            pieces = [
                ((PSI, pi_index(i, k, m), la), (PSIBAR, pi_index(j, k, m), lb), 1),
                (
                    (PSIBAR, pi_index(m + 1 - i, k, m), la),
                    (PSI, pi_index(m + 1 - j, k, m), lb),
                    -1,
                ),
            ]
        else:
            raise DecomposeError("unknown quadratic tag %r" % (tag,))
        for first, second, sign in pieces:
            w = mode_apply(kind, mode(*first), mode_apply(kind, mode(*second), v))
            out = out + (w if sign == 1 else -w)
    return out


def _quad_shift(flavor: str, quad) -> tuple:
    """Energy and zero-mode shift of a quadratic; both are sharp."""
    tag, _, _, la, lb = quad
    de = -(la + lb)
    dz = 0
    if flavor == "int":
        sa = 1 if tag in ("f", "g") else -1
        sb = 1 if tag == "g" else -1
        dz = (sa if la == 0 else 0) + (sb if lb == 0 else 0)
    return de, dz


def _bigrade(v: FockVector):
    """(energy, zero modes) when shared by every monomial, else None."""
    es = {monomial_energy(mono) for mono in v.terms}
    zs = {monomial_zero_modes(mono) for mono in v.terms}
    if len(es) == 1 and len(zs) == 1:
        return es.pop(), zs.pop()
    return None


def invariant_generate(pair: str, m: int, n: int, flavor: str, v: FockVector,
                       window: TruncationWindow, s0=Fraction(2)) -> list:
    """Closure of {v} under every windowed invariant quadratic.

    A quadratic is applied only when its image stays inside the window
    (images are never truncated).  Returns an exact basis of the reached
    subspace as Fock vectors with Fraction coefficients at s = s0, ordered
    by leading monomial.
    """
    if pair == "sp_so" and flavor == "int":
        raise UnsupportedFlavorError(
            "the sp-so pair exists only in the half-integer flavor"
        )
    kind = FockKind(m * n, flavor)
    vs = specialize_vector(v, s0)
    if vs.is_zero():
        raise DecomposeError("cannot generate from the zero vector")
    if not _vec_in_window(vs, window):
        raise DecomposeError("starting vector lies outside the window")
    if kind.flavor == "int" and window.max_zero_modes is None:
        raise DecomposeError("integer flavor needs max_zero_modes")
    quads = invariant_quadratics(pair, m, n, flavor, window.max_energy)
    shifts = [_quad_shift(flavor, quad) for quad in quads]
    zcap = window.max_zero_modes
    span = SpanReducer()
    span.add(vs.terms)
    queue = [vs]
    while queue:
        w = queue.pop(0)
        bg = _bigrade(w)
        for quad, (de, dz) in zip(quads, shifts):
            if bg is not None:
                # A bigraded vector has a bigraded image, so the window
                # test reduces to shift arithmetic.
                e_new = bg[0] + de
                if e_new < 0 or e_new > window.max_energy:
                    continue
                if zcap is not None and not 0 <= bg[1] + dz <= zcap:
                    continue
            u = invariant_quadratic_apply(kind, m, n, quad, w)
            if u.is_zero():
                continue
            if not _vec_in_window(u, window):
                continue
            if span.add(u.terms):
                queue.append(u)
    return [FockVector(dict(row)) for _, row in span.rows]


# --------------------------------------------------- joint singular vectors


def _so_weight(w, n: int) -> tuple:
    return tuple(w[p] - w[n - 1 - p] for p in range(n // 2))


def _class_key(pair: str, m: int, n: int, mono) -> tuple:
    """Grading preserved by every raising operator: weight, energy, parity."""
    w = monomial_weight(mono, m, n)
    if pair == "so_sp":
        w = _so_weight(w, n)
    return (tuple(w), monomial_energy(mono), len(mono) % 2)


def _window_labels(pair: str, m: int, n: int, flavor: str,
                   window: TruncationWindow, extended: bool = False) -> list:
    """(label, vector, energy, zero_modes) for labels reaching the window.

    The plain set keeps labels whose highest-weight vector fits the window.
    `extended` also admits labels whose zero-mode count exceeds the cap by
    at most the remaining energy budget: each zero mode dropped costs at
    least one unit of energy, so only those multiplicity spaces can still
    reach capped slices.  The bookkeeping sum ranges over the extended set.
    """
    group = _LABEL_GROUP[pair]
    size = 2 * n if pair == "sp_so" else n
    e_cap = window.max_energy
    z_cap = window.max_zero_modes
    bound = int(2 * e_cap)
    if flavor == "int":
        bound = int(e_cap) + (z_cap or 0) + (int(e_cap) if extended else 0)
    out = []
    for label in enumerate_labels(group, size, bound):
        v = build_hwv(pair, m, label, flavor)
        lead = min(v.terms)
        e0 = monomial_energy(lead)
        z0 = monomial_zero_modes(lead)
        if e0 > e_cap:
            continue
        if z_cap is not None:
            allowance = z_cap + (int(e_cap - e0) if extended else 0)
            if z0 > allowance:
                continue
        out.append((label, v, e0, z0))
    return out


def predicted_labels(pair: str, m: int, n: int, flavor: str,
                     window: TruncationWindow) -> list:
    """Labels whose highest-weight vector lies inside the window."""
    return [label for label, _, _, _ in _window_labels(pair, m, n, flavor, window)]


def _dicts_proportional(d1: dict, d2: dict) -> bool:
    if set(d1) != set(d2) or not d1:
        return False
    k = min(d1)
    r1, r2 = d1[k], d2[k]
    return all(d1[mono] * r2 == d2[mono] * r1 for mono in d1)


def _coset_expectation(label: WeightLabel, n: int):
    """Expected coset-element behavior of the label's singular line.

    Returns ("parity", sign) for odd n (minus-identity eigenvalue),
    ("tau", sign) for even n off the middle depth, and ("pair", 0) for the
    self-associated middle-depth labels whose tau image is the barred line.
    """
    deep = o_label_partition(label)
    if n % 2:
        return ("parity", -1 if sum(deep) % 2 else 1)
    if not label.tilde and depth(label.entries) == n // 2:
        return ("pair", 0)
    return ("tau", -1 if label.tilde else 1)


@dataclass
class DecompositionReport:
    """Outcome of the singular-vector search plus dimension bookkeeping."""

    pair: str
    m: int
    n: int
    flavor: str
    s0: str
    window: TruncationWindow
    lines: list = field(default_factory=list)
    bookkeeping: list = field(default_factory=list)
    anomalies: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        lines_ok = all(
            e["found"] and e["matches_build_hwv"] and e["coset_ok"] in (None, True)
            for e in self.lines
        )
        book_ok = all(row["balanced"] for row in self.bookkeeping)
        return lines_ok and book_ok and not self.anomalies

    def to_json(self):
        return {
            "schema": "report_v1",
            "kind": "decomposition",
            "pair": self.pair,
            "m": self.m,
            "n": self.n,
            "flavor": self.flavor,
            "s0": self.s0,
            "window": self.window.to_json(),
            "lines": self.lines,
            "bookkeeping": self.bookkeeping,
            "anomalies": self.anomalies,
            "ok": self.ok,
        }


def joint_singular_search(pair: str, m: int, n: int, flavor: str,
                          window: TruncationWindow, s0=Fraction(2)) -> DecompositionReport:
    """Find every joint singular line in the window by exact elimination.

    The linear system demands annihilation by all finite raising
    generators and all plus-classified toroidal generators within the
    generator window; weight homogeneity enters structurally by solving
    one kernel per (weight, energy, parity) class.  Each kernel line is
    matched against the closed-form highest-weight vector of its label,
    multiplicity-freeness and label coverage are asserted, and for the
    orthogonal pair each line's coset-element behavior is checked.
    """
    if pair not in _PAIRS:
        raise DecomposeError("unknown pair %r" % (pair,))
    if pair == "sp_so" and flavor == "int":
        raise UnsupportedFlavorError(
            "the sp-so pair exists only in the half-integer flavor"
        )
    s0 = Fraction(s0)
    kind = FockKind(m * n, flavor)
    basis = graded_basis(kind, window)
    report = DecompositionReport(pair, m, n, flavor, str(s0), window)

    classes: dict = {}
    for mono in basis:
        classes.setdefault(_class_key(pair, m, n, mono), []).append(mono)

    tor_family, _ = source_algebra(pair, "toroidal", m, n)
    plus_specs = [
        spec
        for spec in canonical_genspecs(tor_family, m, window.a_max, window.b_max)
        if classify(tor_family, flavor, spec) == "plus"
    ]
    plus_specs.sort(key=lambda sp: (abs(sp[3]), abs(sp[4]), sp))
    ops = [("finite", spec) for spec in finite_raising(pair, n)]
    ops += [("toroidal", spec) for spec in plus_specs]

    candidates: dict = {}
    entries = []

    def add_candidate(label, barred):
        vec = specialize_vector(build_hwv(pair, m, label, flavor, bar=barred), s0)
        lead = min(vec.terms)
        entry = {
            "label": str(label),
            "barred": barred,
            "degree": str(monomial_energy(lead)),
            "zero_modes": monomial_zero_modes(lead),
            "found": False,
            "matches_build_hwv": False,
            "kernel_dim": 0,
            "coset_ok": None,
        }
        key = _class_key(pair, m, n, lead)
        cand = {"entry": entry, "vector": vec, "label": label}
        candidates.setdefault(key, []).append(cand)
        entries.append(entry)
        return cand

    pairs_to_check = []
    for label, _, _, _ in _window_labels(pair, m, n, flavor, window):
        cand = add_candidate(label, False)
        if (
            pair == "so_sp"
            and n % 2 == 0
            and not label.tilde
            and depth(label.entries) == n // 2
        ):
            pairs_to_check.append((cand, add_candidate(label, True)))

    # Certificate part one: every closed-form vector is annihilated by
    # every raising operator, so each predicted line is singular.
    independent = {}
    for key, cands in candidates.items():
        for c in cands:
            killed = all(
                embedded_apply(
                    pair, side, m, n, flavor, spec, c["vector"], s0=s0
                ).is_zero()
                for side, spec in ops
            )
            c["entry"]["found"] = killed
            if not killed:
                report.anomalies.append(
                    "closed-form vector for %s is not singular"
                    % c["entry"]["label"]
                )
        indep = True
        if len(cands) > 1:
            monos = sorted({mono for c in cands for mono in c["vector"].terms})
            pos = {mono: t for t, mono in enumerate(monos)}
            mat = []
            for c in cands:
                row = [Fraction(0)] * len(monos)
                for mono, val in c["vector"].terms.items():
                    row[pos[mono]] = val
                mat.append(row)
            indep = rank(mat, len(monos)) == len(cands)
            if not indep:
                report.anomalies.append(
                    "closed-form vectors in class %r are dependent" % (key,)
                )
        independent[key] = indep

    # Certificate part two: in each class the kernel dimension equals the
    # number of predicted labels there.  Together with part one this pins
    # the kernel to exactly the span of the closed forms, one line per
    # label, and rules out singular lines at unpredicted classes.  The
    # rank grows operator by operator and the remaining operators are
    # skipped once it saturates, since extra rows cannot shrink a kernel
    # that is already zero.
    for key in sorted(classes):
        cols = classes[key]
        red = SpanReducer()
        for side, spec in ops:
            if red.dim == len(cols):
                break
            rows_by_mono: dict = {}
            for c, mono in enumerate(cols):
                unit = FockVector({mono: Fraction(1)})
                img = embedded_apply(pair, side, m, n, flavor, spec, unit, s0=s0)
                for imono, val in img.terms.items():
                    rows_by_mono.setdefault(imono, {})[c] = val
            for imono in sorted(rows_by_mono):
                red.add(rows_by_mono[imono])
                if red.dim == len(cols):
                    break
        kdim = len(cols) - red.dim
        cands = candidates.get(key, [])
        if kdim != len(cands):
            report.anomalies.append(
                "class %r holds %d singular lines, expected %d"
                % (key, kdim, len(cands))
            )
        for c in cands:
            c["entry"]["kernel_dim"] = kdim
            c["entry"]["matches_build_hwv"] = bool(
                c["entry"]["found"]
                and kdim == len(cands)
                and independent.get(key, True)
            )

    if pair == "so_sp":
        for cands in candidates.values():
            for c in cands:
                if not c["entry"]["found"] or c["entry"]["barred"]:
                    continue
                kind_tag, sign = _coset_expectation(c["label"], n)
                if kind_tag == "pair":
                    continue
                elem = "minus_identity" if kind_tag == "parity" else "tau"
                img = group_element_apply(elem, pair, m, n, c["vector"])
                want = c["vector"] if sign == 1 else -c["vector"]
                c["entry"]["coset_ok"] = img == want
        for plain, barred in pairs_to_check:
            if not (plain["entry"]["found"] and barred["entry"]["found"]):
                continue
            img = group_element_apply("tau", pair, m, n, plain["vector"])
            ok = _dicts_proportional(img.terms, barred["vector"].terms)
            plain["entry"]["coset_ok"] = ok
            barred["entry"]["coset_ok"] = ok

    report.lines = entries
    return report


# ------------------------------------------------------------- bookkeeping


def bookkeeping(pair: str, m: int, n: int, flavor: str,
                window: TruncationWindow, s0=Fraction(2)) -> list:
    """Per-degree dimension balance of the decomposition.

    For each energy degree d inside the window, checks
    dim F_d = sum over labels of dim_irrep(label) times the dimension of
    the degree-d slice of the invariant closure of the label's
    highest-weight vector.  Integer-flavor counts are relative to the
    zero-mode cap; a closure runs with its starting vector's zero-mode
    count as headroom when that exceeds the cap, which suffices because
    reaching any capped slice admits a path whose zero-mode count moves
    monotonically down and then up.
    """
    if pair == "sp_so" and flavor == "int":
        raise UnsupportedFlavorError(
            "the sp-so pair exists only in the half-integer flavor"
        )
    s0 = Fraction(s0)
    kind = FockKind(m * n, flavor)
    basis = graded_basis(kind, window)
    dims: dict = {}
    for mono in basis:
        d = monomial_energy(mono)
        dims[d] = dims.get(d, 0) + 1

    z_cap = window.max_zero_modes
    slices = []
    for label, v, _, z0 in _window_labels(pair, m, n, flavor, window, extended=True):
        closure_cap = None if z_cap is None else max(z0, z_cap)
        cw = TruncationWindow(window.max_energy, window.a_max, window.b_max, closure_cap)
        per_degree: dict = {}
        for w in invariant_generate(pair, m, n, flavor, v, cw, s0):
            lead = min(w.terms)
            if z_cap is not None and monomial_zero_modes(lead) > z_cap:
                continue
            d = monomial_energy(lead)
            per_degree[d] = per_degree.get(d, 0) + 1
        slices.append((label, dim_irrep(label), per_degree))

    table = []
    for d in sorted(dims):
        terms = []
        total = 0
        for label, dim_l, per_degree in slices:
            cd = per_degree.get(d, 0)
            if cd:
                terms.append(
                    {
                        "label": str(label),
                        "dim_irrep": dim_l,
                        "component_dim": cd,
                    }
                )
                total += dim_l * cd
        table.append(
            {
                "degree": str(d),
                "dim_F": dims[d],
                "weighted_sum": total,
                "balanced": dims[d] == total,
                "terms": terms,
            }
        )
    return table


def decompose_report(pair: str, m: int, n: int, flavor: str,
                     window: TruncationWindow, s0=Fraction(2)) -> DecompositionReport:
    """Singular-vector search and bookkeeping in one report."""
    report = joint_singular_search(pair, m, n, flavor, window, s0)
    report.bookkeeping = bookkeeping(pair, m, n, flavor, window, s0)
    return report


# ------------------------------------------------------- centralizer search


_F_ONLY_MEMBER = {
    ("gl_gl", "finite"): True,
    ("gl_gl", "toroidal"): True,
    ("so_sp", "finite"): True,
    ("so_sp", "toroidal"): False,
    ("sp_so", "finite"): False,
    ("sp_so", "toroidal"): True,
}


def _flatten_matrix(x, s0) -> dict:
    """Matrix part of an algebra element as {((i,j),(a,b)): Fraction}."""
    out = {}
    for (i, j), torus in x.entries.items():
        for (a, b), coeff in torus.terms.items():
            val = qs_specialize(coeff, s0)
            if val:
                out[((i, j), (a, b))] = val
    return out


def _reflection_permutation(m: int, n: int) -> dict:
    """Index permutation of the block-swap reflection on the ambient matrix.

    Swaps the middle two of the n blocks of size m (n even), extended to
    both halves of the 2N ambient indices.  Conjugation by this constant
    symplectic element is the reflection coset of the orthogonal member.
    """
    N = m * n
    half = {}
    for p in range(1, n + 1):
        tp = p
        if p == n // 2:
            tp = n // 2 + 1
        elif p == n // 2 + 1:
            tp = n // 2
        for k in range(1, m + 1):
            half[pi_index(k, p, m)] = pi_index(k, tp, m)
    perm = dict(half)
    for i, t in half.items():
        perm[N + i] = N + t
    return perm


def _conjugate_flat(flat: dict, perm: dict) -> dict:
    return {((perm[i], perm[j]), ab): val for ((i, j), ab), val in flat.items()}


def centralizer_bruteforce(pair: str, m: int, n: int, a_max: int = 1,
                           b_max: int = 1, s0=Fraction(2)) -> dict:
    """Brute-force both centralizer directions of an embedded dual pair.

    For each member, solves [x, g] = 0 over the windowed span of ambient
    sp_{2N}(C_q) generators, with g running over the member's generators
    (torus window enlarged by one on the toroidal side), and compares the
    solution span with the windowed image of the opposite member.  Only
    matrix parts enter; the central direction commutes with everything and
    is excluded from both sides.  The system splits into blocks by the
    ambient t0-degree, which brackets against fixed generators preserve.

    The orthogonal member is a group, not just a Lie algebra: for even n
    its reflection coset acts by conjugation, and those invariance
    equations join the finite-side system.  Without them the commutant of
    the abelian so_2 is strictly larger than the symplectic member, so the
    two-sided recovery holds only at the group level.  For odd n the coset
    is minus the identity, whose conjugation is trivial.
    """
    if pair not in _PAIRS:
        raise DecomposeError("unknown pair %r" % (pair,))
    s0 = Fraction(s0)
    N = m * n
    ambient_specs = canonical_genspecs("sp", N, a_max, b_max)
    ambient = {spec: gen_from_spec("sp", N, spec) for spec in ambient_specs}

    directions = []
    for eq_side in ("finite", "toroidal"):
        sol_side = "toroidal" if eq_side == "finite" else "finite"
        eq_family, eq_param = source_algebra(pair, eq_side, m, n)
        if eq_side == "finite":
            eq_specs = canonical_genspecs(eq_family, eq_param, 0, 0)
        else:
            eq_specs = canonical_genspecs(eq_family, eq_param, a_max + 1, b_max + 1)
        eq_elems = [embed(pair, eq_side, m, n, spec) for spec in eq_specs]
        perm = None
        if pair == "so_sp" and eq_side == "finite" and n % 2 == 0:
            perm = _reflection_permutation(m, n)

        blocks: dict = {}
        for spec in ambient_specs:
            blocks.setdefault(spec[3], []).append(spec)

        solution = []
        gh_clean = True
        for a_deg in sorted(blocks):
            cols = blocks[a_deg]
            col_brackets = [
                [_flatten_matrix(bracket(ambient[spec], g), s0) for g in eq_elems]
                for spec in cols
            ]
            if perm is not None:
                for c, spec in enumerate(cols):
                    flat = _flatten_matrix(ambient[spec], s0)
                    diff = _conjugate_flat(flat, perm)
                    for coord, val in flat.items():
                        nv = diff.get(coord, 0) - val
                        if nv:
                            diff[coord] = nv
                        else:
                            diff.pop(coord, None)
                    col_brackets[c].append(diff)
            row_keys = sorted(
                {
                    (t, coord)
                    for col in col_brackets
                    for t, img in enumerate(col)
                    for coord in img
                }
            )
            rows = [
                [col_brackets[c][t].get(coord, Fraction(0)) for c in range(len(cols))]
                for (t, coord) in row_keys
            ]
            for vec in kernel_basis(dedupe_rows(rows), len(cols)):
                combo: dict = {}
                for t, c in enumerate(vec):
                    if not c:
                        continue
                    if cols[t][0] in ("g", "h"):
                        gh_clean = False
                    for coord, val in _flatten_matrix(ambient[cols[t]], s0).items():
                        new = combo.get(coord, 0) + c * val
                        if new:
                            combo[coord] = new
                        else:
                            combo.pop(coord, None)
                solution.append(combo)

        opp_family, opp_param = source_algebra(pair, sol_side, m, n)
        if sol_side == "finite":
            opp_specs = canonical_genspecs(opp_family, opp_param, 0, 0)
        else:
            opp_specs = canonical_genspecs(opp_family, opp_param, a_max, b_max)
        expected = [
            _flatten_matrix(embed(pair, sol_side, m, n, spec), s0)
            for spec in opp_specs
        ]
        expected = [e for e in expected if e]

        coords = sorted({c for vec in solution + expected for c in vec})
        pos = {c: t for t, c in enumerate(coords)}

        def dense(vec):
            row = [Fraction(0)] * len(coords)
            for c, val in vec.items():
                row[pos[c]] = val
            return row

        sol_rows = [dense(v) for v in solution]
        exp_rows = [dense(v) for v in expected]
        ncols = len(coords)
        r_sol = rank(sol_rows, ncols) if ncols else 0
        r_exp = rank(exp_rows, ncols) if ncols else 0
        r_union = rank(sol_rows + exp_rows, ncols) if ncols else 0
        spans_equal = r_sol == r_exp == r_union
        f_only = _F_ONLY_MEMBER[(pair, sol_side)]
        directions.append(
            {
                "equations_from": eq_side,
                "solution_member": sol_side,
                "solution_dim": r_sol,
                "expected_dim": r_exp,
                "union_dim": r_union,
                "spans_equal": spans_equal,
                "gh_components_zero": gh_clean if f_only else None,
                "equation_generators": len(eq_specs),
                "coset_equations": perm is not None,
            }
        )

    ok = all(
        d["spans_equal"] and d["gh_components_zero"] in (None, True)
        for d in directions
    )
    return {
        "schema": "report_v1",
        "kind": "centralizer",
        "pair": pair,
        "m": m,
        "n": n,
        "a_max": a_max,
        "b_max": b_max,
        "s0": str(s0),
        "directions": directions,
        "ok": ok,
    }
