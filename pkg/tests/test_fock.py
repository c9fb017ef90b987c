"""Weyl-algebra Fock modules and the quadratic oscillator action."""

import importlib.util
import os
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qdual.qfield import HALF, ONE, QScalar, omega, qs_qpow
from qdual.algebras import UnsupportedFlavorError, bracket, gen_from_spec
from qdual.fock import (
    PSI,
    PSIBAR,
    EnergyReport,
    FockError,
    FockKind,
    FockVector,
    embedded_apply,
    energy,
    format_monomial,
    is_creation,
    mode,
    mode_apply,
    monomial_energy,
    parse_monomial,
    rho_apply,
    rho_element_apply,
    rho_support,
)

_ORACLE_PATH = os.path.join(os.path.dirname(__file__), "oracles", "fock_oracle.py")
_spec = importlib.util.spec_from_file_location("fock_oracle", _ORACLE_PATH)
fock_oracle = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(fock_oracle)

VAC = FockVector.vacuum()
H = Fraction(1, 2)


def vec(*modes, coeff=ONE):
    return FockVector({tuple(sorted(modes)): coeff})


# --------------------------------------------------------------- mode algebra


def test_mode_apply_single_commutator():
    # psibar_1(1/2) applied to psi_1(-1/2)|0> gives |0>
    k = FockKind(1, "half")
    v = vec(mode(PSI, 1, -H))
    assert mode_apply(k, mode(PSIBAR, 1, H), v) == VAC


def test_mode_apply_annihilates_vacuum():
    k = FockKind(1, "half")
    assert mode_apply(k, mode(PSI, 1, H), VAC).is_zero()


def test_mode_apply_zero_modes_integer():
    # psibar_1(0) psi_1(0)|0> = |0> in the int flavor
    k = FockKind(1, "int")
    v = mode_apply(k, mode(PSI, 1, 0), VAC)
    assert v == vec(mode(PSI, 1, 0))
    assert mode_apply(k, mode(PSIBAR, 1, 0), v) == VAC


def test_mode_apply_flavor_mismatch():
    with pytest.raises(FockError):
        mode_apply(FockKind(1, "int"), mode(PSI, 1, -H), VAC)
    with pytest.raises(FockError):
        mode_apply(FockKind(1, "half"), mode(PSI, 1, -1), VAC)
    with pytest.raises(FockError):
        mode_apply(FockKind(1, "half"), mode(PSI, 2, -H), VAC)


def test_creation_classification():
    assert is_creation(mode(PSI, 1, -H), "half")
    assert not is_creation(mode(PSI, 1, H), "half")
    assert is_creation(mode(PSI, 1, 0), "int")
    assert not is_creation(mode(PSIBAR, 1, 0), "int")


def test_bosonic_symmetry_of_creations():
    k = FockKind(2, "half")
    a, b = mode(PSI, 2, -H), mode(PSIBAR, 1, -Fraction(3, 2))
    v1 = mode_apply(k, a, mode_apply(k, b, VAC))
    v2 = mode_apply(k, b, mode_apply(k, a, VAC))
    assert v1 == v2 and not v1.is_zero()


# ------------------------------------------------------------------ rho action


def test_rho_raising_kills_vacuum():
    k = FockKind(1, "half")
    assert rho_apply(k, ("f", 1, 1, 1, 0), VAC).is_zero()


def test_rho_g_creates_pair():
    k = FockKind(1, "half")
    got = rho_apply(k, ("g", 1, 1, -1, 0), VAC)
    assert got == vec(mode(PSI, 1, -H), mode(PSI, 1, -H))


def test_rho_f_diagonal_constant_integer():
    # rho(f_11(0,b))|0> = (1/2 - omega(b))|0> in the int flavor
    k = FockKind(1, "int")
    for b in (1, 2, 3):
        got = rho_apply(k, ("f", 1, 1, 0, b), VAC)
        assert got == VAC.scale_const(HALF - omega("int", b))


def test_rho_f_diagonal_constant_half():
    k = FockKind(1, "half")
    for b in (1, 2):
        got = rho_apply(k, ("f", 1, 1, 0, b), VAC)
        assert got == VAC.scale_const(-omega("half", b))


def test_rho_central():
    k = FockKind(2, "half")
    v = vec(mode(PSI, 1, -H), coeff=QScalar.parse("s+1"))
    assert rho_apply(k, ("c",), v) == v.scale_const(-ONE)


def test_rho_specialized_matches_symbolic():
    k = FockKind(2, "half")
    v = vec(mode(PSI, 1, -H), mode(PSIBAR, 2, -H)) + VAC
    for spec in [("f", 1, 2, 1, 1), ("g", 1, 1, -1, 2), ("h", 2, 1, -2, -1)]:
        sym = rho_apply(k, spec, v)
        num = rho_apply(k, spec, FockVector({m: c.specialize(2) for m, c in v.terms.items()}), s0=2)
        assert num == FockVector({m: c.specialize(2) for m, c in sym.terms.items()})


# ------------------------------------------------------------ embedded action


def test_embedded_toroidal_diagonal_on_vacuum():
    # E_11 t1^b at m = n = 1 reduces to rho(f_11(0,b)) with c acting as -1
    for b in (1, 2):
        got = embedded_apply("gl_gl", "toroidal", 1, 1, "half", ("E", 1, 1, 0, b), VAC)
        assert got == VAC.scale_const(-omega("half", b))


def test_embedded_finite_diagonal_shift_integer():
    # the -m/2 shift cancels the half-sum constant on the vacuum
    got = embedded_apply("gl_gl", "finite", 1, 1, "int", ("E", 1, 1), VAC)
    assert got.is_zero()
    got2 = embedded_apply("gl_gl", "finite", 2, 1, "int", ("E", 1, 1), VAC)
    assert got2.is_zero()


def test_embedded_finite_so_annihilates_vacuum():
    got = embedded_apply("so_sp", "finite", 1, 2, "half", ("e", 1, 2), VAC)
    assert got.is_zero()


def test_embedded_central_acts_minus_n():
    for n in (1, 2):
        got = embedded_apply("gl_gl", "toroidal", 1, n, "half", ("c",), VAC)
        assert got == VAC.scale_const(QScalar.from_int(-n))


def test_embedded_sp_so_integer_rejected():
    with pytest.raises(UnsupportedFlavorError):
        embedded_apply("sp_so", "toroidal", 2, 1, "int", ("e", 1, 1, 0, 1), VAC)


# ---------------------------------------------------------------- energy


def test_energy_vacuum():
    rep = energy(VAC)
    assert rep.energy == 0 and rep.length == 0 and rep.homogeneous


def test_energy_two_modes():
    v = vec(mode(PSI, 1, -Fraction(3, 2)), mode(PSIBAR, 2, -H))
    rep = energy(v)
    assert rep.energy == 2 and rep.length == 2 and rep.zero_modes == 0


def test_energy_zero_modes():
    v = vec(mode(PSI, 1, 0), mode(PSI, 1, 0))
    rep = energy(v)
    assert rep.energy == 0 and rep.zero_modes == 2


def test_energy_mixed_components():
    v = vec(mode(PSI, 1, -1)) + VAC
    rep = energy(v)
    assert not rep.homogeneous and rep.energy is None
    assert sorted(rep.components) == [0, 1]


# ---------------------------------------------------------------- literals


def test_monomial_literals():
    mono = (mode(PSI, 1, -H), mode(PSIBAR, 2, -Fraction(3, 2)))
    assert format_monomial(mono) == "psi[1](-1/2)*psibar[2](-3/2)|0>"
    assert format_monomial(()) == "|0>"
    assert parse_monomial("psi[1](-1/2)*psibar[2](-3/2)|0>") == tuple(sorted(mono))
    assert parse_monomial("|0>") == ()
    with pytest.raises(FockError):
        parse_monomial("psi[1](-1/2)")


def test_vector_str_and_json():
    v = vec(mode(PSI, 1, -H), coeff=QScalar.from_int(2)) + VAC
    assert str(v) == "1*|0> + 2*psi[1](-1/2)|0>"
    js = v.to_json()
    assert js == [
        {"coeff": "1", "modes": []},
        {"coeff": "2", "modes": [{"species": "psi", "index": 1, "level": "-1/2"}]},
    ]


# ----------------------------------------------------------- property tests


def coeffs():
    return st.builds(
        lambda k, e: QScalar.from_int(k) * QScalar.s_power(e),
        st.integers(-3, 3).filter(lambda k: k != 0),
        st.integers(-1, 1),
    )


def monomials(N, flavor, max_modes=2):
    if flavor == "half":
        levels = [-H, -Fraction(3, 2)]
    else:
        levels = [Fraction(-1), Fraction(-2)]

    def build(picks):
        out = []
        for species, index, li in picks:
            level = Fraction(0) if li is None else levels[li]
            if li is None and (species != PSI or flavor != "int"):
                level = levels[0]
            out.append((species, index, level))
        return tuple(sorted(out))

    pick = st.tuples(
        st.sampled_from([PSI, PSIBAR]),
        st.integers(1, N),
        st.one_of(st.none(), st.integers(0, len(levels) - 1)),
    )
    return st.lists(pick, min_size=0, max_size=max_modes).map(build)


def fock_vectors(N, flavor):
    term = st.tuples(monomials(N, flavor), coeffs())
    return st.lists(term, min_size=1, max_size=2).map(
        lambda ts: FockVector({m: c for m, c in ts})
    )


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_representation_property(data):
    flavor = data.draw(st.sampled_from(["half", "int"]))
    N = data.draw(st.integers(1, 2))
    kind = FockKind(N, flavor)

    def draw_spec():
        fam = data.draw(st.sampled_from(["f", "g", "h"]))
        i = data.draw(st.integers(1, N))
        j = data.draw(st.integers(1, N))
        a = data.draw(st.integers(-2, 2))
        b = data.draw(st.integers(-2, 2))
        return (fam, i, j, a, b)

    sx, sy = draw_spec(), draw_spec()
    v = data.draw(fock_vectors(N, flavor))
    x = gen_from_spec("sp", N, sx)
    y = gen_from_spec("sp", N, sy)
    lhs = rho_element_apply(kind, bracket(x, y), v)
    rhs = rho_apply(kind, sx, rho_apply(kind, sy, v)) - rho_apply(
        kind, sy, rho_apply(kind, sx, v)
    )
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_locality_support_matches_window_scan(data):
    flavor = data.draw(st.sampled_from(["half", "int"]))
    N = data.draw(st.integers(1, 2))
    kind = FockKind(N, flavor)
    fam = data.draw(st.sampled_from(["f", "g", "h"]))
    spec = (
        fam,
        data.draw(st.integers(1, N)),
        data.draw(st.integers(1, N)),
        data.draw(st.integers(-3, 3)),
        data.draw(st.integers(-2, 2)),
    )
    mono = data.draw(monomials(N, flavor, max_modes=3))
    v = FockVector({mono: ONE})
    scanned = fock_oracle.scan_support(kind, spec, v, window=8)
    computed = rho_support(kind, spec, mono)
    assert list(scanned) == list(computed)
    assert rho_apply(kind, spec, v) == fock_oracle.rho_scan(kind, spec, v, window=8)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_embedded_actions_commute(data):
    pair = data.draw(st.sampled_from(["gl_gl", "so_sp", "sp_so"]))
    flavor = data.draw(st.sampled_from(["half", "int"]))
    if pair == "sp_so":
        flavor = "half"
    m, n = data.draw(st.sampled_from([(1, 1), (1, 2), (2, 1)]))
    fin_kinds = {"gl_gl": ["E"], "so_sp": ["e"], "sp_so": ["f", "g", "h"]}[pair]
    tor_kinds = {"gl_gl": ["E"], "so_sp": ["f", "g", "h"], "sp_so": ["e"]}[pair]
    fin_size = {"gl_gl": n, "so_sp": n, "sp_so": n}[pair]
    fin = (
        data.draw(st.sampled_from(fin_kinds)),
        data.draw(st.integers(1, fin_size)),
        data.draw(st.integers(1, fin_size)),
    )
    tor = (
        data.draw(st.sampled_from(tor_kinds)),
        data.draw(st.integers(1, m)),
        data.draw(st.integers(1, m)),
        data.draw(st.integers(-1, 1)),
        data.draw(st.integers(-1, 1)),
    )
    v = data.draw(fock_vectors(m * n, flavor))
    ft = embedded_apply(
        pair, "finite", m, n, flavor, fin,
        embedded_apply(pair, "toroidal", m, n, flavor, tor, v),
    )
    tf = embedded_apply(
        pair, "toroidal", m, n, flavor, tor,
        embedded_apply(pair, "finite", m, n, flavor, fin, v),
    )
    assert ft == tf


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_energy_shift_is_minus_a(data):
    flavor = data.draw(st.sampled_from(["half", "int"]))
    N = data.draw(st.integers(1, 2))
    kind = FockKind(N, flavor)
    fam = data.draw(st.sampled_from(["f", "g", "h"]))
    a = data.draw(st.integers(-2, 2))
    spec = (fam, data.draw(st.integers(1, N)), data.draw(st.integers(1, N)), a,
            data.draw(st.integers(-1, 1)))
    mono = data.draw(monomials(N, flavor, max_modes=2))
    out = rho_apply(kind, spec, FockVector({mono: ONE}))
    if out.is_zero():
        return
    rep = energy(out)
    assert rep.homogeneous
    assert rep.energy == monomial_energy(mono) - a
