"""Toroidal Lie algebra construction, bracket cocycle, embeddings, grading."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from qdual.qfield import HALF, ONE, QScalar, qs_mul, qs_qpow
from qdual.torus import TorusElement
from qdual.algebras import (
    AlgebraError,
    GradedLabel,
    ToroidalElement,
    UnsupportedFlavorError,
    bracket,
    canonical_genspecs,
    central_element,
    classify,
    cocycle_scale,
    decompose_element,
    element_labels,
    embed,
    embed_element,
    embed_generators,
    format_genspec,
    gen,
    gen_from_spec,
    graded_label,
    matrix_unit,
    membership,
    parse_genspec,
    simple_roots,
    source_algebra,
    sp_decompose,
    zero_element,
)


def mono(a, b, coeff=ONE):
    return TorusElement.monomial(a, b, coeff)


# ---------------------------------------------------------------- generators


def test_gen_so3_diagonal():
    # e_{1,1}(0,0) in so_3 is E_{1,1} - E_{3,3}
    got = gen("e", 1, 1, 0, 0, 3)
    assert got == matrix_unit(3, 1, 1) + matrix_unit(3, 3, 3, coeff=-ONE)


def test_gen_f_sp4():
    # f_{1,2}(1,1) in sp_4 is E_{1,2}t0t1 - q^{-1} E_{4,3}t0 t1^{-1}
    got = gen("f", 1, 2, 1, 1, 2)
    want = ToroidalElement(4, {
        (1, 2): mono(1, 1),
        (4, 3): mono(1, -1, -qs_qpow(-1)),
    })
    assert got == want


def test_gen_g_diagonal_doubles():
    # g_{1,1}(0,0) in sp_2 collapses to 2 E_{1,2}
    assert gen("g", 1, 1, 0, 0, 1) == matrix_unit(2, 1, 2, coeff=QScalar.from_int(2))


def test_gen_h_diagonal():
    assert gen("h", 1, 1, 0, 0, 1) == matrix_unit(2, 2, 1, coeff=QScalar.from_int(-2))


def test_gen_so_antidiagonal_vanishes():
    # e_{i,m+1-i}(a,0) = 0
    assert gen("e", 1, 2, 5, 0, 2).is_zero()
    assert not gen("e", 1, 2, 5, 1, 2).is_zero()


def test_gen_index_errors():
    with pytest.raises(AlgebraError):
        gen("f", 0, 1, 0, 0, 2)
    with pytest.raises(AlgebraError):
        gen("E", 1, 3, 0, 0, 2)
    with pytest.raises(AlgebraError):
        gen("x", 1, 1, 0, 0, 2)


def test_gen_from_spec_kind_check():
    assert gen_from_spec("sp", 2, ("f", 1, 2, 0, 0)) == gen("f", 1, 2, 0, 0, 2)
    assert gen_from_spec("sp", 2, ("c",)) == central_element(4)
    with pytest.raises(AlgebraError):
        gen_from_spec("gl", 2, ("f", 1, 2, 0, 0))


# ------------------------------------------------------------------- bracket


def test_bracket_cocycle_example():
    # [E_{1,2}t0t1, E_{2,1}t0^{-1}t1^{-1}] = q^{-1}(E_{1,1}-E_{2,2}) + (1/2)q^{-1}c
    x = matrix_unit(2, 1, 2, 1, 1)
    y = matrix_unit(2, 2, 1, -1, -1)
    qinv = qs_qpow(-1)
    want = ToroidalElement(
        2,
        {(1, 1): mono(0, 0, qinv), (2, 2): mono(0, 0, -qinv)},
        HALF * qinv,
    )
    assert bracket(x, y) == want


def test_bracket_alternating():
    x = gen("f", 1, 2, 1, -1, 2) + gen("g", 1, 1, 0, 2, 2).scale(qs_qpow(1))
    assert bracket(x, x).is_zero()


def test_bracket_disjoint_supports():
    assert bracket(matrix_unit(2, 1, 1), matrix_unit(2, 2, 2)).is_zero()


def test_bracket_size_mismatch():
    with pytest.raises(AlgebraError):
        bracket(matrix_unit(2, 1, 1), matrix_unit(3, 1, 1))


def test_central_element_is_central():
    c = central_element(4)
    x = gen("f", 1, 2, 1, -1, 2)
    assert bracket(c, x).is_zero()
    assert bracket(x, c).is_zero()


def test_bracket_antisymmetric_central_part():
    x = matrix_unit(2, 1, 2, 2, 3)
    y = matrix_unit(2, 2, 1, -2, -3)
    assert bracket(x, y).central == -bracket(y, x).central
    assert bracket(x, y).central == qs_qpow(-6)


# ---------------------------------------------------------------- membership


def test_membership_so_generators():
    for (i, j, a, b) in [(1, 2, 3, -2), (2, 2, 0, 1), (4, 1, -1, 0)]:
        assert membership(gen("e", i, j, a, b, 4), "so")


def test_membership_sp_generators():
    for kind in ("f", "g", "h"):
        for (i, j, a, b) in [(1, 2, 1, 1), (2, 1, -2, 0), (1, 1, 0, 3)]:
            assert membership(gen(kind, i, j, a, b, 2), "sp")


def test_membership_rejects_bare_unit():
    # E_{1,1}t0 on its own fails the so_2 relation
    assert not membership(matrix_unit(2, 1, 1, 1, 0), "so")


def test_membership_zero():
    assert membership(zero_element(3), "so")
    assert membership(zero_element(4), "sp")


def test_membership_odd_sp_ambient():
    with pytest.raises(AlgebraError):
        membership(matrix_unit(3, 1, 1), "sp")


# ---------------------------------------------------------------- embeddings


def test_embed_gl_gl_single_site():
    got = embed("gl_gl", "finite", 1, 1, ("E", 1, 1))
    assert got == gen("f", 1, 1, 0, 0, 1)


def test_embed_gl_gl_toroidal_m2_n2():
    # E_{1,2}t0t1 -> f_{pi(1,k),pi(2,k)}(1,1) summed over k, pi(i,r)=i+(r-1)m
    got = embed("gl_gl", "toroidal", 2, 2, ("E", 1, 2, 1, 1))
    want = gen("f", 1, 2, 1, 1, 4) + gen("f", 3, 4, 1, 1, 4)
    assert got == want


def test_embed_gl_gl_finite_m2_n2():
    got = embed("gl_gl", "finite", 2, 2, ("E", 1, 2))
    want = gen("f", 1, 3, 0, 0, 4) + gen("f", 2, 4, 0, 0, 4)
    assert got == want


def test_embed_sp_so_toroidal_correction_term():
    m, n, a, b = 1, 2, 1, 2
    got = embed("sp_so", "toroidal", m, n, ("e", 1, 1, a, b))
    want = zero_element(4)
    for k in (1, 2):
        want = want + gen("f", k, k, a, b, 2)
        want = want + gen("f", k, k, a, -b, 2).scale(-qs_qpow(-a * b))
    assert got == want


def test_embed_central_lift():
    got = embed("gl_gl", "toroidal", 2, 3, ("c",))
    assert got == central_element(12, QScalar.from_int(3))
    with pytest.raises(AlgebraError):
        embed("gl_gl", "finite", 2, 3, ("c",))


def test_embed_domain_errors():
    with pytest.raises(AlgebraError):
        embed("gl_gl", "finite", 2, 2, ("E", 1, 2, 1, 0))
    with pytest.raises(AlgebraError):
        embed("so_sp", "toroidal", 2, 2, ("e", 1, 2, 0, 0))
    with pytest.raises(AlgebraError):
        embed("gl_gl", "toroidal", 2, 2, ("E", 1, 3, 0, 0))


def test_embedded_images_live_in_sp():
    for pair, side, spec in [
        ("gl_gl", "finite", ("E", 1, 2)),
        ("gl_gl", "toroidal", ("E", 2, 1, 1, -1)),
        ("so_sp", "finite", ("e", 1, 2)),
        ("so_sp", "toroidal", ("g", 1, 2, 0, 1)),
        ("sp_so", "finite", ("g", 1, 2)),
        ("sp_so", "toroidal", ("e", 1, 1, 2, 1)),
    ]:
        assert membership(embed(pair, side, 2, 2, spec), "sp"), (pair, side, spec)


# ----------------------------------------------------------- classify/labels


def test_classify_gl_examples():
    assert classify("gl", "half", ("E", 1, 2, 0, 5)) == "plus"
    assert classify("gl", "int", ("E", 2, 1, 0, -3)) == "minus"
    assert classify("gl", "int", ("E", 1, 1, 0, 2)) == "zero"
    assert classify("gl", "half", ("c",)) == "zero"
    assert classify("gl", "half", ("E", 2, 1, 1, 0)) == "plus"


def test_classify_sp_flavor_swap():
    assert classify("sp", "int", ("h", 1, 2, 0, 1)) == "plus"
    assert classify("sp", "int", ("g", 1, 2, 0, 1)) == "minus"
    assert classify("sp", "half", ("g", 1, 2, 0, 1)) == "plus"
    assert classify("sp", "half", ("h", 1, 2, 0, 1)) == "minus"
    assert classify("sp", "half", ("f", 2, 1, 0, 4)) == "minus"


def test_classify_so_flavor_restriction():
    assert classify("so", "half", ("e", 1, 2, 0, 1)) == "plus"
    with pytest.raises(UnsupportedFlavorError):
        classify("so", "int", ("e", 1, 2, 0, 0))


def test_graded_label_examples():
    assert graded_label("gl", 2, ("E", 1, 2, 3, 1)) == GradedLabel((1, -1), 3)
    assert graded_label("sp", 2, ("g", 1, 2, 4, -1)) == GradedLabel((1, 1), 4)
    assert graded_label("so", 2, ("e", 1, 2, 7, 3)) == GradedLabel((2,), 7)
    assert graded_label("sp", 3, ("c",)) == GradedLabel((0, 0, 0), 0)
    assert graded_label("so", 5, ("e", 3, 4, 1, 0)) == GradedLabel((0, 1), 1)


def _nonneg_span(root, base, bound=8):
    if not any(root):
        return False
    for coeffs in itertools.product(range(bound + 1), repeat=len(base)):
        tot = [0] * len(root)
        for c, beta in zip(coeffs, base):
            for k, v in enumerate(beta):
                tot[k] += c * v
        if tuple(tot) == tuple(root):
            return True
    return False


def _cone_classify(label, base):
    if label.t0_degree > 0:
        return "plus"
    if label.t0_degree < 0:
        return "minus"
    if not any(label.root):
        return "zero"
    if _nonneg_span(label.root, base):
        return "plus"
    neg = tuple(-v for v in label.root)
    assert _nonneg_span(neg, base), label
    return "minus"


@pytest.mark.parametrize("family,flavor,m", [
    ("gl", "int", 3), ("gl", "half", 3),
    ("sp", "int", 2), ("sp", "half", 2),
    ("so", "half", 2), ("so", "half", 3),
    ("so", "half", 4), ("so", "half", 5),
])
def test_classify_matches_cone_order(family, flavor, m):
    base = simple_roots(family, m, flavor)
    for spec in canonical_genspecs(family, m, 1, 1, include_central=True):
        got = classify(family, flavor, spec)
        want = _cone_classify(graded_label(family, m, spec), base)
        assert got == want, (family, flavor, spec)


# ----------------------------------------------------------- property checks


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_jacobi_gl(data):
    n = data.draw(st.integers(1, 3))

    def g():
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(1, n))
        a = data.draw(st.integers(-2, 2))
        b = data.draw(st.integers(-2, 2))
        return gen("E", i, j, a, b, n)

    x, y, z = g(), g(), g()
    lhs = (
        bracket(x, bracket(y, z))
        + bracket(y, bracket(z, x))
        + bracket(z, bracket(x, y))
    )
    assert lhs.is_zero()


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_jacobi_sp(data):
    m = data.draw(st.integers(1, 2))

    def g():
        kind = data.draw(st.sampled_from(["f", "g", "h"]))
        i = data.draw(st.integers(1, m))
        j = data.draw(st.integers(1, m))
        a = data.draw(st.integers(-2, 2))
        b = data.draw(st.integers(-2, 2))
        return gen(kind, i, j, a, b, m)

    x, y, z = g(), g(), g()
    lhs = (
        bracket(x, bracket(y, z))
        + bracket(y, bracket(z, x))
        + bracket(z, bracket(x, y))
    )
    assert lhs.is_zero()


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_membership_closure(data):
    tag = data.draw(st.sampled_from(["so", "sp"]))
    m = data.draw(st.integers(1, 3))
    kinds = ["e"] if tag == "so" else ["f", "g", "h"]

    def g():
        kind = data.draw(st.sampled_from(kinds))
        i = data.draw(st.integers(1, m))
        j = data.draw(st.integers(1, m))
        a = data.draw(st.integers(-2, 2))
        b = data.draw(st.integers(-2, 2))
        return gen(kind, i, j, a, b, m)

    x, y = g(), g()
    assert membership(bracket(x, y), tag)


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_graded_label_additive_under_bracket(data):
    family = data.draw(st.sampled_from(["gl", "so", "sp"]))
    m = data.draw(st.integers(2, 3))
    kinds = _kinds_for(family)

    def draw_spec():
        kind = data.draw(st.sampled_from(kinds))
        i = data.draw(st.integers(1, m))
        j = data.draw(st.integers(1, m))
        a = data.draw(st.integers(-2, 2))
        b = data.draw(st.integers(-2, 2))
        return (kind, i, j, a, b)

    sx, sy = draw_spec(), draw_spec()
    x = gen_from_spec(family, m, sx)
    y = gen_from_spec(family, m, sy)
    z = bracket(x, y)
    if z.is_zero():
        return
    want = graded_label(family, m, sx) + graded_label(family, m, sy)
    assert element_labels(family, m, z) <= {want}


def _kinds_for(family):
    return {"gl": ["E"], "so": ["e"], "sp": ["f", "g", "h"]}[family]


@pytest.mark.parametrize("pair,m,n", [
    ("gl_gl", 1, 2), ("gl_gl", 2, 1),
    ("so_sp", 1, 2), ("so_sp", 2, 1),
    ("sp_so", 1, 2), ("sp_so", 2, 1),
])
def test_dual_pair_generator_commutation(pair, m, n):
    fin_family, fin_param = source_algebra(pair, "finite", m, n)
    tor_family, tor_param = source_algebra(pair, "toroidal", m, n)
    fin_specs = [
        s[:3] for s in canonical_genspecs(fin_family, fin_param, 0, 0)
    ]
    tor_specs = canonical_genspecs(tor_family, tor_param, 1, 1)
    for fs in fin_specs:
        xf = embed(pair, "finite", m, n, fs)
        for ts in tor_specs:
            xt = embed(pair, "toroidal", m, n, ts)
            assert bracket(xf, xt).is_zero(), (pair, fs, ts)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_embeddings_are_lie_homomorphisms(data):
    pair = data.draw(st.sampled_from(["gl_gl", "so_sp", "sp_so"]))
    side = data.draw(st.sampled_from(["finite", "toroidal"]))
    m = data.draw(st.integers(1, 2))
    n = data.draw(st.integers(1, 2))
    family, param = source_algebra(pair, side, m, n)
    kinds = _kinds_for(family)

    def draw_spec():
        kind = data.draw(st.sampled_from(kinds))
        i = data.draw(st.integers(1, param))
        j = data.draw(st.integers(1, param))
        if side == "finite":
            return (kind, i, j, 0, 0)
        a = data.draw(st.integers(-1, 1))
        b = data.draw(st.integers(-1, 1))
        return (kind, i, j, a, b)

    sx, sy = draw_spec(), draw_spec()
    x = gen_from_spec(family, param, sx)
    y = gen_from_spec(family, param, sy)
    z = bracket(x, y)
    lhs = embed_element(pair, side, m, n, z)
    rhs = bracket(embed(pair, side, m, n, sx), embed(pair, side, m, n, sy))
    assert lhs.entries == rhs.entries
    assert rhs.central == qs_mul(z.central, cocycle_scale(pair, n))


# ------------------------------------------------------------- decomposition


def test_sp_decompose_roundtrip():
    x = (
        gen("f", 1, 2, 1, -1, 2).scale(qs_qpow(1))
        + gen("g", 1, 1, 0, 2, 2)
        + gen("g", 1, 1, 1, 0, 2).scale(QScalar.from_int(3))
        + gen("h", 1, 2, -1, 1, 2)
        + central_element(4, HALF)
    )
    terms, central = sp_decompose(x)
    recon = central_element(4, central)
    for coeff, spec in terms:
        recon = recon + gen_from_spec("sp", 2, spec).scale(coeff)
    assert recon == x
    assert central == HALF
    for _, spec in terms:
        kind, i, j, a, b = spec
        assert kind in ("f", "g", "h")
        if kind in ("g", "h"):
            assert i <= j
            if i == j:
                assert b >= 0


def test_sp_decompose_rejects_non_member():
    with pytest.raises(AlgebraError):
        sp_decompose(matrix_unit(4, 1, 1, 1, 0))
    with pytest.raises(AlgebraError):
        sp_decompose(matrix_unit(4, 1, 3, 0, 1))


def test_so_decompose_roundtrip():
    x = gen("e", 1, 2, 2, -1, 3) + gen("e", 2, 2, 0, 1, 3).scale(QScalar.from_int(2))
    terms, central = decompose_element("so", 3, x)
    recon = central_element(3, central)
    for coeff, spec in terms:
        recon = recon + gen_from_spec("so", 3, spec).scale(coeff)
    assert recon == x


def test_so_decompose_antidiagonal_generator():
    x = gen("e", 1, 2, 1, 2, 2)
    terms, _ = decompose_element("so", 2, x)
    recon = zero_element(2)
    for coeff, spec in terms:
        recon = recon + gen_from_spec("so", 2, spec).scale(coeff)
    assert recon == x
    for _, spec in terms:
        assert spec[4] >= 1


# ------------------------------------------------------------------ literals


def test_genspec_literals():
    assert format_genspec(("f", 1, 2, 1, -1)) == "f[1,2](1,-1)"
    assert format_genspec(("c",)) == "c"
    assert parse_genspec("f[1,2](1,-1)") == ("f", 1, 2, 1, -1)
    assert parse_genspec(" c ") == ("c",)
    assert parse_genspec("E[2,1](0,3)") == ("E", 2, 1, 0, 3)
    with pytest.raises(AlgebraError):
        parse_genspec("f[1,2]")


def test_to_json_shape():
    x = gen("f", 1, 2, 1, 1, 2) + central_element(4, HALF)
    data = x.to_json()
    assert data["size"] == 4
    assert data["central"] == str(HALF)
    assert {(e["i"], e["j"]) for e in data["entries"]} == {(1, 2), (4, 3)}
