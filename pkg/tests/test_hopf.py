"""Hopf layer: powers, exponents, the order classifier, integrals."""

import pytest

from hopfex import GF, QQ, FieldSpec
from hopfex.errors import NotCosemisimple
from hopfex.linalg import Mat, vec_scale
from hopfex.zoo import (cyclic, group_algebra, restricted_poly, sweedler,
                        symmetric, taft, tensor_product)


def test_hopf_axioms_pass_on_zoo(zoo):
    for stem, obj in zoo.items():
        assert obj.check_hopf() == [], stem


def test_antipode_is_convolution_inverse(zoo):
    for stem, obj in zoo.items():
        s = obj.antipode_mat
        ue = obj.counit_unit_map()
        assert obj.convolution(s, obj.identity_map()) == ue, stem
        assert obj.convolution(obj.identity_map(), s) == ue, stem


def test_involutory_flags(zoo):
    assert zoo["kZ6"].involutory()
    assert zoo["dual_kS3"].involutory()
    assert zoo["restricted3"].involutory()
    assert not zoo["sweedler"].involutory()
    assert not zoo["taft9"].involutory()


def test_hopf_power_low_cases(zoo):
    h = zoo["sweedler"]
    for i in range(h.dim):
        v = h.basis_element(i)
        assert h.hopf_power(v, 1) == v
        assert h.hopf_power(v, 0) == v.eps() * h.one()


def test_hopf_power_maps_compose_by_convolution(zoo):
    for stem in ("kS3", "sweedler", "taft9", "restricted3"):
        h = zoo[stem]
        maps = [h.hopf_power_map(n) for n in range(9)]
        for m in range(5):
            for n in range(5):
                assert h.convolution(maps[m], maps[n]) == maps[m + n], stem


def test_hopf_power_of_grouplike_is_ordinary_power(zoo):
    h = zoo["kS3"]
    for g in h.group_likes():
        for n in range(1, 7):
            assert h.hopf_power(g, n) == g ** n


def test_group_algebra_exponents():
    cases = [(cyclic(2), 2), (cyclic(6), 6), (symmetric(3), 6)]
    for grp, want in cases:
        h = group_algebra(grp, QQ)
        rep = h.exponent()
        assert rep.kind == "finite" and rep.n == want
        # directly: [want] is the counit-unit map, no smaller power is
        ue = h.counit_unit_map()
        assert h.hopf_power_map(want) == ue
        for n in range(1, want):
            assert h.hopf_power_map(n) != ue


def test_dual_group_algebra_exponent_matches_group(zoo):
    rep = zoo["dual_kS3"].exponent()
    assert rep.kind == "finite" and rep.n == 6


def test_tensor_product_exponent_is_lcm(zoo):
    rep = zoo["tensor_kZ2_kZ3"].exponent()
    assert rep.kind == "finite" and rep.n == 6


def test_restricted_poly_exponent_is_p():
    for p in (2, 3, 5):
        h = restricted_poly(p)
        rep = h.exponent()
        assert rep.kind == "finite" and rep.n == p
        x = h.basis_element(1)
        # the primitive generator has Hopf powers n*x, exactly
        for n in range(2 * p):
            assert h.hopf_power(x, n) == h.field.from_int(n) * x


def test_char_zero_infinite_order_classifier(zoo):
    for stem in ("sweedler", "taft9"):
        h = zoo[stem]
        rep = h.classify_exponent()
        assert rep.kind == "provably_infinite", stem
        assert rep.criterion
        w = h.element(rep.witness)
        ue = vec_scale(w.eps(), h.one().vec)
        acc = h.identity_map()
        for n in range(1, 201):
            assert acc.apply(w.vec) != ue, (stem, n)
            acc = h.convolution(acc, h.identity_map())


def test_plain_exponent_iteration_exceeds_cap(zoo):
    rep = zoo["sweedler"].exponent(cap=50)
    assert rep.kind == "exceeds_cap" and rep.cap == 50


def test_char_p_classifier_bounds():
    h = sweedler(GF(3))
    rep = h.classify_exponent()
    assert rep.kind == "bounded"
    assert rep.bound == 6  # lcm of group-like orders times p^(e+1) = 2*3
    assert rep.n is not None and rep.n <= 6
    assert h.hopf_power_map(rep.n) == h.counit_unit_map()

    t = taft(3, GF(7))
    rep = t.classify_exponent()
    assert rep.kind == "bounded"
    assert rep.bound == 21  # d = 3 group-like order, depth 2 < 7, so 3*7
    assert rep.n is not None and rep.n <= 21
    assert t.hopf_power_map(rep.n) == t.counit_unit_map()
    for n in range(1, rep.n):
        assert t.hopf_power_map(n) != t.counit_unit_map()


def test_exponent_outcome_stable_under_field_extension():
    h = sweedler(GF(3))
    big = GF(3, modulus=[1, 0, 1])  # t^2 + 1 is irreducible mod 3
    h2 = h.extend_scalars(big)
    assert h2.check_hopf() == []
    r1, r2 = h.classify_exponent(), h2.classify_exponent()
    assert (r1.kind, r1.n) == (r2.kind, r2.n)

    k = group_algebra(symmetric(3), QQ)
    k2 = k.extend_scalars(FieldSpec(0, cyclotomic_order=4))
    assert k.exponent().n == k2.exponent().n


def test_hopf_order_of_elements(zoo):
    h = zoo["sweedler"]
    g = h.basis_element(h.index_of("g"))
    x = h.basis_element(h.index_of("x"))
    assert h.hopf_order(g) == 2
    assert h.hopf_order(h.one()) == 1
    assert h.hopf_order(x, cap=100) is None
    assert h.grouplike_order(g) == 2
    assert zoo["taft9"].grouplike_order(
        zoo["taft9"].basis_element(1)) == 3


def test_integral_trace_equals_dual_basis_form(zoo):
    for stem, obj in zoo.items():
        a = obj.integral_trace()
        b = obj.integral_dual_basis()
        assert a.element == b.element, stem


def test_integral_left_invariance_when_involutory(zoo):
    for stem, obj in zoo.items():
        res = obj.integral_trace()
        assert res.asserted == obj.involutory(), stem
        if not obj.involutory():
            continue
        lam = res.element.vec
        for i in range(obj.dim):
            e = obj.basis_element(i)
            lhs = obj.mul_vec(e.vec, lam)
            assert lhs == vec_scale(e.eps(), lam), (stem, i)


def test_group_algebra_integral_is_group_sum():
    h = group_algebra(symmetric(3), QQ)
    lam = h.integral_trace().element
    total = h.zero()
    for i in range(h.dim):
        total = total + h.basis_element(i)
    # the trace form returns a scalar multiple of the full group sum
    coeff = lam.vec[0]
    assert not coeff.is_zero()
    assert lam == coeff * total


def test_cosemisimple_integral_decomposition(zoo):
    for stem in ("kZ2", "kZ6", "kS3", "dual_kS3", "tensor_kZ2_kZ3"):
        h = zoo[stem]
        dec = h.cosemisimple_integral_decomposition()
        rebuilt = h.one()
        for idx, r, trace in dec.terms:
            assert idx != dec.unit_component and r >= 1
            rebuilt = rebuilt + h.field.from_int(r) * trace
        assert rebuilt == dec.element, stem
        assert dec.element == h.integral_dual_basis().element, stem
    with pytest.raises(NotCosemisimple):
        zoo["sweedler"].cosemisimple_integral_decomposition()


def test_chevalley_property(zoo):
    # coradicals of these are spanned by group-likes closed under product
    assert zoo["sweedler"].chevalley_check()
    assert zoo["taft9"].chevalley_check()
    assert zoo["kS3"].chevalley_check()


def test_power_vec_is_associative_powering(zoo):
    h = zoo["taft9"]
    x = h.basis_element(h.index_of("x"))
    assert h.element(h.power_vec(x.vec, 3)).is_zero()  # x^3 = 0 in T_9
    g = h.basis_element(1)
    assert h.element(h.power_vec(g.vec, 3)) == h.one()
