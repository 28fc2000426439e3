"""Multiplicative and primitive matrices over a Hopf algebra."""

import pytest

from hopfex import GF, QQ
from hopfex.errors import (DiagonalOrderViolated, MatrixFormError,
                           NotDegreeOne, NotInBicomponent, NotMultiplicative,
                           ShapeMismatch)
from hopfex.linalg import SubspaceBasis, vec_is_zero
from hopfex.matforms import (MatrixOverH, antipode_inverse_check,
                             basic_multiplicative_matrix,
                             block_order_bound_check, is_multiplicative,
                             is_primitive_matrix, matrix_hopf_power, mtensor,
                             primitive_decompose, stack_triangular)


def basic_for(h, idx):
    return basic_multiplicative_matrix(h, h.simple_subcoalgebras()[idx])


def grouplike_matrix(h, vec):
    return MatrixOverH(h, [[vec]])


def test_basic_matrices_are_multiplicative(zoo):
    for stem, h in zoo.items():
        for comp in h.simple_subcoalgebras():
            basic = basic_multiplicative_matrix(h, comp)
            m = basic.matrix
            assert m.nrows == comp.matrix_size, stem
            assert is_multiplicative(m), stem


def test_basic_matrix_counit_is_identity(zoo):
    from hopfex.linalg import Mat
    for stem, h in zoo.items():
        for comp in h.simple_subcoalgebras():
            m = basic_multiplicative_matrix(h, comp).matrix
            assert m.counit() == Mat.identity(h.field, m.nrows), stem


def test_basic_matrix_entries_span_the_simple(zoo):
    for stem, h in zoo.items():
        for comp in h.simple_subcoalgebras():
            m = basic_multiplicative_matrix(h, comp).matrix
            entries = [m.entry(i, j) for i in range(m.nrows)
                       for j in range(m.nrows)]
            span = SubspaceBasis(h.field, h.dim, entries)
            assert span.dim == comp.dim, stem
            assert span == comp.subspace, stem


def test_grouplike_simple_gives_its_grouplike(zoo):
    h = zoo["taft9"]
    for comp in h.simple_subcoalgebras():
        assert comp.is_grouplike
        m = basic_multiplicative_matrix(h, comp).matrix
        assert m.nrows == 1
        assert m.entry(0, 0) == comp.grouplike


def test_matrix_power_matches_entrywise_hopf_power(zoo):
    for stem in ("kS3", "dual_kS3", "sweedler", "taft9"):
        h = zoo[stem]
        for comp in h.simple_subcoalgebras():
            g = basic_multiplicative_matrix(h, comp).matrix
            for n in range(9):
                gn = matrix_hopf_power(g, n)
                for i in range(g.nrows):
                    for j in range(g.nrows):
                        want = h.hopf_power(g.element(i, j), n).vec
                        assert gn.entry(i, j) == want, (stem, n, i, j)


def test_antipode_inverts_multiplicative_matrices(zoo):
    for stem, h in zoo.items():
        for comp in h.simple_subcoalgebras():
            g = basic_multiplicative_matrix(h, comp).matrix
            assert antipode_inverse_check(g), stem


def test_non_multiplicative_matrix_rejected(zoo):
    h = zoo["sweedler"]
    x = h.basis_element(h.index_of("x")).vec
    m = grouplike_matrix(h, x)
    assert not is_multiplicative(m)
    with pytest.raises(NotMultiplicative):
        matrix_hopf_power(m, 2)
    with pytest.raises(NotMultiplicative):
        antipode_inverse_check(m)


def test_primitive_matrix_and_stack(zoo):
    h = zoo["sweedler"]
    gl = {tuple(g.vec) for g in h.group_likes()}
    x = h.basis_element(h.index_of("x"))
    parts = h.bicomponent_decomposition_vec(x.vec)
    (left, right), _ = next(
        (k, v) for k, v in parts.items() if not vec_is_zero(v))
    c = basic_for(h, left).matrix
    d = basic_for(h, right).matrix
    w = grouplike_matrix(h, x.vec)
    assert is_primitive_matrix(w, c, d)
    assert w.delta() == mtensor(c, w) + mtensor(w, d)
    z = stack_triangular(c, w, d)
    assert z.nrows == 2
    assert is_multiplicative(z)
    assert antipode_inverse_check(z)


def test_primitive_decompose_roundtrip_sweedler(zoo):
    h = zoo["sweedler"]
    x = h.basis_element(h.index_of("x"))
    parts = h.bicomponent_decomposition_vec(x.vec)
    (left, right), _ = next(
        (k, v) for k, v in parts.items() if not vec_is_zero(v))
    cb, db = basic_for(h, left), basic_for(h, right)
    dec = primitive_decompose(x, cb, db)
    total = h.zero()
    for ip in range(cb.matrix.nrows):
        for jp in range(db.matrix.nrows):
            wm = dec.matrix(ip, jp)
            assert is_primitive_matrix(wm, cb.matrix, db.matrix)
            total = total + h.element(wm.entry(ip, jp))
    assert total + dec.remainder == x
    assert dec.remainder.is_zero()  # distinct simples leave no remainder


def test_primitive_decompose_remainder_on_cosemisimple(zoo):
    # in a cosemisimple object every degree-one element is coradical, so
    # the decomposition is all remainder
    h = zoo["dual_kS3"]
    comp = max(h.simple_subcoalgebras(), key=lambda s: s.matrix_size)
    cb = basic_for(h, comp.index)
    w = h.element(comp.subspace.rows[0])
    dec = primitive_decompose(w, cb, cb)
    total = h.zero()
    for wm in dec.all_matrices():
        assert is_primitive_matrix(wm, cb.matrix, cb.matrix)
    assert dec.remainder + sum(
        (h.element(dec.matrix(i, j).entry(i, j))
         for i in range(comp.matrix_size) for j in range(comp.matrix_size)),
        h.zero()) == w


def test_primitive_decompose_rejects_bad_inputs(zoo):
    h = zoo["taft9"]
    x2 = h.basis_element(h.index_of("x^2"))
    cb, db = basic_for(h, 0), basic_for(h, 0)
    with pytest.raises(NotDegreeOne):
        primitive_decompose(x2, cb, db)
    x = h.basis_element(h.index_of("x"))
    parts = h.bicomponent_decomposition_vec(x.vec)
    (left, right), _ = next(
        (k, v) for k, v in parts.items() if not vec_is_zero(v))
    assert left != right
    with pytest.raises(NotInBicomponent):
        # x straddles two distinct simples, so (left, left) is wrong
        primitive_decompose(x, basic_for(h, left), basic_for(h, left))


def test_block_order_bound_taft_f7(zoo):
    h = zoo["taft9_f7"]
    q = h.mul_vec(h.basis_element(h.index_of("x")).vec,
                  h.basis_element(h.index_of("g")).vec)[h.index_of("gx")]
    one_plus_q = h.field.one() + q
    g2 = h.basis_element(h.index_of("g^2")).vec
    g = h.basis_element(h.index_of("g")).vec
    one = h.one().vec
    gx = h.basis_element(h.index_of("gx")).vec
    x = h.basis_element(h.index_of("x")).vec
    x2 = h.basis_element(h.index_of("x^2")).vec
    zero = tuple(h.field.zero() for _ in range(h.dim))
    from hopfex.linalg import vec_scale
    z = MatrixOverH(h, [[g2, vec_scale(one_plus_q, gx), x2],
                        [zero, g, x],
                        [zero, zero, one]])
    assert is_multiplicative(z)
    rep = block_order_bound_check(z, d=3, p=7)
    assert rep.bound == 21 and rep.holds
    assert rep.block_sizes == (1, 1, 1)
    assert z.power(21) == MatrixOverH.identity(h, 3)

    with pytest.raises(DiagonalOrderViolated):
        block_order_bound_check(z, d=2, p=7)
    with pytest.raises(MatrixFormError):
        block_order_bound_check(z, d=3, p=3)
    with pytest.raises(ShapeMismatch):
        block_order_bound_check(z, d=3, p=7, block_sizes=[2, 2])


def test_block_order_bound_full_block_sizes(zoo):
    # treating the whole matrix as one diagonal block: order divides d
    h = zoo["sweedler_f3"]
    g = h.basis_element(h.index_of("g")).vec
    x = h.basis_element(h.index_of("x")).vec
    one = h.one().vec
    zero = tuple(h.field.zero() for _ in range(h.dim))
    z = MatrixOverH(h, [[g, x], [zero, one]])
    assert is_multiplicative(z)
    rep = block_order_bound_check(z, d=2, p=3)
    assert rep.bound == 6 and rep.holds
    rep_full = block_order_bound_check(z, d=6, p=3, block_sizes=[2])
    assert rep_full.bound == 6 and rep_full.holds
    # [[1, 0], [x, g]] is multiplicative but lower triangular
    bad = MatrixOverH(h, [[one, zero], [x, g]])
    assert is_multiplicative(bad)
    with pytest.raises(MatrixFormError):
        block_order_bound_check(bad, d=6, p=3)


def test_tensor_matrix_algebra(zoo):
    h = zoo["sweedler"]
    c = basic_for(h, 0).matrix
    t = mtensor(c, c)
    assert t + t == mtensor(c, c.scale(h.field.from_int(2)))
    assert c.delta() == t
