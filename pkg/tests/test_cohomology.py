import random
from itertools import product

import pytest

from hjj import QQ, Matrix
from hjj.algebra import Algebra
from hjj.catalog import instantiate
from hjj.cohomology import (
    Cochain1,
    Cochain2,
    ScalarForm,
    c3r_space,
    cochain1_space,
    cochain2_space,
    compute_H2,
    d1,
    d2,
    dc2,
    dr2,
    dr3,
    in_c2r,
    in_c3r,
)
from hjj.errors import InvalidRepresentation, NotACochain
from hjj.representations import Representation

from .gen import random_c2r_form, random_cochain1, random_pair
from .oracles import BruteAlgebra, brute_h2_dims


def j111_rep(a=2, beta=None):
    alg = instantiate("J^1_{1,1}", {"a": a})
    b = beta if beta is not None else QQ(a) * QQ(a)
    return Representation.zero_action(alg, 1, Matrix.from_rows([[b]]))


# -- cochain spaces ----------------------------------------------------------


def test_cochain2_space_full_when_untwisted():
    alg = Algebra.abelian(2, Matrix.identity(2))
    rep = Representation.zero_action(alg, 1, Matrix.identity(1))
    assert cochain2_space(rep).dim == 3  # n(n+1)/2 * m


def test_cochain2_space_abelian_case_table():
    for (a, b, d), expected in {
        (1, -1, 1): 2,
        (2, -2, 4): 2,
        (2, 3, 4): 1,
        (2, 3, 5): 0,
    }.items():
        alg = Algebra.abelian(2, Matrix.diagonal([QQ(a), QQ(b)]))
        rep = Representation.zero_action(alg, 1, Matrix.from_rows([[QQ(d)]]))
        assert cochain2_space(rep).dim == expected


def test_cochain2_space_dim1():
    alg = Algebra.abelian(1, Matrix.from_rows([[2]]))
    rep = Representation.zero_action(alg, 1, Matrix.from_rows([[3]]))
    assert cochain2_space(rep).dim == 0  # 3p = 4p forces p = 0


def test_cochain1_space_eigenvalue_matching():
    assert cochain1_space(j111_rep(2, QQ(4))).dim == 1
    assert cochain1_space(j111_rep(2, QQ(5))).dim == 0
    alg = Algebra.abelian(2, Matrix.identity(2))
    rep = Representation.zero_action(alg, 2, Matrix.identity(2))
    assert cochain1_space(rep).dim == 4  # m*n, untwisted


# -- d1 / d2 -----------------------------------------------------------------


def test_d1_examples():
    rep = j111_rep()
    assert d1(Cochain1.zero(rep)).is_zero()
    f = Cochain1(rep, Matrix.from_rows([[0, QQ(7)]]))
    g = d1(f)
    assert g.value(0, 0) == (QQ(7),)  # f([e1,e1]) = f(e2)
    assert g.value(0, 1) == (QQ(0),) and g.value(1, 1) == (QQ(0),)


def test_d1_rejects_incompatible():
    rep = j111_rep()
    bad = Cochain1(rep, Matrix.from_rows([[QQ(1), QQ(0)]]))  # f(e1) != 0 not allowed
    with pytest.raises(NotACochain):
        d1(bad)


def test_d2_vanishes_on_j111_c2():
    rep = j111_rep()
    f = Cochain2.from_entries(rep, {(0, 0): [QQ(5)]})
    assert d2(f).is_zero()


def test_d2_rejects_incompatible():
    rep = j111_rep()
    bad = Cochain2.from_entries(rep, {(0, 1): [QQ(1)]})
    with pytest.raises(NotACochain):
        d2(bad)


def test_d2_d1_is_zero_randomized():
    rng = random.Random(23)
    count = 0
    while count < 60:
        _, rep = random_pair(rng)
        f = random_cochain1(rng, rep)
        if f.coeffs.is_zero():
            continue
        count += 1
        g = d1(f)
        assert g.is_compatible()  # image of d1 stays inside C2
        assert d2(g).is_zero()


def test_dc2_d1_is_zero_randomized():
    rng = random.Random(29)
    count = 0
    while count < 60:
        _, rep = random_pair(rng)
        f = random_cochain1(rng, rep)
        if f.coeffs.is_zero():
            continue
        count += 1
        assert dc2(d1(f)).is_zero()


def test_dc2_output_symmetry():
    rep = j111_rep()
    f = Cochain2.from_entries(rep, {(0, 0): [QQ(1)]})
    out = dc2(f)
    n = 2
    for i, j, k in product(range(n), repeat=3):
        assert out.value(i, j, k) == out.value(j, i, k)


# -- scalar operators --------------------------------------------------------


def test_dr2_example():
    alg = instantiate("J^1_{1,1}", {"a": 2})
    f = ScalarForm.from_entries(2, 2, {(0, 1): QQ(1), (1, 0): QQ(1)})
    g = dr2(alg, f)
    # f([e1,e1],e1) - 2 f(e1,[e1,e1]) = f(e2,e1) - 2 f(e1,e2) = -1
    assert g.value(0, 0, 0) == QQ(-1)
    assert dr2(alg, ScalarForm.zero(2, 2)).is_zero()


def test_dr3_term_expansion_oracle():
    # independent expansion of the six terms at one tuple, frozen value
    alg = instantiate("J^1_{1,1}", {"a": 2})
    g = ScalarForm.from_entries(2, 3, {(1, 1, 1): QQ(1)})
    out = dr3(alg, g)
    e = [alg.basis_vector(i) for i in range(2)]
    ac = [alg.alpha.column(i) for i in range(2)]
    i, j, k, t = 0, 0, 1, 1
    expected = (
        g.evaluate(alg.bracket_basis(i, j), ac[k], e[t])
        + g.evaluate(alg.bracket_basis(i, k), ac[j], e[t])
        + g.evaluate(alg.bracket_basis(j, k), ac[i], e[t])
        + g.evaluate(e[i], e[j], alg.bracket(ac[k], e[t]))
        + g.evaluate(e[j], e[k], alg.bracket(ac[i], e[t]))
        + g.evaluate(e[i], e[k], alg.bracket(ac[j], e[t]))
    )
    # single matching term: g([e1,e1], alpha(e2), e2) = g(e2, 4 e2, e2) = 4
    assert expected == QQ(4)
    assert out.value(0, 0, 1, 1) == QQ(4)


def test_operators_vanish_on_abelian():
    alg = Algebra.abelian(2, Matrix.diagonal([2, -2]))
    rep = Representation.zero_action(alg, 1, Matrix.from_rows([[4]]))
    any_f = Cochain2.from_entries(rep, {(0, 0): [QQ(1)], (1, 1): [QQ(1)]})
    assert dc2(any_f).is_zero()
    g = ScalarForm.from_entries(2, 3, {(0, 1, 1): QQ(3)}, symmetrize=True)
    assert dr3(alg, g).is_zero()
    f2 = ScalarForm.from_entries(2, 2, {(0, 1): QQ(2)})
    assert dr2(alg, f2).is_zero()


def test_dr3_dr2_is_zero_randomized():
    rng = random.Random(31)
    count = 0
    while count < 60:
        alg, _ = random_pair(rng)
        f = random_c2r_form(rng, alg)
        if f.is_zero():
            continue
        count += 1
        assert dr3(alg, dr2(alg, f)).is_zero()


def test_c2r_c3r_membership():
    alg = instantiate("J^1_{1,1}", {"a": 2})
    f = ScalarForm.from_entries(2, 2, {(0, 0): QQ(1)})
    # f(alpha e1, e1) = 2 vs f(e1, alpha e1) = 2: compatible
    assert in_c2r(alg, f)
    g = ScalarForm.from_entries(2, 2, {(0, 1): QQ(1)})
    # f(alpha e1, e2) = 2 vs f(e1, alpha e2) = 4: incompatible
    assert not in_c2r(alg, g)
    good = ScalarForm.from_entries(2, 3, {(0, 0, 1): QQ(1)}, symmetrize=False)
    # weights match: g(alpha e1, alpha e1, e2) = 4 = g(e1, e1, alpha e2)
    assert in_c3r(alg, good)
    bad3 = ScalarForm.from_entries(2, 3, {(1, 1, 1): QQ(1)})
    assert not in_c3r(alg, bad3)  # 16 vs 4
    assert c3r_space(alg).dim >= 1


# -- H2 ------------------------------------------------------------------------


def test_compute_h2_lemma_values():
    for a in (QQ(2), QQ(3), QQ(1, 2)):
        result = compute_H2(j111_rep(a))
        assert result.dims == (1, 1, 1, 0)
    alg = Algebra.abelian(1, Matrix.from_rows([[2]]))
    rep = Representation.zero_action(alg, 1, Matrix.from_rows([[4]]))
    result = compute_H2(rep)
    assert result.dims == (1, 1, 0, 1)
    alg2 = Algebra.abelian(2, Matrix.diagonal([1, -1]))
    rep2 = Representation.zero_action(alg2, 1, Matrix.identity(1))
    assert compute_H2(rep2).dims == (2, 2, 0, 2)


def test_compute_h2_dim_identity_randomized():
    rng = random.Random(37)
    for _ in range(20):
        _, rep = random_pair(rng)
        result = compute_H2(rep)
        assert result.h2_dim == result.z2.dim - result.b2.dim
        assert result.z2.contains_subspace(result.b2)
        assert len(result.representatives) == result.h2_dim


def test_compute_h2_rejects_invalid_rep():
    alg = instantiate("J^1_{1,1}", {"a": 2})
    bad = Representation(
        alg, 1, (Matrix.from_rows([[1]]), Matrix.zero(1, 1)), Matrix.from_rows([[4]])
    )
    with pytest.raises(InvalidRepresentation):
        compute_H2(bad)


# -- oracle agreement ----------------------------------------------------------


def _brute_from(alg: Algebra, beta):
    brackets = {}
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            brackets[(i, j)] = [x for x in alg.bracket_basis(i, j)]
    alpha = [[alg.alpha.entry(i, j) for j in range(alg.dim)] for i in range(alg.dim)]
    return BruteAlgebra(alg.dim, brackets, alpha, beta)


def test_oracle_agrees_on_grid():
    betas = [QQ(-2), QQ(-1), QQ(1), QQ(2), QQ(4), QQ(9), QQ(1, 4), QQ(3)]
    algebras = [
        Algebra.abelian(1, Matrix.from_rows([[2]])),
        Algebra.abelian(2, Matrix.diagonal([2, -2])),
        Algebra.abelian(2, Matrix.from_columns([(2, 0), (1, 2)])),
        instantiate("J^1_{1,1}", {"a": 2}),
        instantiate("J^1_{1,1}", {"a": 3}),
        instantiate("J^2_{1,1}", {}),
    ]
    checked = 0
    for alg in algebras:
        for b in betas:
            rep = Representation.zero_action(alg, 1, Matrix.from_rows([[b]]))
            main = compute_H2(rep)
            brute = brute_h2_dims(_brute_from(alg, b))
            assert main.dims == brute, (alg, b, main.dims, brute)
            checked += 1
    assert checked == 48
