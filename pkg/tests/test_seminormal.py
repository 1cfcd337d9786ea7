import random
from fractions import Fraction

import pytest

from cyclohecke.combin import Multipartition, enumerate_all
from cyclohecke.exactnum import SpecPoint, generic_field, sample_point
from cyclohecke.matrices import (
    mat_add,
    mat_eq,
    mat_identity,
    mat_mul,
    mat_scale,
    mat_trace,
)
from cyclohecke.seminormal import (
    SeminormalRep,
    build_rep,
    character,
    check_relations,
    cyclotomic_params,
    element_equal,
    eval_word,
)
from cyclohecke.tableau import content, enumerate_std


def mp(p, d, comps):
    return Multipartition(p, d, comps)


K21 = generic_field(2, 1)


# ---------------------------------------------------------------------------
# build_rep

def test_one_dimensional_reps():
    row = build_rep(mp(2, 1, [(2,), ()]), K21)
    assert row.tmat[1] == ((K21.q,),)
    col = build_rep(mp(2, 1, [(1, 1), ()]), K21)
    assert col.tmat[1] == ((-K21.one,),)


def test_l1_diagonal_of_contents():
    rep = build_rep(mp(2, 1, [(1,), (1,)]), K21)
    e1Q = K21.eps_pow(1) * K21.Q(1)
    e2Q = K21.eps_pow(2) * K21.Q(1)
    assert rep.lmat[0][0][0] == e1Q and rep.lmat[0][1][1] == e2Q
    assert not rep.lmat[0][0][1] and not rep.lmat[0][1][0]
    for k in (1, 2):
        for a, s in enumerate(rep.basis):
            assert rep.lmat[k - 1][a][a] == content(s, k, K21)


def test_context_mismatch():
    with pytest.raises(ValueError):
        build_rep(mp(2, 1, [(1,), (1,)]), generic_field(3, 1))


# ---------------------------------------------------------------------------
# relations

def test_relations_symbolic_small():
    for shape in enumerate_all(2, 1, 2):
        assert check_relations(build_rep(shape, K21)) == []


def test_relations_symbolic_pair():
    rep = build_rep(mp(2, 1, [(1,), (1,)]), K21)
    assert check_relations(rep) == []


def test_relations_at_points():
    rng = random.Random(3)
    for p, d, n in ((2, 1, 3), (3, 1, 3), (2, 2, 2)):
        pt = sample_point(p, d, n, rng)
        for shape in enumerate_all(p, d, n):
            assert check_relations(build_rep(shape, pt)) == []


def test_corrupted_t0_fails_cyclotomic():
    base = build_rep(mp(2, 1, [(1,), (1,)]), K21)
    corrupt = SeminormalRep(base.shape, base.field)
    corrupt.tmat = dict(base.tmat)
    corrupt.tmat[0] = mat_add(base.tmat[0], base.identity())
    report = check_relations(corrupt)
    assert any("cyclotomic" in line for line in report)


def test_jm_elements_commute():
    pt = sample_point(2, 2, 3, random.Random(5))
    for shape in enumerate_all(2, 2, 3):
        rep = build_rep(shape, pt)
        for a in range(3):
            for b in range(a + 1, 3):
                La, Lb = rep.lmat[a], rep.lmat[b]
                assert mat_eq(mat_mul(La, Lb), mat_mul(Lb, La))


def test_jm_exchange_identities():
    # T_k L_k = L_{k+1}(T_k - q + 1) and T_k L_{k+1} = L_k T_k + (q-1) L_{k+1}
    K = K21
    for shape in enumerate_all(2, 1, 3):
        rep = build_rep(shape, K)
        ident = rep.identity()
        for k in range(1, 3):
            Tk, Lk, Lk1 = rep.tmat[k], rep.lmat[k - 1], rep.lmat[k]
            lhs = mat_mul(Tk, Lk)
            rhs = mat_mul(Lk1, mat_add(Tk, mat_scale(K.one - K.q, ident)))
            assert mat_eq(lhs, rhs)
            lhs = mat_mul(Tk, Lk1)
            rhs = mat_add(mat_mul(Lk, Tk), mat_scale(K.q - 1, Lk1))
            assert mat_eq(lhs, rhs)


def test_symmetric_jm_polynomials_central():
    pt = sample_point(3, 1, 3, random.Random(9))
    for shape in enumerate_all(3, 1, 3):
        rep = build_rep(shape, pt)
        e1 = rep.lmat[0]
        for L in rep.lmat[1:]:
            e1 = mat_add(e1, L)
        e2 = None
        for a in range(3):
            for b in range(a + 1, 3):
                term = mat_mul(rep.lmat[a], rep.lmat[b])
                e2 = term if e2 is None else mat_add(e2, term)
        for i in range(3):
            Ti = rep.tmat[i]
            assert mat_eq(mat_mul(e1, Ti), mat_mul(Ti, e1))
            assert mat_eq(mat_mul(e2, Ti), mat_mul(Ti, e2))


# ---------------------------------------------------------------------------
# words

def test_eval_word_examples():
    rep = build_rep(mp(2, 1, [(2,), (1,)]), K21)
    assert mat_eq(eval_word(rep, []), rep.identity())
    via_recursion = mat_scale(
        K21.q_power(-1),
        eval_word(rep, [("T", 1), ("L", 1), ("T", 1)]))
    assert mat_eq(eval_word(rep, [("L", 2)]), via_recursion)


def test_eval_word_quadratic():
    rep = build_rep(mp(2, 1, [(2,), (1,)]), K21)
    lhs = eval_word(rep, [("T", 1), ("T", 1)])
    rhs = mat_add(mat_scale(K21.q - 1, rep.tmat[1]),
                  mat_scale(K21.q, rep.identity()))
    assert mat_eq(lhs, rhs)


def test_eval_word_sum_token():
    rep = build_rep(mp(2, 1, [(1,), (1,)]), K21)
    word = [("sum", [[("T", 1)], [("scal", 1)]])]
    assert mat_eq(eval_word(rep, word),
                  mat_add(rep.tmat[1], rep.identity()))


def test_inverses():
    for field in (K21, sample_point(2, 1, 3, random.Random(1))):
        for shape in enumerate_all(2, 1, 3):
            rep = build_rep(shape, field)
            for i in range(3):
                prod = mat_mul(rep.t_matrix(i), rep.t_inverse(i))
                assert mat_eq(prod, rep.identity())


def test_t0_inverse_via_word():
    rep = build_rep(mp(2, 1, [(1,), (1,)]), K21)
    assert mat_eq(eval_word(rep, [("T", 0), ("Tinv", 0)]), rep.identity())


# ---------------------------------------------------------------------------
# characters

def test_character_identity_is_dimension():
    shape = mp(2, 1, [(2,), (1,)])
    assert character(shape, [], K21) == K21.scalar(len(enumerate_std(shape)))


def test_character_t1():
    assert character(mp(2, 1, [(2,), ()]), [("T", 1)], K21) == K21.q
    assert character(mp(2, 1, [(1, 1), ()]), [("T", 1)], K21) == -K21.one


def test_character_l1():
    shape = mp(2, 1, [(1,), (1,)])
    got = character(shape, [("L", 1)], K21)
    expect = sum(
        (content(s, 1, K21) for s in enumerate_std(shape)), K21.zero)
    assert got == expect


# ---------------------------------------------------------------------------
# element equality

def test_element_equal_jm_definition():
    w1 = [("T", 1), ("L", 1), ("T", 1)]
    w2 = lambda F: [("scal", F.q), ("L", 2)]  # noqa: E731
    assert element_equal(2, 1, 2, w1, w2, mode="symbolic")


def test_element_equal_jm_commutation():
    w1 = [("L", 1), ("L", 2), ("T", 1)]
    w2 = [("T", 1), ("L", 1), ("L", 2)]
    assert element_equal(2, 1, 2, w1, w2, mode="symbolic")
    assert element_equal(2, 1, 3, w1, w2, mode="random", trials=2,
                         rng=random.Random(4))


def test_element_equal_mixed_braid():
    w1 = [("T", 0), ("T", 1), ("T", 0), ("T", 1)]
    w2 = [("T", 1), ("T", 0), ("T", 1), ("T", 0)]
    assert element_equal(2, 1, 2, w1, w2, mode="symbolic")


def test_element_equal_detects_difference():
    assert not element_equal(2, 1, 2, [("T", 1)], [("T", 0)],
                             mode="symbolic")
    assert not element_equal(2, 1, 3, [("L", 2)], [("L", 3)], mode="random",
                             trials=2, rng=random.Random(8))


def test_cyclotomic_params_order():
    pt = SpecPoint(p=2, N=2, q_val=Fraction(2),
                   Q_vals=(Fraction(3), Fraction(5)))
    rho = cyclotomic_params(pt)
    eps = pt.eps_pow(1)
    assert rho == [eps * pt.Q(1), eps * pt.Q(2), pt.Q(1), pt.Q(2)]
