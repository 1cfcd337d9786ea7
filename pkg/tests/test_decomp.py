from fractions import Fraction
from random import Random

import pytest

from cyclohecke.combin import Multipartition, enumerate_all, enumerate_pdb
from cyclohecke.decomp import (
    ClassSums,
    DecompTable,
    InputDataError,
    NonConstantRatioError,
    NonSplittableError,
    SplitResult,
    UnknownLabelError,
    assemble_matrix,
    cyclic_reindex,
    d_product,
    dim_report,
    orbit_sum_bound,
    reduce_result,
    relations_oracle,
    semisimple_table,
    split_by_formula,
    splittable_number,
    vandermonde,
)
from cyclohecke.exactnum import CycRat, GenericField, sample_point
from cyclohecke.matrices import mat_det_gauss
from cyclohecke.scalars import g_lambda


def mp(p, d, comps):
    return Multipartition(p, d, comps)


def one_column_table(m, row, col, value, eps_power=None):
    """Identity over all partitions of m plus a single extra entry."""
    labels = [x.comps for x in enumerate_all(1, 1, m)]
    pos = {lab: i for i, lab in enumerate(labels)}
    entries = [[i, i, 1] for i in range(len(labels))]
    entries.append([pos[(tuple(row),)], pos[(tuple(col),)], value])
    return DecompTable(1, m, labels, labels, entries, eps_power=eps_power)


def random_table(rng, s, m):
    """A seeded unitriangular table with random admissible entries."""
    labels = sorted(enumerate_all(1, s, m),
                    key=Multipartition.sort_key, reverse=True)
    entries = [[i, i, 1] for i in range(len(labels))]
    for a, row in enumerate(labels):
        for b, col in enumerate(labels):
            if a != b and row.dominates(col) and rng.random() < 0.6:
                entries.append([a, b, rng.randint(1, 3)])
    return DecompTable(s, m, [x.comps for x in labels],
                       [x.comps for x in labels], entries)


def all_tables(p, d, n, semisimple=True, rng=None):
    if semisimple:
        return [semisimple_table(d, m) for m in range(n + 1)]
    return [random_table(rng, d, m) for m in range(n + 1)]


# ---------------------------------------------------------------------------
# input tables


def test_table_requires_unit_diagonal():
    with pytest.raises(InputDataError):
        DecompTable(1, 2, [[[2]], [[1, 1]]], [[[2]], [[1, 1]]],
                    [[0, 0, 1], [1, 1, 2]])
    with pytest.raises(InputDataError):
        DecompTable(1, 2, [[[2]]], [[[2]], [[1, 1]]], [[0, 0, 1]])


def test_table_rejects_dominance_violation():
    with pytest.raises(InputDataError):
        DecompTable(1, 2, [[[2]], [[1, 1]]], [[[2]], [[1, 1]]],
                    [[0, 0, 1], [1, 1, 1], [1, 0, 1]])


def test_table_rejects_bad_entries_and_labels():
    labels = [[[2]], [[1, 1]]]
    good = [[0, 0, 1], [1, 1, 1]]
    with pytest.raises(InputDataError):
        DecompTable(1, 2, labels, labels, good + [[0, 1, -1]])
    with pytest.raises(InputDataError):
        DecompTable(1, 2, labels, labels, good + [[0, 5, 1]])
    with pytest.raises(InputDataError):
        DecompTable(1, 2, labels, labels, good + [[0, 1, 1], [0, 1, 1]])
    with pytest.raises(InputDataError):
        DecompTable(1, 2, labels + [[[2]]], labels, good)
    with pytest.raises(InputDataError):
        DecompTable(1, 2, [[[3]], [[1, 1]]], labels, good)


def test_table_semisimple_flag_enforced():
    labels = [[[2]], [[1, 1]]]
    with pytest.raises(InputDataError):
        DecompTable(1, 2, labels, labels,
                    [[0, 0, 1], [1, 1, 1], [0, 1, 1]], semisimple=True)
    tab = DecompTable(1, 2, labels, labels, [[0, 0, 1], [1, 1, 1]],
                      semisimple=True)
    assert tab.entry([[2]], [[1, 1]]) == 0


def test_table_entry_lookup():
    tab = one_column_table(2, [2], [1, 1], 3)
    assert tab.entry([[2]], [[2]]) == 1
    assert tab.entry([[2]], [[1, 1]]) == 3
    assert tab.entry([[1, 1]], [[2]]) == 0
    with pytest.raises(InputDataError):
        tab.entry([[3]], [[2]])
    partial = DecompTable(1, 2, [[[2]]], [[[2]]], [[0, 0, 1]])
    with pytest.raises(UnknownLabelError):
        partial.entry([[1, 1]], [[2]])
    with pytest.raises(UnknownLabelError):
        partial.entry([[2]], [[1, 1]])


def test_table_json_round_trip():
    tab = one_column_table(2, [2], [1, 1], 3, eps_power=1)
    back = DecompTable.from_json(tab.to_json())
    assert back.rows == tab.rows
    assert back.cols == tab.cols
    assert back.entries == tab.entries
    assert back.eps_power == 1
    assert back.semisimple is False
    assert back.to_json() == tab.to_json()


def test_semisimple_table_shape():
    tab = semisimple_table(1, 4)
    assert len(tab.rows) == 5
    assert tab.semisimple
    assert all(tab.entry(lab, lab) == 1 for lab in tab.rows)
    two = semisimple_table(2, 1)
    assert len(two.rows) == 2
    empty = semisimple_table(1, 0)
    assert len(empty.rows) == 1


# ---------------------------------------------------------------------------
# block products


def test_d_product_direct():
    tables = [semisimple_table(1, 1), one_column_table(2, [2], [1, 1], 2)]
    la = mp(2, 1, [[2], [1]])
    mu = mp(2, 1, [[1, 1], [1]])
    assert d_product(la, mu, 2, tables) == 2
    assert d_product(la, la, 2, tables) == 1
    assert d_product(mu, la, 2, tables) == 0


def test_d_product_twist_lookup():
    twisted = [
        one_column_table(2, [2], [1, 1], 5, eps_power=1),
        semisimple_table(1, 2, eps_power=2),
        semisimple_table(1, 1),
    ]
    la = mp(2, 1, [[2], [2]])
    mu = mp(2, 1, [[1, 1], [2]])
    assert d_product(la, mu, 2, twisted) == 5
    assert d_product(mu.shift(1), la.shift(1), 2, twisted) == 0
    assert d_product(la, mu, 2, list(reversed(twisted))) == 5
    with pytest.raises(InputDataError):
        d_product(mp(2, 1, [[1], [2]]), mp(2, 1, [[1], [1, 1]]), 2,
                  [semisimple_table(1, 2)])


def test_d_product_validates_arguments():
    tables = [semisimple_table(1, m) for m in range(3)]
    with pytest.raises(ValueError):
        d_product(mp(2, 1, [[2], []]), mp(2, 1, [[1], [1]]), 2, tables)
    with pytest.raises(ValueError):
        d_product(mp(2, 1, [[1], []]), mp(2, 1, [[1], []]), 1, tables)


def test_orbit_sum_bound():
    tables = [semisimple_table(1, m) for m in range(3)]
    assert orbit_sum_bound(mp(2, 1, [[2], []]), mp(2, 1, [[1, 1], []]),
                           tables) == 0
    assert orbit_sum_bound(mp(2, 1, [[1], []]), mp(2, 1, [[], [1]]),
                           tables) == 1
    assert orbit_sum_bound(mp(2, 1, [[1], [1]]), mp(2, 1, [[1], [1]]),
                           tables) == 2
    loaded = [semisimple_table(1, 0), semisimple_table(1, 1),
              one_column_table(2, [2], [1, 1], 1)]
    assert orbit_sum_bound(mp(2, 1, [[2], [1, 1]]),
                           mp(2, 1, [[1, 1], [1, 1]]), loaded) == 2


# ---------------------------------------------------------------------------
# Vandermonde system


def test_vandermonde_small():
    assert vandermonde(1, 3) == ((CycRat.from_rational(3, 1),),)
    v = vandermonde(2, 2)
    assert v[0][0] == 1 and v[0][1] == 1
    assert v[1][0] == -1 and v[1][1] == 1
    assert mat_det_gauss(v) == 2
    with pytest.raises(ValueError):
        vandermonde(3, 4)
    with pytest.raises(ValueError):
        vandermonde(0, 2)


def test_vandermonde_determinant_product():
    for p in (2, 3, 4, 6, 8, 9, 10, 12):
        eps = CycRat.zeta(p)
        for l in range(1, p + 1):
            if p % l:
                continue
            m = p // l
            det = mat_det_gauss(vandermonde(l, p))
            expect = CycRat.from_rational(p, 1)
            for a in range(1, l + 1):
                for b in range(a + 1, l + 1):
                    expect = expect * (eps ** (b * m) - eps ** (a * m))
            assert det == expect
            assert det != 0


# ---------------------------------------------------------------------------
# splittable numbers


def test_split_identity_pair_is_kronecker():
    for p in (2, 3, 4):
        la = mp(p, 1, [[1]] * p)
        tables = [semisimple_table(1, 1)]
        result = split_by_formula(la, la, tables, 1)
        assert result.split == p
        assert result.values == tuple(
            Fraction(1 if c == p else 0) for c in range(1, p + 1)
        )
        for i in range(1, p + 1):
            for j in range(1, p + 1):
                want = Fraction(int(i == j))
                assert splittable_number(la, la, i, j, tables, 1) == want


def test_split_trivial_splitting_number():
    tables = [semisimple_table(1, 0), one_column_table(2, [2], [1, 1], 3)]
    la = mp(2, 1, [[2], []])
    mu = mp(2, 1, [[1, 1], []])
    assert splittable_number(la, mu, 1, 1, tables, 1) == 3
    result = split_by_formula(la, mu, tables, 1)
    assert result.values == (Fraction(3),)
    assert result.split == 1


def test_split_rejects_unequal_splitting_numbers():
    tables = [semisimple_table(1, m) for m in range(3)]
    la = mp(2, 1, [[1], [1]])
    mu = mp(2, 1, [[1, 1], []])
    with pytest.raises(NonSplittableError):
        splittable_number(la, mu, 1, 1, tables, 1)
    with pytest.raises(NonSplittableError):
        split_by_formula(la, mu, tables, 1)


def test_split_validates_summand_labels():
    la = mp(2, 1, [[1], [1]])
    tables = [semisimple_table(1, 1)]
    with pytest.raises(ValueError):
        splittable_number(la, la, 0, 1, tables, 1)
    with pytest.raises(ValueError):
        splittable_number(la, la, 1, 3, tables, 1)


def test_split_char_reduction():
    la = mp(3, 1, [[1], [1], [1]])
    tables = [semisimple_table(1, 1)]
    assert splittable_number(la, la, 2, 2, tables, 1, char=2) == 1
    assert splittable_number(la, la, 1, 2, tables, 1, char=2) == 0
    result = split_by_formula(la, la, tables, 1, char=2)
    assert result.residues == (0, 0, 1)
    assert result.char == 2
    with pytest.raises(ValueError):
        splittable_number(la, la, 1, 1, tables, 1, char=1)


def test_split_char_rejects_nonintegral_value():
    la = mp(2, 1, [[2], [2]])
    mu = mp(2, 1, [[1, 1], [1, 1]])
    tables = [one_column_table(2, [2], [1, 1], 1)]
    value = splittable_number(la, mu, 1, 2, tables, Fraction(1, 2))
    assert value == Fraction(1, 4)
    with pytest.raises(InputDataError):
        splittable_number(la, mu, 1, 2, tables, Fraction(1, 2), char=5)
    assert splittable_number(la, mu, 1, 2, tables, 3) == -1
    with pytest.raises(InputDataError):
        splittable_number(la, mu, 1, 2, tables, 3, char=5)
    with pytest.raises(InputDataError):
        split_by_formula(la, mu, tables, 3)


def test_split_symbolic_ratio():
    la = mp(2, 1, [[2], [2]])
    mu = mp(2, 1, [[1, 1], [1, 1]])
    field = GenericField(2, 1)
    ratio = (g_lambda(la, (2, 2), field)
             / g_lambda(mu, (2, 2), field))
    with pytest.raises(NonConstantRatioError):
        split_by_formula(la, mu, [one_column_table(2, [2], [1, 1], 1)], ratio)
    zero = split_by_formula(la, mu, [semisimple_table(1, 2)], ratio)
    assert zero.values == (Fraction(0), Fraction(0))


def test_split_at_specialization_point():
    point = sample_point(2, 1, 3, Random(11))
    la = mp(2, 1, [[1], [1]])
    g_val = g_lambda(la, (1, 1), point)
    result = split_by_formula(la, la, [semisimple_table(1, 1)],
                              g_val / g_val)
    assert result.values == (Fraction(0), Fraction(1))


def test_cyclic_reindex():
    la = mp(3, 1, [[1], [1], [1]])
    result = SplitResult(la, la, 3, (Fraction(7), Fraction(8), Fraction(9)),
                         "formula")
    assert cyclic_reindex(result, 1, 1) == 9
    assert cyclic_reindex(result, 1, 2) == 7
    assert cyclic_reindex(result, 2, 1) == 8
    assert cyclic_reindex(result, 2, 3) == cyclic_reindex(result, 1, 2)


def test_reduce_result():
    la = mp(2, 1, [[1], [1]])
    result = SplitResult(la, la, 2, (Fraction(0), Fraction(3)), "formula")
    reduced = reduce_result(result, 2)
    assert reduced.residues == (0, 1)
    with pytest.raises(ValueError):
        reduce_result(result, 0)
    bad = SplitResult(la, la, 2, (Fraction(1, 2), Fraction(1)), "formula")
    with pytest.raises(InputDataError):
        reduce_result(bad, 2)


# ---------------------------------------------------------------------------
# formula against the relations oracle


def splittable_pairs(p, c):
    mps = list(enumerate_pdb(1, (c,) * p))
    for la in mps:
        for mu in mps:
            if la.orbit_order()[1] == mu.orbit_order()[1]:
                yield la, mu


def test_formula_matches_oracle_semisimple():
    for p in (2, 3, 4):
        tables = [semisimple_table(1, 2)]
        for la, mu in splittable_pairs(p, 2):
            formula = split_by_formula(la, mu, tables, 1)
            oracle = relations_oracle(la, mu, tables, (1, 1))
            assert isinstance(oracle, SplitResult)
            assert formula.values == oracle.values
            delta = tuple(
                Fraction(int(c == formula.split))
                for c in range(1, formula.split + 1)
            )
            assert formula.values == (delta if la == mu
                                      else (Fraction(0),) * formula.split)


def test_formula_matches_oracle_random_tables():
    for seed in range(20):
        rng = Random(seed)
        for p in (2, 3, 4):
            tables = [random_table(rng, 1, 2)]
            pairs = list(splittable_pairs(p, 2))
            rng.shuffle(pairs)
            for la, mu in pairs[:12]:
                formula = split_by_formula(la, mu, tables, 1)
                oracle = relations_oracle(la, mu, tables, (1, 1))
                assert formula.values == oracle.values
                l = formula.split
                d_val = d_product(la, mu, la.p // l, tables)
                assert sum(formula.values) == d_val ** l
                for i in range(1, l + 1):
                    for j in range(1, l + 1):
                        assert (splittable_number(la, mu, i, j, tables, 1)
                                == cyclic_reindex(formula, i, j))


def test_oracle_class_sums():
    table = DecompTable(
        2, 1,
        [[[1], []], [[], [1]]], [[[1], []], [[], [1]]],
        [[0, 0, 1], [1, 1, 1], [0, 1, 2]],
    )
    la = mp(4, 2, [[1], [], [], [1], [1], [], [], [1]])
    mu = mp(4, 2, [[], [1], [], [1], [], [1], [], [1]])
    assert la.orbit_order() == (2, 2)
    assert mu.orbit_order() == (1, 4)
    out = relations_oracle(la, mu, [table], (1, 1))
    assert isinstance(out, ClassSums)
    assert out.split == 2 and out.period == 4
    assert out.sums == (Fraction(2), Fraction(6))
    assert sum(out.sums) == 2 * 2 ** 2

    scaled = relations_oracle(la, mu, [table], (2, 1))
    assert scaled.sums == (Fraction(0), Fraction(8))

    with pytest.raises(ValueError):
        relations_oracle(mu, la, [table], (1, 1))

    thin = DecompTable(
        2, 1,
        [[[1], []], [[], [1]]], [[[1], []], [[], [1]]],
        [[0, 0, 1], [1, 1, 1], [0, 1, 1]],
    )
    with pytest.raises(InputDataError):
        relations_oracle(la, mu, [thin], (Fraction(1, 2), 1))


def test_oracle_row_sum_constraint():
    for seed in (3, 4):
        rng = Random(seed)
        table = random_table(rng, 1, 2)
        la = mp(4, 1, [[2], [1, 1], [2], [1, 1]])
        mu = mp(4, 1, [[1, 1], [1, 1], [1, 1], [1, 1]])
        out = relations_oracle(la, mu, [table], (1, 1))
        assert isinstance(out, ClassSums)
        d_val = d_product(la, mu, 2, [table])
        assert sum(out.sums) == 2 * d_val ** 2


# ---------------------------------------------------------------------------
# matrix assembly


def expected_label_count(p, d, n):
    total = 0
    seen = set()
    for la in enumerate_all(p, d, n):
        orbit = frozenset(la.shift(k) for k in range(p))
        if orbit in seen:
            continue
        seen.add(orbit)
        total += la.orbit_order()[1]
    return total


def test_assemble_semisimple_identity():
    for p in (2, 3):
        for n in range(1, 5):
            tables = [semisimple_table(1, m) for m in range(n + 1)]
            klesh = list(enumerate_all(p, 1, n))
            out = assemble_matrix(p, p, n, tables, klesh)
            count = expected_label_count(p, 1, n)
            assert out["report"]["rows"] == count
            assert out["report"]["cols"] == count
            assert out["report"]["identity"]
            assert out["report"]["unitriangular"]
            assert out["report"]["unknown_pairs"] == 0
            assert len(out["entries"]) == count
            assert all(ri == ci and v == 1 for ri, ci, v in out["entries"])


def test_assemble_validates_labels():
    tables = [semisimple_table(1, m) for m in range(3)]
    with pytest.raises(InputDataError):
        assemble_matrix(2, 2, 2, tables, [mp(2, 1, [[2], []])])
    with pytest.raises(InputDataError):
        assemble_matrix(2, 2, 2, tables, [mp(2, 1, [[1], []])])
    with pytest.raises(InputDataError):
        assemble_matrix(2, 2, 2, tables,
                        list(enumerate_all(2, 1, 2)) * 2)
    with pytest.raises(ValueError):
        assemble_matrix(3, 2, 2, tables, list(enumerate_all(2, 1, 2)))


def test_assemble_with_unknown_pair():
    tables = [
        semisimple_table(1, 0),
        semisimple_table(1, 1),
        semisimple_table(1, 2, eps_power=1),
        one_column_table(2, [2], [1, 1], 1, eps_power=2),
        semisimple_table(1, 3),
        semisimple_table(1, 4),
    ]
    klesh = list(enumerate_all(2, 1, 4))
    out = assemble_matrix(2, 2, 4, tables, klesh)
    report = out["report"]
    assert report["rows"] == report["cols"] == 13
    assert report["unitriangular"]
    assert not report["identity"]
    assert report["unknown_pairs"] == 2

    # ((2),(2)) over ((1,1),(2)): no residue relations apply.
    bare = out["unknowns"][0]
    assert bare["split"] == 2 and bare["period"] == 1
    assert bare["entries"] == ["u0.1"]
    assert bare["twist_unknowns"] == [] and bare["relations"] == []
    assert Multipartition.from_json(2, 1, bare["lambda"]) == mp(
        2, 1, [[2], [2]]
    )
    assert Multipartition.from_json(2, 1, bare["mu"]) == mp(
        2, 1, [[1, 1], [2]]
    )

    # ((1,1),(2)) over ((1,1),(1,1)): the twist relations pin the sum.
    pinned = out["unknowns"][1]
    assert pinned["split"] == 1 and pinned["period"] == 2
    assert pinned["entries"] == ["u1.1"]
    assert pinned["twist_unknowns"] == ["d1.1", "d1.2"]
    assert pinned["relations"] == [
        {"terms": [[1, "d1.1"], [1, "d1.2"]], "rhs": 2}
    ]
    assert Multipartition.from_json(2, 1, pinned["lambda"]) == mp(
        2, 1, [[1, 1], [2]]
    )
    assert Multipartition.from_json(2, 1, pinned["mu"]) == mp(
        2, 1, [[1, 1], [1, 1]]
    )

    symbolic = [v for _, _, v in out["entries"] if isinstance(v, dict)]
    assert symbolic == [{"unknown": "u0.1"}, {"unknown": "u0.1"},
                        {"unknown": "u1.1"}, {"unknown": "u1.1"}]
    plain = [v for _, _, v in out["entries"] if not isinstance(v, dict)]
    assert plain == [1] * 13


def test_assemble_round_trip_labels():
    tables = [semisimple_table(1, m) for m in range(3)]
    klesh = list(enumerate_all(2, 1, 2))
    out = assemble_matrix(2, 2, 2, tables, klesh)
    rows = [(Multipartition.from_json(2, 1, lab), i) for lab, i in out["rows"]]
    cols = [(Multipartition.from_json(2, 1, lab), j) for lab, j in out["cols"]]
    assert rows == cols
    keys = [la.sort_key() for la, _ in rows]
    assert keys == sorted(keys, reverse=True)


# ---------------------------------------------------------------------------
# dimension report


def test_dim_report_examples():
    assert dim_report(mp(2, 1, [[1], [1]])) == (2, 2, 1)
    assert dim_report(mp(2, 1, [[2], [2]])) == (6, 2, 3)
    assert dim_report(mp(2, 1, [[2], []])) == (1, 1, 1)


def test_dim_report_divisibility_small():
    for p in (2, 3):
        for n in range(1, 5):
            for la in enumerate_all(p, 1, n):
                rep = dim_report(la)
                assert rep.dim_specht == rep.p_lambda * rep.dim_summand
