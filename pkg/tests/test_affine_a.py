"""The pair model: factor crystals, promotion, the tensor rule, alpha."""

import pytest

from adjcrys.affine_a import (
    AdjElemA,
    ColCrystal,
    ColElem,
    CrystalA,
    RowCrystal,
    RowElem,
    alpha,
    alpha_checks,
    alpha_inverse,
    col_elements,
    elements,
    expected_size,
    highest,
    promotion_checks,
    row_elements,
    shape_component,
    shell,
    theta_map,
    verify_theorems,
)
from adjcrys.crystal_graph import all_passed, render_report
from adjcrys.tableaux import TensorPair, Word, eps_phi


def test_promotion_examples():
    assert RowElem((2, 0, 0)).promote().x == (0, 2, 0)
    assert RowElem((1, 1, 1)).promote() == RowElem((1, 1, 1))
    assert ColElem((0, 1, 1)).promote().y == (1, 0, 1)
    b = RowElem((2, 1, 0))
    assert b.promote().promote_inverse() == b


def test_factor_operator_examples():
    assert RowElem((0, 0, 2)).f(0) == RowElem((1, 0, 1))
    assert RowElem((2, 0, 0)).f(0) is None
    assert ColElem((0, 1, 1)).f(2) == ColElem((0, 2, 0))
    assert RowElem((1, 0, 0)).f(1) == RowElem((0, 1, 0))
    assert ColElem((1, 0, 0)).e(0) is None


def test_factor_stats_match_iteration():
    for n in (2, 3):
        for l in range(4):
            for b in row_elements(n, l) + col_elements(n, l):
                for i in range(n + 1):
                    assert (b.eps(i), b.phi(i)) == eps_phi(b, i)


def test_pair_operator_examples():
    b = AdjElemA(RowElem((1, 0, 0)), ColElem((1, 0, 0)))  # the k=0 element
    assert b.k == 0
    assert b.f(0) == AdjElemA(RowElem((1, 0, 0)), ColElem((0, 0, 1)))
    # all classical operators vanish on the trivial component
    for i in (1, 2):
        assert b.f(i) is None
        assert b.e(i) is None
    # ... and the letter-word realization agrees
    word = b.to_word()
    assert word.letters == (1, 2, 3)
    assert word.f(1) is None


def test_pair_inverse_pairing():
    for n in (2, 3):
        for l in range(3):
            for b in elements(n, l):
                for i in range(n + 1):
                    low = b.f(i)
                    if low is not None:
                        assert low.e(i) == b
                    high = b.e(i)
                    if high is not None:
                        assert high.f(i) == b


def test_pair_classical_ops_match_letter_words():
    # the count-vector tensor rule against the flat bracketing-rule oracle
    for n in (2, 3):
        for l in range(3):
            for b in elements(n, l):
                word = b.to_word()
                for i in range(1, n + 1):
                    for direction in ("e", "f"):
                        got = getattr(b, direction)(i)
                        expected = getattr(word, direction)(i)
                        if got is None:
                            assert expected is None
                        else:
                            assert expected is not None
                            assert got.to_word() == expected


def test_pair_classical_ops_match_tensor_of_tableaux():
    for n in (2, 3):
        for l in range(3):
            for b in elements(n, l):
                pair = b.to_tensor()
                for i in range(1, n + 1):
                    for direction in ("e", "f"):
                        got = getattr(b, direction)(i)
                        expected = getattr(pair, direction)(i)
                        if got is None:
                            assert expected is None
                        else:
                            assert isinstance(expected, TensorPair)
                            assert got.to_tensor() == expected


def test_alpha_examples():
    n = 2
    trivial = AdjElemA(RowElem((2, 0, 0)), ColElem((2, 0, 0)))
    k, t = alpha(trivial)
    assert (k, t.columns) == (0, ())
    b = AdjElemA(RowElem((0, 1, 0)), ColElem((0, 0, 1)))
    k, t = alpha(b)
    assert k == 1
    assert t.rows() == ((1, 2), (2,))
    assert t.reading_word() == (2, 1, 2)
    for l in (1, 2):
        for elem in elements(n, l):
            k, t = alpha(elem)
            assert tuple(c - k for c in t.content()) == elem.weight().coeffs
            assert alpha_inverse(n, l, t) == elem


def test_alpha_inverse_rejects_bad_shapes():
    from adjcrys.tableaux import Tableau

    with pytest.raises(ValueError):
        alpha_inverse(2, 1, Tableau.from_rows(2, [(1, 1, 1)]))
    with pytest.raises(ValueError):
        alpha_inverse(2, 1, Tableau.highest_weight(2, (4, 2)))  # k=2 beyond level 1


def test_theta_map_examples():
    empty = AdjElemA(RowElem((0, 0, 0)), ColElem((0, 0, 0)))
    assert theta_map(1, empty).coords() == (1, 0, 0, 1, 0, 0)
    t2 = theta_map(2, empty)
    assert t2.coords() == (0, 1, 0, 0, 1, 0)
    assert t2.k == 1
    for l in (1, 2):
        for b in elements(2, l - 1):
            assert theta_map(1, b).k == b.k
            assert theta_map(1, b).weight() == b.weight()
            for j in (2, 3):
                assert theta_map(j, b).k == b.k + 1
                assert theta_map(j, b).weight() == b.weight()
    with pytest.raises(ValueError):
        theta_map(4, empty)


def test_theta1_phi0_edge_case():
    # f_0 vanishes on the top component; one level up it has exactly one step left
    n, l = 2, 2
    for b in elements(n, l - 1):
        if b.f(0) is None:
            above = theta_map(1, b)
            assert above.phi(0) == 1
            z = above.f(0)
            assert z is not None and z.k == l and z.f(0) is None


def test_highest_elements():
    for n in (2, 3):
        for l in range(3):
            for k in range(l + 1):
                b = highest(n, l, k)
                assert b.k == k
                assert b.weight().fundamental_coeffs() == tuple(
                    k * c for c in b.weight().datum.theta().fundamental_coeffs()
                )
                for i in range(1, n + 1):
                    assert b.e(i) is None
    with pytest.raises(ValueError):
        highest(2, 1, 2)


def test_component_sizes_sum_to_total():
    for n in (2, 3):
        for l in range(4):
            sizes = [len(shell(n, l, k)) for k in range(l + 1)]
            assert sum(sizes) == expected_size(n, l) == len(elements(n, l))
    assert len(shell(2, 1, 1)) == 8
    assert shape_component(2, 1) == (2, 1)
    assert shape_component(3, 2) == (4, 2, 2)


def test_promotion_checks_pass():
    for n in (2, 3):
        for l in range(4):
            report = promotion_checks(n, l)
            assert all_passed(report), render_report(report)


def test_alpha_checks_pass():
    for n in (2, 3):
        for l in (1, 2):
            report = alpha_checks(n, l)
            assert all_passed(report), render_report(report)


def test_verify_theorems_passes():
    for n, l in ((2, 1), (2, 2), (3, 2)):
        report = verify_theorems(n, l)
        assert all_passed(report), render_report(report)


def test_model_adapter_ids():
    model = CrystalA(2, 1)
    b = AdjElemA(RowElem((1, 0, 0)), ColElem((0, 1, 0)))
    assert model.element_id(b) == "A2:x=1,0,0;y=0,1,0"
    assert model.component(b) == 1
    assert model.expected_size() == 9
    assert RowCrystal(2, 1).expected_size() == 3
    assert ColCrystal(2, 1).expected_size() == 3
