"""The twisted coordinate model with the two-valued middle slot."""

import pytest

from adjcrys.affine_d2 import (
    CrystalD2,
    ElemD,
    elements,
    expected_size,
    highest,
    psi_map,
    shell,
    shell_size,
    verify_theorems,
)
from adjcrys.crystal_graph import all_passed, render_report
from adjcrys.root_data import Family, RootDatum, ShellStep, classify_shift, on_boundary
from adjcrys.tableaux import eps_phi


def test_construction_rejects_invalid_tuples():
    with pytest.raises(ValueError):
        ElemD((0, 0), 2, (0, 0), 1)  # middle slot beyond {0, 1}
    with pytest.raises(ValueError):
        ElemD((1, 0), 1, (0, 0), 1)  # sum beyond the level
    with pytest.raises(ValueError):
        ElemD((1, 0), 0, (0,), 1)  # length mismatch
    b = ElemD((0, 1), 1, (1, 0), 3)
    assert b.k == 3
    assert b.coords == (0, 1, 1, 1, 0)
    assert (b.xval(2), b.xbarval(2), b.xbarval(1)) == (1, 1, 0)


def test_zero_node_operator_examples():
    assert ElemD((0, 0), 0, (0, 0), 1).f(0).coords == (1, 0, 0, 0, 0)
    assert ElemD((0, 0), 0, (0, 1), 1).f(0).coords == (0, 0, 0, 0, 0)
    assert ElemD((1, 0), 0, (0, 0), 1).f(0) is None  # would leave the level
    assert ElemD((1, 0), 0, (0, 0), 1).e(0).coords == (0, 0, 0, 0, 0)


def test_top_node_operator_examples():
    # the x_0 parity drives the last-node moves
    assert ElemD((0, 1), 0, (0, 0), 1).f(2).coords == (0, 0, 1, 0, 0)
    assert ElemD((0, 0), 1, (0, 0), 1).f(2).coords == (0, 0, 0, 1, 0)
    assert ElemD((0, 0), 1, (0, 0), 1).e(2).coords == (0, 1, 0, 0, 0)
    assert ElemD((0, 0), 0, (1, 0), 1).e(2).coords == (0, 0, 1, 0, 0)


def test_stats_match_iteration_including_doubling():
    b = ElemD((1, 0), 0, (0, 0), 1)
    assert b.eps(0) == 2  # the doubled zero-node statistic
    assert eps_phi(b, 0) == (2, 0)
    for n in (2, 3):
        for l in range(4):
            for b in elements(n, l):
                for i in range(n + 1):
                    assert (b.eps(i), b.phi(i)) == eps_phi(b, i)


def test_inverse_pairing():
    for n in (2, 3):
        for l in range(4):
            for b in elements(n, l):
                for i in range(n + 1):
                    low = b.f(i)
                    if low is not None:
                        assert low.e(i) == b
                    high = b.e(i)
                    if high is not None:
                        assert high.f(i) == b


def test_weight_steps_and_invisible_slot():
    for n in (2, 3):
        datum = RootDatum(Family.B, n)
        for l in range(3):
            for b in elements(n, l):
                for i in range(n + 1):
                    low = b.f(i)
                    if low is None:
                        continue
                    step = datum.theta() if i == 0 else -datum.simple_root(i)
                    assert low.weight() - b.weight() == step
    # flipping x_0 alone never shows in the weight
    assert ElemD((0, 0), 1, (0, 0), 1).weight() == ElemD((0, 0), 0, (0, 0), 1).weight()


def test_counts():
    assert len(shell(2, 1, 1)) == 5
    assert shell_size(2, 1) == 5
    for n in (2, 3):
        for l in range(4):
            assert len(elements(n, l)) == expected_size(n, l)
            for k in range(l + 1):
                assert len(shell(n, l, k)) == shell_size(n, k)


def test_psi_map_examples():
    assert psi_map(1, ElemD((0, 0), 0, (0, 0), 0)).coords == (1, 0, 0, 0, 1)
    with_zero = psi_map(2, ElemD((0, 1), 0, (0, 0), 1))
    assert with_zero.coords == (0, 1, 1, 0, 0) and with_zero.level == 2
    with_one = psi_map(2, ElemD((0, 0), 1, (0, 0), 1))
    assert with_one.coords == (0, 1, 0, 1, 0) and with_one.level == 2
    with pytest.raises(ValueError):
        psi_map(3, ElemD((0, 0), 0, (0, 0), 0))


def test_psi_map_component_and_weight():
    for n in (2, 3):
        for l in (2, 3):
            for j in range(1, n):
                for b in elements(n, l - 2):
                    image = psi_map(j, b)
                    assert image.level == l and image.k == b.k + 2
                    assert image.weight() == b.weight()
            for b in elements(n, l - 1):
                image = psi_map(n, b)
                assert image.level == l and image.k == b.k + 1
                assert image.weight() == b.weight()


def test_boundary_coordinate_criterion():
    for n in (2, 3):
        for l in range(3):
            for b in elements(n, l):
                coordinate = b.x0 == 0 and all(
                    min(b.xval(j), b.xbarval(j)) == 0 for j in range(1, n + 1)
                )
                assert coordinate == on_boundary(b.weight(), b.k)


def test_level_inclusion_is_full_subgraph():
    n, l = 2, 3
    small = set(ElemD(b.x, b.x0, b.xbar, l) for b in elements(n, l - 1))
    for b in elements(n, l - 1):
        wide = ElemD(b.x, b.x0, b.xbar, l)
        for i in range(n + 1):
            for direction in ("e", "f"):
                inner = getattr(b, direction)(i)
                outer = getattr(wide, direction)(i)
                if inner is not None:
                    assert outer == ElemD(inner.x, inner.x0, inner.xbar, l)
                else:
                    assert outer is None or outer not in small


def test_zero_node_landing_never_stays():
    # boundary elements outside the images move strictly up or down
    for n in (2, 3):
        for l in (1, 2):
            for b in elements(n, l):
                if not on_boundary(b.weight(), b.k):
                    continue
                z = b.f(0)
                if z is None:
                    continue
                shift = classify_shift(b.weight(), b.k)
                assert shift.step in (ShellStep.UP, ShellStep.DOWN)
                assert z.k == b.k + (1 if shift.step is ShellStep.UP else -1)


def test_highest_elements():
    for n in (2, 3):
        for l in range(3):
            for k in range(l + 1):
                b = highest(n, l, k)
                assert b.k == k and b.x0 == 0
                for i in range(1, n + 1):
                    assert b.e(i) is None


def test_verify_theorems_passes():
    for n, l in ((2, 1), (2, 2), (3, 2)):
        report = verify_theorems(n, l)
        assert all_passed(report), render_report(report)


def test_model_adapter_ids():
    model = CrystalD2(2, 1)
    assert model.element_id(ElemD((0, 1), 1, (0, 0), 2)) == "D2:x=0,1;x0=1;xb=0,0"
    assert model.expected_size() == 6
