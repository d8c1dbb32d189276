"""Graph construction, structural checks, and the two export formats."""

import pytest

from adjcrys.affine_a import CrystalA, elements as a_elements, theta_map
from adjcrys.affine_c import CrystalC, ElemC, elements as c_elements
from adjcrys.affine_d2 import CrystalD2
from adjcrys.crystal_graph import (
    CrystalGraph,
    all_passed,
    axiom_checks,
    build_graph,
    check_commutation,
    check_embedding,
    export,
    graph_from_json,
    is_connected,
    render_report,
    restrict_to_component,
)
from adjcrys.tableaux import ClassicalCrystal


def test_letter_crystal_graph():
    graph = build_graph(ClassicalCrystal(2, (1,)))
    assert [v.id for v in graph.vertices] == ["T2:w=1", "T2:w=2", "T2:w=3"]
    assert [(e.src, e.dst, e.label) for e in graph.edges] == [
        ("T2:w=1", "T2:w=2", 1),
        ("T2:w=2", "T2:w=3", 2),
    ]


def test_level_zero_graphs_are_single_vertices():
    for model in (CrystalA(2, 0), CrystalC(2, 0), CrystalD2(2, 0)):
        graph = build_graph(model)
        assert len(graph.vertices) == 1
        assert graph.edges == ()


def test_c_level_one_graph_size():
    graph = build_graph(CrystalC(2, 1))
    assert len(graph.vertices) == 11


def test_counts_match_closed_forms_and_connectivity():
    for model in (
        CrystalA(2, 2), CrystalA(3, 2),
        CrystalC(2, 2), CrystalC(3, 2),
        CrystalD2(2, 2), CrystalD2(3, 2),
        ClassicalCrystal(2, (2, 1)),
    ):
        report = axiom_checks(model)
        assert all_passed(report), render_report(report)
        assert is_connected(build_graph(model))


def test_component_restriction():
    model = restrict_to_component(CrystalD2(2, 1), 1)
    graph = build_graph(model)
    assert len(graph.vertices) == 5
    assert all(v.k == 1 for v in graph.vertices)
    assert all(e.label in (1, 2) for e in graph.edges)


def test_dot_export():
    text = export(build_graph(ClassicalCrystal(2, (1,))), "dot").decode()
    assert text.startswith("digraph crystal {")
    assert '"T2:w=1" [label="T2:w=1\\nwt=(1,0,0) k=-"];' in text
    assert '"T2:w=1" -> "T2:w=2" [label="1"];' in text
    assert text.count("->") == 2


def test_empty_graph_exports():
    empty = CrystalGraph("c1", 2, 0, (), ())
    assert export(empty, "dot").decode() == "digraph crystal {\n}\n"
    assert graph_from_json(export(empty, "json")) == empty


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        export(CrystalGraph("c1", 2, 0, (), ()), "svg")


def test_json_round_trip():
    for model in (CrystalC(2, 1), CrystalA(2, 1), CrystalD2(2, 1)):
        graph = build_graph(model)
        assert graph_from_json(export(graph, "json")) == graph


def test_export_determinism():
    first = export(build_graph(CrystalA(3, 2)), "json")
    second = export(build_graph(CrystalA(3, 2)), "json")
    assert first == second
    assert export(build_graph(CrystalA(3, 2)), "dot") == export(build_graph(CrystalA(3, 2)), "dot")


def test_check_embedding_accepts_true_embeddings():
    small = a_elements(2, 1)
    result = check_embedding(
        small, lambda b: theta_map(1, b), (0, 1, 2),
        name="theta1", category="embedding",
    )
    assert result.passed
    small_c = c_elements(2, 1)
    result = check_embedding(
        small_c, lambda b: ElemC(b.coords, 2), (0, 1, 2),
        name="inclusion", category="embedding",
    )
    assert result.passed


def test_check_embedding_flags_corrupted_map():
    # identity inclusion with two images swapped: some arrow must break
    small = c_elements(2, 1)
    a = ElemC((2, 0, 0, 0), 2)
    b = ElemC((0, 0, 0, 2), 2)

    def corrupted(elem):
        wide = ElemC(elem.coords, 2)
        if wide == a:
            return b
        if wide == b:
            return a
        return wide

    result = check_embedding(
        small, corrupted, (0, 1, 2), name="corrupted", category="embedding",
    )
    assert not result.passed
    assert result.details


def test_check_embedding_flags_noninjective_map():
    small = c_elements(2, 1)
    collapse = lambda elem: ElemC((0, 0, 0, 0), 2)
    result = check_embedding(
        small, collapse, (0,), name="collapse", category="embedding",
    )
    assert not result.passed and "injective" in result.details


def test_check_commutation_side_conditions():
    small = c_elements(2, 1)
    from adjcrys.affine_c import phi_map

    strict = check_commutation(
        small, lambda b: phi_map(1, b),
        [("f", 0, False), ("e", 0, False)],
        name="affine", category="commute",
    )
    assert strict.passed
    # the classical operators only commute where defined; the unconditional
    # variant must fail (phi_1 creates room for f_1 where there was none)
    loose = check_commutation(
        small, lambda b: phi_map(1, b),
        [("f", 1, False), ("e", 1, False)],
        name="classical-unconditional", category="commute",
    )
    assert not loose.passed
