"""Finite crystal graphs: construction, structural checks, DOT/JSON export.

A model is any object with `family`, `rank`, `level`, `index_set`,
`elements()`, plus per-element accessors `element_id`, `weight_coords`,
`component`, `sort_key` and `root_step(i)` (the expected weight change of
f_i).  Elements themselves expose `e(i)`/`f(i)` (None when undefined) and,
when `closed_stats` is set on the model, closed `eps(i)`/`phi(i)`.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .root_data import ShellStep, classify_shift, in_shell, on_boundary
from .tableaux import eps_phi


# ---------------------------------------------------------------------------
# check results


@dataclass(frozen=True)
class CheckResult:
    name: str
    category: str
    passed: bool
    cases: int
    details: str = ""


Report = list


def all_passed(report: Iterable[CheckResult]) -> bool:
    return all(c.passed for c in report)


def merge_checks(name: str, category: str, parts: Sequence[CheckResult]) -> CheckResult:
    """Collapse per-map results for one statement into a single line."""
    failed = [p for p in parts if not p.passed]
    details = failed[0].details if failed else ""
    return CheckResult(name, category, not failed, sum(p.cases for p in parts), details)


def render_report(report: Sequence[CheckResult]) -> str:
    lines = []
    for c in report:
        label = f"{c.category}/{c.name}"
        line = f"{'PASS' if c.passed else 'FAIL'}  {label:<46} ({c.cases} cases)"
        if not c.passed and c.details:
            line += f"\n      {c.details}"
        lines.append(line)
    npass = sum(1 for c in report if c.passed)
    lines.append(f"result: {npass} passed, {len(report) - npass} failed")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph construction and export


@dataclass(frozen=True)
class Vertex:
    id: str
    k: Optional[int]
    weight: tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    label: int


@dataclass(frozen=True)
class CrystalGraph:
    family: str
    rank: int
    level: Optional[int]
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]


def build_graph(model) -> CrystalGraph:
    """Exhaustively enumerate the model and record every f_i arrow."""
    elems = sorted(model.elements(), key=model.sort_key)
    vertices = tuple(
        Vertex(model.element_id(b), model.component(b), tuple(model.weight_coords(b)))
        for b in elems
    )
    edges = []
    for b in elems:
        src = model.element_id(b)
        for i in model.index_set:
            c = b.f(i)
            if c is not None:
                edges.append(Edge(src, model.element_id(c), i))
    edges.sort(key=lambda e: (e.src, e.label, e.dst))
    return CrystalGraph(model.family, model.rank, model.level, vertices, tuple(edges))


def export(graph: CrystalGraph, fmt: str) -> bytes:
    """Serialize a graph to 'dot' or 'json'; deterministic byte output."""
    if fmt == "dot":
        return _to_dot(graph).encode("utf-8")
    if fmt == "json":
        return _to_json(graph).encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r}")


def _fmt_weight(weight: tuple[int, ...]) -> str:
    return "(" + ",".join(str(c) for c in weight) + ")"


def _to_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for v in graph.vertices:
        k = "-" if v.k is None else str(v.k)
        lines.append(f'  "{v.id}" [label="{v.id}\\nwt={_fmt_weight(v.weight)} k={k}"];')
    for e in graph.edges:
        lines.append(f'  "{e.src}" -> "{e.dst}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(graph: CrystalGraph) -> str:
    obj = {
        "family": graph.family,
        "rank": graph.rank,
        "level": graph.level,
        "nodes": [
            {"id": v.id, "k": v.k, "weight": list(v.weight)} for v in graph.vertices
        ],
        "edges": [
            {"src": e.src, "dst": e.dst, "i": e.label} for e in graph.edges
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def graph_from_json(data) -> CrystalGraph:
    """Rebuild a graph from exported JSON (bytes, str, or parsed dict)."""
    if isinstance(data, (bytes, str)):
        data = json.loads(data)
    vertices = tuple(
        Vertex(n["id"], n["k"], tuple(n["weight"])) for n in data["nodes"]
    )
    edges = tuple(Edge(e["src"], e["dst"], e["i"]) for e in data["edges"])
    return CrystalGraph(data["family"], data["rank"], data["level"], vertices, edges)


def is_connected(graph: CrystalGraph) -> bool:
    """Connectivity of the underlying undirected graph over all labels."""
    if len(graph.vertices) <= 1:
        return True
    adj: dict[str, set[str]] = {v.id: set() for v in graph.vertices}
    for e in graph.edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    start = graph.vertices[0].id
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(graph.vertices)


class _ComponentModel:
    """A single classical component of an affine model (labels 1..n only)."""

    def __init__(self, base, k: int):
        self._base = base
        self._k = k
        self.family = base.family
        self.rank = base.rank
        self.level = base.level
        self.index_set = tuple(i for i in base.index_set if i != 0)
        self.closed_stats = getattr(base, "closed_stats", False)

    def elements(self):
        return [b for b in self._base.elements() if self._base.component(b) == self._k]

    def element_id(self, b):
        return self._base.element_id(b)

    def weight_coords(self, b):
        return self._base.weight_coords(b)

    def component(self, b):
        return self._base.component(b)

    def sort_key(self, b):
        return self._base.sort_key(b)

    def root_step(self, i):
        return self._base.root_step(i)

    def expected_size(self):
        return None


def restrict_to_component(model, k: int) -> _ComponentModel:
    return _ComponentModel(model, k)


# ---------------------------------------------------------------------------
# generic checks


def _apply(b, direction: str, i: int):
    return b.f(i) if direction == "f" else b.e(i)


def check_commutation(domain, vmap, ops, *, name: str, category: str) -> CheckResult:
    """Verify vmap(op(b)) == op(vmap(b)) over the domain.

    `ops` is a sequence of (direction, label, only_when_defined).  With
    only_when_defined the statement is checked just where op(b) is defined;
    otherwise vanishing must agree on both sides as well.
    """
    cases = 0
    for b in domain:
        for direction, i, only_when_defined in ops:
            a = _apply(b, direction, i)
            if a is None:
                if only_when_defined:
                    continue
                cases += 1
                other = _apply(vmap(b), direction, i)
                if other is not None:
                    return CheckResult(
                        name, category, False, cases,
                        f"{direction}_{i} vanishes on {b} but not on its image",
                    )
                continue
            cases += 1
            other = _apply(vmap(b), direction, i)
            if other != vmap(a):
                return CheckResult(
                    name, category, False, cases,
                    f"{direction}_{i} does not commute with the map at {b}",
                )
    return CheckResult(name, category, True, cases)


def check_embedding(domain, vmap, labels, *, name: str, category: str) -> CheckResult:
    """Verify vmap identifies the domain with a full subgraph of the target.

    Injectivity, then arrow-for-arrow correspondence: a present arrow maps to
    the corresponding arrow; an absent arrow must be absent on the image or
    escape the image set.
    """
    image = {}
    cases = 0
    for b in domain:
        im = vmap(b)
        if im in image:
            return CheckResult(
                name, category, False, cases, f"map not injective: {b} and {image[im]}"
            )
        image[im] = b
    image_set = set(image)
    for b in domain:
        for i in labels:
            for direction in ("f", "e"):
                cases += 1
                inner = _apply(b, direction, i)
                outer = _apply(vmap(b), direction, i)
                if inner is not None:
                    if outer != vmap(inner):
                        return CheckResult(
                            name, category, False, cases,
                            f"arrow {direction}_{i} at {b} not preserved",
                        )
                elif outer is not None and outer in image_set:
                    return CheckResult(
                        name, category, False, cases,
                        f"extra arrow {direction}_{i} inside the image at {b}",
                    )
    return CheckResult(name, category, True, cases)


def check_boundary_multiplicity(big, l: int, *, name: str, category: str) -> CheckResult:
    """Every boundary-shell weight occurs exactly once in its component."""
    cases = 0
    for k in range(l + 1):
        counts = Counter(b.weight() for b in big if b.k == k)
        cases += sum(counts.values())
        for mu, count in counts.items():
            if on_boundary(mu, k) and count != 1:
                return CheckResult(
                    name, category, False, cases,
                    f"weight {mu} has multiplicity {count} in component k={k}",
                )
    return CheckResult(name, category, True, cases)


def check_weight_injective(complement, *, name: str, category: str) -> CheckResult:
    """Weights are pairwise distinct off the images of the level-raising maps."""
    counts = Counter(b.weight() for b in complement)
    for mu, count in counts.items():
        if count != 1:
            return CheckResult(
                name, category, False, len(complement),
                f"weight {mu} repeats {count} times off the images",
            )
    return CheckResult(name, category, True, len(complement))


def check_f0_landing(big, images, datum, l: int, *, category: str = "f0-landing") -> Report:
    """The f_0 action on elements outside the level-raising images.

    Checks the vanishing criterion (k = l and weight + theta off the top
    shell), the landing component predicted by the shell classification, and
    uniqueness of the landing element by weight.
    """
    complement = [b for b in big if b not in images]
    complement_set = set(complement)
    weight_counts = Counter(b.weight() for b in complement)
    theta = datum.theta()

    kill_bad = ""
    comp_bad = ""
    uniq_bad = ""
    kill_cases = comp_cases = uniq_cases = 0
    for b in complement:
        mu = b.weight()
        z = b.f(0)
        kill_cases += 1
        expect_dead = b.k == l and not in_shell(mu + theta, l)
        if (z is None) != expect_dead:
            kill_bad = kill_bad or f"vanishing criterion wrong at {b}"
            continue
        if z is None:
            continue
        comp_cases += 1
        if not on_boundary(mu, b.k):
            comp_bad = comp_bad or f"{b} escapes the level-raising images but is not on its boundary shell"
            continue
        shift = classify_shift(mu, b.k)
        target = b.k + {ShellStep.UP: 1, ShellStep.SAME: 0, ShellStep.DOWN: -1}[shift.step]
        if z.k != target:
            comp_bad = comp_bad or f"f_0 lands in k={z.k} at {b}, classification says {target}"
            continue
        uniq_cases += 1
        if z not in complement_set:
            uniq_bad = uniq_bad or f"f_0 image of {b} lies in the level-raising images"
        elif weight_counts[z.weight()] != 1:
            uniq_bad = uniq_bad or f"f_0 image of {b} is not unique of its weight"
    return [
        CheckResult("vanishing-criterion", category, not kill_bad, kill_cases, kill_bad),
        CheckResult("landing-component", category, not comp_bad, comp_cases, comp_bad),
        CheckResult("landing-unique-by-weight", category, not uniq_bad, uniq_cases, uniq_bad),
    ]


# ---------------------------------------------------------------------------
# model-level axiom checks


def axiom_checks(model) -> Report:
    """Inverse pairing, closed statistics, weight steps, count, connectivity."""
    elems = list(model.elements())
    labels = list(model.index_set)
    checks: Report = []

    bad = ""
    cases = 0
    for b in elems:
        for i in labels:
            for direction in ("f", "e"):
                cases += 1
                c = _apply(b, direction, i)
                if c is None:
                    continue
                back = _apply(c, "e" if direction == "f" else "f", i)
                if back != b:
                    bad = bad or f"{direction}_{i} not inverted at {model.element_id(b)}"
    checks.append(CheckResult("ef-inverse", "axioms", not bad, cases, bad))

    if getattr(model, "closed_stats", False):
        bad = ""
        cases = 0
        for b in elems:
            for i in labels:
                cases += 1
                if (b.eps(i), b.phi(i)) != eps_phi(b, i):
                    bad = bad or f"closed statistics wrong at {model.element_id(b)}, i={i}"
        checks.append(CheckResult("stats-closed-vs-iteration", "axioms", not bad, cases, bad))

    bad = ""
    cases = 0
    for b in elems:
        wb = model.weight_coords(b)
        for i in labels:
            step = model.root_step(i)
            c = b.f(i)
            if c is not None:
                cases += 1
                wc = model.weight_coords(c)
                if tuple(x - y for x, y in zip(wc, wb)) != tuple(step):
                    bad = bad or f"f_{i} weight step wrong at {model.element_id(b)}"
            c = b.e(i)
            if c is not None:
                cases += 1
                wc = model.weight_coords(c)
                if tuple(y - x for x, y in zip(wc, wb)) != tuple(step):
                    bad = bad or f"e_{i} weight step wrong at {model.element_id(b)}"
    checks.append(CheckResult("weight-step", "axioms", not bad, cases, bad))

    expected = model.expected_size()
    if expected is not None:
        ok = len(elems) == expected
        checks.append(CheckResult(
            "element-count", "axioms", ok, 1,
            "" if ok else f"enumerated {len(elems)}, closed form gives {expected}",
        ))

    graph = build_graph(model)
    checks.append(CheckResult(
        "connected", "axioms", is_connected(graph), len(graph.vertices),
        "" if is_connected(graph) else "crystal graph is disconnected",
    ))
    return checks
