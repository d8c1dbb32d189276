"""Level-l adjoint model on the twisted affinization over type B_n.

Elements are tuples (x_1, ..., x_n, x_0, xbar_n, ..., xbar_1) of nonnegative
integers with x_0 restricted to {0, 1}; the component index is the full
coordinate sum k <= l.  The x_0 slot is kept as a separate field so the
two-valued invariant is structural, and it is invisible to the weight.  The
level is part of the element, as in the C-type model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .counting import compositions
from .crystal_graph import (
    CheckResult,
    Report,
    check_boundary_multiplicity,
    check_commutation,
    check_embedding,
    check_f0_landing,
    check_weight_injective,
    merge_checks,
)
from .root_data import Family, RootDatum, Weight, in_shell, on_boundary


@dataclass(frozen=True)
class ElemD:
    x: tuple[int, ...]
    x0: int
    xbar: tuple[int, ...]  # descending index order: xbar_n, ..., xbar_1
    level: int

    def __post_init__(self) -> None:
        if len(self.x) != len(self.xbar) or len(self.x) < 1:
            raise ValueError("x and xbar must have equal positive length")
        if self.x0 not in (0, 1):
            raise ValueError(f"x0 must be 0 or 1, got {self.x0}")
        if any(c < 0 for c in self.x + self.xbar):
            raise ValueError("coordinates must be nonnegative")
        if self.k > self.level:
            raise ValueError(f"coordinate sum {self.k} exceeds level {self.level}")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def k(self) -> int:
        return sum(self.x) + self.x0 + sum(self.xbar)

    @property
    def coords(self) -> tuple[int, ...]:
        return self.x + (self.x0,) + self.xbar

    def xval(self, j: int) -> int:
        return self.x[j - 1]

    def xbarval(self, j: int) -> int:
        return self.xbar[self.n - j]

    def weight(self) -> Weight:
        datum = RootDatum(Family.B, self.n)
        return datum.weight(self.xval(j) - self.xbarval(j) for j in range(1, self.n + 1))

    def _moved(self, deltas: dict[int, int]) -> Optional["ElemD"]:
        out = list(self.coords)
        for idx, d in deltas.items():
            out[idx] += d
        n = self.n
        if any(c < 0 for c in out) or out[n] > 1 or sum(out) > self.level:
            return None
        return ElemD(tuple(out[:n]), out[n], tuple(out[n + 1:]), self.level)

    def e(self, i: int) -> Optional["ElemD"]:
        n = self.n
        if i == 0:
            if self.xval(1) > self.xbarval(1):
                return self._moved({0: -1})
            return self._moved({2 * n: +1})
        if i == n:
            if self.x0 == 0:
                return self._moved({n: +1, n + 1: -1})
            return self._moved({n - 1: +1, n: -1})
        if self.xval(i + 1) > self.xbarval(i + 1):
            return self._moved({i - 1: +1, i: -1})
        return self._moved({2 * n - i: +1, 2 * n - i + 1: -1})

    def f(self, i: int) -> Optional["ElemD"]:
        n = self.n
        if i == 0:
            if self.xval(1) >= self.xbarval(1):
                return self._moved({0: +1})
            return self._moved({2 * n: -1})
        if i == n:
            if self.x0 == 0:
                return self._moved({n - 1: -1, n: +1})
            return self._moved({n: -1, n + 1: +1})
        if self.xval(i + 1) >= self.xbarval(i + 1):
            return self._moved({i - 1: -1, i: +1})
        return self._moved({2 * n - i: -1, 2 * n - i + 1: +1})

    def eps(self, i: int) -> int:
        if i == 0:
            return (self.level - self.k) + 2 * max(0, self.xval(1) - self.xbarval(1))
        if i == self.n:
            return 2 * self.xbarval(self.n) + self.x0
        return self.xbarval(i) + max(0, self.xval(i + 1) - self.xbarval(i + 1))

    def phi(self, i: int) -> int:
        if i == 0:
            return (self.level - self.k) + 2 * max(0, self.xbarval(1) - self.xval(1))
        if i == self.n:
            return 2 * self.xval(self.n) + self.x0
        return self.xval(i) + max(0, self.xbarval(i + 1) - self.xval(i + 1))


def psi_map(j: int, b: ElemD) -> ElemD:
    """Level-raising maps: bump x_j and xbar_j across two levels for j < n;
    the j = n map raises one level, toggling the x_0 slot."""
    n = b.n
    if not 1 <= j <= n:
        raise ValueError(f"map index {j} out of range 1..{n}")
    if j < n:
        x = list(b.x)
        xbar = list(b.xbar)
        x[j - 1] += 1
        xbar[n - j] += 1
        return ElemD(tuple(x), b.x0, tuple(xbar), b.level + 2)
    if b.x0 == 0:
        return ElemD(b.x, 1, b.xbar, b.level + 1)
    x = list(b.x)
    xbar = list(b.xbar)
    x[n - 1] += 1
    xbar[0] += 1
    return ElemD(tuple(x), 0, tuple(xbar), b.level + 1)


def shell(n: int, l: int, k: int) -> list[ElemD]:
    out: list[ElemD] = []
    for x0 in (0, 1):
        if k - x0 < 0:
            continue
        for c in compositions(k - x0, 2 * n):
            out.append(ElemD(c[:n], x0, c[n:], l))
    return out


def elements(n: int, l: int) -> list[ElemD]:
    out: list[ElemD] = []
    for k in range(l + 1):
        out.extend(shell(n, l, k))
    return out


def highest(n: int, l: int, k: int) -> ElemD:
    if not 0 <= k <= l:
        raise ValueError(f"component {k} out of range 0..{l}")
    return ElemD((k,) + (0,) * (n - 1), 0, (0,) * n, l)


def shell_size(n: int, k: int) -> int:
    return math.comb(k + 2 * n - 1, 2 * n - 1) + math.comb(k + 2 * n - 2, 2 * n - 1)


def expected_size(n: int, l: int) -> int:
    return sum(shell_size(n, k) for k in range(l + 1))


class CrystalD2:
    """Model adapter for the level-l coordinate crystal."""

    family = "d2"
    closed_stats = True

    def __init__(self, n: int, l: int):
        self.rank = n
        self.level = l
        self.index_set = tuple(range(n + 1))
        self._datum = RootDatum(Family.B, n)

    def elements(self):
        return elements(self.rank, self.level)

    def element_id(self, b: ElemD) -> str:
        x = ",".join(str(c) for c in b.x)
        xb = ",".join(str(c) for c in b.xbar)
        return f"D{self.rank}:x={x};x0={b.x0};xb={xb}"

    def weight_coords(self, b: ElemD) -> tuple[int, ...]:
        return b.weight().coeffs

    def component(self, b: ElemD) -> int:
        return b.k

    def sort_key(self, b: ElemD):
        return b.coords

    def root_step(self, i: int) -> tuple[int, ...]:
        w = self._datum.theta() if i == 0 else -self._datum.simple_root(i)
        return w.coeffs

    def expected_size(self) -> int:
        return expected_size(self.rank, self.level)


def verify_theorems(n: int, l: int) -> Report:
    """Machine-check the structure theorems of the twisted model at (n, l).

    The maps for j < n raise two levels, so the harness works with the three
    consecutive levels l-2, l-1, l.
    """
    datum = RootDatum(Family.B, n)
    labels0 = tuple(range(1, n + 1))
    labels = tuple(range(n + 1))
    big = elements(n, l)
    small = elements(n, l - 1) if l >= 1 else []
    smaller = elements(n, l - 2) if l >= 2 else []
    checks: Report = []

    include = lambda b: ElemD(b.x, b.x0, b.xbar, l)
    checks.append(check_embedding(
        small, include, labels,
        name="level-inclusion-full-subgraph", category="embedding",
    ))

    shift_parts = []
    classical_parts = []
    affine_parts = []
    weight_parts = []
    for j in range(1, n + 1):
        domain = small if j == n else smaller
        step = 1 if j == n else 2
        vmap = lambda b, j=j: psi_map(j, b)
        bad = ""
        for b in domain:
            if vmap(b).k != b.k + step:
                bad = bad or f"level map {j} does not raise the component by {step} at {b}"
        shift_parts.append(CheckResult(f"j={j}", "commute", not bad, len(domain), bad))
        bad = ""
        for b in domain:
            if vmap(b).weight() != b.weight():
                bad = bad or f"level map {j} changes the weight at {b}"
        weight_parts.append(CheckResult(f"j={j}", "commute", not bad, len(domain), bad))
        classical_parts.append(check_commutation(
            domain, vmap, [(d, i, True) for d in ("f", "e") for i in labels0],
            name=f"j={j}", category="commute",
        ))
        affine_parts.append(check_commutation(
            domain, vmap, [("f", 0, False), ("e", 0, False)],
            name=f"j={j}", category="commute",
        ))
    checks.append(merge_checks("psij-component-shift", "commute", shift_parts))
    checks.append(merge_checks("psij-weight-preserving", "commute", weight_parts))
    checks.append(merge_checks("psij-classical-commute-nonzero", "commute", classical_parts))
    checks.append(merge_checks("psij-affine-commute", "commute", affine_parts))

    images = {psi_map(j, b) for j in range(1, n) for b in smaller}
    images |= {psi_map(n, b) for b in small}

    bad = ""
    cases = 0
    for k in range(l + 1):
        rhs = {b for b in big if b.k == k and in_shell(b.weight(), k - 1)}
        lhs = {
            psi_map(j, b) for j in range(1, n) for b in smaller if b.k == k - 2
        } if k >= 2 else set()
        if k >= 1:
            lhs |= {psi_map(n, b) for b in small if b.k == k - 1}
        cases += len(rhs)
        if lhs != rhs:
            bad = bad or f"image description fails in component k={k}"
    checks.append(CheckResult("image-equality", "boundary", not bad, cases, bad))

    bad = ""
    for b in big:
        coordinate = b.x0 == 0 and all(
            min(b.xval(j), b.xbarval(j)) == 0 for j in range(1, n + 1)
        )
        if coordinate != on_boundary(b.weight(), b.k):
            bad = bad or f"coordinate boundary criterion fails at {b}"
    checks.append(CheckResult("coordinate-criterion", "boundary", not bad, len(big), bad))

    checks.append(check_boundary_multiplicity(
        big, l, name="boundary-weights-free", category="multiplicity",
    ))
    complement = [b for b in big if b not in images]
    checks.append(check_weight_injective(
        complement, name="weight-injective-off-images", category="multiplicity",
    ))

    checks.extend(check_f0_landing(big, images, datum, l))
    return checks
