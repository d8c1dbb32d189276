"""Level-l adjoint model on the affinization of type A_n.

Elements pair a one-row rectangle with an n-row rectangle, each recorded by
multiplicities: x_j counts the letter j in the row tableau, y_j counts the
depth-n columns missing j in the column tableau.  The affine operators on a
factor are cyclic shifts of the classical ones via the promotion map; the
pair carries the two-factor tensor rule.  The classical decomposition into
components indexed by k = l - min(x_1, y_1) is realized explicitly by the
map `alpha` onto tableaux of shape (2k, k^(n-1)).
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
from .root_data import Family, RootDatum, Weight, in_shell
from .tableaux import Tableau, TensorPair, Word, column_missing, flatten_letters


def _shift(vec: tuple[int, ...], minus: int, plus: int) -> Optional[tuple[int, ...]]:
    if vec[minus] == 0:
        return None
    out = list(vec)
    out[minus] -= 1
    out[plus] += 1
    return tuple(out)


@dataclass(frozen=True)
class RowElem:
    """One-row rectangle element: x_j = multiplicity of the letter j."""

    x: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.x) < 2:
            raise ValueError("need at least two letters")
        if any(c < 0 for c in self.x):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.x) - 1

    @property
    def level(self) -> int:
        return sum(self.x)

    def promote(self) -> "RowElem":
        return RowElem((self.x[-1],) + self.x[:-1])

    def promote_inverse(self) -> "RowElem":
        return RowElem(self.x[1:] + (self.x[0],))

    def f(self, i: int) -> Optional["RowElem"]:
        if i == 0:
            out = _shift(self.x, self.n, 0)
        else:
            out = _shift(self.x, i - 1, i)
        return None if out is None else RowElem(out)

    def e(self, i: int) -> Optional["RowElem"]:
        if i == 0:
            out = _shift(self.x, 0, self.n)
        else:
            out = _shift(self.x, i, i - 1)
        return None if out is None else RowElem(out)

    def eps(self, i: int) -> int:
        return self.x[0] if i == 0 else self.x[i]

    def phi(self, i: int) -> int:
        return self.x[self.n] if i == 0 else self.x[i - 1]

    def content(self) -> tuple[int, ...]:
        return self.x

    def to_tableau(self) -> Tableau:
        row = tuple(c for c in range(1, self.n + 2) for _ in range(self.x[c - 1]))
        return Tableau.from_rows(self.n, [row] if row else [])


@dataclass(frozen=True)
class ColElem:
    """n-row rectangle element: y_j = multiplicity of the column missing j."""

    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.y) < 2:
            raise ValueError("need at least two column kinds")
        if any(c < 0 for c in self.y):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.y) - 1

    @property
    def level(self) -> int:
        return sum(self.y)

    def promote(self) -> "ColElem":
        return ColElem((self.y[-1],) + self.y[:-1])

    def promote_inverse(self) -> "ColElem":
        return ColElem(self.y[1:] + (self.y[0],))

    def f(self, i: int) -> Optional["ColElem"]:
        if i == 0:
            out = _shift(self.y, 0, self.n)
        else:
            out = _shift(self.y, i, i - 1)
        return None if out is None else ColElem(out)

    def e(self, i: int) -> Optional["ColElem"]:
        if i == 0:
            out = _shift(self.y, self.n, 0)
        else:
            out = _shift(self.y, i - 1, i)
        return None if out is None else ColElem(out)

    def eps(self, i: int) -> int:
        return self.y[self.n] if i == 0 else self.y[i - 1]

    def phi(self, i: int) -> int:
        return self.y[0] if i == 0 else self.y[i]

    def content(self) -> tuple[int, ...]:
        return tuple(self.level - c for c in self.y)

    def to_tableau(self) -> Tableau:
        cols = []
        for j in range(self.n + 1, 0, -1):
            cols.extend([column_missing(self.n, j)] * self.y[j - 1])
        return Tableau(self.n, tuple(cols))


@dataclass(frozen=True)
class AdjElemA:
    """A row factor tensor a column factor of the same rank and level."""

    row: RowElem
    col: ColElem

    def __post_init__(self) -> None:
        if self.row.n != self.col.n:
            raise ValueError("rank mismatch between factors")
        if self.row.level != self.col.level:
            raise ValueError("level mismatch between factors")

    @property
    def n(self) -> int:
        return self.row.n

    @property
    def level(self) -> int:
        return self.row.level

    @property
    def k(self) -> int:
        """Index of the classical component the element belongs to."""
        return self.level - min(self.row.x[0], self.col.y[0])

    def coords(self) -> tuple[int, ...]:
        return self.row.x + self.col.y

    def f(self, i: int) -> Optional["AdjElemA"]:
        if self.row.phi(i) > self.col.eps(i):
            new = self.row.f(i)
            return None if new is None else AdjElemA(new, self.col)
        new = self.col.f(i)
        return None if new is None else AdjElemA(self.row, new)

    def e(self, i: int) -> Optional["AdjElemA"]:
        if self.row.phi(i) >= self.col.eps(i):
            new = self.row.e(i)
            return None if new is None else AdjElemA(new, self.col)
        new = self.col.e(i)
        return None if new is None else AdjElemA(self.row, new)

    def eps(self, i: int) -> int:
        return self.row.eps(i) + max(0, self.col.eps(i) - self.row.phi(i))

    def phi(self, i: int) -> int:
        return self.col.phi(i) + max(0, self.row.phi(i) - self.col.eps(i))

    def weight(self) -> Weight:
        datum = RootDatum(Family.A, self.n)
        return datum.weight(a - b for a, b in zip(self.row.x, self.col.y))

    def to_tensor(self) -> TensorPair:
        return TensorPair(self.row.to_tableau(), self.col.to_tableau())

    def to_word(self) -> Word:
        return Word(self.n, flatten_letters(self.to_tensor()))


def theta_map(j: int, b: AdjElemA) -> AdjElemA:
    """Raise the level by one: add a letter j to the row, a column missing j
    to the column factor.  Injective and weight preserving."""
    if not 1 <= j <= b.n + 1:
        raise ValueError(f"map index {j} out of range 1..{b.n + 1}")
    x = list(b.row.x)
    y = list(b.col.y)
    x[j - 1] += 1
    y[j - 1] += 1
    return AdjElemA(RowElem(tuple(x)), ColElem(tuple(y)))


def shape_component(n: int, k: int) -> tuple[int, ...]:
    """Shape of the k-th classical component: (2k, k^(n-1))."""
    return () if k == 0 else (2 * k,) + (k,) * (n - 1)


def alpha(b: AdjElemA) -> tuple[int, Tableau]:
    """Classical isomorphism onto tableaux: strip the common count of the
    letter 1 and of the column missing 1, then concatenate reading words."""
    strip = min(b.row.x[0], b.col.y[0])
    k = b.level - strip
    x = (b.row.x[0] - strip,) + b.row.x[1:]
    y = (b.col.y[0] - strip,) + b.col.y[1:]
    cols = list(ColElem(y).to_tableau().columns)
    for c in range(1, b.n + 2):
        cols.extend([(c,)] * x[c - 1])
    return k, Tableau(b.n, tuple(cols))


def alpha_inverse(n: int, l: int, t: Tableau) -> AdjElemA:
    """Inverse of `alpha` at level l for a tableau of component shape."""
    shape = t.shape
    k = shape[0] // 2 if shape else 0
    if shape != shape_component(n, k):
        raise ValueError(f"shape {shape} is not a component shape for rank {n}")
    if k > l:
        raise ValueError(f"component {k} does not exist at level {l}")
    x = [0] * (n + 1)
    y = [0] * (n + 1)
    for col in t.columns[:k]:
        missing = next(c for c in range(1, n + 2) if c not in col)
        y[missing - 1] += 1
    for col in t.columns[k:]:
        x[col[0] - 1] += 1
    x[0] += l - k
    y[0] += l - k
    return AdjElemA(RowElem(tuple(x)), ColElem(tuple(y)))


def row_elements(n: int, l: int) -> list[RowElem]:
    return [RowElem(x) for x in compositions(l, n + 1)]


def col_elements(n: int, l: int) -> list[ColElem]:
    return [ColElem(y) for y in compositions(l, n + 1)]


def elements(n: int, l: int) -> list[AdjElemA]:
    return [
        AdjElemA(row, col)
        for row in row_elements(n, l)
        for col in col_elements(n, l)
    ]


def shell(n: int, l: int, k: int) -> list[AdjElemA]:
    return [b for b in elements(n, l) if b.k == k]


def highest(n: int, l: int, k: int) -> AdjElemA:
    """The classically highest element of component k at level l."""
    if not 0 <= k <= l:
        raise ValueError(f"component {k} out of range 0..{l}")
    x = (l,) + (0,) * n
    y = (l - k,) + (0,) * (n - 1) + (k,)
    return AdjElemA(RowElem(x), ColElem(y))


def factor_size(n: int, l: int) -> int:
    return math.comb(l + n, n)


def expected_size(n: int, l: int) -> int:
    return factor_size(n, l) ** 2


# ---------------------------------------------------------------------------
# model adapters


class _FactorCrystal:
    """Shared adapter plumbing for the row and column factor crystals."""

    closed_stats = True

    def __init__(self, n: int, l: int):
        self.rank = n
        self.level = l
        self.index_set = tuple(range(n + 1))
        self._datum = RootDatum(Family.A, n)

    def weight_coords(self, b) -> tuple[int, ...]:
        return b.content()

    def component(self, b) -> Optional[int]:
        return None

    def root_step(self, i: int) -> tuple[int, ...]:
        w = self._datum.theta() if i == 0 else -self._datum.simple_root(i)
        return w.coeffs

    def expected_size(self) -> int:
        return factor_size(self.rank, self.level)


class RowCrystal(_FactorCrystal):
    family = "a1-row"

    def elements(self):
        return row_elements(self.rank, self.level)

    def element_id(self, b) -> str:
        return f"A{self.rank}:x=" + ",".join(str(c) for c in b.x)

    def sort_key(self, b):
        return b.x


class ColCrystal(_FactorCrystal):
    family = "a1-col"

    def elements(self):
        return col_elements(self.rank, self.level)

    def element_id(self, b) -> str:
        return f"A{self.rank}:y=" + ",".join(str(c) for c in b.y)

    def sort_key(self, b):
        return b.y


class CrystalA:
    """Model adapter for the level-l pair crystal."""

    family = "a1"
    closed_stats = True

    def __init__(self, n: int, l: int):
        self.rank = n
        self.level = l
        self.index_set = tuple(range(n + 1))
        self._datum = RootDatum(Family.A, n)

    def elements(self):
        return elements(self.rank, self.level)

    def element_id(self, b: AdjElemA) -> str:
        x = ",".join(str(c) for c in b.row.x)
        y = ",".join(str(c) for c in b.col.y)
        return f"A{self.rank}:x={x};y={y}"

    def weight_coords(self, b: AdjElemA) -> tuple[int, ...]:
        return b.weight().coeffs

    def component(self, b: AdjElemA) -> int:
        return b.k

    def sort_key(self, b: AdjElemA):
        return b.coords()

    def root_step(self, i: int) -> tuple[int, ...]:
        w = self._datum.theta() if i == 0 else -self._datum.simple_root(i)
        return w.coeffs

    def expected_size(self) -> int:
        return expected_size(self.rank, self.level)


# ---------------------------------------------------------------------------
# exhaustive verification


def verify_theorems(n: int, l: int) -> Report:
    """Machine-check the structure theorems of the pair model at (n, l):
    the level-one embedding, the commuting level-raising maps, the boundary
    image description, weight multiplicity freeness, and the f_0 landing."""
    datum = RootDatum(Family.A, n)
    labels0 = tuple(range(1, n + 1))
    labels = tuple(range(n + 1))
    big = elements(n, l)
    small = elements(n, l - 1) if l >= 1 else []
    checks: Report = []

    theta1 = lambda b: theta_map(1, b)

    bad = ""
    for b in small:
        if theta_map(1, b).k != b.k:
            bad = bad or f"component changed by the level map at {b}"
    checks.append(CheckResult("theta1-component", "embedding", not bad, len(small), bad))

    checks.append(check_commutation(
        small, theta1,
        [(d, i, False) for d in ("f", "e") for i in labels0],
        name="theta1-classical-commute", category="embedding",
    ))
    checks.append(check_commutation(
        small, theta1, [("f", 0, True), ("e", 0, True)],
        name="theta1-affine-commute-nonzero", category="embedding",
    ))

    bad = ""
    cases = 0
    for b in small:
        tb = theta_map(1, b)
        if b.f(0) is None:
            cases += 1
            z = tb.f(0)
            if tb.phi(0) != 1 or z is None or z.k != l:
                bad = bad or f"f_0 boundary step wrong above {b}"
        if b.e(0) is None:
            cases += 1
            z = tb.e(0)
            if tb.eps(0) != 1 or z is None or z.k != l:
                bad = bad or f"e_0 boundary step wrong above {b}"
    checks.append(CheckResult("theta1-boundary-step", "embedding", not bad, cases, bad))

    checks.append(check_embedding(
        small, theta1, labels, name="theta1-full-subgraph", category="embedding",
    ))

    shift_parts = []
    weight_parts = []
    classical_parts = []
    affine_parts = []
    for j in range(2, n + 2):
        vmap = lambda b, j=j: theta_map(j, b)
        bad = ""
        for b in small:
            if vmap(b).k != b.k + 1:
                bad = bad or f"level map {j} does not raise the component at {b}"
        shift_parts.append(CheckResult(f"j={j}", "commute", not bad, len(small), bad))
        bad = ""
        for b in small:
            if vmap(b).weight() != b.weight():
                bad = bad or f"level map {j} changes the weight at {b}"
        weight_parts.append(CheckResult(f"j={j}", "commute", not bad, len(small), bad))
        classical_parts.append(check_commutation(
            small, vmap, [(d, i, True) for d in ("f", "e") for i in labels0],
            name=f"j={j}", category="commute",
        ))
        affine_parts.append(check_commutation(
            small, vmap, [("f", 0, False), ("e", 0, False)],
            name=f"j={j}", category="commute",
        ))
    checks.append(merge_checks("thetaj-component-shift", "commute", shift_parts))
    checks.append(merge_checks("thetaj-weight-preserving", "commute", weight_parts))
    checks.append(merge_checks("thetaj-classical-commute-nonzero", "commute", classical_parts))
    checks.append(merge_checks("thetaj-affine-commute", "commute", affine_parts))

    images = {
        theta_map(j, b) for j in range(2, n + 2) for b in small
    }

    bad = ""
    cases = 0
    for k in range(l + 1):
        rhs = {b for b in big if b.k == k and in_shell(b.weight(), k - 1)}
        lhs = {
            theta_map(j, b)
            for j in range(2, n + 2)
            for b in small
            if b.k == k - 1
        } if k >= 1 else set()
        cases += len(rhs)
        if lhs != rhs:
            bad = bad or f"image description fails in component k={k}"
    checks.append(CheckResult("image-equality", "boundary", not bad, cases, bad))

    checks.append(check_boundary_multiplicity(
        big, l, name="boundary-weights-free", category="multiplicity",
    ))
    complement = [b for b in big if b not in images]
    checks.append(check_weight_injective(
        complement, name="weight-injective-off-images", category="multiplicity",
    ))

    checks.extend(check_f0_landing(big, images, datum, l))
    return checks


def promotion_checks(n: int, l: int) -> Report:
    """The cyclic-shift identities on both factor crystals: the twist
    sigma o op_j = op_{j+1} o sigma, the zero-node conjugation, and the
    order of sigma."""
    checks: Report = []
    domains = list(row_elements(n, l)) + list(col_elements(n, l))

    bad = ""
    cases = 0
    for b in domains:
        for i in range(n + 1):
            nxt = (i + 1) % (n + 1)
            for direction in ("f", "e"):
                cases += 1
                a = getattr(b, direction)(i)
                lhs = None if a is None else a.promote()
                rhs = getattr(b.promote(), direction)(nxt)
                if lhs != rhs:
                    bad = bad or f"twist fails at {b}, {direction}_{i}"
    checks.append(CheckResult("twist", "promotion", not bad, cases, bad))

    bad = ""
    cases = 0
    for b in domains:
        for direction in ("f", "e"):
            cases += 1
            direct = getattr(b, direction)(0)
            via = getattr(b.promote(), direction)(1)
            conj = None if via is None else via.promote_inverse()
            if direct != conj:
                bad = bad or f"zero-node conjugation fails at {b} ({direction})"
    checks.append(CheckResult("zero-node-conjugation", "promotion", not bad, cases, bad))

    bad = ""
    for b in domains:
        cur = b
        for _ in range(n + 1):
            cur = cur.promote()
        if cur != b:
            bad = bad or f"promotion order wrong at {b}"
    checks.append(CheckResult("order", "promotion", not bad, len(domains), bad))
    return checks


def alpha_checks(n: int, l: int) -> Report:
    """`alpha` as a classical isomorphism: bijectivity onto the tableau
    components, weight preservation, and intertwining all classical
    operators."""
    from .tableaux import enumerate_crystal

    checks: Report = []
    big = elements(n, l)

    bad = ""
    cases = 0
    seen: dict[tuple[int, Tableau], AdjElemA] = {}
    for b in big:
        k, t = alpha(b)
        cases += 1
        if k != b.k:
            bad = bad or f"alpha component mismatch at {b}"
        if (k, t) in seen:
            bad = bad or f"alpha not injective: {b} and {seen[(k, t)]}"
        seen[(k, t)] = b
        if alpha_inverse(n, l, t) != b or t.shape != shape_component(n, k):
            bad = bad or f"alpha round trip fails at {b}"
    for k in range(l + 1):
        target = enumerate_crystal(n, shape_component(n, k))
        got = {t for (kk, t) in seen if kk == k}
        cases += 1
        if got != set(target):
            bad = bad or f"alpha image differs from the component crystal at k={k}"
    checks.append(CheckResult("bijection", "alpha", not bad, cases, bad))

    bad = ""
    for b in big:
        k, t = alpha(b)
        normalized = tuple(c - k for c in t.content())
        if normalized != b.weight().coeffs:
            bad = bad or f"alpha changes the weight at {b}"
    checks.append(CheckResult("weight-preserving", "alpha", not bad, len(big), bad))

    bad = ""
    cases = 0
    for b in big:
        k, t = alpha(b)
        for i in range(1, n + 1):
            for direction in ("f", "e"):
                cases += 1
                a = getattr(b, direction)(i)
                ta = getattr(t, direction)(i)
                if a is None:
                    if ta is not None:
                        bad = bad or f"alpha breaks vanishing of {direction}_{i} at {b}"
                    continue
                if ta is None or alpha(a) != (a.k, ta):
                    bad = bad or f"alpha does not intertwine {direction}_{i} at {b}"
    checks.append(CheckResult("intertwines-classical", "alpha", not bad, cases, bad))
    return checks
