"""Classical type-A crystals on semistandard Young tableaux.

Entries range over 1..n+1.  Every element carries a column reading word
(top to bottom within a column, rightmost column first) and the raising and
lowering operators act through the bracketing rule on that word: drop all
letters other than i and i+1, cancel adjacent i,(i+1) pairs until the word
is (i+1)^r i^s, then raise the rightmost surviving i+1 or lower the leftmost
surviving i.  An undefined operator is the value None, never a sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional


def letter_f(c: int, i: int) -> Optional[int]:
    """Lowering operator on a single letter: i -> i+1, undefined elsewhere."""
    return i + 1 if c == i else None


def letter_e(c: int, i: int) -> Optional[int]:
    """Raising operator on a single letter: i+1 -> i, undefined elsewhere."""
    return i if c == i + 1 else None


def unmatched_positions(word, i: int) -> tuple[list[int], list[int]]:
    """Bracketing rule: positions of the letters surviving cancellation.

    Returns (raisable, lowerable): the indices of the unmatched i+1's and
    the unmatched i's, each increasing, so the reduced word is (i+1)^r i^s.
    """
    lowerable: list[int] = []
    raisable: list[int] = []
    for pos, c in enumerate(word):
        if c == i:
            lowerable.append(pos)
        elif c == i + 1:
            if lowerable:
                lowerable.pop()
            else:
                raisable.append(pos)
    return raisable, lowerable


def word_apply(word, i: int, direction: str) -> Optional[tuple[int, ...]]:
    """Apply e_i or f_i to a letter word; None when the operator vanishes."""
    raisable, lowerable = unmatched_positions(word, i)
    if direction == "f":
        if not lowerable:
            return None
        pos, new = lowerable[0], i + 1
    elif direction == "e":
        if not raisable:
            return None
        pos, new = raisable[-1], i
    else:
        raise ValueError(f"direction must be 'e' or 'f', got {direction!r}")
    out = list(word)
    out[pos] = new
    return tuple(out)


def eps_phi(b, i: int) -> tuple[int, int]:
    """(eps_i, phi_i) computed by iterating the operators to absence.

    Definitionally correct for any element exposing e/f; serves as the
    oracle the closed coordinate formulas are tested against.
    """
    eps = 0
    cur = b.e(i)
    while cur is not None:
        eps += 1
        cur = cur.e(i)
    phi = 0
    cur = b.f(i)
    while cur is not None:
        phi += 1
        cur = cur.f(i)
    return eps, phi


@dataclass(frozen=True)
class Word:
    """A tensor power of the letter crystal, kept as a flat word."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not 1 <= c <= self.n + 1 for c in self.letters):
            raise ValueError(f"letters must lie in 1..{self.n + 1}")

    def e(self, i: int) -> Optional["Word"]:
        w = word_apply(self.letters, i, "e")
        return None if w is None else Word(self.n, w)

    def f(self, i: int) -> Optional["Word"]:
        w = word_apply(self.letters, i, "f")
        return None if w is None else Word(self.n, w)

    def eps(self, i: int) -> int:
        return eps_phi(self, i)[0]

    def phi(self, i: int) -> int:
        return eps_phi(self, i)[1]

    def content(self) -> tuple[int, ...]:
        return tuple(self.letters.count(c) for c in range(1, self.n + 2))


def column_missing(n: int, j: int) -> tuple[int, ...]:
    """The depth-n column with entries 1..n+1 except j."""
    if not 1 <= j <= n + 1:
        raise ValueError(f"column index {j} out of range 1..{n + 1}")
    return tuple(c for c in range(1, n + 2) if c != j)


@dataclass(frozen=True)
class Tableau:
    """Semistandard Young tableau, stored as strictly increasing columns.

    Column-major storage keeps the reading word and the depth-n columns
    native; row views are derived.
    """

    n: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("rank must be positive")
        cols = self.columns
        for col in cols:
            if not col:
                raise ValueError("empty column")
            if len(col) > self.n:
                raise ValueError(f"column depth {len(col)} exceeds rank {self.n}")
            if any(not 1 <= c <= self.n + 1 for c in col):
                raise ValueError(f"entries must lie in 1..{self.n + 1}")
            if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
                raise ValueError(f"column {col} not strictly increasing")
        for a, b in zip(cols, cols[1:]):
            if len(a) < len(b):
                raise ValueError("column depths must weakly decrease left to right")
            if any(a[r] > b[r] for r in range(len(b))):
                raise ValueError("rows must weakly increase left to right")

    @classmethod
    def from_rows(cls, n: int, rows) -> "Tableau":
        rows = [tuple(row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        cols = []
        for c in range(ncols):
            cols.append(tuple(row[c] for row in rows if c < len(row)))
        return cls(n, tuple(cols))

    @classmethod
    def highest_weight(cls, n: int, shape) -> "Tableau":
        """The standard filling: every box of row r holds the letter r."""
        shape = tuple(shape)
        return cls.from_rows(n, [(r,) * shape[r - 1] for r in range(1, len(shape) + 1)])

    @property
    def shape(self) -> tuple[int, ...]:
        depth = max((len(c) for c in self.columns), default=0)
        return tuple(
            sum(1 for c in self.columns if len(c) > r) for r in range(depth)
        )

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(col[r] for col in self.columns if r < len(col))
            for r in range(len(self.shape))
        )

    def reading_word(self) -> tuple[int, ...]:
        word: list[int] = []
        for col in reversed(self.columns):
            word.extend(col)
        return tuple(word)

    def content(self) -> tuple[int, ...]:
        word = self.reading_word()
        return tuple(word.count(c) for c in range(1, self.n + 2))

    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def _positions(self) -> list[tuple[int, int]]:
        # (column index, row index) of each reading-word position
        pos = []
        for ci in range(len(self.columns) - 1, -1, -1):
            for ri in range(len(self.columns[ci])):
                pos.append((ci, ri))
        return pos

    def _apply(self, i: int, direction: str) -> Optional["Tableau"]:
        word = self.reading_word()
        new_word = word_apply(word, i, direction)
        if new_word is None:
            return None
        changed = next(p for p in range(len(word)) if word[p] != new_word[p])
        ci, ri = self._positions()[changed]
        cols = [list(col) for col in self.columns]
        cols[ci][ri] = new_word[changed]
        return Tableau(self.n, tuple(tuple(col) for col in cols))

    def e(self, i: int) -> Optional["Tableau"]:
        return self._apply(i, "e")

    def f(self, i: int) -> Optional["Tableau"]:
        return self._apply(i, "f")

    def eps(self, i: int) -> int:
        return eps_phi(self, i)[0]

    def phi(self, i: int) -> int:
        return eps_phi(self, i)[1]

    def sort_key(self) -> tuple[int, ...]:
        # canonical order: lexicographic on reading words
        return self.reading_word()


@dataclass(frozen=True)
class TensorPair:
    """Two-factor tensor product under the standard rule.

    f acts on the left factor iff phi(left) > eps(right); e acts on the left
    factor iff phi(left) >= eps(right).  Factors may be any elements with
    e/f/eps/phi, so pairs nest.
    """

    left: object
    right: object

    def f(self, i: int):
        if self.left.phi(i) > self.right.eps(i):
            new = self.left.f(i)
            return None if new is None else TensorPair(new, self.right)
        new = self.right.f(i)
        return None if new is None else TensorPair(self.left, new)

    def e(self, i: int):
        if self.left.phi(i) >= self.right.eps(i):
            new = self.left.e(i)
            return None if new is None else TensorPair(new, self.right)
        new = self.right.e(i)
        return None if new is None else TensorPair(self.left, new)

    def eps(self, i: int) -> int:
        return eps_phi(self, i)[0]

    def phi(self, i: int) -> int:
        return eps_phi(self, i)[1]

    def content(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.left.content(), self.right.content()))


def flatten_letters(b) -> tuple[int, ...]:
    """Flatten a nested TensorPair/Word/Tableau element to its letter word."""
    if isinstance(b, TensorPair):
        return flatten_letters(b.left) + flatten_letters(b.right)
    if isinstance(b, Word):
        return b.letters
    return b.reading_word()


def enumerate_crystal(n: int, shape) -> frozenset[Tableau]:
    """All of B(lambda), generated from the highest-weight tableau by f_i."""
    shape = tuple(s for s in shape if s > 0)
    if not shape:
        return frozenset({Tableau(n, ())})
    start = Tableau.highest_weight(n, shape)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(1, n + 1):
                c = b.f(i)
                if c is not None and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def all_ssyt(n: int, shape) -> Iterator[Tableau]:
    """Direct backtracking enumeration of semistandard tableaux.

    Independent of the crystal operators; used as the oracle against the
    BFS enumeration.
    """
    shape = tuple(s for s in shape if s > 0)
    if not shape:
        yield Tableau(n, ())
        return
    rows = [[0] * s for s in shape]
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_rows(n, [tuple(row) for row in rows])
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for val in range(lo, n + 2):
            rows[r][c] = val
            yield from fill(idx + 1)
        rows[r][c] = 0

    yield from fill(0)


class ClassicalCrystal:
    """Model adapter for B(lambda) on tableaux, classical labels 1..n.

    Weight coordinates are contents; statistics come from iteration, so
    there is no closed-statistics cross-check here.
    """

    family = "A"
    closed_stats = False

    def __init__(self, n: int, shape):
        self.rank = n
        self.shape = tuple(s for s in shape if s > 0)
        self.level = None
        self.index_set = tuple(range(1, n + 1))

    def elements(self):
        return sorted(
            enumerate_crystal(self.rank, self.shape), key=lambda t: t.reading_word()
        )

    def element_id(self, t: Tableau) -> str:
        return f"T{self.rank}:w=" + ",".join(str(c) for c in t.reading_word())

    def weight_coords(self, t: Tableau) -> tuple[int, ...]:
        return t.content()

    def component(self, t: Tableau) -> Optional[int]:
        shape = self.shape
        if not shape:
            return 0
        k, rem = divmod(shape[0], 2)
        if rem == 0 and shape == (2 * k,) + (k,) * (self.rank - 1):
            return k
        return None

    def sort_key(self, t: Tableau):
        return t.reading_word()

    def root_step(self, i: int) -> tuple[int, ...]:
        # content change of f_i: one letter i becomes i+1
        step = [0] * (self.rank + 1)
        step[i - 1] = -1
        step[i] = 1
        return tuple(step)

    def expected_size(self) -> int:
        return ssyt_count(self.shape, self.rank + 1)


def ssyt_count(shape, max_entry: int) -> int:
    """Number of semistandard tableaux of the shape with entries <= max_entry.

    Hook-content product formula; exact rational arithmetic throughout.
    """
    shape = tuple(s for s in shape if s > 0)
    if not shape:
        return 1
    conj = [sum(1 for s in shape if s > c) for c in range(shape[0])]
    total = Fraction(1)
    for r, length in enumerate(shape):
        for c in range(length):
            hook = (length - c) + (conj[c] - r) - 1
            total *= Fraction(max_entry + c - r, hook)
    if total.denominator != 1:
        raise ArithmeticError("hook-content product is not an integer")
    return int(total)
