"""Root data of types A_n, C_n and B_n in epsilon-coordinates.

Weights are integer vectors (m_1, ..., m_dim).  For family A the vector has
n+1 entries normalized to sum to zero; violating input is rejected rather
than renormalized.  The shell predicates decide whether a weight occurs in
the irreducible highest-weight module with highest weight k*theta, where
theta is the distinguished root of the family (the highest root for A and C,
the highest short root for B), and how the shell index moves under adding
theta to a weight sitting on the outermost shell.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Family(Enum):
    """Classical family underlying one of the three coordinate models."""

    A = "A"
    C = "C"
    B = "B"


@dataclass(frozen=True)
class RootDatum:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        if self.family is Family.C and self.rank < 2:
            # rank 1 would make alpha_n = 2*eps_n collide with the A_1 root.
            raise ValueError("family C requires rank >= 2")

    @property
    def dim(self) -> int:
        """Number of epsilon-coordinates carried by a weight."""
        return self.rank + 1 if self.family is Family.A else self.rank

    @property
    def index_set(self) -> range:
        """Classical node indices 1..n."""
        return range(1, self.rank + 1)

    def weight(self, coeffs) -> "Weight":
        return Weight(self, tuple(int(c) for c in coeffs))

    def zero(self) -> "Weight":
        return self.weight((0,) * self.dim)

    def theta(self) -> "Weight":
        """The distinguished root: eps_1 - eps_{n+1} (A), 2*eps_1 (C), eps_1 (B)."""
        coeffs = [0] * self.dim
        coeffs[0] = 2 if self.family is Family.C else 1
        if self.family is Family.A:
            coeffs[-1] = -1
        return self.weight(coeffs)

    def simple_root(self, i: int) -> "Weight":
        """alpha_i = eps_i - eps_{i+1}, except alpha_n = 2*eps_n (C) or eps_n (B)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple root index {i} out of range 1..{self.rank}")
        coeffs = [0] * self.dim
        if self.family is Family.A or i < self.rank:
            coeffs[i - 1] = 1
            coeffs[i] = -1
        elif self.family is Family.C:
            coeffs[i - 1] = 2
        else:
            coeffs[i - 1] = 1
        return self.weight(coeffs)


@dataclass(frozen=True)
class Weight:
    datum: RootDatum
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.datum.dim:
            raise ValueError(
                f"expected {self.datum.dim} coordinates, got {len(self.coeffs)}"
            )
        if self.datum.family is Family.A and sum(self.coeffs) != 0:
            raise ValueError("family A weight coordinates must sum to zero")

    def m(self, j: int) -> int:
        """Coefficient of eps_j (1-indexed)."""
        return self.coeffs[j - 1]

    def _require_same_datum(self, other: "Weight") -> None:
        if self.datum != other.datum:
            raise ValueError("weights over different root data")

    def __add__(self, other: "Weight") -> "Weight":
        self._require_same_datum(other)
        return Weight(self.datum, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._require_same_datum(other)
        return Weight(self.datum, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Weight":
        return Weight(self.datum, tuple(-a for a in self.coeffs))

    def pairing(self, i: int) -> int:
        """Integer pairing <h_i, mu> with the i-th simple coroot."""
        n = self.datum.rank
        if not 1 <= i <= n:
            raise IndexError(f"coroot index {i} out of range 1..{n}")
        fam = self.datum.family
        if fam is Family.A or i < n:
            return self.coeffs[i - 1] - self.coeffs[i]
        if fam is Family.C:
            return self.coeffs[n - 1]
        return 2 * self.coeffs[n - 1]

    def fundamental_coeffs(self) -> tuple[int, ...]:
        """Coefficients (c_1, ..., c_n) with mu = sum c_i * (i-th fundamental weight)."""
        return tuple(self.pairing(i) for i in self.datum.index_set)

    def positive_support(self) -> tuple[int, ...]:
        """Indices j with m_j > 0."""
        return tuple(j for j, c in enumerate(self.coeffs, start=1) if c > 0)

    def positive_sum(self) -> int:
        """Sum of the positive coordinates."""
        return sum(c for c in self.coeffs if c > 0)

    def abs_sum(self) -> int:
        """Sum of |m_j| over all coordinates."""
        return sum(abs(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def weight_from_fundamental(datum: RootDatum, coeffs) -> Weight:
    """Inverse of `Weight.fundamental_coeffs`.

    Raises ValueError when the given combination has no integral
    epsilon-coordinate vector (possible for A when the total is not a
    multiple of n+1, and for B when c_n is odd).
    """
    coeffs = tuple(int(c) for c in coeffs)
    n = datum.rank
    if len(coeffs) != n:
        raise ValueError(f"expected {n} fundamental coefficients, got {len(coeffs)}")
    if datum.family is Family.A:
        raw = [sum(coeffs[i - 1] for i in range(j, n + 1)) for j in range(1, n + 1)]
        raw.append(0)
        total = sum(raw)
        if total % (n + 1) != 0:
            raise ValueError("no integral sum-zero epsilon-coordinates for this weight")
        shift = total // (n + 1)
        return datum.weight(c - shift for c in raw)
    if datum.family is Family.C:
        return datum.weight(
            sum(coeffs[i - 1] for i in range(j, n + 1)) for j in range(1, n + 1)
        )
    if coeffs[n - 1] % 2 != 0:
        raise ValueError("family B needs an even spin coefficient for integral coordinates")
    half = coeffs[n - 1] // 2
    return datum.weight(
        sum(coeffs[i - 1] for i in range(j, n)) + half for j in range(1, n + 1)
    )


def in_shell(mu: Weight, k: int) -> bool:
    """Whether mu is a weight of the module with highest weight k*theta.

    Criteria: sum of positive coordinates <= k (A); |mu| even and <= 2k (C);
    |mu| <= k (B).  k < 0 gives False (empty module).
    """
    if k < 0:
        return False
    fam = mu.datum.family
    if fam is Family.A:
        return mu.positive_sum() <= k
    if fam is Family.C:
        s = mu.abs_sum()
        return s % 2 == 0 and s <= 2 * k
    return mu.abs_sum() <= k


def on_boundary(mu: Weight, k: int) -> bool:
    """Whether mu sits on the outermost shell: in k*theta but not (k-1)*theta.

    Computed from the closed criteria (positive sum = k for A, |mu| = 2k for
    C, |mu| = k for B); agreement with the two-call route through `in_shell`
    is a tested invariant.
    """
    if k < 0:
        return False
    fam = mu.datum.family
    if fam is Family.A:
        return mu.positive_sum() == k
    if fam is Family.C:
        return mu.abs_sum() == 2 * k
    return mu.abs_sum() == k


class ShellStep(Enum):
    """Shell index move of mu + theta relative to a boundary weight mu."""

    UP = "up"
    SAME = "same"
    DOWN = "down"


@dataclass(frozen=True)
class ShellShift:
    step: ShellStep
    a_case: str | None = None  # sign-pattern tag "a".."d", family A only


def classify_shift(mu: Weight, k: int) -> ShellShift:
    """Where mu + theta lands when mu is on the boundary shell of k*theta.

    Family A splits on the signs of m_1 and m_{n+1}; C splits on m_1 against
    {>= 0, == -1, <= -2}; B never produces SAME.  Raises ValueError when mu
    is not on the boundary shell (the criteria assume it).
    """
    if not on_boundary(mu, k):
        raise ValueError(f"weight {mu} is not on the boundary shell for k={k}")
    fam = mu.datum.family
    if fam is Family.A:
        first, last = mu.coeffs[0], mu.coeffs[-1]
        if first >= 0 and last <= 0:
            return ShellShift(ShellStep.UP, "a")
        if first >= 0:
            return ShellShift(ShellStep.SAME, "b")
        if last <= 0:
            return ShellShift(ShellStep.SAME, "c")
        return ShellShift(ShellStep.DOWN, "d")
    first = mu.coeffs[0]
    if fam is Family.C:
        if first >= 0:
            return ShellShift(ShellStep.UP)
        if first == -1:
            return ShellShift(ShellStep.SAME)
        return ShellShift(ShellStep.DOWN)
    return ShellShift(ShellStep.UP if first >= 0 else ShellStep.DOWN)
