"""Tiny integer-combinatorics helpers shared by the crystal models."""

from __future__ import annotations

from typing import Iterator


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield all tuples of `parts` nonnegative integers summing to `total`.

    Tuples come out in lexicographic order, so any enumeration built on top
    of this is deterministic.
    """
    if total < 0 or parts < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest
