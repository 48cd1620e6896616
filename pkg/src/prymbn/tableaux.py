"""Shifted diagrams, standard shifted tableaux and staircase Young tableaux.

Cells are 1-indexed ``(row, column)`` pairs.  Row ``i`` of a shifted diagram
occupies columns ``i .. i + lambda_i - 1``, so each row starts underneath the
second box of the row above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

DEFAULT_ENUMERATION_BOUND = 16

Cell = tuple[int, int]


class EnumerationBoundError(ValueError):
    """The requested brute-force enumeration exceeds the configured cell bound."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (e.g. a count formula was not integral)."""


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be strictly decreasing: {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def key(self) -> str:
        """Canonical string form, ``"4,2,1"`` (empty string for the empty shape)."""
        return ",".join(map(str, self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[StrictPartition]:
    """All strict partitions of ``n``, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield StrictPartition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield StrictPartition((first,) + rest.parts)


def shifted_diagram(shape: StrictPartition) -> set[Cell]:
    return {
        (i, j)
        for i, part in enumerate(shape.parts, start=1)
        for j in range(i, i + part)
    }


@dataclass(frozen=True)
class ShiftedTableau:
    shape: StrictPartition
    rows: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> dict[Cell, int]:
        return {
            (i, i + k): v
            for i, row in enumerate(self.rows, start=1)
            for k, v in enumerate(row)
        }

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> ShiftedTableau:
        return cls(
            StrictPartition(tuple(data["shape"])),
            tuple(tuple(r) for r in data["rows"]),
        )


def _check_bound(n_cells: int, bound: int) -> None:
    if n_cells > bound:
        raise EnumerationBoundError(
            f"brute-force enumeration over {n_cells} cells exceeds the bound of "
            f"{bound}; raise the enumeration bound to proceed"
        )


def _fillings(
    shape: Sequence[int], shifted: bool
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking over standard fillings of a (shifted or left-aligned) shape.

    Value k+1 goes on an outer corner of the sub-shape holding 1..k; corners
    are tried top row first, which makes the stream lexicographic in the
    sequence of cells receiving 1, 2, 3, ...
    """
    n = sum(shape)
    ell = len(shape)
    filled = [0] * ell
    rows: list[list[int]] = [[] for _ in range(ell)]

    def addable(i: int) -> bool:
        if filled[i] >= shape[i]:
            return False
        if i == 0:
            return True
        # the box above the new cell must already be filled
        gap = 2 if shifted else 1
        return filled[i] + gap <= filled[i - 1]

    def place(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(ell):
            if addable(i):
                filled[i] += 1
                rows[i].append(k)
                yield from place(k + 1)
                rows[i].pop()
                filled[i] -= 1

    yield from place(1)


def enumerate_sst(
    shape: StrictPartition, bound: int = DEFAULT_ENUMERATION_BOUND
) -> Iterator[ShiftedTableau]:
    """Yield every standard shifted tableau of ``shape`` exactly once."""
    _check_bound(shape.weight, bound)
    for rows in _fillings(shape.parts, shifted=True):
        yield ShiftedTableau(shape, rows)


def count_sst_bruteforce(
    shape: StrictPartition, bound: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    return sum(1 for _ in enumerate_sst(shape, bound))


def count_sst_formula(shape: StrictPartition) -> int:
    """Number of standard shifted tableaux from the closed product

        |lam|! / prod(lam_i!) * prod_{i<j} (lam_i - lam_j) / (lam_i + lam_j),

    evaluated in exact rationals.
    """
    lam = shape.parts
    value = Fraction(factorial(shape.weight), prod(factorial(p) for p in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral tableau count {value} for {shape}")
    return value.numerator


def count_marked_unmarked_diagonal(shape: StrictPartition) -> int:
    """Marked shifted tableaux whose diagonal entries stay unmarked.

    Every off-diagonal entry of a standard shifted tableau may be marked or
    not, independently; the diagonal has ``len(shape)`` cells.
    """
    return 2 ** (shape.weight - shape.length) * count_sst_formula(shape)


def staircase(r: int) -> tuple[int, ...]:
    return tuple(range(r, 0, -1))


def enumerate_syt(
    shape: Sequence[int], bound: int = DEFAULT_ENUMERATION_BOUND
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Standard Young tableaux of a left-aligned (ordinary) partition shape."""
    shape = tuple(shape)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or any(
        p <= 0 for p in shape
    ):
        raise ValueError(f"not a partition: {shape}")
    _check_bound(sum(shape), bound)
    yield from _fillings(shape, shifted=False)


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux via the hook-length formula."""
    shape = tuple(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, part in enumerate(shape):
        for j in range(part):
            hooks *= (part - j - 1) + (conj[j] - i - 1) + 1
    n_fact = factorial(sum(shape))
    if n_fact % hooks:
        raise InvariantViolation(f"hook-length quotient not integral for {shape}")
    return n_fact // hooks


def count_syt_staircase(
    r: int,
    method: str = "both",
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> int:
    """Standard Young tableaux of the staircase shape (r, r-1, ..., 1).

    ``method`` is ``"formula"``, ``"bruteforce"`` or ``"both"``; with
    ``"both"`` the two counts must agree.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    shape = staircase(r)
    if method == "formula":
        return hook_length_count(shape)
    brute = sum(1 for _ in enumerate_syt(shape, bound))
    if method == "bruteforce":
        return brute
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    formula = hook_length_count(shape)
    if brute != formula:
        raise InvariantViolation(
            f"staircase r={r}: backtracking gives {brute}, hook lengths give {formula}"
        )
    return formula


def render_rows(rows: Iterable[Sequence[int]], shifted: bool = True) -> str:
    rows = [list(r) for r in rows]
    width = max((len(str(v)) for r in rows for v in r), default=1)
    lines = []
    for i, row in enumerate(rows):
        indent = " " * ((width + 1) * i) if shifted else ""
        lines.append(indent + " ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines)


def render_tableau(t: ShiftedTableau) -> str:
    """ASCII picture of a shifted tableau; row i is indented by i-1 cells."""
    return render_rows(t.rows, shifted=True)
