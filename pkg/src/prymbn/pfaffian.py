"""Pfaffians over Q[xi]/(xi^N) and the type-D class of a pointed Prym-Brill-Noether locus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from .exactring import TruncatedPoly
from .prym import PrymClass, VanishingSequence


@dataclass(frozen=True)
class AntisymmetricMatrix:
    """Even-size antisymmetric matrix given by its strict upper triangle.

    ``upper`` maps 0-indexed pairs ``(i, j)`` with ``i < j`` to entries; missing
    pairs are zero.  All entries share the truncation ``trunc``.
    """

    size: int
    trunc: int
    upper: Mapping[tuple[int, int], TruncatedPoly]

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"negative size {self.size}")
        for (i, j), p in self.upper.items():
            if not 0 <= i < j < self.size:
                raise ValueError(f"({i}, {j}) is not a strict upper-triangle index")
            if p.trunc != self.trunc:
                raise ValueError(f"entry ({i}, {j}) has truncation {p.trunc}")

    def __getitem__(self, ij: tuple[int, int]) -> TruncatedPoly:
        i, j = ij
        if i == j:
            return TruncatedPoly.zero(self.trunc)
        if i > j:
            return -self[j, i]
        return self.upper.get((i, j), TruncatedPoly.zero(self.trunc))

    @classmethod
    def from_rows(cls, rows, trunc: int) -> AntisymmetricMatrix:
        """Build from a full square array; only the upper triangle is read."""
        n = len(rows)
        upper = {}
        for i in range(n):
            for j in range(i + 1, n):
                e = rows[i][j]
                if not isinstance(e, TruncatedPoly):
                    e = TruncatedPoly.constant(trunc, e)
                upper[i, j] = e
        return cls(n, trunc, upper)


def pfaffian(M: AntisymmetricMatrix) -> TruncatedPoly:
    """Pfaffian by expansion along the first surviving row, memoized on index sets."""
    if M.size % 2:
        raise ValueError(f"Pfaffian needs an even-size matrix, got {M.size}")
    memo: dict[tuple[int, ...], TruncatedPoly] = {}

    def pf(idx: tuple[int, ...]) -> TruncatedPoly:
        if not idx:
            return TruncatedPoly.constant(M.trunc, 1)
        if idx in memo:
            return memo[idx]
        first = idx[0]
        total = TruncatedPoly.zero(M.trunc)
        for pos in range(1, len(idx)):
            entry = M[first, idx[pos]]
            if entry.is_zero():
                continue
            rest = idx[1:pos] + idx[pos + 1 :]
            term = entry * pf(rest)
            total = total + term if pos % 2 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(M.size)))


def _q_single(m: int, N: int) -> TruncatedPoly:
    """(2 xi)^m / m!, and 0 for negative m."""
    if m < 0:
        return TruncatedPoly.zero(N)
    return TruncatedPoly.monomial(N, m, Fraction(2**m, factorial(m)))


def q_entry(a: int, b: int, N: int) -> TruncatedPoly:
    """Pair class Q_{a,b} = Q_a Q_b + 2 sum_{k=1}^{b} (-1)^k Q_{a+k} Q_{b-k}.

    Here Q_m = (2 xi)^m / m!, the degree-m part of e^{2 xi}.
    """
    if b < 0 or a < b:
        raise ValueError(f"q_entry needs a >= b >= 0, got a={a}, b={b}")
    out = _q_single(a, N) * _q_single(b, N)
    for k in range(1, b + 1):
        term = _q_single(a + k, N) * _q_single(b - k, N) * 2
        out = out - term if k % 2 else out + term
    return out


def pfaffian_matrix(parts: tuple[int, ...], N: int) -> AntisymmetricMatrix:
    """The matrix (Q_{lam_i, lam_j})_{i<j}, padded with a zero part to even size."""
    lam = tuple(parts)
    if len(lam) % 2:
        lam = lam + (0,)
    upper = {
        (i, j): q_entry(lam[i], lam[j], N)
        for i in range(len(lam))
        for j in range(i + 1, len(lam))
    }
    return AntisymmetricMatrix(len(lam), N, upper)


def class_B_pfaffian(g: int, a: VanishingSequence) -> PrymClass:
    """The class of the pointed Prym-Brill-Noether locus from the Pfaffian route.

    The shape is the positive parts of ``a`` in decreasing order, the ring is
    truncated at ``N = g``, and the Pfaffian is scaled by ``2^{-ell(a)}``.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    pf = pfaffian(pfaffian_matrix(a.shape.parts, g))
    stray = [d for d in pf.degrees if d != a.weight]
    if stray:
        raise AssertionError(f"Pfaffian not homogeneous of degree {a.weight}: {pf}")
    coeff = pf.coeff(a.weight) / 2**a.ell
    return PrymClass(g=g, codim=a.weight, coeff=coeff)
