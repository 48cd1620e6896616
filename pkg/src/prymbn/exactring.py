"""Exact rationals and the truncated graded ring Q[xi]/(xi^N).

Rational numbers are plain :class:`fractions.Fraction` values, which are
always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Union

Rational = Union[int, Fraction]


class TruncationMismatch(ValueError):
    """Raised when combining polynomials that live in different truncated rings."""


def rational_to_str(q: Rational) -> str:
    """Encode a rational as ``"p/q"`` (or ``"p"`` when the denominator is 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class TruncatedPoly:
    """An element of Q[xi]/(xi^N).

    ``terms`` is a sorted tuple of ``(degree, coefficient)`` pairs with no zero
    coefficients and every degree in ``[0, N)``; build instances through
    :meth:`from_dict` so that this normal form holds and equality is canonical.
    """

    trunc: int
    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        if self.trunc < 1:
            raise ValueError(f"truncation must be positive, got {self.trunc}")

    @classmethod
    def from_dict(cls, trunc: int, coeffs: Mapping[int, Rational]) -> TruncatedPoly:
        kept = []
        for k in sorted(coeffs):
            if k < 0:
                raise ValueError(f"negative degree {k}")
            c = Fraction(coeffs[k])
            if k < trunc and c != 0:
                kept.append((k, c))
        return cls(trunc, tuple(kept))

    @classmethod
    def zero(cls, trunc: int) -> TruncatedPoly:
        return cls(trunc)

    @classmethod
    def constant(cls, trunc: int, c: Rational = 1) -> TruncatedPoly:
        return cls.from_dict(trunc, {0: c})

    @classmethod
    def monomial(cls, trunc: int, degree: int, c: Rational = 1) -> TruncatedPoly:
        return cls.from_dict(trunc, {degree: c})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def coeff(self, k: int) -> Fraction:
        for d, c in self.terms:
            if d == k:
                return c
        return Fraction(0)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TruncatedPoly) -> None:
        if self.trunc != other.trunc:
            raise TruncationMismatch(
                f"truncations differ: {self.trunc} != {other.trunc}"
            )

    def __add__(self, other: TruncatedPoly) -> TruncatedPoly:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out.get(k, 0) + c
        return TruncatedPoly.from_dict(self.trunc, out)

    def __neg__(self) -> TruncatedPoly:
        return TruncatedPoly(self.trunc, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: TruncatedPoly) -> TruncatedPoly:
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[TruncatedPoly, Rational]) -> TruncatedPoly:
        if isinstance(other, (int, Fraction)):
            return TruncatedPoly.from_dict(
                self.trunc, {k: c * other for k, c in self.terms}
            )
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        out: dict[int, Fraction] = {}
        for i, a in self.terms:
            for j, b in other.terms:
                if i + j >= self.trunc:
                    break
                out[i + j] = out.get(i + j, 0) + a * b
        return TruncatedPoly.from_dict(self.trunc, out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "coeffs": {str(k): rational_to_str(c) for k, c in self.terms},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> TruncatedPoly:
        return cls.from_dict(
            int(data["trunc"]),
            {int(k): rational_from_str(v) for k, v in data["coeffs"].items()},
        )


def format_monomial(c: Rational, k: int) -> str:
    """Render ``c * xi^k`` in ASCII, e.g. ``1/3*xi^3``, ``xi``, ``-2``."""
    c = Fraction(c)
    if k == 0:
        return rational_to_str(c)
    power = "xi" if k == 1 else f"xi^{k}"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{rational_to_str(c)}*{power}"


def format_poly(p: TruncatedPoly) -> str:
    if p.is_zero():
        return "0"
    out = ""
    for k, c in p.terms:
        piece = format_monomial(c, k)
        if not out:
            out = piece
        elif piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def exp_scaled_xi(s: int, N: int) -> TruncatedPoly:
    """The truncated exponential e^{s xi} = sum_{k<N} s^k xi^k / k!."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return TruncatedPoly.from_dict(
        N, {k: Fraction(s**k, factorial(k)) for k in range(N)}
    )


def poincare_degree(p: TruncatedPoly, g: int) -> Fraction:
    """Degree of ``p`` on a (g-1)-dimensional Prym, using deg xi^{g-1} = (g-1)!.

    Only the top-degree coefficient contributes.
    """
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    if p.trunc < g:
        raise ValueError(f"truncation {p.trunc} too small for genus {g}")
    return p.coeff(g - 1) * factorial(g - 1)
