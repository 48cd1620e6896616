"""Enumerative invariants of pointed Prym-Brill-Noether loci.

For a genus-g curve with an etale double cover and a vanishing sequence
``a = (a_0 < ... < a_r)`` at a point, this module computes the expected
dimension ``beta``, the class ``B(g, a) = coeff * xi^|a|`` on the
(g-1)-dimensional Prym, its degree, the tableau number ``n_a`` and the
Prym-Tyurin exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Callable, Iterable, Iterator, Optional

from .exactring import TruncatedPoly, format_monomial, rational_from_str, rational_to_str
from .tableaux import (
    DEFAULT_ENUMERATION_BOUND,
    InvariantViolation,
    StrictPartition,
    count_sst_bruteforce,
    count_sst_formula,
    strict_partitions,
)

MIN_GENUS = 2


class HypothesisError(ValueError):
    """An operation was called outside the hypothesis it requires."""


@dataclass(frozen=True, order=True)
class VanishingSequence:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("a vanishing sequence needs at least one entry")
        if any(not isinstance(v, int) for v in values):
            raise ValueError(f"entries must be integers: {values}")
        if values[0] < 0:
            raise ValueError(f"entries must be nonnegative: {values}")
        if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"entries must be strictly increasing: {values}")

    @classmethod
    def parse(cls, text: str) -> VanishingSequence:
        return cls(tuple(int(t) for t in text.split(",")))

    @classmethod
    def from_shape(cls, shape: StrictPartition, with_zero: bool = False) -> VanishingSequence:
        values = tuple(reversed(shape.parts))
        return cls(((0,) if with_zero else ()) + values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def ell(self) -> int:
        """Number of positive entries."""
        return sum(1 for v in self.values if v > 0)

    @property
    def r(self) -> int:
        return len(self.values) - 1

    @property
    def shape(self) -> StrictPartition:
        """Shape (a_r, ..., a_0) with a zero a_0 dropped."""
        return StrictPartition(tuple(v for v in reversed(self.values) if v > 0))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"

    def key(self) -> str:
        return ",".join(map(str, self.values))


@dataclass(frozen=True)
class PrymClass:
    """``coeff * xi^codim`` in the numerical ring of a (g-1)-dimensional Prym."""

    g: int
    codim: int
    coeff: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.codim > self.g - 1 and self.coeff != 0:
            raise ValueError(f"codim {self.codim} exceeds g-1 = {self.g - 1}")

    def is_zero(self) -> bool:
        return self.coeff == 0

    def as_poly(self) -> TruncatedPoly:
        return TruncatedPoly.monomial(self.g, self.codim, self.coeff)

    def __str__(self) -> str:
        return format_monomial(self.coeff, self.codim) if self.coeff else "0"

    def to_json(self) -> dict:
        return {"g": self.g, "codim": self.codim, "coeff": rational_to_str(self.coeff)}

    @classmethod
    def from_json(cls, data: dict) -> PrymClass:
        return cls(int(data["g"]), int(data["codim"]), rational_from_str(data["coeff"]))


def _check_genus(g: int) -> None:
    if g < MIN_GENUS:
        raise ValueError(f"genus must be at least {MIN_GENUS}, got {g}")


def beta(g: int, a: VanishingSequence) -> int:
    """Expected dimension g - 1 - |a|; may be negative."""
    _check_genus(g)
    return g - 1 - a.weight


def general_nonempty(g: int, a: VanishingSequence) -> bool:
    """Whether the locus is nonempty for a *general* (C, epsilon, P).

    This is a genericity statement: it holds exactly when beta >= 0 for a
    general curve, double cover and point, not for every such triple
    (though beta >= 0 always forces nonemptiness).
    """
    return beta(g, a) >= 0


def class_coefficient(a: VanishingSequence) -> Fraction:
    """2^{|a|-ell(a)} prod 1/a_i! prod_{j<i} (a_i-a_j)/(a_i+a_j), before truncation."""
    vals = a.values
    c = Fraction(2 ** (a.weight - a.ell), prod(factorial(v) for v in vals))
    for i in range(len(vals)):
        for j in range(i):
            # a_j = 0 gives a_i / a_i = 1
            c *= Fraction(vals[i] - vals[j], vals[i] + vals[j])
    return c


def class_B_closed(g: int, a: VanishingSequence) -> PrymClass:
    _check_genus(g)
    coeff = class_coefficient(a) if a.weight <= g - 1 else Fraction(0)
    return PrymClass(g=g, codim=a.weight, coeff=coeff)


def _integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise InvariantViolation(f"{what} is not an integer: {value}")
    return value


def degree_B(g: int, a: VanishingSequence) -> Fraction:
    """|a|! times the class coefficient.

    A count of points only when beta = 0; for larger beta this is merely the
    scaled coefficient, and for beta < 0 the class (hence this) vanishes.
    """
    value = factorial(a.weight) * class_B_closed(g, a).coeff
    return _integral(value, f"deg B(g={g}, a={a})")


def n_a(
    a: VanishingSequence,
    method: str = "formula",
    bound: int = DEFAULT_ENUMERATION_BOUND,
    counter: Optional[Callable[[StrictPartition], int]] = None,
) -> int:
    """2^{|a|-ell(a)} times the number of standard shifted tableaux of shape a.

    ``method`` selects the tableau count: ``"formula"`` (closed product) or
    ``"bruteforce"`` (enumeration; subject to ``bound``).  ``counter``
    overrides the brute-force counter, e.g. with a cached one.
    """
    shape = a.shape
    if method == "formula":
        count = count_sst_formula(shape)
    elif method == "bruteforce":
        count = counter(shape) if counter else count_sst_bruteforce(shape, bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    return 2 ** (a.weight - a.ell) * count


def prym_tyurin_exponent(g: int, a: VanishingSequence) -> int:
    """Exponent (g-2)! * coeff of the Prym as a Prym-Tyurin variety for the curve V^a.

    Requires beta(g, a) = 1, i.e. V^a is a curve.
    """
    b = beta(g, a)
    if b != 1:
        raise HypothesisError(
            f"the Prym-Tyurin exponent requires beta(g,a) = 1; got beta = {b}"
        )
    value = _integral(
        factorial(g - 2) * class_B_closed(g, a).coeff, f"exponent for g={g}, a={a}"
    )
    return value.numerator


def vanishing_sequences(weight: int) -> Iterator[VanishingSequence]:
    """All vanishing sequences of the given weight, in lexicographic order."""
    seqs = []
    for shape in strict_partitions(weight):
        if shape.length:
            seqs.append(VanishingSequence.from_shape(shape))
        seqs.append(VanishingSequence.from_shape(shape, with_zero=True))
    yield from sorted(seqs)


def vanishing_sequences_upto(max_weight: int) -> Iterator[VanishingSequence]:
    for w in range(max_weight + 1):
        yield from vanishing_sequences(w)


@dataclass
class VerificationRow:
    a: VanishingSequence
    degree: Fraction
    n_a: int
    sst_formula: int
    sst_bruteforce: int
    class_closed: PrymClass
    class_pfaffian: PrymClass

    @property
    def degree_ok(self) -> bool:
        return self.degree == self.n_a

    @property
    def class_ok(self) -> bool:
        return self.class_closed == self.class_pfaffian

    @property
    def count_ok(self) -> bool:
        return self.sst_formula == self.sst_bruteforce

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.class_ok and self.count_ok

    def failure(self) -> dict:
        failed = [
            name
            for name, good in (
                ("degree_vs_n_a", self.degree_ok),
                ("closed_vs_pfaffian", self.class_ok),
                ("sst_formula_vs_bruteforce", self.count_ok),
            )
            if not good
        ]
        return {"a": list(self.a.values), "checks": failed, **self.to_json()}

    def to_json(self) -> dict:
        return {
            "a": list(self.a.values),
            "weight": self.a.weight,
            "degree": rational_to_str(self.degree),
            "n_a": self.n_a,
            "sst_formula": self.sst_formula,
            "sst_bruteforce": self.sst_bruteforce,
            "class_closed": self.class_closed.to_json(),
            "class_pfaffian": self.class_pfaffian.to_json(),
            "ok": self.ok,
        }


@dataclass
class VerificationReport:
    max_weight: int
    rows: list[VerificationRow] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> list[dict]:
        return [row.failure() for row in self.rows if not row.ok]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, with_rows: bool = False) -> dict:
        out = {
            "max_weight": self.max_weight,
            "checked": self.checked,
            "failures": self.failures,
        }
        if with_rows:
            out["sequences"] = [row.to_json() for row in self.rows]
        return out


def verify_identities(
    max_weight: int,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    counter: Optional[Callable[[StrictPartition], int]] = None,
) -> VerificationReport:
    """Cross-check every sequence with |a| <= max_weight at g = |a| + 1.

    Checks deg B = n_a (brute-force tableau counts), closed class = Pfaffian
    class, and closed tableau count = brute-force count.  Failures are
    collected into the report rather than raised.
    """
    from .pfaffian import class_B_pfaffian

    if max_weight > bound:
        raise ValueError(f"max_weight {max_weight} exceeds the enumeration bound {bound}")
    if counter is None:
        def counter(shape: StrictPartition) -> int:
            return count_sst_bruteforce(shape, bound)

    report = VerificationReport(max_weight)
    for a in vanishing_sequences_upto(max_weight):
        g = max(a.weight + 1, MIN_GENUS)
        brute = counter(a.shape)
        closed = class_B_closed(g, a)
        report.rows.append(
            VerificationRow(
                a=a,
                # no integrality assertion here: a bad value is a reported failure
                degree=factorial(a.weight) * closed.coeff,
                n_a=2 ** (a.weight - a.ell) * brute,
                sst_formula=count_sst_formula(a.shape),
                sst_bruteforce=brute,
                class_closed=closed,
                class_pfaffian=class_B_pfaffian(g, a),
            )
        )
    return report


def iter_rows_for_table(
    g_values: Iterable[int], weights: Iterable[int]
) -> Iterator[tuple[int, VanishingSequence]]:
    weights = list(weights)
    for g in g_values:
        for w in weights:
            for a in vanishing_sequences(w):
                yield g, a
