from fractions import Fraction

import pytest

from oracles import count_sst_permutations, is_standard, strict_partitions_bruteforce
from prymbn.tableaux import (
    EnumerationBoundError,
    ShiftedTableau,
    StrictPartition,
    count_marked_unmarked_diagonal,
    count_sst_bruteforce,
    count_sst_formula,
    count_syt_staircase,
    enumerate_sst,
    enumerate_syt,
    hook_length_count,
    render_tableau,
    shifted_diagram,
    strict_partitions,
)

S = lambda *parts: StrictPartition(parts)  # noqa: E731
FIGURE_ROWS = ((1, 2, 4, 6), (3, 5), (7,))


def test_strict_partition_validation():
    with pytest.raises(ValueError):
        S(2, 2)
    with pytest.raises(ValueError):
        S(1, 3)
    with pytest.raises(ValueError):
        S(3, 0)
    assert S().weight == 0 and S().length == 0
    assert S(4, 2, 1).weight == 7 and S(4, 2, 1).length == 3


@pytest.mark.parametrize("n", range(13))
def test_strict_partitions_match_subset_filter(n):
    ours = sorted(p.parts for p in strict_partitions(n))
    assert ours == strict_partitions_bruteforce(n)


def test_shifted_diagram():
    d = shifted_diagram(S(4, 2, 1))
    assert len(d) == 7
    assert min(j for i, j in d if i == 2) == 2
    assert min(j for i, j in d if i == 3) == 3
    assert shifted_diagram(S()) == set()
    assert shifted_diagram(S(3)) == {(1, 1), (1, 2), (1, 3)}


def test_figure_tableau_is_enumerated():
    rows = [t.rows for t in enumerate_sst(S(4, 2, 1))]
    assert FIGURE_ROWS in rows


def test_two_one_has_single_tableau():
    ts = list(enumerate_sst(S(2, 1)))
    assert [t.rows for t in ts] == [((1, 2), (3,))]


@pytest.mark.parametrize("n", [1, 4, 9])
def test_single_row_forced(n):
    assert [t.rows for t in enumerate_sst(S(n))] == [tuple([tuple(range(1, n + 1))])]


@pytest.mark.parametrize(
    "parts", [(1,), (2, 1), (3, 1), (3, 2), (4, 2, 1), (3, 2, 1), (5, 2), (4, 3)]
)
def test_bruteforce_against_permutation_oracle(parts):
    assert count_sst_bruteforce(S(*parts)) == count_sst_permutations(parts)


@pytest.mark.parametrize("n", range(11))
def test_every_yield_is_valid_and_distinct(n):
    for shape in strict_partitions(n):
        seen = set()
        cells = shifted_diagram(shape)
        for t in enumerate_sst(shape):
            assert set(t.entries) == cells
            assert is_standard(t.entries)
            seen.add(t.rows)
        assert len(seen) == count_sst_formula(shape)


def test_enumeration_order_is_lexicographic_in_cell_sequence():
    def cell_sequence(t):
        inv = {v: c for c, v in t.entries.items()}
        return [inv[k] for k in range(1, len(inv) + 1)]

    seqs = [cell_sequence(t) for t in enumerate_sst(S(5, 3, 1))]
    assert seqs == sorted(seqs)


def test_counts_known_values():
    assert count_sst_bruteforce(S(2, 1)) == 1
    assert count_sst_bruteforce(S(4, 2, 1)) == 7
    assert count_sst_bruteforce(S(1)) == 1
    assert count_sst_formula(S(4, 2, 1)) == 7
    assert count_sst_formula(S(2, 1)) == 1
    assert count_sst_formula(S()) == 1
    assert count_sst_bruteforce(S()) == 1


def test_formula_hand_evaluation():
    # 7!/(4!2!1!) = 105, then the pair factors (2/6)(3/5)(1/3)
    assert 105 * Fraction(2, 6) * Fraction(3, 5) * Fraction(1, 3) == 7


def test_bound_refusal():
    with pytest.raises(EnumerationBoundError, match="bound"):
        list(enumerate_sst(S(5, 4, 3), bound=10))
    with pytest.raises(EnumerationBoundError):
        count_sst_bruteforce(S(17))


def test_marked_counts():
    assert count_marked_unmarked_diagonal(S(2, 1)) == 2
    assert count_marked_unmarked_diagonal(S(1)) == 1
    assert count_marked_unmarked_diagonal(S(4, 2, 1)) == 112
    assert count_marked_unmarked_diagonal(S()) == 1


def test_marked_counts_by_explicit_marking():
    # mark every subset of off-diagonal cells of every tableau
    shape = S(3, 1)
    total = 0
    for t in enumerate_sst(shape):
        off = [c for c in t.entries if c[0] != c[1]]
        total += 2 ** len(off)
    assert total == count_marked_unmarked_diagonal(shape) == 8


def test_staircase_values():
    assert count_syt_staircase(1) == 1
    assert count_syt_staircase(2) == 2
    assert count_syt_staircase(4) == 768
    assert sorted(enumerate_syt((2, 1))) == [((1, 2), (3,)), ((1, 3), (2,))]


@pytest.mark.parametrize("r", range(1, 5))
def test_staircase_routes_agree(r):
    brute = count_syt_staircase(r, method="bruteforce")
    assert brute == count_syt_staircase(r, method="formula")


@pytest.mark.parametrize("r", range(1, 5))
def test_staircase_identity(r):
    a_weight = r * (r + 1) // 2
    shape = S(*range(r, 0, -1))
    assert 2 ** (a_weight - r) * count_sst_formula(shape) == count_syt_staircase(r)


def test_hook_length_small():
    assert hook_length_count((3, 2)) == 5
    assert hook_length_count((2, 2)) == 2
    assert hook_length_count(()) == 1


def test_render():
    fig = ShiftedTableau(S(4, 2, 1), FIGURE_ROWS)
    assert render_tableau(fig).splitlines() == ["1 2 4 6", "  3 5", "    7"]
    assert render_tableau(ShiftedTableau(S(1), ((1,),))) == "1"
    first = next(enumerate_sst(S(3, 1)))
    assert first.rows == ((1, 2, 3), (4,))
    assert render_tableau(first) == "1 2 3\n  4"


def test_render_two_digit_entries():
    t = next(enumerate_sst(S(6, 4)))
    assert render_tableau(t).splitlines() == [
        " 1  2  3  4  5  6",
        "    7  8  9 10",
    ]


def test_tableau_json():
    t = ShiftedTableau(S(4, 2, 1), FIGURE_ROWS)
    data = t.to_json()
    assert data == {"shape": [4, 2, 1], "rows": [[1, 2, 4, 6], [3, 5], [7]]}
    assert ShiftedTableau.from_json(data) == t
