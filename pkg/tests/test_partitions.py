import pytest
from hypothesis import given, settings, strategies as st

from a2loci import partitions as pt
from a2loci.partitions import (
    PartitionError,
    cauchy_sym,
    check_partition,
    conjugate,
    format_partition,
    lr_coefficient,
    lr_expand_general,
    lr_mult,
    parse_partition,
    partitions_of,
    pieri_row,
    schur_branch_sum,
    schur_dim,
    wedge_pieri,
    weyl_dim,
)
from oracle_schur import schur_product_oracle, ssyt_count

SMALL = [p for s in range(7) for p in partitions_of(s)]
partitions_st = st.sampled_from(SMALL)
caps_st = st.integers(min_value=1, max_value=5)


# --- basic plumbing -----------------------------------------------------


def test_check_partition_strips_trailing_zeros():
    assert check_partition((3, 1, 0, 0)) == (3, 1)
    assert check_partition(()) == ()


@pytest.mark.parametrize("bad", [(1, 2), (3, -1), (0, 1)])
def test_check_partition_rejects(bad):
    with pytest.raises(PartitionError):
        check_partition(bad)


def test_parse_and_format():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 1, 1)) == "3,1,1"
    with pytest.raises(PartitionError):
        parse_partition("1,2")
    with pytest.raises(PartitionError):
        parse_partition("a,b")


@given(partitions_st)
def test_parse_format_roundtrip(p):
    assert parse_partition(format_partition(p)) == p


@given(partitions_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def test_partitions_of_counts():
    assert sum(1 for _ in partitions_of(6)) == 11
    assert list(partitions_of(0)) == [()]
    assert set(partitions_of(4, max_len=2)) == {(4,), (3, 1), (2, 2)}


# --- Pieri rules --------------------------------------------------------


def test_pieri_row_examples():
    assert pieri_row((1,), 2, 3) == {(3,): 1, (2, 1): 1}
    assert pieri_row((2, 1), 0, 3) == {(2, 1): 1}
    assert pieri_row((2,), 2, 2) == {(4,): 1, (3, 1): 1, (2, 2): 1}


def test_wedge_pieri_examples():
    assert wedge_pieri((), 3, 4) == {(1, 1, 1): 1}
    assert wedge_pieri((), 3, 2) == {}
    assert wedge_pieri((1,), 2, 3) == {(2, 1): 1, (1, 1, 1): 1}


def test_pieri_cap_precondition():
    with pytest.raises(PartitionError):
        pieri_row((2, 1), 1, 1)


# --- Littlewood-Richardson products -------------------------------------


def test_lr_mult_examples():
    assert lr_mult((1,), (2,), 3) == {(3,): 1, (2, 1): 1}
    assert lr_mult((), (5, 2), 4) == {(5, 2): 1}
    # adding a horizontal 2-strip to a column: only one column survives cap 4
    assert lr_mult((1, 1, 1, 1), (2,), 4) == {(3, 1, 1, 1): 1}


def test_lr_mult_classic_multiplicity():
    # s_21 * s_21 contains s_321 twice
    prod = lr_mult((2, 1), (2, 1), 6)
    assert prod == schur_product_oracle((2, 1), (2, 1), 6)
    assert prod[(3, 2, 1)] == 2


def test_lr_mult_truncates_long_shapes():
    assert lr_mult((1, 1), (1, 1), 1) == {}
    assert lr_mult((2, 2), (2, 2), 2) == schur_product_oracle((2, 2), (2, 2), 2)


@settings(max_examples=150, deadline=None)
@given(partitions_st, partitions_st, caps_st)
def test_lr_mult_matches_oracle(lam, mu, cap):
    assert lr_mult(lam, mu, cap) == schur_product_oracle(lam, mu, cap)


@settings(max_examples=150, deadline=None)
@given(partitions_st, partitions_st, caps_st)
def test_lr_mult_commutative(lam, mu, cap):
    assert lr_mult(lam, mu, cap) == lr_mult(mu, lam, cap)


@settings(max_examples=150, deadline=None)
@given(partitions_st, partitions_st, caps_st)
def test_lr_mult_size_additive(lam, mu, cap):
    total = sum(lam) + sum(mu)
    for nu in lr_mult(lam, mu, cap):
        assert sum(nu) == total
        assert len(nu) <= cap


@settings(max_examples=100, deadline=None)
@given(partitions_st, st.integers(0, 4), caps_st)
def test_pieri_row_is_lr_with_row(lam, j, cap):
    if cap < len(lam):
        cap = len(lam)
    assert pieri_row(lam, j, cap) == lr_mult(lam, (j,) if j else (), cap)


@settings(max_examples=100, deadline=None)
@given(partitions_st, st.integers(0, 4), caps_st)
def test_wedge_pieri_is_lr_with_column(lam, j, cap):
    if cap < len(lam):
        cap = len(lam)
    assert wedge_pieri(lam, j, cap) == lr_mult(lam, (1,) * j, cap)


@settings(max_examples=100, deadline=None)
@given(partitions_st, st.integers(1, 4), caps_st)
def test_general_kernel_agrees_with_strips(lam, j, cap):
    """The DFS kernel must reproduce the Pieri fast paths it normally skips."""
    if cap < len(lam):
        cap = len(lam)
    assert lr_expand_general(lam, (j,), cap) == pieri_row(lam, j, cap)
    assert lr_expand_general(lam, (1,) * j, cap) == wedge_pieri(lam, j, cap)


def test_lr_coefficient_values():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (2,)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2, 2, 1, 1), (1, 1, 1, 1), (2,)) == 0


@settings(max_examples=100, deadline=None)
@given(partitions_st, partitions_st)
def test_lr_coefficient_symmetric(mu, nu):
    for lam in lr_mult(mu, nu, 8):
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


# --- Cauchy and branching ------------------------------------------------


def test_cauchy_sym_examples():
    assert cauchy_sym(2, 2, 2) == {(2,): 1, (1, 1): 1}
    assert cauchy_sym(3, 1, 5) == {(3,): 1}
    total = sum(
        schur_dim(lam, 2) * schur_dim(lam, 2) for lam in cauchy_sym(2, 2, 2)
    )
    assert total == 10  # dim Sym^2(C^4)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
@pytest.mark.parametrize("b", [1, 2, 3, 4])
def test_cauchy_dimension_identity(a, b):
    from math import comb

    for l in range(9):
        total = sum(
            schur_dim(lam, a) * schur_dim(lam, b) for lam in cauchy_sym(l, a, b)
        )
        assert total == comb(a * b + l - 1, l)


def test_schur_branch_sum_examples():
    assert schur_branch_sum((1,), 3, 3) == {((1,), ()): 1, ((), (1,)): 1}
    assert schur_branch_sum((2,), 5, 5) == {
        ((2,), ()): 1,
        ((1,), (1,)): 1,
        ((), (2,)): 1,
    }
    assert schur_branch_sum((2, 1), 2, 2) == {
        ((2, 1), ()): 1,
        ((2,), (1,)): 1,
        ((1, 1), (1,)): 1,
        ((1,), (2,)): 1,
        ((1,), (1, 1)): 1,
        ((), (2, 1)): 1,
    }


@settings(max_examples=80, deadline=None)
@given(partitions_st, st.integers(1, 4), st.integers(1, 4))
def test_branch_dimension_identity(lam, da, db):
    branched = schur_branch_sum(lam, da, db)
    total = sum(
        c * schur_dim(mu, da) * schur_dim(nu, db)
        for (mu, nu), c in branched.items()
    )
    assert total == schur_dim(lam, da + db)


# --- dimensions -----------------------------------------------------------


def test_schur_dim_examples():
    assert schur_dim((1,), 7) == 7
    assert schur_dim((2, 2, 2, 2, 2), 5) == 1
    assert schur_dim((1, 1, 1), 2) == 0


@settings(max_examples=120, deadline=None)
@given(partitions_st, st.integers(1, 5))
def test_schur_dim_counts_tableaux(lam, d):
    assert schur_dim(lam, d) == ssyt_count(lam, d)


def test_weyl_dim_handles_negative_weights():
    # twisting by a power of the determinant preserves dimensions
    assert weyl_dim((0, 0, -2)) == weyl_dim((2, 2, 0))
    assert weyl_dim((3, 1, -1)) == weyl_dim((4, 2, 0))
