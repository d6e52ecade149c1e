import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from a2loci import bundles as bd
from a2loci import partitions as pt
from a2loci.bundles import (
    Const,
    IrrSum,
    NormalizeError,
    Q,
    const,
    det,
    line,
    normalize,
    parse_expr,
    rank,
    schur,
    sum_,
    sym,
    tensor,
    total_dim,
    wedge,
)


# --- normalize on the golden examples ------------------------------------


def test_normalize_q_times_sym2q():
    s = normalize(tensor(Q, sym(2, Q)), 4)
    assert s.terms == {((3,), 0): 1, ((2, 1), 0): 1}
    assert total_dim(s) == 18  # rank Q * rank Sym^2 Q = 3 * 6


def test_normalize_line_power():
    s = normalize(tensor(*[line(-1)] * 5), 3)
    assert s.terms == {((), -5): 1}
    assert total_dim(s) == 1


def test_normalize_sym2_of_q_plus_l2():
    s = normalize(sym(2, sum_(Q, line(2))), 3)
    assert s.terms == {((2,), 0): 1, ((1,), 2): 1, ((), 4): 1}
    assert total_dim(s) == comb(3 + 1, 2)  # dim Sym^2(C^3)


def test_normalize_sym_of_constant():
    for d, l in [(4, 3), (15, 7), (1, 5)]:
        s = normalize(sym(l, const(d)), 3)
        assert s.terms == {((), 0): comb(d + l - 1, l)}


def test_det_of_sum_is_det_q_twist():
    left = normalize(det(sum_(Q, line(2))), 5)
    right = normalize(tensor(det(Q), line(2)), 5)
    assert left == right
    assert left.terms == {((1, 1, 1, 1), 2): 1}


def test_schur_hook_matches_det_times_sym():
    v = sum_(Q, line(2))
    for n, a in [(3, 0), (3, 2), (5, 2), (4, 3)]:
        hook = (a + 1,) + (1,) * (n - 1)
        left = normalize(schur(hook, v), n)
        right = normalize(tensor(det(v), sym(a, v)), n)
        assert left == right


def test_wedge_of_line_tensor_constant():
    # Wedge^p(L (x) C^k) = L^p (x) Wedge^p C^k
    s = normalize(wedge(3, tensor(line(1), const(7))), 4)
    assert s.terms == {((), 3): comb(7, 3)}


def test_normalize_rejects_plethysm():
    with pytest.raises(NormalizeError):
        normalize(sym(2, sym(2, Q)), 4)
    with pytest.raises(NormalizeError):
        normalize(sym(2, tensor(Q, Q)), 4)


def test_normalize_rejects_small_ambient():
    with pytest.raises(NormalizeError):
        normalize(Q, 1)


def test_long_shapes_are_dropped_not_raised():
    assert normalize(wedge(3, Q), 3).terms == {}
    assert normalize(schur((2, 2, 2), Q), 3).terms == {}


# --- rank conservation -----------------------------------------------------


CASES = [
    (tensor(Q, sym(2, Q)), 4),
    (sym(3, sum_(Q, line(2))), 3),
    (wedge(2, sum_(Q, line(-1))), 4),
    (sym(4, tensor(sum_(const(6, "S"), Q), const(4, "C"))), 3),
    (tensor(det(Q), line(2), sym(2, sum_(Q, line(2)))), 5),
    (det(sum_(Q, line(2), const(3))), 4),
    (schur((3, 1), sum_(Q, const(2))), 4),
    (sym(5, tensor(line(1), const(6))), 3),
]


@pytest.mark.parametrize("expr,n", CASES)
def test_rank_conservation(expr, n):
    assert total_dim(normalize(expr, n)) == rank(expr, n)


# --- idempotence -----------------------------------------------------------


@pytest.mark.parametrize("expr,n", CASES)
def test_normalize_idempotent_on_reembedding(expr, n):
    s = normalize(expr, n)
    if not s:
        pytest.skip("zero sum has no expression form")
    assert normalize(s.to_expr(), n) == s


# --- Cauchy route vs multilinear route -------------------------------------


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def lemma_expansion(big_n, k):
    """Alternative expansion of Sym^N((Sym^2 C^k + Q) (x) C^k): split off the
    constant block, then expand the symmetric power of Q^(+k) multilinearly."""
    s2 = k * (k + 1) // 2
    parts = []
    for i in range(big_n + 1):
        dim_const = comb(s2 * k + (big_n - i) - 1, big_n - i)
        pieces = [
            tensor(*[sym(ij, Q) for ij in comp]) if any(comp) else const(1)
            for comp in compositions(i, k)
        ]
        parts.append(tensor(const(dim_const), sum_(*pieces) if len(pieces) > 1 else pieces[0]))
    return sum_(*parts)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("big_n", [0, 1, 2, 3, 4])
def test_cauchy_equals_multilinear_expansion(n, big_n):
    k = n
    direct = normalize(
        sym(big_n, tensor(sum_(const(k * (k + 1) // 2, "Sym2"), Q), const(k, "Ck"))), n
    )
    alt = normalize(lemma_expansion(big_n, k), n)
    assert direct == alt


# --- IrrSum algebra ---------------------------------------------------------


def test_irrsum_tensor_twist():
    a = IrrSum(4, {((1,), 0): 1})
    b = IrrSum(4, {((2,), 5): 1})
    assert a.tensor(b).terms == {((3,), 5): 1, ((2, 1), 5): 1}
    assert a.twist(3).terms == {((1,), 3): 1}


def test_irrsum_rejects_long_shapes():
    with pytest.raises(NormalizeError):
        IrrSum(3, {((1, 1, 1), 0): 1})


# --- grammar ----------------------------------------------------------------


def test_parse_spec_example():
    e = parse_expr("sym 7 (tensor (sum (const 15 Sym2C5) Q) (const 7 Ck))")
    assert e == sym(7, tensor(sum_(const(15, "Sym2C5"), Q), const(7, "Ck")))


@pytest.mark.parametrize(
    "text",
    [
        "Q",
        "(line -3)",
        "(const 6 W)",
        "(sum Q (line 2))",
        "(tensor (det Q) (line 2) (sym 2 (sum Q (line 2))))",
        "(wedge 4 (const 7 Ck))",
        "(schur 3,1 (sum Q (const 2)))",
        "(schur 0 Q)",
    ],
)
def test_parse_format_roundtrip(text):
    e = parse_expr(text)
    assert parse_expr(bd.format_expr(e)) == e


@pytest.mark.parametrize(
    "bad",
    ["", "(sym Q 2)", "(sum Q)", "(line x)", "Q extra", "(unknown 1)", "(sym 2 Q"],
)
def test_parse_errors(bad):
    with pytest.raises(NormalizeError):
        parse_expr(bad)


def test_normalize_roundtrips_through_grammar():
    for expr, n in CASES:
        again = parse_expr(bd.format_expr(expr))
        assert normalize(again, n) == normalize(expr, n)
