import pytest

from a2loci import bundles as bd
from a2loci.bundles import Q, const, det, line, normalize, sym, tensor
from a2loci.resolution import (
    ResolutionError,
    build_resolution1,
    build_resolution2,
    fiber_line_power,
    pushforward_fiber,
)
from a2loci.spectral import complex_rank_euler


def test_smallest_koszul_complex():
    r1 = build_resolution1(2, 2, 1)
    assert [p for p, _ in r1.sorted_terms()] == [0, 1]
    t0, t1 = (e for _, e in r1.sorted_terms())
    # p=0: Sym^1(W (x) C^2), W of dim 4, all constant on the fiber
    assert normalize(t0, 2).terms == {((), 0): 8}
    # p=1: L (x) C^2 (x) Sym^0 = L with multiplicity 2
    assert normalize(t1, 2).terms == {((), 1): 2}


def test_resolution1_term_count_and_line_powers():
    r1 = build_resolution1(5, 7, 7)
    assert len(r1) == 8
    for p, expr in r1.sorted_terms():
        m, _ = fiber_line_power(expr, 5)
        assert m == p
    # l > k stops at k+1 terms
    assert len(build_resolution1(3, 4, 9)) == 5
    # l < k stops at l+1 terms
    assert len(build_resolution1(3, 5, 2)) == 3


def test_resolution1_rejects_bad_parameters():
    with pytest.raises(ResolutionError):
        build_resolution1(1, 3, 2)
    with pytest.raises(ResolutionError):
        build_resolution1(4, 3, 2)
    with pytest.raises(ResolutionError):
        build_resolution1(3, 3, -1)


def test_pushforward_577_matches_printed_terms():
    r2 = pushforward_fiber(build_resolution1(5, 7, 7))
    assert [p for p, _ in r2.sorted_terms()] == [0, 1, 2, 3]
    terms = dict(r2.sorted_terms())
    v = bd.sum_(Q, line(2))
    w = bd.sum_(const(15, "Sym2Cn"), Q)
    printed = {
        0: sym(7, tensor(w, const(7, "Ck"))),
        1: tensor(det(Q), line(2), bd.wedge(5, const(7)), sym(2, tensor(w, const(7)))),
        2: tensor(det(Q), line(2), v, bd.wedge(6, const(7)), tensor(w, const(7))),
        3: tensor(det(Q), line(2), sym(2, v)),
    }
    for idx, expr in printed.items():
        assert normalize(terms[idx], 5) == normalize(expr, 5), idx


def test_pushforward_344_matches_printed_terms():
    r2 = pushforward_fiber(build_resolution1(3, 4, 4))
    assert [p for p, _ in r2.sorted_terms()] == [0, 1, 2]
    terms = dict(r2.sorted_terms())
    v = bd.sum_(Q, line(2))
    w = bd.sum_(const(6, "Sym2Cn"), Q)
    printed = {
        0: sym(4, tensor(w, const(4, "Ck"))),
        1: tensor(det(Q), line(2), bd.wedge(3, const(4)), tensor(w, const(4))),
        2: tensor(det(Q), line(2), v, bd.wedge(4, const(4))),
    }
    for idx, expr in printed.items():
        assert normalize(terms[idx], 3) == normalize(expr, 3), idx


def test_square_case_has_two_terms():
    for n in (2, 3, 4):
        for l in (n, n + 2, 2 * n + 1):
            r2 = build_resolution2(n, n, l)
            assert len(r2) == 2
            top = dict(r2.sorted_terms())[1]
            expected = tensor(
                det(Q), line(2), bd.wedge(n, const(n, "Ck")),
                sym(l - n, tensor(bd.sum_(const(n * (n + 1) // 2, "Sym2Cn"), Q),
                                  const(n, "Ck"))),
            )
            assert normalize(top, n) == normalize(expected, n)


def test_short_complex_when_l_below_n():
    r2 = build_resolution2(4, 6, 2)
    assert [p for p, _ in r2.sorted_terms()] == [0]
    push = pushforward_fiber(build_resolution1(4, 6, 2))
    assert [p for p, _ in push.sorted_terms()] == [0]


def test_term_count_closed_form():
    for n, k, l in [(2, 4, 6), (3, 5, 8), (5, 7, 7), (3, 7, 7)]:
        r2 = build_resolution2(n, k, l)
        expected = 1 + max(0, min(k, l) - n + 1)
        assert len(r2) == expected
        if l >= k:
            assert len(r2) == k - n + 2


@pytest.mark.parametrize("n,k", [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)])
@pytest.mark.parametrize("l", [0, 1, 2, 3, 4, 5])
def test_pushforward_equals_closed_form_small(n, k, l):
    via_fiber = pushforward_fiber(build_resolution1(n, k, l))
    closed = build_resolution2(n, k, l)
    assert [p for p, _ in via_fiber.sorted_terms()] == [p for p, _ in closed.sorted_terms()]
    for (p1, e1), (p2, e2) in zip(via_fiber.sorted_terms(), closed.sorted_terms()):
        assert normalize(e1, n) == normalize(e2, n), (n, k, l, p1)
    assert complex_rank_euler(via_fiber) == complex_rank_euler(closed)


def test_rank_conservation_on_resolution_terms():
    for n, k, l in [(2, 3, 4), (3, 4, 4), (4, 5, 6)]:
        for cx in (build_resolution1(n, k, l), build_resolution2(n, k, l)):
            for _, expr in cx.sorted_terms():
                assert normalize(expr, n).total_dim() == bd.rank(expr, n)
