"""Koszul-type resolutions for the rank-two jet-locus tower.

Stage 1 lives on the fiber projective space P(V_a), V_a of dimension n: the
sheaf Sym^l of the quotient (W (x) C^k)/(L (x) C^k) is resolved by the Koszul
complex with p-th term Wedge^p(L (x) C^k) (x) Sym^{l-p}(W (x) C^k), where
W = Sym^2(C^n) + Q1 is constant along the fiber.  The exponent of the line
bundle and the wedge index necessarily coincide (L is a line bundle), which
pins down the indexing; terms vanish beyond p = min(k, l).

Stage 2 lives on the base P^{n-1}.  Pushing stage 1 down the fiber, every
term is a twist of O(-p) by a constant, so only p = 0 (degree 0) and p >= n
(degree n-1, contributing Sym^{p-n}(V_a) (x) det V_a with V_a = Q + L^2)
survive, reindexed contiguously with the p = 0 term at homological index 0.

While W is constant on the fiber, its Q1 summand is the base quotient
bundle; stage-1 expressions mark it as a constant labeled ``Q1`` and the
pushforward swaps that marker back to the Q leaf of the base.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bundles as bd
from . import partitions as pt
from .bundles import Const, Expr, LineL, Q, const, line, schur, sum_, sym, tensor, wedge
from .bwb import bwb_line

Q1_MARKER = "Q1"
AUGMENTATION = "Sym^l((W(x)C^k)/(L(x)C^k))"


class ResolutionError(ValueError):
    """Parameters outside n >= 2, k >= n, l >= 0."""


@dataclass(frozen=True)
class ResolutionComplex:
    """Terms of a resolution, ordered by homological index ending at 0,
    augmented by the resolved sheaf (never materialized)."""

    n: int
    k: int
    l: int
    stage: int
    terms: tuple[tuple[int, Expr], ...]
    augmentation: str = AUGMENTATION

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms)


def _check_params(n: int, k: int, l: int) -> None:
    if n < 2:
        raise ResolutionError(f"need n >= 2, got n={n}")
    if k < n:
        raise ResolutionError(f"need k >= n, got n={n}, k={k}")
    if l < 0:
        raise ResolutionError(f"need l >= 0, got l={l}")


def fiber_w(n: int) -> Expr:
    """W = Sym^2(C^n) + Q1 with the quotient summand kept constant (fiber view)."""
    return sum_(const(n * (n + 1) // 2, "Sym2Cn"), const(n - 1, Q1_MARKER))


def base_w(n: int) -> Expr:
    """Same bundle seen on the base, where Q1 is the honest quotient bundle."""
    return sum_(const(n * (n + 1) // 2, "Sym2Cn"), Q)


def build_resolution1(n: int, k: int, l: int) -> ResolutionComplex:
    """Koszul complex on the fiber; term p is
    Wedge^p(L (x) C^k) (x) Sym^{l-p}(W (x) C^k) for 0 <= p <= min(k, l)."""
    _check_params(n, k, l)
    ck = const(k, "Ck")
    w = fiber_w(n)
    terms = []
    for p in range(min(k, l) + 1):
        expr = tensor(wedge(p, tensor(line(1), ck)), sym(l - p, tensor(w, ck)))
        terms.append((p, expr))
    return ResolutionComplex(n, k, l, stage=1, terms=tuple(terms))


def _swap_fiber_leaves(e: Expr) -> Expr:
    """Rebuild a fiber expression on the base: the marked constant becomes the
    quotient bundle and the fiber line bundle is trivialized (its cohomology
    has already been taken)."""
    if isinstance(e, Const):
        return Q if e.label == Q1_MARKER else e
    if isinstance(e, LineL):
        return const(1, "O")
    if isinstance(e, bd.Sum):
        return bd.Sum(tuple(_swap_fiber_leaves(p) for p in e.parts))
    if isinstance(e, bd.Tensor):
        return bd.Tensor(tuple(_swap_fiber_leaves(f) for f in e.factors))
    if isinstance(e, bd.SymPow):
        return bd.SymPow(e.degree, _swap_fiber_leaves(e.base))
    if isinstance(e, bd.WedgePow):
        return bd.WedgePow(e.degree, _swap_fiber_leaves(e.base))
    if isinstance(e, bd.SchurPow):
        return bd.SchurPow(e.shape, _swap_fiber_leaves(e.base))
    if isinstance(e, bd.Det):
        return bd.Det(_swap_fiber_leaves(e.base))
    return e


def fiber_line_power(e: Expr, n: int) -> tuple[int, int]:
    """Line-bundle exponent and total rank of a fiber term.

    A stage-1 term is O(-p) twisted by a constant, so its normalization must
    be a single multiple of a single power of L.
    """
    s = bd.normalize(e, n)
    keys = sorted(s.terms)
    if len(keys) != 1 or keys[0][0] != ():
        raise ResolutionError(f"not a constant twist of a line bundle: {e}")
    (_, m), = keys
    return m, s.terms[keys[0]]


def pushforward_fiber(r1: ResolutionComplex) -> ResolutionComplex:
    """Push a stage-1 complex down the fiber.

    Each term is read off as O(-p) (x) constant and fed to the line-bundle
    cohomology rule: p = 0 survives in fiber degree 0, 0 < p < n dies, and
    p >= n contributes its H^{n-1}, a Schur functor of V_a = Q + L^2 with
    the hook weight returned by the rule.  Surviving terms are reindexed
    contiguously, the p = 0 term landing at homological index 0.
    """
    if r1.stage != 1:
        raise ResolutionError("pushforward_fiber expects a stage-1 complex")
    n = r1.n
    v_a = sum_(Q, line(2))
    new_terms = []
    for p_idx, expr in r1.sorted_terms():
        m, _ = fiber_line_power(expr, n)
        if m != p_idx:
            raise ResolutionError(
                f"term {p_idx} carries line power {m}; Koszul indexing broken"
            )
        outcome = bwb_line(n, m)
        if outcome is None:
            continue
        base_expr = _swap_fiber_leaves(expr)
        if outcome.degree == 0:
            new_terms.append((0, base_expr))
            continue
        weight = outcome.weight
        if weight[1:] != (1,) * (n - 1):
            raise ResolutionError(f"unexpected fiber cohomology weight {weight}")
        new_terms.append((m - n + 1, tensor(schur(weight, v_a), base_expr)))
    new_terms.sort()
    indices = [i for i, _ in new_terms]
    if indices != list(range(len(new_terms))):
        raise ResolutionError(f"non-contiguous homological indices {indices}")
    return ResolutionComplex(n, r1.k, r1.l, stage=2, terms=tuple(new_terms))


def build_resolution2(n: int, k: int, l: int) -> ResolutionComplex:
    """Closed form of the pushed-forward resolution on P^{n-1}.

    Index 0 holds Sym^l(W (x) C^k); index j >= 1 (with p = n - 1 + j running
    up to min(k, l)) holds
    det Q (x) L^2 (x) Sym^{p-n}(Q + L^2) (x) Wedge^p(C^k)
    (x) Sym^{l-p}(W (x) C^k).
    For l < k the complex is truncated at p = l.
    """
    _check_params(n, k, l)
    ck = const(k, "Ck")
    w = base_w(n)
    v_a = sum_(Q, line(2))
    terms: list[tuple[int, Expr]] = [(0, sym(l, tensor(w, ck)))]
    for p in range(n, min(k, l) + 1):
        expr = tensor(
            bd.det(Q),
            line(2),
            sym(p - n, v_a),
            wedge(p, ck),
            sym(l - p, tensor(w, ck)),
        )
        terms.append((p - n + 1, expr))
    return ResolutionComplex(n, k, l, stage=2, terms=tuple(terms))
