"""Exact partition calculus for Schur functors.

Partitions are plain tuples of weakly decreasing positive integers (the empty
tuple is the zero partition).  Multiplicity sums are ordinary dicts mapping a
partition to a positive integer.  Everything here is pure and deterministic;
the memo caches only ever store immutable values.

Truncation semantics: every operation takes a ``cap`` bounding the number of
rows, and partitions longer than the cap are silently dropped, because the
Schur functor of a rank-r bundle vanishes on shapes with more than r rows.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator

from .kernels import lr_skew_count

Partition = tuple[int, ...]
MultSum = dict[Partition, int]


class PartitionError(ValueError):
    """Input is not a weakly decreasing tuple of nonnegative integers."""


def check_partition(parts) -> Partition:
    """Validate and normalize: drop trailing zeros, reject increases/negatives."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise PartitionError(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise PartitionError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def parse_partition(text: str) -> Partition:
    """Parse the comma-joined CLI form, e.g. "3,1,1"; "" is the zero partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        return check_partition(text.split(","))
    except PartitionError:
        raise
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def partitions_of(n: int, max_len: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with the given bounds, in lexicographic descending order."""
    if n < 0:
        return
    biggest = n if max_part is None else min(max_part, n)
    rows = n if max_len is None else max_len

    def rec(remaining: int, limit: int, rows_left: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        if rows_left == 0 or limit == 0:
            return
        for part in range(min(limit, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, rows_left - 1, acc)
            acc.pop()

    yield from rec(n, biggest, rows, [])


def subpartitions(p: Partition, max_len: int | None = None) -> Iterator[Partition]:
    """All mu contained in p (mu_i <= p_i) with at most max_len rows."""
    rows = len(p) if max_len is None else min(max_len, len(p))

    def rec(r: int, prev: int, acc: list[int]):
        if r == rows:
            yield check_partition(acc)
            return
        for v in range(min(prev, p[r]), -1, -1):
            acc.append(v)
            yield from rec(r + 1, v, acc)
            acc.pop()
        return

    # allow stopping early by letting parts hit zero; check_partition trims
    yield from rec(0, p[0] if p else 0, [])


def horizontal_strips(lam: Partition, j: int, cap: int) -> Iterator[Partition]:
    """Partitions mu obtained from lam by adding a horizontal strip of j boxes.

    Horizontal strip: at most one new box per column, i.e. lam and mu
    interlace (mu_{r+1} <= lam_r).
    """
    rows = min(cap, len(lam) + 1)
    lam_p = lam + (0,) * (rows - len(lam))

    def rec(r: int, budget: int, acc: list[int]):
        if r == rows:
            if budget == 0:
                yield check_partition(acc)
            return
        lo = lam_p[r]
        hi = lam_p[r - 1] if r > 0 else lam_p[0] + budget
        hi = min(hi, lo + budget)
        if acc:
            hi = min(hi, acc[-1])
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(r + 1, budget - (v - lo), acc)
            acc.pop()

    yield from rec(0, j, [])


def vertical_strips(lam: Partition, j: int, cap: int) -> Iterator[Partition]:
    """Partitions mu obtained from lam by adding a vertical strip of j boxes
    (at most one new box per row)."""
    rows = min(cap, len(lam) + j)
    lam_p = lam + (0,) * (rows - len(lam))

    def rec(r: int, budget: int, acc: list[int]):
        if r == rows:
            if budget == 0:
                yield check_partition(acc)
            return
        lo = lam_p[r]
        for gain in (1, 0):
            if gain > budget:
                continue
            v = lo + gain
            if acc and v > acc[-1]:
                continue
            acc.append(v)
            yield from rec(r + 1, budget - gain, acc)
            acc.pop()

    yield from rec(0, j, [])


def pieri_row(lam: Partition, j: int, cap: int) -> MultSum:
    """Multiply Sigma^lam by Sym^j (a single-row factor), truncated to cap rows."""
    lam = check_partition(lam)
    if cap < len(lam):
        raise PartitionError(f"cap {cap} below length of {lam}")
    if j < 0:
        raise PartitionError("negative Pieri degree")
    return {mu: 1 for mu in horizontal_strips(lam, j, cap)}


def wedge_pieri(lam: Partition, j: int, cap: int) -> MultSum:
    """Multiply Sigma^lam by the j-th exterior power (a single-column factor)."""
    lam = check_partition(lam)
    if cap < len(lam):
        raise PartitionError(f"cap {cap} below length of {lam}")
    if j < 0:
        raise PartitionError("negative Pieri degree")
    return {mu: 1 for mu in vertical_strips(lam, j, cap)}


def _lr_candidates(lam: Partition, mu: Partition, cap: int) -> Iterator[Partition]:
    """Possible shapes nu of the product: lam <= nu, |nu| = |lam| + |mu|,
    with at most len(mu) new boxes per column."""
    total = size(lam) + size(mu)
    lmu = len(mu)
    rows = min(cap, len(lam) + lmu)
    lam_p = lam + (0,) * (rows - len(lam))

    def rec(r: int, prev: int, budget: int, acc: list[int]):
        if r == rows:
            if budget == 0:
                yield tuple(x for x in acc if x)
            return
        lo = lam_p[r]
        hi = min(prev, lo + budget)
        if r >= lmu:
            hi = min(hi, lam_p[r - lmu])
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(r + 1, v, budget - (v - lo), acc)
            acc.pop()

    yield from rec(0, lam_p[0] + mu[0], size(mu), [])


def lr_expand_general(lam: Partition, mu: Partition, cap: int) -> MultSum:
    """Littlewood-Richardson product via skew-tableau counting, no fast paths."""
    if len(lam) > cap or len(mu) > cap:
        return {}
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    out: MultSum = {}
    for nu in _lr_candidates(lam, mu, cap):
        inner = lam + (0,) * (len(nu) - len(lam))
        c = lr_skew_count(nu, inner, mu)
        if c:
            out[nu] = c
    return out


@lru_cache(maxsize=None)
def _lr_mult_cached(lam: Partition, mu: Partition, cap: int):
    if len(lam) > cap or len(mu) > cap:
        return ()
    if len(mu) <= 1:
        return tuple(sorted(pieri_row(lam, mu[0] if mu else 0, cap).items()))
    if mu[0] == 1:
        return tuple(sorted(wedge_pieri(lam, len(mu), cap).items()))
    if len(lam) <= 1 or lam[0] == 1:
        return _lr_mult_cached(mu, lam, cap)
    return tuple(sorted(lr_expand_general(lam, mu, cap).items()))


def lr_mult(lam: Partition, mu: Partition, cap: int) -> MultSum:
    """Decompose Sigma^lam . Sigma^mu, keeping shapes with at most cap rows.

    Single-row and single-column factors go through the Pieri rules; the
    general case counts Littlewood-Richardson skew tableaux.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if cap < 1:
        raise PartitionError("cap must be positive")
    return dict(_lr_mult_cached(lam, mu, cap))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of Sigma^lam inside Sigma^mu . Sigma^nu."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if size(mu) + size(nu) != size(lam) or len(mu) > len(lam):
        return 0
    inner = mu + (0,) * (len(lam) - len(mu))
    if any(inner[r] > lam[r] for r in range(len(lam))):
        return 0
    return lr_skew_count(lam, inner, nu)


def cauchy_sym(l: int, rank_a: int, rank_b: int) -> MultSum:
    """Index set of Sym^l(A (x) B): partitions of l fitting both ranks, each once."""
    if l < 0:
        raise PartitionError("negative symmetric degree")
    return {lam: 1 for lam in partitions_of(l, max_len=min(rank_a, rank_b))}


@lru_cache(maxsize=None)
def _branch_cached(lam: Partition, cap_a: int, cap_b: int):
    out = []
    for mu in subpartitions(lam, max_len=cap_a):
        rest = size(lam) - size(mu)
        for nu in partitions_of(rest, max_len=min(cap_b, len(lam)),
                                max_part=lam[0] if lam else 0):
            c = lr_coefficient(lam, mu, nu)
            if c:
                out.append(((mu, nu), c))
    return tuple(sorted(out))


def schur_branch_sum(lam: Partition, cap_a: int, cap_b: int) -> dict:
    """Branch Sigma^lam(A + B) into pairs Sigma^mu(A) (x) Sigma^nu(B) with
    Littlewood-Richardson multiplicities, bounding the row counts by the ranks."""
    lam = check_partition(lam)
    return dict(_branch_cached(lam, cap_a, cap_b))


def weyl_dim(weight: tuple[int, ...]) -> int:
    """Dimension of the irreducible GL representation with the given weakly
    decreasing integer highest weight (negative entries allowed)."""
    d = len(weight)
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= weight[i] - weight[j] + j - i
            den *= j - i
    return num // den


@lru_cache(maxsize=None)
def schur_dim(lam: Partition, d: int) -> int:
    """dim Sigma^lam(C^d); zero once the shape has more than d rows."""
    lam = check_partition(lam)
    if len(lam) > d:
        return 0
    return weyl_dim(lam + (0,) * (d - len(lam)))


def mult_sum_dimension(terms: MultSum, d: int) -> int:
    """Total dimension of a multiplicity sum inside rank d."""
    return sum(c * schur_dim(lam, d) for lam, c in terms.items())


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
