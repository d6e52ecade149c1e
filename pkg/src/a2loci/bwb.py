"""Bott-style cohomology of Sigma^lam(Q) (x) L^m on P^{n-1}.

The weight (lam, m) is shifted by rho = (n, n-1, ..., 1).  A repeated entry
in the shifted vector kills all cohomology; otherwise sorting it decreasing
costs a unique permutation whose length (the number of strictly increasing
pairs) is the single nonvanishing degree, and the sorted vector minus rho is
the dominant weight of the answer as a GL(n) representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bundles as bd
from . import partitions as pt
from .partitions import Partition

GlWeight = tuple[int, ...]


def rho(n: int) -> GlWeight:
    return tuple(range(n, 0, -1))


@dataclass(frozen=True)
class BottClass:
    """The single nonvanishing cohomology group of an irreducible bundle."""

    degree: int
    weight: GlWeight

    def dim(self) -> int:
        return pt.weyl_dim(self.weight)


def bwb_irreducible(n: int, lam, m: int) -> BottClass | None:
    """Cohomology of Sigma^lam(Q) (x) L^m on P^{n-1}; None when it all vanishes."""
    if n < 2:
        raise ValueError(f"ambient rank n={n} must be at least 2")
    lam = pt.check_partition(lam)
    if len(lam) > n - 1:
        raise ValueError(f"shape {lam} too long for the rank-{n - 1} quotient bundle")
    padded = lam + (0,) * (n - 1 - len(lam)) + (m,)
    shifted = tuple(a + b for a, b in zip(padded, rho(n)))
    if len(set(shifted)) < n:
        return None
    degree = sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if shifted[i] < shifted[j]
    )
    dominant = tuple(sorted(shifted, reverse=True))
    weight = tuple(a - b for a, b in zip(dominant, rho(n)))
    return BottClass(degree, weight)


def bwb_line(n: int, m: int) -> BottClass | None:
    """Cohomology of O(-m) = L^m on P^{n-1}, m >= 0, by the closed form:
    everything vanishes for 0 < m < n, and for m >= n only H^{n-1} survives,
    equal to Sym^{m-n} (x) det of the ambient space."""
    if n < 2:
        raise ValueError(f"ambient rank n={n} must be at least 2")
    if m < 0:
        raise ValueError("bwb_line expects a nonnegative twist")
    if m == 0:
        return BottClass(0, (0,) * n)
    if m < n:
        return None
    return BottClass(n - 1, (m - n + 1,) + (1,) * (n - 1))


@dataclass
class CohomologyTable:
    """Cohomology of a normalized expression, grouped by degree.

    ``by_degree`` maps q to {dominant weight: multiplicity}; ``vanished``
    lists the irreducible summands killed by a repetition, as (lam, m, mult).
    """

    n: int
    by_degree: dict[int, dict[GlWeight, int]]
    vanished: list[tuple[Partition, int, int]]

    def dim(self, q: int) -> int:
        return sum(c * pt.weyl_dim(w) for w, c in self.by_degree.get(q, {}).items())

    def nonzero_degrees(self) -> list[int]:
        return sorted(q for q, reps in self.by_degree.items() if reps)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "by_degree": {
                str(q): [
                    {"weight": list(w), "mult": c, "dim": pt.weyl_dim(w)}
                    for w, c in sorted(reps.items())
                ]
                for q, reps in sorted(self.by_degree.items())
            },
            "vanished": [
                {"lambda": list(lam), "m": m, "mult": c}
                for lam, m, c in self.vanished
            ],
        }


def cohomology(e, n: int) -> CohomologyTable:
    """Normalize the expression and push every irreducible through the weight
    algorithm, aggregating multiplicities per degree."""
    s = e if isinstance(e, bd.IrrSum) else bd.normalize(e, n)
    by_degree: dict[int, dict[GlWeight, int]] = {}
    vanished: list[tuple[Partition, int, int]] = []
    for (lam, m), mult in s.sorted_items():
        outcome = bwb_irreducible(n, lam, m)
        if outcome is None:
            vanished.append((lam, m, mult))
            continue
        reps = by_degree.setdefault(outcome.degree, {})
        reps[outcome.weight] = reps.get(outcome.weight, 0) + mult
    return CohomologyTable(n, by_degree, vanished)
