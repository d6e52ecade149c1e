"""First-page assembly and forced-outcome analysis for resolution complexes.

Indexing convention (fixed throughout and mirrored by the renderer): column p
is the homological index of the resolution term T_p, row q the cohomological
degree on the base, so the entry at (p, q) is H^q(T_p).  The page-r
differential moves (p, q) -> (p - r, q - (r - 1)).  The augmented complex
ends in the resolved sheaf F at column -1; since it is exact, its spectral
sequence converges to zero, and the only reachable augmentation slot from
(p, q) is (-1, q - p).  Consequences used below:

* an entry at (p, q) that no differential on any page can connect to another
  nonzero entry survives, so H^{q-p}(F) is nonzero;
* a diagonal entry (p, p), p >= 1, whose only possible partner is the
  augmentation slot (-1, 0) must inject there, i.e. the edge map onto
  H^0(F) misses it -- the non-normality witness.

Differentials are never computed; when the vanishing pattern does not force
an outcome the verdict is honestly indeterminate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bundles as bd
from . import partitions as pt
from .bwb import GlWeight, bwb_irreducible
from .resolution import ResolutionComplex, build_resolution2

Cell = tuple[int, int]


@dataclass
class E1Entry:
    dim: int = 0
    reps: dict[GlWeight, int] = field(default_factory=dict)

    def add(self, weight: GlWeight, mult: int) -> None:
        self.reps[weight] = self.reps.get(weight, 0) + mult
        self.dim += mult * pt.weyl_dim(weight)


@dataclass
class E1Page:
    """Grid of H^q(T_p) for a resolution complex, rows 0..n-1."""

    n: int
    k: int
    l: int
    ncols: int
    entries: dict[Cell, E1Entry]
    augmentation: str

    def entry(self, p: int, q: int) -> E1Entry | None:
        return self.entries.get((p, q))

    def is_zero(self, p: int, q: int) -> bool:
        return (p, q) not in self.entries

    def nonzero_cells(self) -> list[Cell]:
        return sorted(self.entries)

    def euler(self) -> int:
        return sum(
            (-1) ** (p + q) * entry.dim for (p, q), entry in self.entries.items()
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "columns": self.ncols,
            "rows": self.n - 1,
            "entries": [
                {
                    "p": p,
                    "q": q,
                    "dim": entry.dim,
                    "reps": [
                        {"weight": list(w), "mult": c}
                        for w, c in sorted(entry.reps.items())
                    ],
                }
                for (p, q), entry in sorted(self.entries.items())
            ],
        }


def e1_page(cx: ResolutionComplex) -> E1Page:
    """Apply the weight algorithm to every term; the augmentation slot stays
    symbolic (H^0(F) is never computed directly)."""
    n = cx.n
    entries: dict[Cell, E1Entry] = {}
    for p, expr in cx.sorted_terms():
        s = bd.normalize(expr, n)
        for (lam, m), mult in s.sorted_items():
            outcome = bwb_irreducible(n, lam, m)
            if outcome is None:
                continue
            cell = entries.setdefault((p, outcome.degree), E1Entry())
            cell.add(outcome.weight, mult)
    ncols = 1 + max((p for p, _ in cx.terms), default=0)
    return E1Page(n, cx.k, cx.l, ncols, entries, cx.augmentation)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a forced-vanishing analysis.

    Rationality kinds: all-vanish, non-vanishing, indeterminate.
    Normality kinds: normal-consistent, not-normal, indeterminate.
    ``degree`` is q - p for a non-vanishing witness; for a normality witness
    the arrow lands in the H^0(F) slot.
    """

    kind: str
    degree: int | None = None
    witness: Cell | None = None
    weight: GlWeight | None = None
    dim: int | None = None
    undecided: tuple[Cell, ...] = ()
    note: str = ""

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.witness is not None:
            out["witness"] = {"p": self.witness[0], "q": self.witness[1]}
        if self.weight is not None:
            out["weight"] = list(self.weight)
        if self.dim is not None:
            out["dim"] = self.dim
        if self.undecided:
            out["undecided"] = [{"p": p, "q": q} for p, q in self.undecided]
        if self.note:
            out["note"] = self.note
        return out


def differential_partners(page: E1Page, p: int, q: int) -> list[Cell]:
    """All grid positions (p -+ r, q -+ (r-1)) a differential on some page
    could connect to (p, q); the augmentation column is not included."""
    partners = []
    for r in range(1, page.ncols + page.n + 1):
        tgt = (p - r, q - (r - 1))
        if tgt[0] >= 0 and 0 <= tgt[1] <= page.n - 1:
            partners.append(tgt)
        src = (p + r, q + (r - 1))
        if src[0] < page.ncols and 0 <= src[1] <= page.n - 1:
            partners.append(src)
    return partners


def _isolated(page: E1Page, p: int, q: int) -> bool:
    return all(page.is_zero(*cell) for cell in differential_partners(page, p, q))


def analyze_rationality(page: E1Page) -> Verdict:
    """Decide whether H^{i>0} of the resolved sheaf is forced to vanish, is
    witnessed nonzero by an isolated entry, or cannot be read off the page."""
    high = [cell for cell in page.nonzero_cells() if cell[1] > 0]
    if not high:
        return Verdict(kind="all-vanish")
    for p, q in high:
        if q - p > 0 and _isolated(page, p, q):
            entry = page.entry(p, q)
            weight = min(entry.reps)
            return Verdict(
                kind="non-vanishing",
                degree=q - p,
                witness=(p, q),
                weight=weight,
                dim=entry.dim,
            )
    if all(q - p <= 0 for p, q in high):
        note = (
            "no entries on positive diagonals, so H^{i>0} of the resolved sheaf "
            "vanishes anyway; the page itself does not collapse"
        )
    else:
        note = "entries above row 0 exist but no isolated witness forces an outcome"
    return Verdict(kind="indeterminate", undecided=tuple(high), note=note)


def analyze_normality_page(page: E1Page) -> Verdict:
    high = [cell for cell in page.nonzero_cells() if cell[1] > 0]
    if not high:
        return Verdict(
            kind="normal-consistent",
            note="no entries above row 0, so the edge map onto H^0(F) is unobstructed",
        )
    for p, q in high:
        if q == p and _isolated(page, p, q):
            entry = page.entry(p, q)
            weight = min(entry.reps)
            return Verdict(
                kind="not-normal",
                degree=0,
                witness=(p, q),
                weight=weight,
                dim=entry.dim,
                note=f"forced non-horizontal arrow from (p={p}, q={q}) into the H^0(F) slot",
            )
    return Verdict(
        kind="indeterminate",
        undecided=tuple(high),
        note="entries above row 0 exist but none is forced into the H^0(F) slot",
    )


def analyze_normality(n: int, k: int, l: int) -> Verdict:
    """Build the degree-l complex and look for a forced arrow into H^0(F)."""
    return analyze_normality_page(e1_page(build_resolution2(n, k, l)))


@dataclass(frozen=True)
class SweepRow:
    l: int
    rationality: Verdict
    normality: Verdict


@dataclass(frozen=True)
class SweepResult:
    n: int
    k: int
    l_max: int
    rows: tuple[SweepRow, ...]
    aggregate: str  # "non-rational" or "no-obstruction"
    first_witness_l: int | None
    note: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "l_max": self.l_max,
            "rows": [
                {
                    "l": row.l,
                    "rationality": row.rationality.to_json(),
                    "normality": row.normality.to_json(),
                }
                for row in self.rows
            ],
            "aggregate": self.aggregate,
            "first_witness_l": self.first_witness_l,
            "note": self.note,
        }


def sweep(n: int, k: int, l_max: int) -> SweepResult:
    """Per-degree verdicts for l = 0..l_max; the graded pieces are independent,
    so a single witness makes the aggregate non-rational, while the converse
    only ever holds up to the finite horizon."""
    if l_max < 0:
        raise ValueError("l_max must be nonnegative")
    rows = []
    first_witness = None
    for l in range(l_max + 1):
        page = e1_page(build_resolution2(n, k, l))
        rat = analyze_rationality(page)
        norm = analyze_normality_page(page)
        rows.append(SweepRow(l, rat, norm))
        if rat.kind == "non-vanishing" and first_witness is None:
            first_witness = l
    aggregate = "non-rational" if first_witness is not None else "no-obstruction"
    note = (
        f"graded degrees l <= {l_max} only; degrees beyond the horizon are unchecked"
        if aggregate == "no-obstruction"
        else f"higher cohomology witnessed at l={first_witness}"
    )
    return SweepResult(n, k, l_max, tuple(rows), aggregate, first_witness, note)


def complex_euler_bwb(cx: ResolutionComplex) -> int:
    """Alternating sum over terms of their cohomology Euler characteristics,
    each computed directly from the weight algorithm."""
    total = 0
    for p, expr in cx.terms:
        chi = 0
        for (lam, m), mult in bd.normalize(expr, cx.n).terms.items():
            outcome = bwb_irreducible(cx.n, lam, m)
            if outcome is not None:
                chi += (-1) ** outcome.degree * mult * outcome.dim()
        total += (-1) ** p * chi
    return total


def complex_rank_euler(cx: ResolutionComplex) -> int:
    """Alternating sum of the term ranks."""
    return sum(
        (-1) ** p * bd.normalize(expr, cx.n).total_dim() for p, expr in cx.terms
    )


def render_page_json(page: dict) -> str:
    """ASCII picture of a page dict (as produced by ``E1Page.to_json``):
    q on the vertical axis, columns p increasing leftward, so the complex
    reads left to right toward its augmentation."""
    dims = {(e["p"], e["q"]): e["dim"] for e in page["entries"]}
    ncols = page["columns"]
    nrows = page["rows"]
    cols = list(range(ncols - 1, -1, -1))
    width = max([len(str(d)) for d in dims.values()] + [len(f"p={ncols - 1}"), 3])
    lines = [
        f"E1 page  n={page['n']} k={page['k']} l={page['l']}   "
        "(entry = dim H^q(T_p); F marks the resolved sheaf)"
    ]
    for q in range(nrows, -1, -1):
        cells = [str(dims.get((p, q), ".")).rjust(width) for p in cols]
        suffix = "   -> H^0(F)" if q == 0 else ""
        lines.append(f"  q={q} | " + "  ".join(cells) + " |" + suffix)
    lines.append("        " + "  ".join(f"p={p}".rjust(width) for p in cols))
    return "\n".join(lines)


def render_page(page: E1Page) -> str:
    return render_page_json(page.to_json())
