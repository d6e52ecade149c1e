"""Command-line interface.

Every command assembles a plain JSON-serializable result dict first; the text
reporter renders from that dict, so both output modes expose exactly the same
data.  ``--json`` (or A2LOCI_FORMAT=json) selects raw JSON output.

Exit codes: 0 on success, 1 when a ``reproduce`` case deviates from its
recorded outcome, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bundles as bd
from . import partitions as pt
from . import spectral as sp
from .bwb import bwb_irreducible, cohomology
from .kernels import BACKEND
from .resolution import ResolutionError, build_resolution1, build_resolution2, pushforward_fiber

SCHEMA = "a2loci/1"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int = 0
    k: int = 0
    l: int = 0
    l_max: int | None = None
    lam: tuple = ()
    m: int = 0
    output: str = "text"


def _result(command: str, params: dict, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "params": params, **body}


def _fmt_partition(p) -> str:
    return "(" + pt.format_partition(tuple(p)) + ")"


def _fmt_weight(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


# --- command bodies -----------------------------------------------------


def cmd_bwb(cfg: RunConfig) -> dict:
    if cfg.n < 2:
        raise UsageError("--n must be at least 2")
    if len(cfg.lam) > cfg.n - 1:
        raise UsageError(
            f"--lambda {pt.format_partition(cfg.lam)!r} is longer than n-1={cfg.n - 1}"
        )
    outcome = bwb_irreducible(cfg.n, cfg.lam, cfg.m)
    params = {"n": cfg.n, "lambda": list(cfg.lam), "m": cfg.m}
    if outcome is None:
        return _result("bwb", params, {"vanishes": True})
    return _result(
        "bwb",
        params,
        {
            "vanishes": False,
            "degree": outcome.degree,
            "weight": list(outcome.weight),
            "dim": outcome.dim(),
        },
    )


def _render_bwb(res: dict) -> str:
    p = res["params"]
    bundle = f"Sigma^{_fmt_partition(p['lambda'])} Q (x) L^{p['m']}"
    if res["vanishes"]:
        return f"H^*(P^{p['n'] - 1}, {bundle}) = 0   (repeated entry in the shifted weight)"
    return (
        f"H^{res['degree']}(P^{p['n'] - 1}, {bundle}) = "
        f"Sigma^{_fmt_weight(res['weight'])} C^{p['n']}   dim {res['dim']}"
    )


def cmd_decompose(cfg: RunConfig, text: str) -> dict:
    if cfg.n < 2:
        raise UsageError("--n must be at least 2")
    expr = bd.parse_expr(text)
    s = bd.normalize(expr, cfg.n)
    table = cohomology(s, cfg.n)
    return _result(
        "decompose",
        {"n": cfg.n, "expr": bd.format_expr(expr)},
        {
            "terms": [
                {
                    "lambda": list(lam),
                    "m": m,
                    "mult": c,
                    "rank": pt.schur_dim(lam, cfg.n - 1),
                }
                for (lam, m), c in s.sorted_items()
            ],
            "total_rank": s.total_dim(),
            "cohomology": table.to_json(),
        },
    )


def _render_decompose(res: dict) -> str:
    lines = [f"decomposition on P^{res['params']['n'] - 1} of {res['params']['expr']}"]
    for t in res["terms"]:
        lines.append(
            f"  {t['mult']:>4} x Sigma^{_fmt_partition(t['lambda'])} Q (x) L^{t['m']}"
            f"   rank {t['rank']}"
        )
    lines.append(f"total rank {res['total_rank']}")
    lines.append(_render_cohomology(res["cohomology"]))
    return "\n".join(lines)


def _render_cohomology(coh: dict) -> str:
    lines = ["cohomology:"]
    if not coh["by_degree"]:
        lines.append("  all degrees vanish")
    for q, reps in coh["by_degree"].items():
        for rep in reps:
            lines.append(
                f"  H^{q} += {rep['mult']} x Sigma^{_fmt_weight(rep['weight'])}"
                f" C^{coh['n']}   dim {rep['dim']}"
            )
    for v in coh["vanished"]:
        lines.append(
            f"  vanishing summand: {v['mult']} x Sigma^{_fmt_partition(v['lambda'])}"
            f" Q (x) L^{v['m']}"
        )
    return "\n".join(lines)


def cmd_resolve(cfg: RunConfig, stage: int) -> dict:
    try:
        if stage == 1:
            cx = build_resolution1(cfg.n, cfg.k, cfg.l)
        else:
            cx = build_resolution2(cfg.n, cfg.k, cfg.l)
    except ResolutionError as exc:
        raise UsageError(str(exc)) from None
    terms = []
    for p, expr in cx.sorted_terms():
        s = bd.normalize(expr, cfg.n)
        terms.append(
            {
                "index": p,
                "expr": bd.format_expr(expr),
                "rank": s.total_dim(),
                "terms": [
                    {"lambda": list(lam), "m": m, "mult": c}
                    for (lam, m), c in s.sorted_items()
                ],
            }
        )
    return _result(
        "resolve",
        {"n": cfg.n, "k": cfg.k, "l": cfg.l, "stage": stage},
        {"augmentation": cx.augmentation, "terms": terms},
    )


def _render_resolve(res: dict) -> str:
    p = res["params"]
    lines = [
        f"resolution stage {p['stage']} at n={p['n']} k={p['k']} l={p['l']}"
        f"  (augmented by {res['augmentation']})"
    ]
    for t in res["terms"]:
        lines.append(f"term {t['index']}:  {t['expr']}")
        lines.append(f"  rank {t['rank']}")
        for irr in t["terms"]:
            lines.append(
                f"    {irr['mult']:>4} x Sigma^{_fmt_partition(irr['lambda'])}"
                f" Q (x) L^{irr['m']}"
            )
    return "\n".join(lines)


def _page_json(n: int, k: int, l: int) -> tuple[dict, sp.E1Page]:
    page = sp.e1_page(build_resolution2(n, k, l))
    return page.to_json(), page


def cmd_rationality(cfg: RunConfig) -> dict:
    params = {"n": cfg.n, "k": cfg.k, "l": cfg.l}
    try:
        if cfg.l_max is not None:
            result = sp.sweep(cfg.n, cfg.k, cfg.l_max)
            return _result("rationality", {**params, "l_max": cfg.l_max},
                           {"sweep": result.to_json()})
        page_json, page = _page_json(cfg.n, cfg.k, cfg.l)
        verdict = sp.analyze_rationality(page)
    except (ResolutionError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return _result("rationality", params,
                   {"page": page_json, "verdict": verdict.to_json()})


def _render_verdict(v: dict) -> str:
    bits = [f"verdict: {v['kind']}"]
    if "degree" in v and v["kind"] == "non-vanishing":
        bits.append(f"H^{v['degree']} of the resolved sheaf is nonzero")
    if "witness" in v:
        bits.append(f"witness entry (p={v['witness']['p']}, q={v['witness']['q']})")
    if "weight" in v:
        bits.append(f"weight {_fmt_weight(v['weight'])}, dim {v['dim']}")
    if v.get("undecided"):
        cells = ", ".join(f"({c['p']},{c['q']})" for c in v["undecided"])
        bits.append(f"undecided entries: {cells}")
    if v.get("note"):
        bits.append(v["note"])
    return "\n".join("  " + b if i else b for i, b in enumerate(bits))


def _render_rationality(res: dict) -> str:
    if "sweep" in res:
        sw = res["sweep"]
        lines = [f"rationality sweep  n={sw['n']} k={sw['k']} l=0..{sw['l_max']}"]
        for row in sw["rows"]:
            lines.append(
                f"  l={row['l']:>3}  rationality={row['rationality']['kind']:<15}"
                f" normality={row['normality']['kind']}"
            )
        lines.append(f"aggregate: {sw['aggregate']}  ({sw['note']})")
        return "\n".join(lines)
    return sp.render_page_json(res["page"]) + "\n" + _render_verdict(res["verdict"])


def cmd_normality(cfg: RunConfig) -> dict:
    params = {"n": cfg.n, "k": cfg.k, "l": cfg.l}
    try:
        page_json, page = _page_json(cfg.n, cfg.k, cfg.l)
        verdict = sp.analyze_normality_page(page)
    except (ResolutionError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return _result("normality", params,
                   {"page": page_json, "verdict": verdict.to_json()})


def _render_normality(res: dict) -> str:
    return sp.render_page_json(res["page"]) + "\n" + _render_verdict(res["verdict"])


# --- reproduction cases --------------------------------------------------


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _reproduce_example22() -> list[dict]:
    table = cohomology(bd.tensor(bd.Q, bd.sym(2, bd.Q), bd.line(5)), 4)
    checks = [
        _check(
            "single nonzero degree 2",
            table.nonzero_degrees() == [2],
            f"nonzero degrees {table.nonzero_degrees()}",
        ),
        _check(
            "H^2 = Sigma^(3,3,1,1) C^4, multiplicity 1",
            table.by_degree.get(2) == {(3, 3, 1, 1): 1},
            f"H^2 reps {table.by_degree.get(2)}",
        ),
        _check(
            "summand Sigma^(2,1) Q (x) L^5 vanishes",
            ((2, 1), 5, 1) in table.vanished,
            f"vanished {table.vanished}",
        ),
    ]
    return checks


def _reproduce_thm31() -> list[dict]:
    checks = []
    for n in (2, 3, 4):
        result = sp.sweep(n, n, 12)
        all_vanish = all(r.rationality.kind == "all-vanish" for r in result.rows)
        checks.append(
            _check(
                f"k=n={n}: no higher cohomology for l<=12",
                all_vanish and result.aggregate == "no-obstruction",
                f"aggregate {result.aggregate}",
            )
        )
    return checks


def _reproduce_thm32() -> list[dict]:
    result = sp.sweep(5, 7, 7)
    row = result.rows[7]
    page = sp.e1_page(build_resolution2(5, 7, 7))
    v = row.rationality
    return [
        _check(
            "aggregate non-rational with first witness at l=7",
            result.aggregate == "non-rational" and result.first_witness_l == 7,
            f"aggregate {result.aggregate}, first witness {result.first_witness_l}",
        ),
        _check(
            "witness H^1 from (p=3, q=4) with weight (2,2,2,2,2)",
            v.kind == "non-vanishing"
            and v.degree == 1
            and v.witness == (3, 4)
            and v.weight == (2, 2, 2, 2, 2),
            f"verdict {v.to_json()}",
        ),
        _check(
            "page has exactly two nonzero entries",
            page.nonzero_cells() == [(0, 0), (3, 4)],
            f"cells {page.nonzero_cells()}",
        ),
    ]


def _reproduce_remark() -> list[dict]:
    page = sp.e1_page(build_resolution2(3, 4, 4))
    v = sp.analyze_normality_page(page)
    return [
        _check(
            "not normal with witness arrow (p=2, q=2) -> H^0(F)",
            v.kind == "not-normal" and v.witness == (2, 2),
            f"verdict {v.to_json()}",
        ),
        _check(
            "witness entry has dim 1 and weight (2,2,2)",
            v.dim == 1 and v.weight == (2, 2, 2),
            f"dim {v.dim}, weight {v.weight}",
        ),
        _check(
            "no cohomology anywhere else",
            page.nonzero_cells() == [(0, 0), (2, 2)],
            f"cells {page.nonzero_cells()}",
        ),
    ]


_CASES = {
    "example2.2": _reproduce_example22,
    "thm3.1": _reproduce_thm31,
    "thm3.2": _reproduce_thm32,
    "remark-normality": _reproduce_remark,
}


def cmd_reproduce(case: str) -> dict:
    names = list(_CASES) if case == "all" else [case]
    checks = []
    for name in names:
        for check in _CASES[name]():
            checks.append({"case": name, **check})
    return _result(
        "reproduce",
        {"case": case},
        {"ok": all(c["ok"] for c in checks), "checks": checks},
    )


def _render_reproduce(res: dict) -> str:
    lines = []
    for c in res["checks"]:
        mark = "ok " if c["ok"] else "MISMATCH"
        lines.append(f"{mark:<9} [{c['case']}] {c['name']}  ({c['detail']})")
    lines.append("all checks passed" if res["ok"] else "reproduction failed")
    return "\n".join(lines)


# --- argument plumbing ----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a2loci",
        description=(
            "Exact cohomology of equivariant bundles on projective space, "
            "Koszul-type resolutions of the rank-two jet loci, and "
            "spectral-sequence vanishing verdicts."
        ),
        epilog=f"kernel backend: {BACKEND}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="emit JSON (default when A2LOCI_FORMAT=json)")

    p = sub.add_parser("bwb", help="cohomology of one irreducible bundle")
    p.add_argument("--n", type=int, required=True, help="ambient dimension (P^{n-1})")
    p.add_argument("--lambda", dest="lam", default="",
                   help='partition, comma-joined, e.g. "3,1"; empty for the zero shape')
    p.add_argument("--m", type=int, required=True, help="power of L = O(-1)")
    add_json(p)

    p = sub.add_parser("decompose", help="normalize a bundle expression")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("expr", help='prefix expression, e.g. "sym 2 (sum Q (line 2))"')
    add_json(p)

    p = sub.add_parser("resolve", help="build a resolution and normalize its terms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--stage", type=int, choices=(1, 2), default=2,
                   help="1 = fiber Koszul complex, 2 = pushed-forward complex (default)")
    add_json(p)

    p = sub.add_parser("rationality", help="vanishing analysis of the first page")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--sweep", type=int, default=None, metavar="LMAX",
                   help="analyze every degree l = 0..LMAX and aggregate")
    add_json(p)

    p = sub.add_parser("normality", help="forced-arrow analysis into the H^0(F) slot")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    add_json(p)

    p = sub.add_parser("reproduce", help="run a recorded reference computation")
    p.add_argument("case", choices=sorted(_CASES) + ["all"])
    add_json(p)

    return parser


_RENDERERS = {
    "bwb": _render_bwb,
    "decompose": _render_decompose,
    "resolve": _render_resolve,
    "rationality": _render_rationality,
    "normality": _render_normality,
    "reproduce": _render_reproduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False) or os.environ.get("A2LOCI_FORMAT") == "json"
    try:
        if args.command == "bwb":
            cfg = RunConfig("bwb", n=args.n, lam=pt.parse_partition(args.lam), m=args.m)
            res = cmd_bwb(cfg)
        elif args.command == "decompose":
            cfg = RunConfig("decompose", n=args.n)
            res = cmd_decompose(cfg, args.expr)
        elif args.command == "resolve":
            cfg = RunConfig("resolve", n=args.n, k=args.k, l=args.l)
            res = cmd_resolve(cfg, args.stage)
        elif args.command == "rationality":
            cfg = RunConfig("rationality", n=args.n, k=args.k, l=args.l, l_max=args.sweep)
            res = cmd_rationality(cfg)
        elif args.command == "normality":
            cfg = RunConfig("normality", n=args.n, k=args.k, l=args.l)
            res = cmd_normality(cfg)
        elif args.command == "reproduce":
            res = cmd_reproduce(args.case)
        else:  # pragma: no cover - argparse enforces the choices
            raise UsageError(f"unknown command {args.command}")
    except (UsageError, pt.PartitionError, bd.NormalizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if as_json:
        print(json.dumps(res, sort_keys=True, indent=2))
    else:
        print(_RENDERERS[args.command](res))

    if args.command == "reproduce" and not res["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
