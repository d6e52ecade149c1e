"""Formal equivariant bundle expressions on P^{n-1} and their normalization.

An expression is a tree over three leaves -- the tautological quotient bundle
Q (rank n-1), powers of the tautological line bundle L = O(-1), and constant
spaces carried by dimension only -- combined with direct sums, tensor
products, symmetric/exterior/Schur powers and determinants.  ``normalize``
rewrites any such tree as a sum of irreducibles Sigma^lam(Q) (x) L^m with
integer multiplicities (an ``IrrSum``).

Constant factors are deliberately tracked by dimension alone: this turns
every symmetric power of (bundle (x) constant) into a Cauchy decomposition
followed by direct-sum branching, and avoids plethysm entirely.  A Schur
functor applied to a tensor of two honest bundles is therefore rejected.

Evaluation is bottom-up and never rewrites the input tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import partitions as pt
from .partitions import Partition


class NormalizeError(ValueError):
    """Expression outside the supported fragment (or inconsistent ambient rank)."""


# --- expression nodes --------------------------------------------------


@dataclass(frozen=True)
class QuotientQ:
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class LineL:
    power: int = 1

    def __str__(self) -> str:
        return "L" if self.power == 1 else f"(line {self.power})"


@dataclass(frozen=True)
class Const:
    dim: int
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise NormalizeError(f"constant space needs positive dimension, got {self.dim}")

    def __str__(self) -> str:
        return f"(const {self.dim} {self.label})" if self.label else f"(const {self.dim})"


@dataclass(frozen=True)
class Sum:
    parts: tuple

    def __str__(self) -> str:
        return "(sum " + " ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Tensor:
    factors: tuple

    def __str__(self) -> str:
        return "(tensor " + " ".join(str(f) for f in self.factors) + ")"


@dataclass(frozen=True)
class SymPow:
    degree: int
    base: object

    def __post_init__(self):
        if self.degree < 0:
            raise NormalizeError("negative symmetric power")

    def __str__(self) -> str:
        return f"(sym {self.degree} {self.base})"


@dataclass(frozen=True)
class WedgePow:
    degree: int
    base: object

    def __post_init__(self):
        if self.degree < 0:
            raise NormalizeError("negative exterior power")

    def __str__(self) -> str:
        return f"(wedge {self.degree} {self.base})"


@dataclass(frozen=True)
class SchurPow:
    shape: Partition
    base: object

    def __str__(self) -> str:
        return f"(schur {pt.format_partition(self.shape) or '0'} {self.base})"


@dataclass(frozen=True)
class Det:
    base: object

    def __str__(self) -> str:
        return f"(det {self.base})"


Q = QuotientQ()

Expr = object  # leaves and nodes above; duck-typed in the evaluator


def line(power: int) -> LineL:
    return LineL(power)


def const(dim: int, label: str = "") -> Const:
    return Const(dim, label)


def sum_(*parts) -> Expr:
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Sum) else (p,))
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def tensor(*factors) -> Expr:
    flat = []
    for f in factors:
        flat.extend(f.factors if isinstance(f, Tensor) else (f,))
    if len(flat) == 1:
        return flat[0]
    return Tensor(tuple(flat))


def sym(degree: int, base: Expr) -> SymPow:
    return SymPow(degree, base)


def wedge(degree: int, base: Expr) -> WedgePow:
    return WedgePow(degree, base)


def schur(shape, base: Expr) -> SchurPow:
    return SchurPow(pt.check_partition(shape), base)


def det(base: Expr) -> Det:
    return Det(base)


def rank(e: Expr, n: int) -> int:
    """Rank of the expression by direct arithmetic on the tree."""
    if isinstance(e, QuotientQ):
        return n - 1
    if isinstance(e, LineL):
        return 1
    if isinstance(e, Const):
        return e.dim
    if isinstance(e, Sum):
        return sum(rank(p, n) for p in e.parts)
    if isinstance(e, Tensor):
        r = 1
        for f in e.factors:
            r *= rank(f, n)
        return r
    if isinstance(e, SymPow):
        return comb(rank(e.base, n) + e.degree - 1, e.degree)
    if isinstance(e, WedgePow):
        return comb(rank(e.base, n), e.degree)
    if isinstance(e, SchurPow):
        return pt.schur_dim(e.shape, rank(e.base, n))
    if isinstance(e, Det):
        return 1
    raise NormalizeError(f"not a bundle expression: {e!r}")


# --- normalized sums of irreducibles -----------------------------------


class IrrSum:
    """Finite sum of irreducibles Sigma^lam(Q) (x) L^m on P^{n-1}.

    ``terms`` maps (lam, m) to a positive multiplicity; lam always has at
    most n-1 rows.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms: dict[tuple[Partition, int], int] = {}
        if terms:
            for key, mult in terms.items():
                self.add_term(key[0], key[1], mult)

    def add_term(self, lam: Partition, m: int, mult: int = 1) -> None:
        if mult == 0:
            return
        if len(lam) > self.n - 1:
            raise NormalizeError(f"shape {lam} too long for ambient n={self.n}")
        key = (lam, m)
        new = self.terms.get(key, 0) + mult
        if new:
            self.terms[key] = new
        else:
            del self.terms[key]

    def add(self, other: "IrrSum", scale: int = 1) -> "IrrSum":
        if other.n != self.n:
            raise NormalizeError("mixing ambient ranks")
        for (lam, m), mult in other.terms.items():
            self.add_term(lam, m, scale * mult)
        return self

    def scaled(self, c: int) -> "IrrSum":
        return IrrSum(self.n, {k: c * v for k, v in self.terms.items()})

    def tensor(self, other: "IrrSum") -> "IrrSum":
        if other.n != self.n:
            raise NormalizeError("mixing ambient ranks")
        out = IrrSum(self.n)
        cap = self.n - 1
        for (lam, a), c1 in self.terms.items():
            for (mu, b), c2 in other.terms.items():
                for nu, c in pt.lr_mult(lam, mu, cap).items():
                    out.add_term(nu, a + b, c1 * c2 * c)
        return out

    def twist(self, m: int) -> "IrrSum":
        """Tensor with L^m."""
        return IrrSum(self.n, {(lam, a + m): c for (lam, a), c in self.terms.items()})

    def total_dim(self) -> int:
        return sum(c * pt.schur_dim(lam, self.n - 1) for (lam, _), c in self.terms.items())

    def sorted_items(self):
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, IrrSum) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c if c != 1 else ''}S^({pt.format_partition(lam)})L^{m}"
            for (lam, m), c in self.sorted_items()
        )
        return f"IrrSum(n={self.n}, {body or '0'})"

    def to_expr(self) -> Expr:
        """Re-embed as a bundle expression (used by the idempotence check)."""
        parts = []
        for (lam, m), c in self.sorted_items():
            factors = []
            if c != 1:
                factors.append(Const(c))
            if lam:
                factors.append(SchurPow(lam, Q))
            if m != 0:
                factors.append(LineL(m))
            if not factors:
                factors.append(Const(1))
            parts.append(tensor(*factors))
        if not parts:
            raise NormalizeError("cannot embed the zero sum")
        return sum_(*parts)


def _unit(n: int) -> IrrSum:
    return IrrSum(n, {((), 0): 1})


def normalize(e: Expr, n: int) -> IrrSum:
    """Decompose the expression into irreducibles on P^{n-1} (n >= 2)."""
    if n < 2:
        raise NormalizeError(f"ambient rank n={n} must be at least 2")
    return _norm(e, n)


def total_dim(s: IrrSum) -> int:
    return s.total_dim()


def _norm(e: Expr, n: int) -> IrrSum:
    if isinstance(e, QuotientQ):
        return IrrSum(n, {((1,), 0): 1})
    if isinstance(e, LineL):
        return IrrSum(n, {((), e.power): 1})
    if isinstance(e, Const):
        return IrrSum(n, {((), 0): e.dim})
    if isinstance(e, Sum):
        out = IrrSum(n)
        for p in e.parts:
            out.add(_norm(p, n))
        return out
    if isinstance(e, Tensor):
        out = _unit(n)
        for f in e.factors:
            out = out.tensor(_norm(f, n))
        return out
    if isinstance(e, SymPow):
        return _schur_apply((e.degree,) if e.degree else (), e.base, n)
    if isinstance(e, WedgePow):
        return _schur_apply((1,) * e.degree, e.base, n)
    if isinstance(e, SchurPow):
        return _schur_apply(e.shape, e.base, n)
    if isinstance(e, Det):
        return _schur_apply((1,) * rank(e.base, n), e.base, n)
    raise NormalizeError(f"not a bundle expression: {e!r}")


def _schur_apply(lam: Partition, e: Expr, n: int) -> IrrSum:
    """Sigma^lam applied to an expression."""
    if not lam:
        return _unit(n)
    if lam == (1,):
        return _norm(e, n)

    if isinstance(e, QuotientQ):
        out = IrrSum(n)
        if len(lam) <= n - 1:
            out.add_term(lam, 0)
        return out
    if isinstance(e, LineL):
        out = IrrSum(n)
        if len(lam) == 1:
            out.add_term((), e.power * lam[0])
        return out
    if isinstance(e, Const):
        d = pt.schur_dim(lam, e.dim)
        return IrrSum(n, {((), 0): d}) if d else IrrSum(n)

    if isinstance(e, Sum):
        head, tail = e.parts[0], e.parts[1:]
        rest: Expr = tail[0] if len(tail) == 1 else Sum(tail)
        out = IrrSum(n)
        for (mu, nu), c in pt.schur_branch_sum(lam, rank(head, n), rank(rest, n)).items():
            left = _schur_apply(mu, head, n)
            if not left:
                continue
            right = _schur_apply(nu, rest, n)
            if not right:
                continue
            out.add(left.tensor(right), c)
        return out

    if isinstance(e, Tensor):
        return _schur_on_tensor(lam, e, n)

    # Schur functor of a Sym/Wedge/Schur/Det of a non-constant bundle is
    # plethysm; a constant subtree is fine since only its dimension matters.
    sub = _norm(e, n)
    flat = _as_line_const(sub)
    if flat is not None:
        m, d = flat
        dim = pt.schur_dim(lam, d)
        out = IrrSum(n)
        if dim:
            out.add_term((), m * pt.size(lam), dim)
        return out
    raise NormalizeError(
        f"Schur functor of {type(e).__name__} would need plethysm; "
        "constant subtrees are supported, general bundles are not"
    )


def _as_line_const(s: IrrSum) -> tuple[int, int] | None:
    """If s = C^d (x) L^m for a single m, return (m, d)."""
    if not s.terms:
        return (0, 0)
    keys = list(s.terms)
    if any(lam for lam, _ in keys):
        return None
    if len(keys) != 1:
        return None
    (_, m), = keys
    return (m, s.terms[keys[0]])


def _schur_on_tensor(lam: Partition, e: Tensor, n: int) -> IrrSum:
    """Sigma^lam of a tensor product: every factor but at most one must be a
    line-times-constant; the constant part goes through the Cauchy identity,
    the line part is a twist."""
    bundle = None
    const_dim = 1
    line_m = 0
    for f in e.factors:
        flat = _as_line_const(_norm(f, n))
        if flat is None:
            if bundle is not None:
                raise NormalizeError(
                    "Schur functor of a tensor of two non-constant bundles needs "
                    "Kronecker coefficients; not supported"
                )
            bundle = f
        else:
            m, d = flat
            if d == 0:
                return IrrSum(n)
            line_m += m
            const_dim *= d

    twist = line_m * pt.size(lam)
    if bundle is None:
        dim = pt.schur_dim(lam, const_dim)
        out = IrrSum(n)
        if dim:
            out.add_term((), twist, dim)
        return out
    if const_dim == 1:
        return _schur_apply(lam, bundle, n).twist(twist)

    rows = len(lam)
    if rows == 1:
        pairs = [(sig, sig) for sig in pt.partitions_of(lam[0])]
    elif lam[0] == 1:
        pairs = [(sig, pt.conjugate(sig)) for sig in pt.partitions_of(rows)]
    else:
        raise NormalizeError(
            "only symmetric and exterior powers of (bundle (x) constant) "
            "decompose without plethysm"
        )
    cap = rank(bundle, n)
    out = IrrSum(n)
    for sig, on_const in pairs:
        mult = pt.schur_dim(on_const, const_dim)
        if not mult or len(sig) > cap:
            continue
        part = _schur_apply(sig, bundle, n)
        if part:
            out.add(part.twist(twist), mult)
    return out


# --- prefix grammar ----------------------------------------------------

_ATOMS = {"Q", "L"}
_OPS = {"sum", "tensor", "sym", "wedge", "det", "schur", "const", "line"}


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise NormalizeError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise NormalizeError(f"expected {tok!r}, got {got!r}")

    def at_end_of_form(self) -> bool:
        return self.peek() is None or self.peek() == ")"

    def parse_int(self) -> int:
        tok = self.take()
        try:
            return int(tok)
        except ValueError:
            raise NormalizeError(f"expected an integer, got {tok!r}") from None

    def parse_expr(self) -> Expr:
        tok = self.take()
        if tok == "(":
            inner = self.parse_form()
            self.expect(")")
            return inner
        if tok == "Q":
            return Q
        if tok == "L":
            return LineL(1)
        if tok in _OPS:
            self.pos -= 1
            return self.parse_form()
        raise NormalizeError(f"unexpected token {tok!r}")

    def parse_form(self) -> Expr:
        op = self.take()
        if op == "Q":
            return Q
        if op == "L":
            return LineL(1)
        if op == "line":
            return LineL(self.parse_int())
        if op == "const":
            dim = self.parse_int()
            label = ""
            nxt = self.peek()
            if nxt not in (None, ")") and not _looks_like_expr_start(nxt):
                label = self.take()
            return Const(dim, label)
        if op == "sym":
            return SymPow(self.parse_int(), self.parse_expr())
        if op == "wedge":
            return WedgePow(self.parse_int(), self.parse_expr())
        if op == "schur":
            tok = self.take()
            shape = pt.parse_partition("" if tok == "0" else tok)
            return SchurPow(shape, self.parse_expr())
        if op == "det":
            return Det(self.parse_expr())
        if op in ("sum", "tensor"):
            parts = []
            while not self.at_end_of_form():
                parts.append(self.parse_expr())
            if len(parts) < 2:
                raise NormalizeError(f"{op} needs at least two operands")
            return Sum(tuple(parts)) if op == "sum" else Tensor(tuple(parts))
        raise NormalizeError(f"unknown operator {op!r}")


def _looks_like_expr_start(tok: str) -> bool:
    return tok == "(" or tok in _ATOMS or tok in _OPS


def parse_expr(text: str) -> Expr:
    """Parse the prefix grammar, e.g.
    ``sym 7 (tensor (sum (const 15 Sym2C5) Q) (const 7 Ck))``."""
    parser = _Parser(_tokenize(text))
    e = parser.parse_expr()
    if parser.peek() is not None:
        raise NormalizeError(f"trailing input from token {parser.peek()!r}")
    return e


def format_expr(e: Expr) -> str:
    return str(e)
