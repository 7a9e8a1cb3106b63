"""Linear codes over GF(p) and GF(p^m): GRS codes, duals, trace codes,
subfield-subcodes, puncturing and shortening.

Coordinates are numbered 1..n in the public API (puncture/shorten sets), and
GRS coordinates follow ascending eta-exponent of the evaluation points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import linalg
from .galois import FieldSpec, format_elem, parse_elem
from .ring import PolyR, ev, is_cyclotomic, zero_set

DESIGN_MDS = "design (MDS)"
INHERITED = "inherited"
EXACT = "exact"
TRIVIAL = "trivial"


class CodeError(ValueError):
    """A violated precondition of a code construction."""


class DistanceBudgetExceeded(CodeError):
    """Exhaustive enumeration would exceed the allowed budget; use d_lb instead."""


class LinearCode:
    """A length-n code over ``field`` given by generator rows.

    The row-reduced basis and the dimension are computed eagerly, so a code
    is read-only after construction.  ``d_lb`` is a lower bound on the
    minimum distance and ``provenance`` says where it came from.
    """

    def __init__(self, field: FieldSpec, generator, n: int | None = None,
                 d_lb: int | None = None, provenance: str = TRIVIAL):
        G = np.asarray(generator, dtype=np.int64)
        if G.ndim == 1:
            G = G.reshape(1, -1) if G.size else G.reshape(0, n or 0)
        if n is None:
            n = G.shape[1]
        if G.shape[1] != n:
            raise CodeError(f"generator has {G.shape[1]} columns, expected n={n}")
        if G.size and (G.min() < 0 or G.max() >= field.q):
            raise CodeError("generator entries are not element encodings of the field")
        self.field = field
        self.n = n
        self.generator = G
        self.generator.setflags(write=False)
        self.basis = linalg.row_basis(G, field)
        self.basis.setflags(write=False)
        self.k = self.basis.shape[0]
        if d_lb is None:
            d_lb, provenance = (1, TRIVIAL) if self.k else (n + 1, TRIVIAL)
        self.d_lb = d_lb
        self.provenance = provenance

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.field, self.n, self.basis.tobytes()))

    def __repr__(self):
        F = self.field
        return f"LinearCode[{self.n},{self.k},>={self.d_lb}] over GF({F.p}^{F.m})"

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d_lb

    def with_distance(self, d_lb: int, provenance: str) -> "LinearCode":
        return LinearCode(self.field, self.basis, self.n, d_lb, provenance)

    def contains(self, word) -> bool:
        w = np.asarray(word, dtype=np.int64).reshape(1, self.n)
        return linalg.rank(np.vstack([self.basis, w]), self.field) == self.k

    def summary(self) -> dict:
        return {"p": self.field.p, "m": self.field.m, "n": self.n, "k": self.k,
                "d_lb": self.d_lb, "provenance": self.provenance}


# --- GRS codes --------------------------------------------------------------

@dataclass(frozen=True)
class GrsSpec:
    """GRS_k(alpha, v): evaluation points eta^e for e in ``exponents``."""

    field: FieldSpec
    exponents: tuple[int, ...]
    twist: tuple[int, ...]  # element encodings, all nonzero
    k: int

    def __post_init__(self):
        e = self.exponents
        if any(not 0 <= x < self.field.N for x in e):
            raise CodeError("evaluation exponents must lie in 0..N-1 (points are nonzero)")
        if len(set(e)) != len(e):
            raise CodeError("evaluation points must be distinct")
        if len(self.twist) != len(e):
            raise CodeError("twist vector length differs from the number of points")
        if any(v == 0 for v in self.twist):
            raise CodeError("twist entries must be nonzero")
        if not 0 <= self.k <= len(e):
            raise CodeError(f"k={self.k} outside 0..n={len(e)}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @classmethod
    def from_twist(cls, g: PolyR, k: int) -> "GrsSpec":
        """GRS_k<g>: points where g is nonzero, twist = values of g there."""
        vals = ev(g)
        exps = np.flatnonzero(vals)
        return cls(g.field, tuple(exps.tolist()), tuple(vals[exps].tolist()), k)

    def points(self) -> np.ndarray:
        return self.field.exp[list(self.exponents)]


def grs_generator(spec: GrsSpec, k: int | None = None) -> np.ndarray:
    """Rows Ev_{alpha,v}(x^j), j = 0..k-1."""
    F = spec.field
    k = spec.k if k is None else k
    e = np.array(spec.exponents, dtype=np.int64)
    j = np.arange(k)[:, None]
    powers = F.exp[(j * e[None, :]) % F.N] if k else np.zeros((0, spec.n), dtype=np.int64)
    return F.mul(powers, np.array(spec.twist, dtype=np.int64)[None, :])


def grs(spec: GrsSpec) -> LinearCode:
    return LinearCode(spec.field, grs_generator(spec), spec.n,
                      spec.n - spec.k + 1, DESIGN_MDS)


def grs_dual_closed_form(spec: GrsSpec) -> GrsSpec:
    """GRS_k(alpha, v)^perp = GRS_{n-k}(alpha, u), u_i^{-1} = v_i prod_{j!=i}(alpha_i - alpha_j)."""
    F = spec.field
    a = spec.points()
    u = []
    for i in range(spec.n):
        d = F.sub(a[i], np.delete(a, i))
        prod = int(F.exp[int(F.log[d].sum()) % F.N]) if d.size else 1
        u.append(int(F.inv(F.mul(spec.twist[i], prod))))
    return GrsSpec(F, spec.exponents, tuple(u), spec.n - spec.k)


# --- generic operations ------------------------------------------------------

def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.field, linalg.nullspace(c.basis, c.field), c.n)


def trace_code(c: LinearCode) -> LinearCode:
    """Componentwise trace of the code, spanned by tr(eta^j r) over basis rows r."""
    F = c.field
    if F.m == 1:
        return LinearCode(F, c.basis, c.n)
    scaled = F.mul(F.exp[np.arange(F.m)][:, None, None], c.basis[None, :, :])
    rows = F.trace(scaled.reshape(-1, c.n))
    return LinearCode(F.prime_field(), rows, c.n)


def parity_check(c: LinearCode) -> np.ndarray:
    return linalg.nullspace(c.basis, c.field)


def subfield_subcode(c: LinearCode, method: str = "delsarte") -> LinearCode:
    """C ∩ F_p^n.

    ``delsarte`` computes dual(trace_code(dual(c))); ``kernel`` expands the
    parity checks over the polynomial basis and solves over F_p.
    """
    F = c.field
    Fp = F.prime_field()
    if method == "delsarte":
        rows = dual(trace_code(dual(c))).basis
    elif method == "kernel":
        H = parity_check(c)
        if H.shape[0] == 0:
            rows = np.eye(c.n, dtype=np.int64)
        else:
            # row (i, t) holds digit t of H[i, j] in column j
            D = F.to_digits(H).transpose(0, 2, 1).reshape(-1, c.n)
            rows = linalg.nullspace(D, Fp)
    else:
        raise ValueError(f"unknown method {method!r}")
    return LinearCode(Fp, rows, c.n, c.d_lb, INHERITED if c.provenance != TRIVIAL else TRIVIAL)


def _coords(c: LinearCode, S: Iterable[int]) -> list[int]:
    S = sorted(set(int(s) for s in S))
    bad = [s for s in S if not 1 <= s <= c.n]
    if bad:
        raise CodeError(f"coordinates {bad} outside 1..{c.n}")
    if len(S) >= c.n:
        raise CodeError("cannot remove every coordinate")
    return [s - 1 for s in S]


def puncture(c: LinearCode, S: Iterable[int]) -> LinearCode:
    """Delete the coordinates in S (1-based); d_lb drops by |S|, floored at 1."""
    idx = _coords(c, S)
    if not idx:
        return c
    keep = np.delete(np.arange(c.n), idx)
    return LinearCode(c.field, c.basis[:, keep], len(keep),
                      max(c.d_lb - len(idx), 1), INHERITED)


def shorten(c: LinearCode, S: Iterable[int]) -> LinearCode:
    """Codewords vanishing on S (1-based), punctured on S; d_lb is kept."""
    idx = _coords(c, S)
    if not idx:
        return c
    X = linalg.nullspace(c.basis[:, idx].T, c.field)
    sub = c.field.matmul(X, c.basis) if X.shape[0] else np.zeros((0, c.n), dtype=np.int64)
    keep = np.delete(np.arange(c.n), idx)
    return LinearCode(c.field, sub[:, keep], len(keep), c.d_lb, INHERITED)


def min_distance_exact(c: LinearCode, budget: int = 2**24) -> int:
    """Minimum weight by enumerating every codeword (n+1 for the zero code)."""
    F = c.field
    if c.k == 0:
        return c.n + 1
    total = F.q**c.k
    if total > budget:
        raise DistanceBudgetExceeded(
            f"{total} codewords exceed the enumeration budget {budget}; use d_lb instead")
    B = c.basis
    best = c.n
    # messages whose leading nonzero entry is 1 cover every codeword up to scaling
    for lead in range(c.k):
        tail = c.k - lead - 1
        count = F.q**tail
        for start in range(0, count, 1 << 16):
            idx = np.arange(start, min(count, start + (1 << 16)), dtype=np.int64)
            msg = (idx[:, None] // (F.q ** np.arange(tail, dtype=np.int64))[None, :]) % F.q
            word = np.broadcast_to(B[lead], (idx.size, c.n))
            if tail:
                word = F.add(word, F.matmul(msg, B[lead + 1:]))
            best = min(best, int(np.count_nonzero(word, axis=1).min()))
    return best


def min_distance_brute(c: LinearCode) -> int:
    """Plain enumeration over all q^k messages; for cross-checks on tiny codes."""
    F = c.field
    best = c.n + 1
    for msg in itertools.product(range(F.q), repeat=c.k):
        if any(msg):
            w = F.sum(F.mul(np.array(msg)[:, None], c.basis), axis=0)
            best = min(best, int(np.count_nonzero(w)))
    return best


def monomial_equivalence(g1: PolyR, g2: PolyR, k: int | None = None) -> np.ndarray:
    """Diagonal scaling c_i -> c_i g1(a_i)^{-1} g2(a_i) taking GRS_k<g1> to GRS_k<g2>."""
    if g1.field != g2.field:
        raise CodeError("twist polynomials over different fields")
    if not (is_cyclotomic(g1) and is_cyclotomic(g2)):
        raise CodeError("monomial equivalence needs cyclotomic twist polynomials")
    if zero_set(g1) != zero_set(g2):
        raise CodeError("twist polynomials have different zero sets")
    F = g1.field
    v1, v2 = ev(g1), ev(g2)
    keep = np.flatnonzero(v1)
    if k is not None and not 0 <= k <= keep.size:
        raise CodeError(f"k={k} outside 0..{keep.size}")
    return F.mul(F.inv(v1[keep]), v2[keep])


def apply_scaling(c: LinearCode, scale) -> LinearCode:
    s = np.asarray(scale, dtype=np.int64)
    return LinearCode(c.field, c.field.mul(c.basis, s[None, :]), c.n, c.d_lb, c.provenance)


def twisted_grs(g: PolyR, k: int) -> LinearCode:
    """GRS_k<g>."""
    return grs(GrsSpec.from_twist(g, k))


# --- matrix text format -----------------------------------------------------

def format_matrix(c: LinearCode, rows: np.ndarray | None = None) -> str:
    F = c.field
    M = c.basis if rows is None else rows
    if F.m == 1:
        lines = [" ".join(str(int(x)) for x in r) for r in M]
    else:
        lines = [" ".join(format_elem(F, int(x)) for x in r) for r in M]
    return "".join(line + "\n" for line in lines)


def parse_matrix(field: FieldSpec, text: str) -> LinearCode:
    rows = [[parse_elem(field, t) for t in line.split()] for line in text.splitlines() if line.strip()]
    if not rows:
        raise CodeError("empty generator matrix")
    if len({len(r) for r in rows}) != 1:
        raise CodeError("generator rows have different lengths")
    return LinearCode(field, np.array(rows, dtype=np.int64))
