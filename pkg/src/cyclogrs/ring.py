"""The ring R = GF(p^m)[x]/(x^N - 1), N = p^m - 1.

Evaluation at the N nonzero field elements (ascending powers of eta) is a
ring isomorphism onto GF(p^m)^N; the trace map lifts to R as
``T(f) = f + f^p + ... + f^(p^(m-1))``.
"""

from __future__ import annotations

import functools
import re
from typing import NamedTuple

import numpy as np

from .cosets import coset_of, minimal_cosets
from .galois import FieldElem, FieldSpec, format_elem, parse_elem


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class PolyR:
    """An element of R, held as its N coefficients (index i <-> x^i)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        c = np.zeros(field.N, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim != 1 or coeffs.size > field.N:
            raise ValueError(f"expected at most {field.N} coefficients")
        if coeffs.size and (coeffs.min() < 0 or coeffs.max() >= field.q):
            raise ValueError(f"coefficients must be element encodings 0..{field.q - 1}")
        c[: coeffs.size] = coeffs
        c.setflags(write=False)
        self.field = field
        self.coeffs = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "PolyR":
        return cls(field, [])

    @classmethod
    def monomial(cls, field: FieldSpec, exponent: int, coeff=1) -> "PolyR":
        c = np.zeros(field.N, dtype=np.int64)
        c[exponent % field.N] = int(coeff)
        return cls(field, c)

    @classmethod
    def from_support(cls, field: FieldSpec, support) -> "PolyR":
        """Sum of x^i over ``support`` (coefficients 1)."""
        c = np.zeros(field.N, dtype=np.int64)
        c[[i % field.N for i in support]] = 1
        return cls(field, c)

    # -- basic structure -------------------------------------------------

    @property
    def N(self) -> int:
        return self.field.N

    def support(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()

    def deg(self):
        s = np.flatnonzero(self.coeffs)
        return int(s[-1]) if s.size else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __getitem__(self, i: int) -> FieldElem:
        return FieldElem(self.field, int(self.coeffs[i % self.N]))

    def __eq__(self, other):
        return (
            isinstance(other, PolyR)
            and self.field == other.field
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.field, self.coeffs.tobytes()))

    def __repr__(self):
        return f"PolyR({format_poly(self)})"

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "PolyR"):
        if not isinstance(other, PolyR) or other.field != self.field:
            raise TypeError("operands must be PolyR over the same field")

    def __add__(self, other):
        self._check(other)
        return PolyR(self.field, self.field.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return PolyR(self.field, self.field.sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return PolyR(self.field, self.field.neg(self.coeffs))

    def scale(self, c) -> "PolyR":
        c = c.value if isinstance(c, FieldElem) else int(c)
        return PolyR(self.field, self.field.mul(c, self.coeffs))

    def shift(self, i: int) -> "PolyR":
        """x^i * self."""
        return PolyR(self.field, np.roll(self.coeffs, i % self.N))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElem)):
            return self.scale(other)
        self._check(other)
        a, b = (self, other) if len(self.support()) <= len(other.support()) else (other, self)
        acc = np.zeros(self.N, dtype=np.int64)
        for i in a.support():
            acc = self.field.add(acc, self.field.mul(a.coeffs[i], np.roll(b.coeffs, i)))
        return PolyR(self.field, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined in R")
        result = PolyR.monomial(self.field, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, s: int = 1) -> "PolyR":
        """self^(p^s), computed as an index permutation plus coefficient powers."""
        return PolyR(self.field, frobenius_rows(self.field, self.coeffs[None, :], s)[0])

    def __call__(self, x) -> FieldElem:
        x = x.value if isinstance(x, FieldElem) else int(x)
        F = self.field
        s = np.flatnonzero(self.coeffs)
        if x == 0:
            return FieldElem(F, int(self.coeffs[0]))
        pts = F.exp[(s * F.log[x]) % F.N]
        return FieldElem(F, int(F.sum(F.mul(self.coeffs[s], pts))))


# --- batched helpers (rows of a 2-D coefficient array) -----------------------

def frobenius_rows(field: FieldSpec, A: np.ndarray, s: int = 1) -> np.ndarray:
    """Apply f -> f^(p^s) to every row of a coefficient array."""
    N = field.N
    e = pow(field.p, s % field.m, N) if N > 1 else 1
    out = np.zeros_like(A)
    out[:, (np.arange(N) * e) % N] = field.frobenius(A, s)
    return out


def t_map_rows(field: FieldSpec, A: np.ndarray) -> np.ndarray:
    acc = np.array(A, dtype=np.int64, copy=True)
    for s in range(1, field.m):
        acc = field.add(acc, frobenius_rows(field, A, s))
    return acc


# --- evaluation and interpolation -------------------------------------------

def ev(f: PolyR) -> np.ndarray:
    """(f(1), f(eta), ..., f(eta^(N-1))) as element encodings."""
    F = f.field
    s = np.flatnonzero(f.coeffs)
    if s.size == 0:
        return np.zeros(F.N, dtype=np.int64)
    j = np.arange(F.N)
    pts = F.exp[np.outer(s, j) % F.N]
    return F.sum(F.mul(f.coeffs[s][:, None], pts), axis=0)


def interp(field: FieldSpec, values) -> PolyR:
    """Inverse of :func:`ev` via the inverse DFT over <eta>.

    Uses N^{-1} = -1 in characteristic p (N = p^m - 1).
    """
    v = np.asarray(values, dtype=np.int64)
    if v.shape != (field.N,):
        raise ValueError(f"expected {field.N} values, got shape {v.shape}")
    j = np.flatnonzero(v)
    if j.size == 0:
        return PolyR.zero(field)
    i = np.arange(field.N)
    pts = field.exp[(-np.outer(j, i)) % field.N]
    c = field.sum(field.mul(v[j][:, None], pts), axis=0)
    return PolyR(field, field.neg(c))


def interp_lagrange(field: FieldSpec, values) -> PolyR:
    """Lagrange interpolation through (eta^j, values[j]); slow, used as an oracle."""
    v = np.asarray(values, dtype=np.int64)
    if v.shape != (field.N,):
        raise ValueError(f"expected {field.N} values, got shape {v.shape}")
    pts = field.exp[: field.N]
    acc = np.zeros(field.N, dtype=np.int64)
    for j in np.flatnonzero(v):
        num = np.array([1], dtype=np.int64)
        denom = 1
        for l in range(field.N):
            if l == j:
                continue
            # num *= (x - pts[l])
            shifted = np.concatenate([[0], num])
            scaled = np.concatenate([field.mul(field.neg(pts[l]), num), [0]])
            num = field.add(shifted, scaled)
            denom = int(field.mul(denom, field.sub(pts[j], pts[l])))
        coef = field.div(v[j], denom)
        acc = field.add(acc, field.mul(coef, num[: field.N]))
    return PolyR(field, acc)


# --- the trace map and cyclotomic polynomials --------------------------------

def t_map(f: PolyR) -> PolyR:
    return PolyR(f.field, t_map_rows(f.field, f.coeffs[None, :])[0])


class CyclotomicCheck(NamedTuple):
    result: bool
    method: str

    def __bool__(self):
        return self.result


def is_cyclotomic(g: PolyR, method: str = "frobenius") -> CyclotomicCheck:
    """Whether g^p = g in R.

    ``method="values"`` instead checks that every value of ev(g) lies in F_p;
    ``method="preimage"`` builds h with T(h) = g and verifies it.
    """
    F = g.field
    if method == "frobenius":
        ok = g.frobenius() == g
    elif method == "values":
        ok = bool((ev(g) < F.p).all())
    elif method == "preimage":
        ok = trace_preimage(g) is not None
    else:
        raise ValueError(f"unknown method {method!r}")
    return CyclotomicCheck(bool(ok), method)


@functools.lru_cache(maxsize=None)
def _trace_section(field: FieldSpec) -> np.ndarray:
    """For each a in F_p, some beta with tr(beta) = a."""
    sec = np.zeros(field.p, dtype=np.int64)
    found = np.zeros(field.p, dtype=bool)
    for beta in range(field.q):
        a = int(field.trace_table[beta])
        if not found[a]:
            sec[a], found[a] = beta, True
            if found.all():
                break
    return sec


def trace_preimage(g: PolyR) -> PolyR | None:
    """An h with T(h) = g, or None if g takes values outside F_p."""
    F = g.field
    vals = ev(g)
    if (vals >= F.p).any():
        return None
    h = interp(F, _trace_section(F)[vals])
    return h if t_map(h) == g else None


def zero_set(g: PolyR) -> frozenset[int]:
    """Exponents j with g(eta^j) = 0."""
    return frozenset(np.flatnonzero(ev(g) == 0).tolist())


def normalize_hat(g: PolyR) -> PolyR:
    """The 0/1-valued polynomial with the same zeros as the cyclotomic g."""
    if not is_cyclotomic(g):
        raise ValueError("normalize_hat requires a cyclotomic polynomial")
    return indicator_poly(g.field, zero_set(g))


def indicator_poly(field: FieldSpec, zeros) -> PolyR:
    """Interpolation of the function that is 0 on eta^j (j in zeros) and 1 elsewhere."""
    vals = np.ones(field.N, dtype=np.int64)
    vals[list(zeros)] = 0
    return interp(field, vals)


def coset_decompose(f: PolyR) -> dict[int, PolyR]:
    """Split f into its components supported on single minimal cosets."""
    out = {}
    for cos in minimal_cosets(f.field):
        idx = list(cos.elements)
        if f.coeffs[idx].any():
            c = np.zeros(f.N, dtype=np.int64)
            c[idx] = f.coeffs[idx]
            out[cos.b] = PolyR(f.field, c)
    return out


def cyclotomic_component(field: FieldSpec, b: int, alpha) -> PolyR:
    """T(alpha * x^b) for a minimal coset representative b."""
    if not 0 <= b < field.N or coset_of(field, b).b != b:
        raise ValueError(f"{b} is not a minimal cyclotomic coset representative")
    return t_map(PolyR.monomial(field, b, field(alpha).value))


# --- text format -------------------------------------------------------------

def format_poly(f: PolyR) -> str:
    """Sparse ``e<j>*x^i`` terms, highest exponent first."""
    terms = []
    for i in reversed(f.support()):
        c = format_elem(f.field, int(f.coeffs[i]))
        terms.append(c if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
    return " + ".join(terms) if terms else "0"


def format_poly_dense(f: PolyR) -> str:
    """Compact notation for F_p coefficients, e.g. ``x^25 + x^5 + x``."""
    if (f.coeffs >= f.field.p).any():
        return format_poly(f)
    terms = []
    for i in reversed(f.support()):
        c = int(f.coeffs[i])
        mon = "1" if i == 0 else "x" if i == 1 else f"x^{i}"
        terms.append(mon if c == 1 else str(c) if i == 0 else f"{c}*{mon}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(?P<c>e\d+|\d+)\s*\*?\s*)?(?P<x>x(?:\s*\^\s*(?P<e>\d+))?)?$")


def parse_poly(field: FieldSpec, text: str) -> PolyR:
    """Parse ``e3*x^5 + 2*x + 1`` or dense ``x^81 + x^27 + x``; x^i is read mod N."""
    text = text.strip()
    c = np.zeros(field.N, dtype=np.int64)
    if text in ("", "0"):
        return PolyR(field, c)
    for raw in text.replace("-", "+-").split("+"):
        tok = raw.strip()
        if not tok:
            continue
        negate = tok.startswith("-")
        tok = tok.lstrip("-").strip()
        m = _TERM.match(tok)
        if not m or (m.group("c") is None and m.group("x") is None):
            raise ValueError(f"cannot parse polynomial term {raw.strip()!r}")
        coef = parse_elem(field, m.group("c")) if m.group("c") else 1
        if negate:
            coef = int(field.neg(coef))
        exp = 0 if m.group("x") is None else int(m.group("e") or 1)
        i = exp % field.N
        c[i] = field.add(c[i], coef)
    return PolyR(field, c)
