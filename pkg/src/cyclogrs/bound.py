"""Kernel of the lifted trace on twisted polynomial spaces, and the
coset-counting lower bound on subfield-subcode dimension.

Orientation of ``k``: with ``orientation="parent"`` k is the dimension of the
code whose subfield-subcode is taken (its dual is GRS_{n-k}<g>).  With
``orientation="dual"`` k is the dimension of the twisted code GRS_k<g> that a
search builds and traces, i.e. the parent has dimension n - k.  In both cases
the polynomials counted have degree below ``deg_bound = |A|``.
"""

from __future__ import annotations

import functools
from dataclasses import asdict, dataclass, field as dc_field

import numpy as np

from . import linalg
from .codes import GrsSpec, grs_generator
from .cosets import coset_of, minimal_cosets
from .galois import FieldSpec, relative_trace_kernel_basis
from .ring import PolyR, indicator_poly, t_map_rows

ORIENTATIONS = ("parent", "dual")


@dataclass(frozen=True)
class CosetTerm:
    b: int
    n_b: int
    in_A: int  # |I_b ∩ A|
    term: int  # m(|I_b ∩ A| - 1) + m - n_b


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    m: int
    orientation: str
    deg_bound: int  # |A|, A = {0, ..., deg_bound - 1}
    naive: int  # n - m |A|
    terms: tuple[CosetTerm, ...]
    bound: int
    kernel_dim: int | None = None
    exact_dim: int | None = None
    strict: bool | None = None
    zero_set_size: int = dc_field(default=0)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["terms"] = [asdict(t) for t in self.terms]
        return d


def poly_rows_over_prime(field: FieldSpec, coeff_rows: np.ndarray) -> np.ndarray:
    """Expand coefficient rows (elements of R) into F_p-vectors of length N*m."""
    return field.to_digits(coeff_rows).reshape(coeff_rows.shape[0], -1)


def kernel_basis_for_coset(field: FieldSpec, b: int) -> list[PolyR]:
    """F_p-basis of {f : supp f ⊆ I_b, T(f) = 0}.

    Elements eta^k x^b - eta^(k p^l) x^(b p^l) for 0 <= k < m, 0 < l < n_b,
    followed by gamma_i x^b for a basis gamma_i of the kernel of the relative
    trace down to GF(p^n_b).
    """
    cos = coset_of(field, b) if 0 <= b < field.N else None
    if cos is None or cos.b != b:
        raise ValueError(f"{b} is not a minimal cyclotomic coset representative")
    N, m, p = field.N, field.m, field.p
    out = []
    for k in range(m):
        for l in range(1, cos.n_b):
            c = np.zeros(N, dtype=np.int64)
            c[b] = field.exp[k % N]
            c[(b * p**l) % N] = field.neg(field.exp[(k * p**l) % N])
            out.append(PolyR(field, c))
    for gamma in relative_trace_kernel_basis(field, cos.n_b):
        out.append(PolyR.monomial(field, b, gamma.value))
    return out


def kernel_dim_exact(g: PolyR, deg_bound: int) -> int:
    """dim_{F_p} {f : deg f < deg_bound, T(f g) = 0}.

    The map f -> T(fg) is evaluated on the F_p-basis eta^t x^i of the
    degree-bounded space.  Its images are cyclotomic, hence fixed by their
    coefficients at coset representatives, which is what the rank is taken on.
    """
    F = g.field
    if not 0 <= deg_bound <= F.N:
        raise ValueError(f"deg_bound {deg_bound} outside 0..{F.N}")
    if deg_bound == 0:
        return 0
    reps = [c.b for c in minimal_cosets(F)]
    rows = []
    for i in range(deg_bound):
        shifted = np.roll(g.coeffs, i)
        block = F.mul(F.exp[np.arange(F.m) % F.N][:, None], shifted[None, :])
        rows.append(t_map_rows(F, block)[:, reps])
    images = F.to_digits(np.vstack(rows)).reshape(F.m * deg_bound, -1)
    return F.m * deg_bound - linalg.rank(images, F.prime_field())


def sfsc_dims_all_k(field: FieldSpec, spec: GrsSpec, k_max: int | None = None) -> list[int]:
    """dim( GRS_k(alpha,v)^perp ∩ F_p^n ) for k = 0..k_max in one elimination.

    The trace rows tr(eta^t v_i alpha_i^j) are ordered by degree j; the rank
    of tr(GRS_k) is the number of independent rows among the first m*k.
    """
    n = spec.n
    k_max = n if k_max is None else k_max
    G = grs_generator(spec, k_max)
    scaled = field.mul(field.exp[np.arange(field.m) % field.N][None, :, None], G[:, None, :])
    T = field.trace(scaled.reshape(-1, n))
    piv = np.array(linalg.independent_rows(T, field.prime_field()), dtype=np.int64)
    return [n - int(np.count_nonzero(piv < field.m * k)) for k in range(k_max + 1)]


def _deg_bound(n: int, k: int, orientation: str) -> int:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..n={n}")
    return n - k if orientation == "parent" else k


@functools.lru_cache(maxsize=4096)
def _coset_terms(field: FieldSpec, D: int) -> tuple[CosetTerm, ...]:
    m = field.m
    terms = []
    for cos in minimal_cosets(field):
        if cos.b >= D:
            break
        in_A = sum(1 for t in cos.elements if t < D)
        terms.append(CosetTerm(cos.b, cos.n_b, in_A, m * (in_A - 1) + m - cos.n_b))
    return tuple(terms)


def mainbound(field: FieldSpec, zero_exponents, k: int, orientation: str = "parent",
              exact: bool = False) -> BoundReport:
    """Lower bound n - m|A| + sum over representatives b in A of
    m(|I_b ∩ A| - 1) + m - n_b, with A = {0, ..., |A| - 1}.

    ``zero_exponents`` is Z_g as a set of eta-exponents; with ``exact`` the
    true subfield-subcode dimension and kernel dimension are attached, using
    the 0/1 twist polynomial with these zeros.
    """
    Z = sorted(set(int(z) for z in zero_exponents))
    if any(not 0 <= z < field.N for z in Z):
        raise ValueError("zero set exponents must lie in 0..N-1")
    n = field.N - len(Z)
    if n == 0:
        raise ValueError("the zero set covers every nonzero point; the code is empty")
    D = _deg_bound(n, k, orientation)
    m = field.m
    terms = _coset_terms(field, D)
    naive = n - m * D
    value = naive + sum(t.term for t in terms)
    kernel = exact_dim = strict = None
    if exact:
        g = indicator_poly(field, Z)
        kernel = kernel_dim_exact(g, D)
        spec = GrsSpec.from_twist(g, D)
        exact_dim = sfsc_dims_all_k(field, spec, D)[D]
        strict = exact_dim > value
    return BoundReport(n, k, m, orientation, D, naive, tuple(terms), value,
                       kernel, exact_dim, strict, len(Z))
