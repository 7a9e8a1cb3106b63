import numpy as np
import pytest

from cyclogrs import linalg
from cyclogrs.bound import (
    kernel_basis_for_coset,
    kernel_dim_exact,
    mainbound,
    poly_rows_over_prime,
    sfsc_dims_all_k,
)
from cyclogrs.codes import GrsSpec, dual, grs, subfield_subcode, twisted_grs
from cyclogrs.cosets import coset_unions, minimal_cosets, union_elements
from cyclogrs.galois import make_field
from cyclogrs.ring import PolyR, indicator_poly, parse_poly, t_map, zero_set

SMALL = [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3)]


def _basis_rows(field, polys):
    return poly_rows_over_prime(field, np.array([f.coeffs for f in polys], dtype=np.int64))


# --- kernel basis -----------------------------------------------------------------

@pytest.mark.parametrize("p,m", SMALL + [(5, 3)])
def test_kernel_basis_per_coset(p, m):
    F = make_field(p, m)
    total = 0
    for cos in minimal_cosets(F):
        basis = kernel_basis_for_coset(F, cos.b)
        assert len(basis) == m * (cos.n_b - 1) + m - cos.n_b
        for f in basis:
            assert t_map(f).is_zero()
            assert set(f.support()) <= set(cos.elements)
        if basis:
            assert linalg.rank(_basis_rows(F, basis), F.prime_field()) == len(basis)
        total += len(basis)
    assert total == (m - 1) * F.N


def test_full_size_coset_count(gf125):
    assert len(kernel_basis_for_coset(gf125, 1)) == 3 * 2


def test_zero_coset_is_trace_zero_constants(gf125):
    basis = kernel_basis_for_coset(gf125, 0)
    assert len(basis) == 2
    assert all(f.support() == [0] for f in basis)


def test_kernel_basis_rejects_non_representative(gf16):
    with pytest.raises(ValueError):
        kernel_basis_for_coset(gf16, 2)


# --- exact kernel dimensions --------------------------------------------------------

def test_kernel_dim_zero_bound(gf16):
    assert kernel_dim_exact(PolyR.monomial(gf16, 0), 0) == 0


@pytest.mark.parametrize("p,m", SMALL)
def test_kernel_dim_of_one_over_whole_ring(p, m):
    F = make_field(p, m)
    assert kernel_dim_exact(PolyR.monomial(F, 0), F.N) == (m - 1) * F.N


def _kernel_dim_brute(g, D):
    """dim {f : deg f < D, T(fg) = 0} by running T over the full F_p-basis."""
    F = g.field
    Fp = F.prime_field()
    if D == 0:
        return 0
    rows = []
    for i in range(D):
        for t in range(F.m):
            f = PolyR.monomial(F, i, int(F.exp[t % F.N]))
            rows.append(t_map(f * g).coeffs)
    images = poly_rows_over_prime(F, np.array(rows, dtype=np.int64))
    return F.m * D - linalg.rank(images, Fp)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (2, 4)])
def test_kernel_dim_against_brute_force(p, m):
    F = make_field(p, m)
    for reps in list(coset_unions(F, 2))[:6]:
        g = indicator_poly(F, set(range(F.N)) - set(union_elements(F, reps)))
        for D in range(0, F.N + 1, 3):
            assert kernel_dim_exact(g, D) == _kernel_dim_brute(g, D)


def test_kernel_contains_filtered_basis(gf16):
    g = PolyR.from_support(gf16, union_elements(gf16, (1,)))
    for D in (4, 8, 12):
        filtered = [f for cos in minimal_cosets(gf16) for f in kernel_basis_for_coset(gf16, cos.b)
                    if f.deg() < D]
        assert all(t_map(f * g).is_zero() for f in filtered)
        if filtered:
            assert kernel_dim_exact(g, D) >= linalg.rank(_basis_rows(gf16, filtered), gf16.prime_field())


def test_kernel_dim_range_check(gf16):
    with pytest.raises(ValueError):
        kernel_dim_exact(PolyR.monomial(gf16, 0), 16)


# --- all-k dimensions from one elimination ----------------------------------------------

@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (2, 4)])
def test_sfsc_dims_all_k_matches_per_k(p, m):
    F = make_field(p, m)
    g = PolyR.from_support(F, union_elements(F, (1,)))
    spec = GrsSpec.from_twist(g, 0)
    dims = sfsc_dims_all_k(F, spec)
    for k in range(spec.n + 1):
        assert dims[k] == subfield_subcode(dual(twisted_grs(g, k)), "kernel").k


# --- dimension identity via the kernel --------------------------------------------------------

@pytest.mark.parametrize("p,m", [(2, 4), (3, 3)])
def test_dimension_identity(p, m):
    F = make_field(p, m)
    for reps in coset_unions(F, 2):
        g = PolyR.from_support(F, union_elements(F, reps))
        spec = GrsSpec.from_twist(g, 0)
        dims = sfsc_dims_all_k(F, spec)
        n = spec.n
        for k in range(n + 1):
            assert dims[k] == n - m * k + kernel_dim_exact(g, k)


# --- the bound --------------------------------------------------------------------------

def test_parent_k_equals_n_gives_n(gf16):
    Z = union_elements(gf16, (1,))
    r = mainbound(gf16, Z, 11, "parent")
    assert r.deg_bound == 0 and r.bound == 11 and r.terms == ()


def test_orientations_are_mirror_images(gf16):
    Z = union_elements(gf16, (5,))
    for k in range(14):
        assert mainbound(gf16, Z, k, "dual").bound == mainbound(gf16, Z, 13 - k, "parent").bound


def test_fig5_bounds_frozen(gf125):
    Z = zero_set(parse_poly(gf125, "x^25 + x^5 + x"))
    r34 = mainbound(gf125, Z, 34, "dual", exact=True)
    assert (r34.n, r34.bound, r34.exact_dim, r34.strict) == (100, 32, 33, True)
    r33 = mainbound(gf125, Z, 33, "dual", exact=True)
    assert (r33.bound, r33.exact_dim, r33.strict) == (35, 36, True)
    assert r34.kernel_dim == r34.exact_dim - 100 + 3 * 34


def test_fig5_exact_dims_match_direct_subfield_subcode(gf125):
    g = parse_poly(gf125, "x^25 + x^5 + x")
    for k, expect in ((33, 36), (34, 33)):
        assert subfield_subcode(dual(twisted_grs(g, k)), "kernel").k == expect


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3)])
def test_bound_never_exceeds_exact_and_dominates_naive(p, m):
    F = make_field(p, m)
    strict = 0
    for reps in coset_unions(F, 3):
        g = PolyR.from_support(F, union_elements(F, reps))
        Z = zero_set(g)
        spec = GrsSpec.from_twist(g, 0)
        dims = sfsc_dims_all_k(F, spec)
        for k in range(spec.n + 1):
            r = mainbound(F, Z, k, "dual")
            assert r.naive <= r.bound <= dims[k]
            strict += r.bound < dims[k]
    assert strict > 0


def test_orientation_validated_against_kernel_dim(gf16):
    # the dual orientation is the one for which the bound tracks n - m k + kernel_dim
    g = PolyR.from_support(gf16, union_elements(gf16, (1, 3)))
    Z = zero_set(g)
    n = gf16.N - len(Z)
    for k in range(n + 1):
        r = mainbound(gf16, Z, k, "dual")
        assert r.bound - r.naive <= kernel_dim_exact(indicator_poly(gf16, Z), k)


def test_exact_flag_attaches_dimensions(gf16):
    r = mainbound(gf16, union_elements(gf16, (1,)), 3, "dual", exact=True)
    assert r.exact_dim is not None and r.kernel_dim is not None
    assert r.exact_dim == r.n - 4 * 3 + r.kernel_dim
    assert r.strict == (r.exact_dim > r.bound)


def test_term_values(gf125):
    r = mainbound(gf125, union_elements(gf125, (1,)), 34, "dual")
    assert all(t.term == 3 * (t.in_A - 1) + 3 - t.n_b for t in r.terms)
    assert all(t.b < 34 for t in r.terms)
    assert r.bound == r.naive + sum(t.term for t in r.terms)


def test_bound_errors(gf16):
    with pytest.raises(ValueError):
        mainbound(gf16, range(15), 0)
    with pytest.raises(ValueError):
        mainbound(gf16, [], 16)
    with pytest.raises(ValueError):
        mainbound(gf16, [], 3, "sideways")
    with pytest.raises(ValueError):
        mainbound(gf16, [15], 3)


def test_report_dict_round_trip(gf16):
    r = mainbound(gf16, union_elements(gf16, (3,)), 4, "parent", exact=True)
    d = r.to_dict()
    assert d["terms"][0].keys() == {"b", "n_b", "in_A", "term"}
    assert d["bound"] == r.bound


def test_grs_code_underlying_bound(gf16):
    # with Z = empty, the dual code of a full-length RS code
    r = mainbound(gf16, [], 5, "dual", exact=True)
    spec = GrsSpec(gf16, tuple(range(15)), (1,) * 15, 5)
    assert r.exact_dim == subfield_subcode(dual(grs(spec))).k
