from math import comb

import pytest

from cyclogrs.cosets import coset_of, coset_unions, minimal_cosets, representatives, union_elements
from cyclogrs.galois import make_field

FIELDS = [(2, 4), (2, 8), (3, 3), (3, 5), (5, 3), (2, 6), (7, 2)]


def _orbit(t, p, N):
    """Independent orbit enumeration."""
    seen, x = [], t
    while x not in seen:
        seen.append(x)
        x = x * p % N
    return sorted(seen)


def test_gf16_cosets(gf16):
    cos = minimal_cosets(gf16)
    assert [sorted(c.elements) for c in cos] == [[0], [1, 2, 4, 8], [3, 6, 9, 12], [5, 10], [7, 11, 13, 14]]
    assert [c.n_b for c in cos] == [1, 4, 4, 2, 4]
    assert representatives(gf16) == [0, 1, 3, 5, 7]


def test_gf125_cosets_of_31_and_32(gf125):
    assert coset_of(gf125, 31).elements == (31,)
    assert sorted(coset_of(gf125, 32).elements) == [32, 36, 56]


def test_coset_of_zero(gf256):
    assert coset_of(gf256, 0).elements == (0,)


def test_gf256_coset_of_15(gf256):
    assert sorted(coset_of(gf256, 15).elements) == [15, 30, 60, 120, 135, 195, 225, 240]


def test_coset_of_out_of_range(gf16):
    with pytest.raises(ValueError):
        coset_of(gf16, 15)


@pytest.mark.parametrize("p,m", FIELDS)
def test_cosets_partition_and_orbits(p, m):
    F = make_field(p, m)
    cos = minimal_cosets(F)
    seen = [t for c in cos for t in c.elements]
    assert sorted(seen) == list(range(F.N))
    assert sum(c.n_b for c in cos) == F.N
    for c in cos:
        assert m % c.n_b == 0
        assert c.b == min(c.elements)
        assert sorted(c.elements) == _orbit(c.b, p, F.N)
        assert coset_of(F, c.b * p % F.N) == coset_of(F, c.b)


@pytest.mark.parametrize("p,m", FIELDS)
def test_kernel_count_identity(p, m):
    F = make_field(p, m)
    assert sum(m * (c.n_b - 1) + m - c.n_b for c in minimal_cosets(F)) == (m - 1) * F.N


def test_unions_single_parts(gf16):
    assert list(coset_unions(gf16, 1)) == [(1,), (3,), (5,), (7,)]


def test_unions_two_parts(gf16):
    assert list(coset_unions(gf16, 2))[4:] == [(1, 3), (1, 5), (1, 7), (3, 5), (3, 7), (5, 7)]


def test_unions_with_zero_coset(gf16):
    assert list(coset_unions(gf16, 1, include_zero=True)) == [(0,), (1,), (3,), (5,), (7,)]


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3), (5, 3)])
def test_union_count(p, m):
    F = make_field(p, m)
    c = len(minimal_cosets(F)) - 1
    assert sum(1 for _ in coset_unions(F, 3)) == c + comb(c, 2) + comb(c, 3)


def test_unions_invalid_max_parts(gf16):
    with pytest.raises(ValueError):
        list(coset_unions(gf16, 0))


def test_union_elements(gf125):
    assert union_elements(gf125, (31, 32)) == [31, 32, 36, 56]
    with pytest.raises(ValueError):
        union_elements(gf125, (5,))
