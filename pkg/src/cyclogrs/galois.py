"""Finite fields GF(p^m) over a prime p, backed by log/antilog tables.

Elements are stored as integers: the polynomial-basis coordinates
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` read as the base-``p`` number
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.  With this encoding the prime
subfield F_p is exactly the integers ``0..p-1``, so traces and subfield
subcodes need no conversion.

All array operations on :class:`FieldSpec` accept numpy arrays (or ints)
and broadcast like numpy arithmetic.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

import numpy as np

MAX_FIELD_SIZE = 2**20


class FieldError(ValueError):
    """Invalid field parameters or a modulus that is not primitive."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- small dense polynomials over F_p, lists of ints low-degree-first ---

def _pmulmod(a: list[int], b: list[int], mod: Sequence[int], p: int) -> list[int]:
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic
    for i in range(len(prod) - 1, m - 1, -1):
        c = prod[i]
        if c:
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
    return prod[:m] + [0] * (m - len(prod[:m]))


def _ppowx(e: int, mod: Sequence[int], p: int) -> list[int]:
    """x^e mod ``mod`` over F_p."""
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = _pmulmod([0, 1], [1], mod, p) if m > 1 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive_poly(mod: Sequence[int], p: int) -> bool:
    """True iff the monic polynomial ``mod`` (low-degree-first) is primitive over F_p."""
    m = len(mod) - 1
    if m < 1 or mod[-1] != 1 or mod[0] % p == 0:
        return False
    n = p**m - 1
    one = [1] + [0] * (m - 1)
    if _ppowx(n, mod, p) != one:
        return False
    return all(_ppowx(n // r, mod, p) != one for r in prime_factors(n))


def smallest_primitive_poly(p: int, m: int) -> tuple[int, ...]:
    """Primitive monic polynomial of degree m whose coefficient vector,
    read as the base-p integer sum c_i p^i, is smallest."""
    for low in range(1, p**m):
        coeffs = [(low // p**i) % p for i in range(m)] + [1]
        if is_primitive_poly(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no primitive polynomial of degree {m} over F_{p}")  # pragma: no cover


class FieldSpec:
    """The field GF(p^m) with a fixed primitive modulus and element ``eta = x``.

    Build instances with :func:`make_field`; they are immutable and cached.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self.N = self.q - 1
        self._pw = np.array([p**i for i in range(m)], dtype=np.int64)

        exp = np.zeros(self.N, dtype=np.int64)
        if m == 1:
            eta = (-modulus[0]) % p
            v = 1
            for j in range(self.N):
                exp[j] = v
                v = v * eta % p
        elif p == 2:
            red = sum(c << i for i, c in enumerate(modulus))
            v = 1
            for j in range(self.N):
                exp[j] = v
                v <<= 1
                if v & self.q:
                    v ^= red
        else:
            digits = [1] + [0] * (m - 1)
            tail = [(-c) % p for c in modulus[:m]]
            for j in range(self.N):
                exp[j] = sum(d * p**i for i, d in enumerate(digits))
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    digits = [(d + top * t) % p for d, t in zip(digits, tail)]
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(self.N)
        if (log[1:] < 0).any():
            raise FieldError(f"modulus {modulus} is not primitive over F_{p}")
        self.exp = exp
        self.log = log
        exp.setflags(write=False)
        log.setflags(write=False)

        L = np.arange(self.N)
        acc = np.zeros(self.N, dtype=np.int64)
        for i in range(m):
            acc = self.add(acc, exp[(L * pow(p, i, self.N)) % self.N])
        tr = np.zeros(self.q, dtype=np.int64)
        tr[exp] = acc
        tr.setflags(write=False)
        self.trace_table = tr

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (make_field, (self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec({format_field(self)})"

    @property
    def eta(self) -> "FieldElem":
        return FieldElem(self, int(self.exp[1 % self.N]))

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def prime_field(self) -> "FieldSpec":
        if self.m == 1:
            return self
        return make_field(self.p)

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise FieldError(f"{value} is not an element encoding of GF({self.q})")
        return FieldElem(self, value)

    def power_of_eta(self, j: int) -> "FieldElem":
        return FieldElem(self, int(self.exp[j % self.N]))

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, v) for v in range(self.q)]

    # -- vectorised arithmetic on integer encodings ------------------------

    def to_digits(self, a) -> np.ndarray:
        """Base-p coordinates, shape ``a.shape + (m,)``."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def from_digits(self, d) -> np.ndarray:
        return np.asarray(d, dtype=np.int64) @ self._pw

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self.from_digits((self.to_digits(a) + self.to_digits(b)) % self.p)

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.from_digits((-self.to_digits(a)) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        out = self.exp[(self.log[a] + self.log[b]) % self.N]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.exp[(-self.log[a]) % self.N]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = self.exp[(self.log[a] * (e % self.N)) % self.N]
        return np.where(a == 0, 0, out)

    def frobenius(self, a, s: int = 1):
        """a^(p^s)."""
        return self.power(a, pow(self.p, s % self.m, self.N) if self.N > 1 else 1)

    def trace(self, a):
        return self.trace_table[np.asarray(a, dtype=np.int64)]

    def relative_trace(self, a, sub_degree: int):
        """Trace down to GF(p^sub_degree): sum of a^(p^(sub_degree*i))."""
        if self.m % sub_degree:
            raise FieldError(f"{sub_degree} does not divide m={self.m}")
        a = np.asarray(a, dtype=np.int64)
        acc = np.zeros_like(a)
        for i in range(self.m // sub_degree):
            acc = self.add(acc, self.frobenius(a, sub_degree * i))
        return acc

    def sum(self, a, axis=0):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        ax = axis if axis >= 0 else axis - 1
        return self.from_digits(self.to_digits(a).sum(axis=ax) % self.p)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.m == 1:
            return (A @ B) % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for t in range(A.shape[1]):
            out = self.add(out, self.mul(A[:, t, None], B[None, t, :]))
        return out


class FieldElem:
    """A single element of a :class:`FieldSpec`, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = int(value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldError("mixing elements of different fields")
            return other.value
        # plain integers are read as elements of the prime subfield
        return int(other) % self.field.p

    def _wrap(self, v) -> "FieldElem":
        return FieldElem(self.field, int(v))

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._coerce(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        if e < 0:
            return self._wrap(self.field.power(self.field.inv(self.value), -e))
        return self._wrap(self.field.power(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return 0 <= other < self.field.p and self.value == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return format_elem(self.field, self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.to_digits(self.value))

    def log(self) -> int:
        if self.value == 0:
            raise ValueError("zero has no discrete logarithm")
        return int(self.field.log[self.value])

    def in_prime_field(self) -> bool:
        return self.value < self.field.p


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime (prime-power base fields are not supported)")
    if m < 1:
        raise FieldError(f"extension degree must be positive, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise FieldError(f"GF({p}^{m}) exceeds the table limit of {MAX_FIELD_SIZE} elements")
    if modulus is None:
        modulus = smallest_primitive_poly(p, m)
    else:
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError(f"modulus coefficients must lie in 0..{p - 1}")
        if not is_primitive_poly(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is not primitive over F_{p}")
    return FieldSpec(p, m, tuple(modulus))


def make_field(p: int, m: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Return GF(p^m); without a modulus the smallest primitive one is used."""
    return _make_field(int(p), int(m), None if modulus is None else tuple(int(c) for c in modulus))


def trace(x: FieldElem) -> FieldElem:
    """Absolute trace x + x^p + ... + x^(p^(m-1)), an element of F_p."""
    return FieldElem(x.field, int(x.field.trace(x.value)))


def relative_trace_kernel_basis(field: FieldSpec, sub_degree: int) -> list[FieldElem]:
    """F_p-basis of the kernel of the trace from GF(p^m) to GF(p^sub_degree)."""
    from . import linalg

    if sub_degree < 1 or field.m % sub_degree:
        raise FieldError(f"sub_degree {sub_degree} does not divide m={field.m}")
    basis = field._pw  # encodings of 1, x, ..., x^(m-1)
    images = field.to_digits(field.relative_trace(basis, sub_degree))  # row i = image of x^i
    ker = linalg.nullspace(images.T, field.prime_field())
    return [FieldElem(field, int(v)) for v in field.from_digits(ker)]


# --- text formats ----------------------------------------------------------

def format_field(field: FieldSpec) -> str:
    return f"{field.p}^{field.m}/" + ",".join(str(c) for c in field.modulus)


def parse_field(text: str) -> FieldSpec:
    try:
        head, _, mod = text.strip().partition("/")
        p, _, m = head.partition("^")
        modulus = [int(c) for c in mod.split(",")] if mod else None
        return make_field(int(p), int(m or 1), modulus)
    except FieldError:
        raise
    except ValueError as exc:
        raise FieldError(f"cannot parse field description {text!r}") from exc


def format_elem(field: FieldSpec, value: int) -> str:
    """Integers for prime fields, ``e<j>`` (eta^j) or ``0`` for extensions."""
    if field.m == 1:
        return str(int(value))
    return "0" if value == 0 else f"e{int(field.log[value])}"


def parse_elem(field: FieldSpec, token: str) -> int:
    token = token.strip()
    try:
        if token.startswith("e"):
            return int(field.exp[int(token[1:]) % field.N])
        v = int(token)
    except ValueError:
        raise FieldError(f"cannot parse field element {token!r}") from None
    if not 0 <= v < field.p:
        raise FieldError(f"integer entry {v} outside F_{field.p}")
    return v
