"""The n-dimensional unitary geometry over F_{q^2}.

Vectors are tuples (or int64 arrays) of field-element ids; the Hermitian
product is <x, y> = sum_i x_i * conj(y_i).  ``UnitarySpace`` holds the full
list of nonzero isotropic vectors in canonical (lexicographic) order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .fields import FieldTables, build_field, norm_solutions, trace_solutions

# Upper bound on the number of vectors an exhaustive scan may visit.
SCAN_BUDGET = 1 << 24


def isotropic_count(n: int, q: int) -> int:
    """Closed-form size of the set of nonzero isotropic vectors in F_{q^2}^n."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    if n <= 1:
        return 0
    return (q**n - (-1) ** n) * (q ** (n - 1) - (-1) ** (n - 1))


@dataclass(eq=False)
class UnitarySpace:
    """Enumerated isotropic vectors of F_{q^2}^n with O(1) index lookup."""

    n: int
    q: int
    ft: FieldTables
    vectors: np.ndarray
    _lookup: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    def _encode(self, vec) -> int:
        code = 0
        for c in vec:
            code = code * self.ft.order + int(c)
        return code

    def index_of(self, vec) -> int:
        if len(vec) != self.n:
            raise ValueError(f"expected a vector of length {self.n}")
        idx = int(self._lookup[self._encode(vec)])
        if idx < 0:
            raise ValueError(f"{tuple(int(c) for c in vec)} is not a nonzero isotropic vector")
        return idx

    def __contains__(self, vec) -> bool:
        return len(vec) == self.n and int(self._lookup[self._encode(vec)]) >= 0

    def hermitian_inner(self, x, y) -> int:
        return hermitian_inner(self.ft, x, y)

    def is_isotropic(self, x) -> bool:
        return any(c != 0 for c in x) and hermitian_inner(self.ft, x, x) == 0

    def scalar_multiple(self, lam: int, x) -> tuple[int, ...]:
        mul = self.ft.mul_table
        return tuple(int(mul[lam, c]) for c in x)

    def hyperbolic_partner(self, u) -> tuple[int, ...]:
        return hyperbolic_partner(self.ft, self.n, u)


def hermitian_inner(ft: FieldTables, x, y) -> int:
    """<x, y> = sum_i x_i * conj(y_i)."""
    if len(x) != len(y):
        raise ValueError("vectors must have the same length")
    acc = 0
    for a, b in zip(x, y):
        acc = int(ft.add_table[acc, ft.mul_table[a, ft.conj_table[b]]])
    return acc


def hyperbolic_partner(ft: FieldTables, n: int, u) -> tuple[int, ...]:
    """Isotropic v with <u, v> = 1, chosen deterministically.

    Takes the first w in canonical vector order with <u, w> != 0, rescales it
    to <u, w> = 1, then subtracts the multiple of u that kills <w, w> (a trace
    equation over F_q).
    """
    if len(u) != n:
        raise ValueError(f"expected a vector of length {n}")
    if all(c == 0 for c in u) or hermitian_inner(ft, u, u) != 0:
        raise ValueError("hyperbolic partner needs a nonzero isotropic vector")
    for w in itertools.product(range(ft.order), repeat=n):
        c = hermitian_inner(ft, u, w)
        if c != 0:
            break
    else:  # pragma: no cover - impossible for a non-degenerate form
        raise AssertionError("no vector pairs non-trivially with u")
    scale = ft.inv(ft.conj(c))
    w = tuple(ft.mul(scale, wc) for wc in w)
    lam = trace_solutions(ft, hermitian_inner(ft, w, w))[0]
    v = tuple(ft.sub(wc, ft.mul(lam, uc)) for wc, uc in zip(w, u))
    if hermitian_inner(ft, v, v) != 0 or hermitian_inner(ft, u, v) != 1:
        raise AssertionError("hyperbolic partner construction failed")
    return v


def enumerate_isotropic(n: int, q: int) -> UnitarySpace:
    """Exhaustively scan F_{q^2}^n and collect the nonzero isotropic vectors."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    ft = build_field(q)
    total = ft.order**n
    if total > SCAN_BUDGET:
        raise ValueError(
            f"enumerating q^(2n) = {total} vectors exceeds the scan budget of {SCAN_BUDGET}"
        )
    expected = isotropic_count(n, q)
    if expected == 0:
        vectors = np.empty((0, n), dtype=np.int64)
    else:
        vectors = kernels.isotropic_scan(n, ft.order, ft.norm_table, ft.add_table, expected)
    lookup = np.full(total, -1, dtype=np.int32)  # positions are far below 2^31
    if expected:
        codes = np.zeros(expected, dtype=np.int64)
        for i in range(n):
            codes = codes * ft.order + vectors[:, i]
        lookup[codes] = np.arange(expected)
    vectors.setflags(write=False)
    lookup.setflags(write=False)
    return UnitarySpace(n=n, q=q, ft=ft, vectors=vectors, _lookup=lookup)


def unit_norm_witness(ft: FieldTables) -> int:
    """First element a (in canonical order) with a * conj(a) = -1."""
    return norm_solutions(ft, ft.neg(ft.one))[0]


def standard_isotropic_vector(ft: FieldTables, n: int) -> tuple[int, ...]:
    """The vector (1, a, 0, ..., 0) with a * conj(a) = -1."""
    if n < 2:
        raise ValueError("need dimension at least 2")
    return (ft.one, unit_norm_witness(ft)) + (0,) * (n - 2)


def witness_pair(l: int, n: int, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A canonical ordered pair of isotropic vectors lying in relation l.

    Scalar relations pair x with g^l * x; product relations pair g^e * x with
    a hyperbolic partner of x; the perpendicular relation uses two standard
    vectors with disjoint support (hence needs n >= 4).
    """
    if n < 2:
        raise ValueError("need dimension at least 2")
    ft = build_field(q)
    nrel = ft.order - 1
    last = 2 * nrel
    if not 0 <= l <= last:
        raise ValueError(f"relation index {l} out of range [0, {last}]")
    x = standard_isotropic_vector(ft, n)
    if l < nrel:
        lam = ft.exp(l)
        return x, tuple(ft.mul(lam, c) for c in x)
    if l < last:
        v = hyperbolic_partner(ft, n, x)
        lam = ft.exp(l - nrel)
        return tuple(ft.mul(lam, c) for c in x), v
    if n < 4:
        raise ValueError(
            "perpendicular independent pairs do not exist in dimension 2 or 3"
        )
    y = (0, 0) + (x[0], x[1]) + (0,) * (n - 4)
    return x, y
