"""Exact arithmetic in F_q and its quadratic extension F_{q^2} for small q.

Elements are integer ids: id 0 is the zero element and id k (1 <= k <= q^2-1)
is g^(k-1) for the fixed primitive generator g.  All arithmetic is table
lookup, so the integer order of ids (zero first, then ascending powers of g)
doubles as the canonical element order used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Conway polynomials over the prime field, lowest degree first, keyed by
# (p, m) with q^2 = p^m.  Pinning these makes the generator, and with it every
# relation label downstream, reproducible across runs.
_CONWAY = {
    (2, 2): (1, 1, 1),
    (3, 2): (2, 2, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
}

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)


def _prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q and p < q:
            break
        if q % p:
            continue
        k, m = 0, q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return (q, 1)


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Lookup-table model of F_{q^2} with the involution x -> x^q.

    ``exp_table[e]`` is the id of g^e and ``log_table`` is its inverse (-1 at
    zero).  ``modulus_poly`` holds the ids of the constant, linear and leading
    coefficients of the minimal polynomial of g over the embedded F_q.
    """

    q: int
    p: int
    order: int
    modulus_poly: tuple[int, int, int]
    exp_table: np.ndarray
    log_table: np.ndarray
    conj_table: np.ndarray
    add_table: np.ndarray
    mul_table: np.ndarray
    neg_table: np.ndarray
    inv_table: np.ndarray
    norm_table: np.ndarray
    base_field: tuple[int, ...]

    # -- element constants ------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def generator(self) -> int:
        return int(self.exp_table[1])

    def elements(self) -> range:
        return range(self.order)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by the zero field element")
        return int(self.mul_table[a, self.inv_table[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero field element has no inverse")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply power; independent of the log tables."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def conj(self, a: int) -> int:
        return int(self.conj_table[a])

    def norm(self, a: int) -> int:
        return int(self.norm_table[a])

    def trace(self, a: int) -> int:
        return int(self.add_table[a, self.conj_table[a]])

    def in_base_field(self, a: int) -> bool:
        return int(self.conj_table[a]) == a

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero field element has no discrete log")
        return int(self.log_table[a])

    def exp(self, e: int) -> int:
        return int(self.exp_table[e % (self.order - 1)])


def _encode(digits: list[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


def _decode(code: int, p: int, m: int) -> list[int]:
    digits = []
    for _ in range(m):
        digits.append(code % p)
        code //= p
    return digits


@lru_cache(maxsize=None)
def build_field(q: int) -> FieldTables:
    """Build the arithmetic tables for F_{q^2}, q in the supported range."""
    pk = _prime_power(q)
    if pk is None:
        raise ValueError(f"q must be a prime power, got {q}")
    if q not in SUPPORTED_Q:
        raise ValueError(f"q={q} is outside the supported range {SUPPORTED_Q}")
    p, k = pk
    m = 2 * k
    conway = _CONWAY[(p, m)]
    order = q * q

    # Powers of the generator in the coefficient encoding.
    codes = []
    x = 1  # code of g^0
    for _ in range(order - 1):
        codes.append(x)
        digits = _decode(x, p, m)
        top = digits[m - 1]
        shifted = [0] + digits[: m - 1]
        if top:
            for i in range(m):
                shifted[i] = (shifted[i] - top * conway[i]) % p
        x = _encode(shifted, p)
    if sorted(codes) != list(range(1, order)):
        raise AssertionError(f"modulus for q={q} is not primitive")

    id_of_code = {0: 0}
    for e, c in enumerate(codes):
        id_of_code[c] = e + 1
    code_of_id = [0] + codes

    n1 = order - 1
    exp_table = np.arange(1, order, dtype=np.int64)
    log_table = np.concatenate(([-1], np.arange(n1, dtype=np.int64)))

    ids = np.arange(order)
    mul_table = np.zeros((order, order), dtype=np.int64)
    nz = ids[1:]
    mul_table[1:, 1:] = 1 + (nz[:, None] - 1 + nz[None, :] - 1) % n1

    add_table = np.zeros((order, order), dtype=np.int64)
    for a in range(order):
        da = _decode(code_of_id[a], p, m)
        for b in range(order):
            db = _decode(code_of_id[b], p, m)
            s = [(u + v) % p for u, v in zip(da, db)]
            add_table[a, b] = id_of_code[_encode(s, p)]

    neg_table = np.zeros(order, dtype=np.int64)
    for a in range(order):
        da = _decode(code_of_id[a], p, m)
        neg_table[a] = id_of_code[_encode([(-u) % p for u in da], p)]

    conj_table = np.zeros(order, dtype=np.int64)
    conj_table[1:] = 1 + ((nz - 1) * q) % n1

    inv_table = np.zeros(order, dtype=np.int64)
    inv_table[1:] = 1 + (n1 - (nz - 1)) % n1

    norm_table = mul_table[ids, conj_table]

    base_field = tuple(int(a) for a in ids if conj_table[a] == a)

    # Minimal polynomial of g over F_q: X^2 - (g + g^q) X + g^(q+1).
    g = int(exp_table[1])
    tr = int(add_table[g, conj_table[g]])
    nrm = int(norm_table[g])
    modulus_poly = (nrm, int(neg_table[tr]), 1)

    for arr in (exp_table, log_table, conj_table, add_table, mul_table,
                neg_table, inv_table, norm_table):
        arr.setflags(write=False)

    return FieldTables(
        q=q, p=p, order=order, modulus_poly=modulus_poly,
        exp_table=exp_table, log_table=log_table, conj_table=conj_table,
        add_table=add_table, mul_table=mul_table, neg_table=neg_table,
        inv_table=inv_table, norm_table=norm_table, base_field=base_field,
    )


def norm_solutions(ft: FieldTables, lam: int) -> list[int]:
    """All x in F_{q^2}* with x * conj(x) = lam, for lam in F_q*.

    There are always exactly q+1 of them, returned in canonical id order.
    """
    if lam == 0 or not ft.in_base_field(lam):
        raise ValueError("norm equation needs a nonzero element of the base field")
    sols = [a for a in range(1, ft.order) if ft.norm(a) == lam]
    if len(sols) != ft.q + 1:
        raise AssertionError("norm fiber has unexpected size")
    return sols


def trace_solutions(ft: FieldTables, lam: int) -> list[int]:
    """All x in F_{q^2} with x + conj(x) = lam, for lam in F_q.

    There are always exactly q of them, returned in canonical id order.
    """
    if not ft.in_base_field(lam):
        raise ValueError("trace equation needs an element of the base field")
    sols = [a for a in range(ft.order) if ft.trace(a) == lam]
    if len(sols) != ft.q:
        raise AssertionError("trace fiber has unexpected size")
    return sols
