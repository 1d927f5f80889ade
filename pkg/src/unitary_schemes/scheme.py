"""Association-scheme construction for the unitary action on isotropic vectors.

Ordered pairs of isotropic vectors fall into three kinds of orbit: scalar
pairs (y = lam * x), product pairs (<x, y> = g^e nonzero) and, in dimension
at least 4, perpendicular independent pairs.  Sequential relation indices run
scalar exponents first, then product exponents, then the perpendicular class.

Intersection numbers are computed two ways: by exhaustive counting over the
enumerated vectors, and by closed formulas; mode "both" insists the two
routes agree entrywise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .fields import build_field
from .space import (
    UnitarySpace,
    enumerate_isotropic,
    hermitian_inner,
    isotropic_count,
    witness_pair,
)

SCALAR = "scalar"
PRODUCT = "product"
PERP = "perp"

# Exhaustive pair classification is attempted only below this many pairs.
PAIR_BUDGET = 5_000_000
# Dense adjacency-matrix algebra is attempted only up to this many points.
DENSE_BUDGET = 512

MODES = ("bruteforce", "closed", "both")


class OracleMismatch(AssertionError):
    """Closed-form and brute-force intersection numbers disagree."""

    def __init__(self, n, q, h, i, j, closed, brute):
        self.triple = (h, i, j)
        super().__init__(
            f"closed form {closed} != brute force {brute} at (h,i,j)=({h},{i},{j})"
            f" for (n,q)=({n},{q})"
        )


@dataclass(frozen=True)
class RelationLabel:
    """One orbit of ordered pairs, with its sequential index."""

    kind: str
    exponent: int | None
    index: int


@dataclass(frozen=True, eq=False)
class SchemeDescriptor:
    """Rank, valencies, intersection tensor and conjugation map of one scheme.

    ``tensor[h][i][j]`` counts, for any pair (x, y) in relation h, the vectors
    z with (x, z) in relation i and (z, y) in relation j.
    """

    n: int
    q: int
    rank: int
    valencies: tuple[int, ...]
    tensor: tuple[tuple[tuple[int, ...], ...], ...]
    conj_map: tuple[int, ...]
    sub_count: int
    parity_offset: int
    mode: str

    @property
    def order(self) -> int:
        return isotropic_count(self.n, self.q)

    def p(self, h: int, i: int, j: int) -> int:
        return self.tensor[h][i][j]


def scheme_rank(n: int, q: int) -> int:
    """Number of relations: 2q^2-2 in dimensions 2 and 3, 2q^2-1 above."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 2 * q * q - 2 if n <= 3 else 2 * q * q - 1


def parity_offset(q: int) -> int:
    return 0 if q % 2 == 0 else (q + 1) // 2


def label_of_index(l: int, n: int, q: int) -> RelationLabel:
    rank = scheme_rank(n, q)
    if not 0 <= l < rank:
        raise ValueError(f"relation index {l} out of range [0, {rank - 1}]")
    nrel = q * q - 1
    if l < nrel:
        return RelationLabel(SCALAR, l, l)
    if l < 2 * nrel:
        return RelationLabel(PRODUCT, l - nrel, l)
    return RelationLabel(PERP, None, l)


def conjugate_index(l: int, n: int, q: int) -> int:
    """Index of the reversed relation: scalar e -> -e, product e -> q*e, perp fixed."""
    rank = scheme_rank(n, q)
    if not 0 <= l < rank:
        raise ValueError(f"relation index {l} out of range [0, {rank - 1}]")
    nrel = q * q - 1
    if l < nrel:
        return (-l) % nrel
    if l < 2 * nrel:
        return nrel + (q * (l - nrel)) % nrel
    return l


def conjugate_relation(sd: SchemeDescriptor, l: int) -> int:
    if not 0 <= l < sd.rank:
        raise ValueError(f"relation index {l} out of range [0, {sd.rank - 1}]")
    return sd.conj_map[l]


def classify_pair(us: UnitarySpace, x, y) -> RelationLabel:
    """The unique relation containing the ordered pair (x, y)."""
    ft = us.ft
    for v in (x, y):
        if not us.is_isotropic(v):
            raise ValueError("classification requires nonzero isotropic vectors")
    ip = hermitian_inner(ft, x, y)
    nrel = ft.order - 1
    if ip != 0:
        e = ft.log(ip)
        return RelationLabel(PRODUCT, e, nrel + e)
    piv = next(i for i, c in enumerate(x) if c)
    lam = ft.div(y[piv], x[piv])
    if lam != 0 and all(yc == ft.mul(lam, xc) for xc, yc in zip(x, y)):
        e = ft.log(lam)
        return RelationLabel(SCALAR, e, e)
    return RelationLabel(PERP, None, 2 * nrel)


# ---------------------------------------------------------------------------
# closed formulas


def closed_valencies(n: int, q: int) -> tuple[int, ...]:
    nrel = q * q - 1
    if n <= 3:
        k = isotropic_count(n, q) // nrel - 1
        return (1,) * nrel + (k,) * nrel
    return (1,) * nrel + (q ** (2 * n - 3),) * nrel + (q * q * isotropic_count(n - 2, q),)


def _product_product_offdiag(n: int, q: int) -> int:
    # q^(2n-5) + (-q)^(n-3); at n = 2 the two fractional terms cancel exactly.
    if n >= 3:
        return q ** (2 * n - 5) + (-q) ** (n - 3)
    sign = -1 if (n - 3) % 2 else 1
    value = Fraction(1, q ** (5 - 2 * n)) + Fraction(sign, q ** (3 - n))
    if value != 0:
        raise AssertionError("expected exact cancellation in dimension 2")
    return 0


def intersection_number_closed(n: int, q: int, h: int, i: int, j: int) -> int:
    """Closed-form intersection number for sequential indices (h, i, j).

    Congruences on scalar/product indices are taken modulo q^2-1 on the raw
    sequential values, except the all-product case which works modulo q+1
    with the parity offset.
    """
    rank = scheme_rank(n, q)
    nrel = q * q - 1
    last = 2 * nrel
    for l in (h, i, j):
        if not 0 <= l < rank:
            if l == last and n <= 3:
                raise ValueError("perpendicular relation requires dimension >= 4")
            raise ValueError(f"relation index {l} out of range [0, {rank - 1}]")

    def rng(l: int) -> int:
        return 2 if l == last else (0 if l < nrel else 1)

    ri, rj, rh = rng(i), rng(j), rng(h)
    sub = isotropic_count(n - 2, q)

    if ri == 0 and rj == 0:
        return 1 if rh == 0 and (i + j - h) % nrel == 0 else 0
    if ri == 0 and rj == 1:
        return 1 if rh == 1 and (h + i - j) % nrel == 0 else 0
    if ri == 0 and rj == 2:
        return 1 if rh == 2 else 0
    if ri == 1 and rj == 0:
        return 1 if rh == 1 and (i + q * j - h) % nrel == 0 else 0
    if ri == 1 and rj == 1:
        if rh == 0:
            return q ** (2 * n - 3) if (q * (h + i) - j) % nrel == 0 else 0
        if rh == 1:
            if (i + j - h - parity_offset(q)) % (q + 1) == 0:
                return sub + 1
            return _product_product_offdiag(n, q)
        return q ** (2 * n - 5)
    if ri == 1 and rj == 2:
        return (0, sub, q ** (2 * n - 5))[rh]
    if ri == 2 and rj == 0:
        return 1 if rh == 2 else 0
    if ri == 2 and rj == 1:
        return (0, sub, q ** (2 * n - 5))[rh]
    return (q * q * sub, sub, (q * q - 1) ** 2 + q**4 * isotropic_count(n - 4, q))[rh]


def _closed_tensor(n: int, q: int) -> list[np.ndarray]:
    rank = scheme_rank(n, q)
    tensor = []
    for h in range(rank):
        mat = np.empty((rank, rank), dtype=np.int64)
        for i in range(rank):
            for j in range(rank):
                mat[i, j] = intersection_number_closed(n, q, h, i, j)
        tensor.append(mat)
    return tensor


# ---------------------------------------------------------------------------
# brute force


def _joint_histogram(rows: np.ndarray, cols: np.ndarray, rank: int) -> np.ndarray:
    return np.bincount(rows * rank + cols, minlength=rank * rank).reshape(rank, rank)


def intersection_number_bruteforce(us: UnitarySpace, h: int, i: int, j: int,
                                   pair=None) -> int:
    """Count z with (x, z) in relation i and (z, y) in relation j, for the
    canonical representative (x, y) of relation h (or an explicit ``pair``)."""
    rank = scheme_rank(us.n, us.q)
    for l in (h, i, j):
        if not 0 <= l < rank:
            raise ValueError(f"relation index {l} out of range [0, {rank - 1}]")
    if pair is None:
        pair = witness_pair(h, us.n, us.q)
    x, y = pair
    rows = kernels.classify_row(np.asarray(x, dtype=np.int64), us.vectors, us.ft)
    cols = kernels.classify_col(np.asarray(y, dtype=np.int64), us.vectors, us.ft)
    return int(np.sum((rows == i) & (cols == j)))


def sample_representatives(us: UnitarySpace, h: int, count: int,
                           rng: random.Random) -> list[tuple[tuple, tuple]]:
    """Random ordered pairs lying in relation h, drawn via random first points."""
    pairs = []
    for _ in range(count):
        a = rng.randrange(us.size)
        x = us.vectors[a]
        rows = kernels.classify_row(x, us.vectors, us.ft)
        candidates = np.flatnonzero(rows == h)
        b = int(candidates[rng.randrange(candidates.size)])
        pairs.append((tuple(int(c) for c in x),
                      tuple(int(c) for c in us.vectors[b])))
    return pairs


def _bruteforce_tensor(us: UnitarySpace, rank: int, seed: int,
                       spot_checks: int = 5):
    ft = us.ft
    tensor = []
    conj_map = []
    valencies = None
    reps = []
    for h in range(rank):
        x, y = witness_pair(h, us.n, us.q)
        reps.append((x, y))
        rows = kernels.classify_row(np.asarray(x, dtype=np.int64), us.vectors, ft)
        cols = kernels.classify_col(np.asarray(y, dtype=np.int64), us.vectors, ft)
        if valencies is None:
            valencies = tuple(int(c) for c in np.bincount(rows, minlength=rank))
        tensor.append(_joint_histogram(rows, cols, rank))
        conj_map.append(classify_pair(us, y, x).index)

    rng = random.Random(seed)
    for h in range(rank):
        for x, y in sample_representatives(us, h, spot_checks, rng):
            rows = kernels.classify_row(np.asarray(x, dtype=np.int64), us.vectors, ft)
            cols = kernels.classify_col(np.asarray(y, dtype=np.int64), us.vectors, ft)
            if not np.array_equal(_joint_histogram(rows, cols, rank), tensor[h]):
                raise AssertionError(
                    f"intersection counts depend on the representative of relation {h}"
                )
    return tensor, valencies, tuple(conj_map)


# ---------------------------------------------------------------------------
# descriptor assembly


def _check_descriptor(sd: SchemeDescriptor) -> None:
    order = sd.order
    if sum(sd.valencies) != order:
        raise AssertionError("valencies do not sum to the number of points")
    for l in range(sd.rank):
        lp = sd.conj_map[l]
        if sd.conj_map[lp] != l:
            raise AssertionError("conjugation map is not an involution")
        if sd.valencies[lp] != sd.valencies[l]:
            raise AssertionError("conjugate relations have different valencies")
    for h in range(sd.rank):
        for i in range(sd.rank):
            if sum(sd.tensor[h][i]) != sd.valencies[i]:
                raise AssertionError(f"row sum at (h,i)=({h},{i}) is not the valency")
    for i in range(sd.rank):
        for j in range(sd.rank):
            want = sd.valencies[i] if j == sd.conj_map[i] else 0
            if sd.tensor[0][i][j] != want:
                raise AssertionError("identity-relation slice does not recover valencies")


def build_descriptor(n: int, q: int, mode: str = "both", seed: int = 0) -> SchemeDescriptor:
    """Build the scheme descriptor, cross-checking formulas against counting
    when mode is "both" (the default)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n < 2:
        raise ValueError("n must be >= 2")
    build_field(q)  # validates q
    rank = scheme_rank(n, q)

    brute = closed = None
    if mode in ("bruteforce", "both"):
        us = enumerate_isotropic(n, q)
        brute = _bruteforce_tensor(us, rank, seed)
    if mode in ("closed", "both"):
        closed = (
            _closed_tensor(n, q),
            closed_valencies(n, q),
            tuple(conjugate_index(l, n, q) for l in range(rank)),
        )

    if mode == "both":
        bt, bk, bc = brute
        ct, ck, cc = closed
        for h in range(rank):
            if not np.array_equal(bt[h], ct[h]):
                i, j = np.argwhere(bt[h] != ct[h])[0]
                raise OracleMismatch(n, q, h, int(i), int(j),
                                     int(ct[h][i, j]), int(bt[h][i, j]))
        if bk != ck:
            raise OracleMismatch(n, q, 0, -1, -1, ck, bk)
        if bc != cc:
            raise AssertionError(f"conjugation maps disagree: {bc} vs {cc}")

    tensor_arrays, valencies, conj_map = brute if brute is not None else closed
    tensor = tuple(tuple(tuple(int(v) for v in row) for row in np.asarray(mat))
                   for mat in tensor_arrays)
    sd = SchemeDescriptor(
        n=n, q=q, rank=rank, valencies=tuple(valencies), tensor=tensor,
        conj_map=conj_map, sub_count=isotropic_count(n - 2, q),
        parity_offset=parity_offset(q), mode=mode,
    )
    _check_descriptor(sd)
    return sd


def intersection_matrices(sd: SchemeDescriptor) -> list[list[list[int]]]:
    """Matrices with (j, h) entry p_ij^h; they close under multiplication."""
    return [
        [[sd.tensor[h][i][j] for h in range(sd.rank)] for j in range(sd.rank)]
        for i in range(sd.rank)
    ]


def is_commutative(sd: SchemeDescriptor) -> tuple[bool, tuple[int, int, int] | None]:
    """Whether p_ij^h = p_ji^h everywhere; if not, the first violating triple."""
    for h in range(sd.rank):
        for i in range(sd.rank):
            for j in range(i + 1, sd.rank):
                if sd.tensor[h][i][j] != sd.tensor[h][j][i]:
                    return False, (h, i, j)
    return True, None


# ---------------------------------------------------------------------------
# exhaustive verification


@dataclass
class AxiomReport:
    passed: bool
    checks: list[tuple[str, bool, str]]

    def failing(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]


def relation_matrix(us: UnitarySpace) -> np.ndarray:
    """Full pairwise classification matrix over the enumerated vectors."""
    if us.size * us.size > PAIR_BUDGET:
        raise ValueError(
            f"{us.size}^2 pairs exceed the classification budget of {PAIR_BUDGET}"
        )
    return kernels.classify_matrix(us.vectors, us.ft)


def verify_relation_matrix(M: np.ndarray, rank: int | None = None,
                           sd: SchemeDescriptor | None = None,
                           samples: int = 5, seed: int = 0) -> AxiomReport:
    """Check the defining axioms on an explicit relation matrix.

    Verifies the partition into relations, the identity relation on the
    diagonal, converse-closure, and constancy of the triple counts over
    ``samples`` random representatives per relation (compared against the
    descriptor tensor when one is supplied).
    """
    checks: list[tuple[str, bool, str]] = []
    count = M.shape[0]
    if sd is not None and rank is None:
        rank = sd.rank
    if rank is None:
        rank = int(M.max()) + 1

    in_range = bool((M >= 0).all() and (M < rank).all())
    present = np.unique(M)
    partition_ok = in_range and present.size == rank
    checks.append(("partition", partition_ok,
                   f"{present.size} of {rank} relations present" if in_range
                   else "labels out of range"))

    diag = np.diagonal(M)
    identity_ok = bool((diag == 0).all() and int((M == 0).sum()) == count)
    checks.append(("identity", identity_ok, "diagonal pairs and only those in relation 0"))

    conj = np.full(rank, -1, dtype=np.int64)
    converse_ok = True
    detail = "reverse pairs land in a single conjugate relation"
    MT = M.T
    for l in range(rank):
        values = np.unique(MT[M == l])
        if values.size != 1:
            converse_ok = False
            detail = f"reversed pairs of relation {l} fall in {values.size} relations"
            break
        conj[l] = values[0]
    if converse_ok and sd is not None and tuple(int(c) for c in conj) != sd.conj_map:
        converse_ok = False
        detail = "conjugation map differs from the descriptor"
    checks.append(("converse", converse_ok, detail))

    if sd is not None:
        offsets = np.arange(count, dtype=np.int64) * rank
        counts = np.bincount((M + offsets[:, None]).ravel(),
                             minlength=count * rank).reshape(count, rank)
        valency_ok = bool((counts == np.asarray(sd.valencies)).all())
        checks.append(("valencies", valency_ok, "every row realises the valencies"))

    rng = random.Random(seed)
    constancy_ok = True
    detail = f"triple counts constant over {samples} sampled pairs per relation"
    for h in range(rank):
        xs, ys = np.nonzero(M == h)
        picks = [rng.randrange(xs.size) for _ in range(min(samples, xs.size))]
        reference = None
        for p in picks:
            hist = _joint_histogram(M[xs[p], :], M[:, ys[p]], rank)
            if reference is None:
                reference = hist
            elif not np.array_equal(hist, reference):
                constancy_ok = False
                detail = f"triple counts differ between representatives of relation {h}"
                break
        if constancy_ok and sd is not None and reference is not None:
            expected = np.array([[sd.tensor[h][i][j] for j in range(rank)]
                                 for i in range(rank)])
            if not np.array_equal(reference, expected):
                constancy_ok = False
                detail = f"triple counts at relation {h} differ from the descriptor"
        if not constancy_ok:
            break
    checks.append(("constancy", constancy_ok, detail))

    return AxiomReport(passed=all(ok for _, ok, _ in checks), checks=checks)


def verify_scheme_axioms(us: UnitarySpace, sd: SchemeDescriptor | None = None,
                         samples: int = 5, seed: int = 0) -> AxiomReport:
    """Exhaustively classify all pairs and check the scheme axioms."""
    return verify_relation_matrix(relation_matrix(us), sd=sd,
                                  samples=samples, seed=seed)


# ---------------------------------------------------------------------------
# dense adjacency algebra


def _exact_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float64 BLAS product of small 0/1 matrices; all counts stay far below 2^53
    prod = a.astype(np.float64) @ b.astype(np.float64)
    out = prod.astype(np.int64)
    if not (out == prod).all():  # pragma: no cover - guards the exactness claim
        raise AssertionError("matrix product left the exact integer range")
    return out


def build_adjacency_matrices(us: UnitarySpace, sd: SchemeDescriptor) -> list[np.ndarray]:
    """0/1 adjacency matrices of all relations, verified to span the algebra:
    A_i A_j = sum_h p_ij^h A_h holds exactly."""
    if us.size > DENSE_BUDGET:
        raise ValueError(f"{us.size} points exceed the dense-matrix budget of {DENSE_BUDGET}")
    M = kernels.classify_matrix(us.vectors, us.ft)
    rank = sd.rank
    mats = [(M == l).astype(np.int64) for l in range(rank)]
    if not np.array_equal(mats[0], np.eye(us.size, dtype=np.int64)):
        raise AssertionError("relation 0 is not the identity")
    if not np.array_equal(sum(mats), np.ones((us.size, us.size), dtype=np.int64)):
        raise AssertionError("adjacency matrices do not sum to the all-ones matrix")
    for i in range(rank):
        for j in range(rank):
            lhs = _exact_product(mats[i], mats[j])
            rhs = sum(sd.tensor[h][i][j] * mats[h] for h in range(rank))
            if not np.array_equal(lhs, rhs):
                raise AssertionError(f"A_{i} A_{j} does not decompose over the relations")
    return mats


def scheme_from_relation_matrix(M: np.ndarray):
    """Validate an arbitrary relation matrix as an association scheme and
    recover (rank, valencies, conjugation map, tensor) exactly.

    Constancy of the triple counts is verified for every ordered pair at once
    through the adjacency-matrix products, so this is a full check.
    """
    M = np.asarray(M)
    count = M.shape[0]
    if M.ndim != 2 or M.shape[1] != count:
        raise ValueError("relation matrix must be square")
    if count > DENSE_BUDGET:
        raise ValueError(f"{count} points exceed the dense-matrix budget of {DENSE_BUDGET}")
    rank = int(M.max()) + 1
    if np.unique(M).size != rank or M.min() < 0:
        raise ValueError("relation labels must be 0..rank-1 with every label present")
    if not (np.diagonal(M) == 0).all() or int((M == 0).sum()) != count:
        raise ValueError("relation 0 must be exactly the diagonal")

    conj = []
    MT = M.T
    for l in range(rank):
        values = np.unique(MT[M == l])
        if values.size != 1:
            raise ValueError(f"reversed pairs of relation {l} do not form one relation")
        conj.append(int(values[0]))

    masks = [(M == l) for l in range(rank)]
    valencies = tuple(int(m[0].sum()) for m in masks)
    tensor = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i in range(rank):
        ai = masks[i].astype(np.int64)
        for j in range(rank):
            prod = _exact_product(ai, masks[j].astype(np.int64))
            for h in range(rank):
                values = np.unique(prod[masks[h]])
                if values.size != 1:
                    raise ValueError(
                        f"triple count (h,i,j)=({h},{i},{j}) is not constant"
                    )
                tensor[h][i][j] = int(values[0])
    tensor = tuple(tuple(tuple(row) for row in mat) for mat in tensor)
    return rank, valencies, tuple(conj), tensor


def fuse_relation_matrix(M: np.ndarray, blocks) -> np.ndarray:
    """Relabel a relation matrix by uniting the relations inside each block."""
    block_of = {}
    for b, block in enumerate(blocks):
        for l in block:
            block_of[l] = b
    lut = np.array([block_of[l] for l in range(int(M.max()) + 1)], dtype=np.int64)
    return lut[M]
